// involution.hpp
// --------------
// Cartan-Kuranishi style loop: complete to formal integrability, test the
// symbol by the Cartan character equality, prolong once if it fails, repeat.
#pragma once

#include "jetpde/characters.hpp"
#include "jetpde/completion.hpp"

#include <string>
#include <vector>

namespace jetpde {

struct InvolutionResult {
    bool success = false;
    DiffOperator system;        // completed and prolonged to involution
    FIResult fi;                // final formal-integrability pass
    CharacterTable table;       // characters at the involutive order
    int prolongations = 0;
    std::vector<std::string> log;
    std::vector<CompletionStep> trace;    // all adjoined equations across passes
};

inline InvolutionResult bring_to_involution(const DiffOperator& D, int r_max = 4, unsigned seed = 0,
                                            int budget = 6) {
    InvolutionResult out;
    DiffOperator cur = D;
    for (int round = 0; round < budget; ++round) {
        out.fi = check_formal_integrability(cur, r_max);
        for (const auto& st : out.fi.trace) out.trace.push_back(st);
        if (!out.fi.formally_integrable) {
            out.log.push_back("formal integrability undetermined within budget");
            out.system = out.fi.completed;
            return out;
        }
        cur = out.fi.completed;
        if (cur.is_zero()) {    // free system: trivially involutive
            out.success = true;
            out.system = cur;
            out.log.push_back("no equations: free system");
            return out;
        }
        out.table = characters(cur, seed);
        if (out.table.involutive_symbol) {
            out.success = true;
            out.system = cur;
            out.log.push_back("involutive at order " + std::to_string(cur.order()));
            return out;
        }
        out.log.push_back("not involutive at order " + std::to_string(cur.order()) +
                          " (dim g_{q+1} = " + std::to_string(out.table.dim_gq1) +
                          ", Cartan sum = " + std::to_string(out.table.cartan_sum) + "); prolonging");
        cur = cur.prolong(1);
        ++out.prolongations;
    }
    out.system = cur;
    out.log.push_back("involution not reached within prolongation budget");
    return out;
}

} // namespace jetpde

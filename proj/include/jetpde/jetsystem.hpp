// jetsystem.hpp
// -------------
// A linear system R_q in J_q(E) wrapped with cached prolongations and
// dimension data.  dim R_{q+r} = m*C(q+r+n, n) - rank(prolong(op, r)), ranks
// taken at a generic point of Q(x1..xn).
#pragma once

#include "jetpde/diffop.hpp"

#include <map>
#include <set>
#include <vector>

namespace jetpde {

class JetSystem {
public:
    explicit JetSystem(DiffOperator op) : op_(std::move(op)) {}

    const DiffOperator& op() const { return op_; }
    int nvars() const { return op_.nvars(); }
    int nunknowns() const { return op_.nunknowns(); }
    int order() const { return op_.order(); }

    const DiffOperator& prolonged(int r) {
        auto it = prolongs_.find(r);
        if (it != prolongs_.end()) return it->second;
        DiffOperator p = (r == 0) ? op_ : prolonged(r - 1).prolong(1);
        return prolongs_.emplace(r, std::move(p)).first->second;
    }

    long dim_R(int r) {
        auto it = dimR_.find(r);
        if (it != dimR_.end()) return it->second;
        const DiffOperator& P = prolonged(r);
        auto e = eliminate(P.full_matrix(order() + r), {}, false);
        note_excluded(e);
        long d = fiber_dim(nvars(), nunknowns(), order() + r) - e.rank;
        dimR_[r] = d;
        return d;
    }

    long dim_g(int r) {
        auto it = dimG_.find(r);
        if (it != dimG_.end()) return it->second;
        const DiffOperator& P = prolonged(r);
        long d;
        if (P.order() < order() + r) {
            // prolongation added no rows of top order (e.g. zero system)
            d = sym_dim(nvars(), nunknowns(), order() + r);
        } else {
            auto e = eliminate(P.symbol_matrix(), {}, false);
            note_excluded(e);
            d = sym_dim(nvars(), nunknowns(), order() + r) - e.rank;
        }
        dimG_[r] = d;
        return d;
    }

    // dim of the projection pi^{q+r+1}_{q+r}(R_{q+r+1}).
    long dim_projection(int r) { return dim_R(r + 1) - dim_g(r + 1); }

    std::vector<long> dims(int r_max) {
        std::vector<long> out;
        for (int r = 0; r <= r_max; ++r) out.push_back(dim_R(r));
        return out;
    }

    const std::set<std::string>& excluded_locus() const { return excluded_; }

private:
    void note_excluded(const Elimination& e) {
        for (const auto& p : e.pivot_polys) excluded_.insert(p.str());
    }

    DiffOperator op_;
    std::map<int, DiffOperator> prolongs_;
    std::map<int, long> dimR_, dimG_;
    std::set<std::string> excluded_;
};

} // namespace jetpde

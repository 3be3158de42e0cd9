// completion.hpp
// --------------
// Formal integrability: the projections pi^{q+r+1}_{q+r}: R_{q+r+1} -> R_{q+r}
// must all be epimorphisms.  When a projection drops dimension the projected
// equations (new lower-order rows) are adjoined and the test restarts.
#pragma once

#include "jetpde/jetsystem.hpp"

#include <string>
#include <vector>

namespace jetpde {

struct CompletionStep {
    int at_order;                 // order of the adjoined equations' level
    DiffOperator added;           // the new rows (same unknowns)
};

struct FIResult {
    bool formally_integrable = false;
    bool undetermined = false;    // iteration budget exhausted
    bool no_solutions = false;    // system forces all unknowns to vanish
    DiffOperator completed;
    std::vector<CompletionStep> trace;
    int r_max_checked = 0;
};

namespace detail {

// Rows of P (supported on jets of order <= cutoff after elimination) that are
// independent of the row space of `base` at that truncation.
inline std::vector<std::map<std::pair<int, MultiIndex>, MPoly>>
projected_new_rows(const DiffOperator& P, const DiffOperator& base, int cutoff) {
    JetSpace js(P.nvars(), P.nunknowns(), P.order());
    PolyMatrix M = P.full_matrix(P.order());
    std::vector<std::vector<int>> blocks(2);
    for (int c = 0; c < js.dim(); ++c)
        (mi_length(js.coords[c].second) > cutoff ? blocks[0] : blocks[1]).push_back(c);
    auto elim = eliminate(M, blocks, false);

    JetSpace low(P.nvars(), P.nunknowns(), cutoff);
    RowSpan span(low.dim(), P.nvars());
    for (int r = 0; r < base.nrows(); ++r) span.add(base.row_vector(r, low));
    std::vector<std::map<std::pair<int, MultiIndex>, MPoly>> out;
    for (size_t i = 0; i < elim.echelon.size(); ++i) {
        if (mi_length(js.coords[elim.pivot_cols[i]].second) > cutoff) continue;
        std::vector<MPoly> v(low.dim(), MPoly(P.nvars()));
        for (int c = 0; c < js.dim(); ++c) {
            if (elim.echelon[i][c].is_zero()) continue;
            v[low.idx(js.coords[c].first, js.coords[c].second)] = elim.echelon[i][c];
        }
        if (span.add(v)) {
            detail::strip_content(v);
            out.push_back(DiffOperator::terms_vector(v, low));
        }
    }
    return out;
}

} // namespace detail

inline FIResult check_formal_integrability(const DiffOperator& D, int r_max, int budget = 64) {
    FIResult out;
    out.completed = D;
    out.r_max_checked = r_max;
    for (int round = 0; round < budget; ++round) {
        JetSystem S(out.completed);
        int q = out.completed.order();
        bool stable = true;
        for (int r = 0; r <= r_max; ++r) {
            if (S.dim_projection(r) == S.dim_R(r)) continue;
            stable = false;
            auto rows = detail::projected_new_rows(S.prolonged(r + 1), out.completed, q + r);
            if (rows.empty()) {    // cannot happen for honest drops; bail safely
                out.undetermined = true;
                return out;
            }
            DiffOperator added(D.nvars(), D.nunknowns(), (int)rows.size());
            for (int i = 0; i < (int)rows.size(); ++i) added.set_row(i, rows[i]);
            DiffOperator merged(D.nvars(), D.nunknowns(), out.completed.nrows() + added.nrows());
            for (int i = 0; i < out.completed.nrows(); ++i) merged.set_row(i, out.completed.row_terms(i));
            for (int i = 0; i < added.nrows(); ++i)
                merged.set_row(out.completed.nrows() + i, added.row_terms(i));
            out.trace.push_back({q + r, added});
            out.completed = merged;
            break;
        }
        if (stable) {
            out.formally_integrable = true;
            JetSystem fin(out.completed);
            out.no_solutions = (fin.dim_R(0) == 0);
            return out;
        }
    }
    out.undetermined = true;
    return out;
}

} // namespace jetpde

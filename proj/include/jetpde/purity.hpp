// purity.hpp
// ----------
// Purity classification of a residue element z = sum b^{k mu}(x) y^k_mu in
// the differential module of a system: the annihilator system of z is built
// by a bounded search for operators L with L(z) a consequence of the system,
// completed to involution, and read through its characters; z lies in t_r(M)
// exactly when alpha^{n-r} = ... = alpha^n all vanish.
#pragma once

#include "jetpde/cc.hpp"
#include "jetpde/involution.hpp"

#include <string>
#include <vector>

namespace jetpde {

struct PurityResult {
    bool torsion = false;
    int r = -1;                      // largest r with alpha^{n-r..n} = 0; -1 when not torsion
    DiffOperator annihilator;        // generating annihilator system on one unknown z
    std::vector<int> ann_orders;
    CharacterTable characters;       // of the involutive completion of the annihilator
    bool bound_exhausted = false;
    std::string note;
};

// element: a single-row operator over the unknowns of S (the combination z).
inline PurityResult purity_classify(const DiffOperator& S, const DiffOperator& element, int bound = -1) {
    PurityResult out;
    const int n = S.nvars();
    if (element.nrows() != 1 || element.nunknowns() != S.nunknowns() || element.nvars() != n)
        throw std::invalid_argument("purity_classify: element must be one row over the system unknowns");
    if (element.is_zero()) {
        out.torsion = true;
        out.r = n;
        out.note = "zero element lies in t_n(M) = 0";
        return out;
    }
    int q = S.order(), z_ord = element.order();
    if (bound < 0) bound = q + 2;

    std::vector<std::pair<int, std::map<std::pair<int, MultiIndex>, MPoly>>> gens;
    const int slack = 2;
    for (int t = 0; t <= bound; ++t) {
        // reduce the derived element rows modulo prolongations of S
        JetSpace jets(n, S.nunknowns(), t + z_ord);
        RowSpan sys_span(jets.dim(), n);
        for (int r0 = 0; r0 < S.nrows(); ++r0) {
            int ro = S.row_order(r0);
            if (ro > t + z_ord) continue;    // cannot touch jets of this truncation
            for (const auto& rho : multi_indices_up_to(n, t + z_ord - ro)) {
                auto terms = detail::derived_row(S, r0, rho);
                std::vector<MPoly> v(jets.dim(), MPoly(n));
                for (const auto& [km, c] : terms) v[jets.idx(km.first, km.second)] = c;
                sys_span.add(v);
            }
        }
        JetSpace opspace(n, 1, t);    // coefficients of operators on the single unknown z
        PolyMatrix Z(opspace.dim(), jets.dim(), n);
        for (int rc = 0; rc < opspace.dim(); ++rc) {
            auto nu = opspace.coords[rc].second;
            auto terms = detail::derived_row(element, 0, nu);
            std::vector<MPoly> v(jets.dim(), MPoly(n));
            for (const auto& [km, c] : terms) v[jets.idx(km.first, km.second)] = c;
            v = sys_span.reduce(v);
            for (int c = 0; c < jets.dim(); ++c) Z.at(rc, c) = v[c];
        }
        auto null = left_nullspace(Z);    // operator-coefficient vectors annihilating z mod S

        JetSpace padded(n, 1, t + slack);
        RowSpan span(padded.dim(), n);
        auto add_prolongs = [&](int go, const std::map<std::pair<int, MultiIndex>, MPoly>& gterms) {
            DiffOperator G(n, 1, 1);
            G.set_row(0, gterms);
            for (const auto& rho : multi_indices_up_to(n, std::max(0, t + slack - go))) {
                auto tt = detail::derived_row(G, 0, rho);
                std::vector<MPoly> v(padded.dim(), MPoly(n));
                for (const auto& [km, c] : tt) v[padded.idx(km.first, km.second)] = c;
                span.add(v);
            }
        };
        for (const auto& [go, gt] : gens) add_prolongs(go, gt);
        for (const auto& cand : null) {
            std::vector<MPoly> cpad(padded.dim(), MPoly(n));
            for (int i = 0; i < opspace.dim(); ++i)
                if (!cand[i].is_zero())
                    cpad[padded.idx(1, opspace.coords[i].second)] = cand[i];
            if (span.contains(cpad)) continue;
            std::map<std::pair<int, MultiIndex>, MPoly> terms;
            int ord = 0;
            for (int i = 0; i < opspace.dim(); ++i) {
                if (cand[i].is_zero()) continue;
                terms[opspace.coords[i]] = cand[i];
                ord = std::max(ord, mi_length(opspace.coords[i].second));
            }
            if (t == bound) out.bound_exhausted = true;    // still growing at the bound
            gens.push_back({ord, terms});
            add_prolongs(ord, terms);
        }
    }

    out.annihilator = DiffOperator(n, 1, (int)gens.size());
    for (int i = 0; i < (int)gens.size(); ++i) {
        out.annihilator.set_row(i, gens[i].second);
        out.ann_orders.push_back(gens[i].first);
    }
    if (gens.empty()) {
        out.torsion = false;
        out.r = -1;
        out.note = "no annihilating operators up to order " + std::to_string(bound) + ": not torsion";
        return out;
    }
    out.torsion = true;
    auto inv = bring_to_involution(out.annihilator, bound + 1);
    if (!inv.success) {
        out.bound_exhausted = true;
        out.note = "annihilator completion did not reach involution within bounds";
        return out;
    }
    out.characters = inv.table;
    int r = -1;
    for (int cand = 0; cand < n; ++cand) {    // alpha^{n-cand..n} all zero?
        bool ok = true;
        for (int i = n - cand; i <= n; ++i) ok = ok && (out.characters.alpha[i - 1] == 0);
        if (ok)
            r = cand;
        else
            break;
    }
    if (r < 0) {
        // cannot happen when an annihilator exists in delta-regular coordinates
        out.torsion = false;
        out.r = -1;
        out.note = "annihilator found but alpha^n != 0; element reported not torsion";
        return out;
    }
    out.r = r;
    out.note = "element lies in t_" + std::to_string(r) + "(M)" +
               (r + 1 <= n - 1 ? " but not in t_" + std::to_string(r + 1) + "(M) (alpha^" +
                                     std::to_string(n - r - 1) + " = " +
                                     std::to_string(out.characters.alpha[n - r - 2]) + " != 0)"
                               : "");
    return out;
}

} // namespace jetpde

// cc.hpp
// ------
// Generating compatibility conditions: operators Lambda with Lambda o D = 0.
// CC of order <= s correspond to the left nullspace over Q(x) of the full
// prolongation matrix of D (rows d_nu Phi^tau, |nu| <= s); generators are the
// nullspace elements independent of prolongations of lower-order generators.
// Completeness is certified order by order, never absolutely.
#pragma once

#include "jetpde/diffop.hpp"

#include <string>
#include <vector>

namespace jetpde {

struct CCCertRow {
    int order;                 // prolongation order s
    long cc_space_dim;         // dim of the space of CC of order <= s
    long generated_dim;        // dim spanned by prolongations of earlier generators
    int new_generators;
};

struct CCResult {
    DiffOperator generators;    // rows act on the p components of D's target
    std::vector<int> orders;    // order of each generator
    std::vector<CCCertRow> certificate;
    bool possibly_incomplete = false;
    int s_max = 0, d_max = 0;
    std::string note;
};

namespace detail {

// Expanded row of d_nu applied to row tau of D, as terms (k, lambda) -> coeff.
inline std::map<std::pair<int, MultiIndex>, MPoly> derived_row(const DiffOperator& D, int tau,
                                                               const MultiIndex& nu) {
    DiffOperator one(D.nvars(), D.nunknowns(), 1);
    one.set_row(0, D.row_terms(tau));
    for (int i = 1; i <= D.nvars(); ++i)
        for (int c = 0; c < nu[i - 1]; ++c) {
            auto t = one.derive_row(0, i);
            one = DiffOperator(D.nvars(), D.nunknowns(), 1);
            one.set_row(0, t);
        }
    return one.row_terms(0);
}

} // namespace detail

inline CCResult compatibility_conditions(const DiffOperator& D, int s_max = -1, int d_max = -1) {
    CCResult out;
    const int n = D.nvars(), p = D.nrows(), q = D.order();
    if (s_max < 0) s_max = q + 2;
    int maxdeg = 0;
    for (const auto& [key, c] : D.entries()) maxdeg = std::max(maxdeg, c.total_degree());
    if (d_max < 0) d_max = maxdeg + 2;
    out.s_max = s_max;
    out.d_max = d_max;

    std::vector<std::pair<int, std::map<std::pair<int, MultiIndex>, MPoly>>> gens;    // (order, terms over (tau+1, nu))

    // slack: an operator of order <= s generated by the earlier CC may only be
    // expressible through combinations of higher prolongations whose top
    // orders cancel; membership is therefore tested in a padded-order space
    const int slack = 2;

    for (int s = 0; s <= s_max; ++s) {
        JetSpace opspace(n, p, s);            // coefficient space of order-<=s operators on p components
        JetSpace jets(n, D.nunknowns(), q + s);
        // full prolongation matrix: row (tau, nu) = expanded d_nu Phi^tau
        PolyMatrix M(opspace.dim(), jets.dim(), n);
        for (int rc = 0; rc < opspace.dim(); ++rc) {
            auto [tau1, nu] = opspace.coords[rc];
            auto terms = detail::derived_row(D, tau1 - 1, nu);
            for (const auto& [km, c] : terms) M.at(rc, jets.idx(km.first, km.second)) = c;
        }
        auto null = left_nullspace(M);    // candidate CC coefficient vectors over opspace

        // span of prolongations of already-found generators in the padded space
        JetSpace padded(n, p, s + slack);
        RowSpan span(padded.dim(), n);
        auto add_prolongs = [&](int go, const std::map<std::pair<int, MultiIndex>, MPoly>& gterms) {
            DiffOperator G(n, p, 1);
            G.set_row(0, gterms);
            for (const auto& rho : multi_indices_up_to(n, std::max(0, s + slack - go))) {
                auto t = detail::derived_row(G, 0, rho);
                std::vector<MPoly> v(padded.dim(), MPoly(n));
                for (const auto& [km, c] : t) v[padded.idx(km.first, km.second)] = c;
                span.add(v);
            }
        };
        for (const auto& [go, gterms] : gens) add_prolongs(go, gterms);
        int added = 0;
        long generated_before = 0;
        for (const auto& cand : null) {
            std::vector<MPoly> cpad(padded.dim(), MPoly(n));
            for (int i = 0; i < opspace.dim(); ++i)
                if (!cand[i].is_zero()) cpad[padded.idx(opspace.coords[i].first, opspace.coords[i].second)] = cand[i];
            if (span.contains(cpad)) {
                ++generated_before;
                continue;
            }
            ++added;
            std::map<std::pair<int, MultiIndex>, MPoly> terms;
            int ord = 0;
            for (int i = 0; i < opspace.dim(); ++i) {
                if (cand[i].is_zero()) continue;
                terms[opspace.coords[i]] = cand[i];
                ord = std::max(ord, mi_length(opspace.coords[i].second));
            }
            gens.push_back({ord, terms});
            add_prolongs(ord, terms);
        }
        out.certificate.push_back({s, (long)null.size(), generated_before, added});
        if (s == s_max && added > 0) out.possibly_incomplete = true;
    }

    out.generators = DiffOperator(n, p, (int)gens.size());
    for (int i = 0; i < (int)gens.size(); ++i) {
        out.generators.set_row(i, gens[i].second);
        out.orders.push_back(gens[i].first);
    }
    if (out.possibly_incomplete)
        out.note = "bounds exhausted, CC possibly incomplete (new generators at order " +
                   std::to_string(s_max) + ")";
    else
        out.note = "generating set certified through order " + std::to_string(s_max);
    return out;
}

} // namespace jetpde

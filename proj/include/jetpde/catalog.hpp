// catalog.hpp
// -----------
// The built-in systems: Killing and conformal Killing equations (Euclidean
// metric for n <= 3, Minkowski diag(1,1,1,-1) for n = 4), the contact system,
// screw and complex structures, affine/projective line, translations, the
// planar elasticity compatibility condition and the stress divergence.
#pragma once

#include "jetpde/diffop.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace jetpde {

struct CatalogEntry {
    std::string name;
    std::string description;
    std::vector<int> valid_n;
    int unknowns;    // -1: equals n
};

inline std::vector<CatalogEntry> catalog_list() {
    return {
        {"killing", "Killing system: L(xi) omega = 0 for the flat metric", {2, 3, 4}, -1},
        {"conformal_killing", "conformal Killing system, trace-removed", {3, 4}, -1},
        {"contact", "infinitesimal contact transformations (two equations)", {3}, 3},
        {"screw", "screw structure: xi^1_2 = 0, xi^2_2 - xi^1_1 = 0", {2}, 2},
        {"complex", "Cauchy-Riemann system", {2}, 2},
        {"affine_line", "affine structure of the line: xi_xx = 0", {1}, 1},
        {"projective_line", "projective structure of the line: xi_xxx = 0", {1}, 1},
        {"translations", "translations: d_i xi^k = 0", {1, 2, 3, 4}, -1},
        {"elasticity_cc", "planar 2D compatibility of the deformation tensor", {2}, 3},
        {"stress_div", "planar stress equilibrium d_r sigma^{ir} = 0", {2}, 3},
    };
}

inline std::vector<Rational> flat_metric(int n) {
    std::vector<Rational> w(n, Rational(1));
    if (n == 4) w[3] = Rational(-1);    // Minkowski signature for space-time
    return w;
}

inline DiffOperator catalog(const std::string& name, int n) {
    auto bad_n = [&]() {
        throw std::invalid_argument("catalog: invalid n=" + std::to_string(n) + " for '" + name + "'");
    };
    auto one = [&](int nv) { return MPoly::constant(nv, Rational(1)); };

    if (name == "killing") {
        if (n < 2 || n > 4) bad_n();
        auto w = flat_metric(n);
        DiffOperator D(n, n, n * (n + 1) / 2);
        int row = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j, ++row) {
                // omega_rj d_i xi^r + omega_ir d_j xi^r, diagonal metric
                D.add_term(row, j, mi_plus(mi_zero(n), i), MPoly::constant(n, w[j - 1]));
                D.add_term(row, i, mi_plus(mi_zero(n), j), MPoly::constant(n, w[i - 1]));
            }
        return D;
    }
    if (name == "conformal_killing") {
        if (n < 3 || n > 4) bad_n();
        auto w = flat_metric(n);
        int rows = n * (n - 1) / 2 + (n - 1);
        DiffOperator D(n, n, rows);
        int row = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j, ++row) {
                D.add_term(row, j, mi_plus(mi_zero(n), i), MPoly::constant(n, w[j - 1]));
                D.add_term(row, i, mi_plus(mi_zero(n), j), MPoly::constant(n, w[i - 1]));
            }
        // diagonal part with the omega-trace removed: n w_i xi^i_i - w_i sum_r xi^r_r
        for (int i = 1; i < n; ++i, ++row) {
            D.add_term(row, i, mi_plus(mi_zero(n), i), MPoly::constant(n, w[i - 1] * Rational(n)));
            for (int r = 1; r <= n; ++r)
                D.add_term(row, r, mi_plus(mi_zero(n), r), MPoly::constant(n, -w[i - 1]));
        }
        return D;
    }
    if (name == "contact") {
        if (n != 3) bad_n();
        DiffOperator D(3, 3, 2);
        MPoly x3 = MPoly::variable(3, 3);
        D.add_term(0, 1, {0, 1, 0}, one(3));
        D.add_term(0, 2, {0, 1, 0}, -x3);
        D.add_term(0, 1, {1, 0, 0}, x3);
        D.add_term(0, 2, {1, 0, 0}, -(x3 * x3));
        D.add_term(0, 3, {0, 0, 0}, -one(3));
        D.add_term(1, 1, {0, 0, 1}, one(3));
        D.add_term(1, 2, {0, 0, 1}, -x3);
        return D;
    }
    if (name == "screw") {
        if (n != 2) bad_n();
        DiffOperator D(2, 2, 2);
        D.add_term(0, 1, {0, 1}, one(2));
        D.add_term(1, 2, {0, 1}, one(2));
        D.add_term(1, 1, {1, 0}, -one(2));
        return D;
    }
    if (name == "complex") {
        if (n != 2) bad_n();
        DiffOperator D(2, 2, 2);
        D.add_term(0, 2, {0, 1}, one(2));
        D.add_term(0, 1, {1, 0}, -one(2));
        D.add_term(1, 1, {0, 1}, one(2));
        D.add_term(1, 2, {1, 0}, one(2));
        return D;
    }
    if (name == "affine_line") {
        if (n != 1) bad_n();
        DiffOperator D(1, 1, 1);
        D.add_term(0, 1, {2}, one(1));
        return D;
    }
    if (name == "projective_line") {
        if (n != 1) bad_n();
        DiffOperator D(1, 1, 1);
        D.add_term(0, 1, {3}, one(1));
        return D;
    }
    if (name == "translations") {
        if (n < 1 || n > 4) bad_n();
        DiffOperator D(n, n, n * n);
        int row = 0;
        for (int k = 1; k <= n; ++k)
            for (int i = 1; i <= n; ++i, ++row) D.add_term(row, k, mi_plus(mi_zero(n), i), one(n));
        return D;
    }
    if (name == "elasticity_cc") {
        if (n != 2) bad_n();
        // unknowns (e11, e12, e22): d22 e11 + d11 e22 - 2 d12 e12 = 0
        DiffOperator D(2, 3, 1);
        D.add_term(0, 1, {0, 2}, one(2));
        D.add_term(0, 3, {2, 0}, one(2));
        D.add_term(0, 2, {1, 1}, MPoly::constant(2, Rational(-2)));
        return D;
    }
    if (name == "stress_div") {
        if (n != 2) bad_n();
        // unknowns (s11, s12, s22), s21 = s12: d1 s11 + d2 s12 = 0, d1 s12 + d2 s22 = 0
        DiffOperator D(2, 3, 2);
        D.add_term(0, 1, {1, 0}, one(2));
        D.add_term(0, 2, {0, 1}, one(2));
        D.add_term(1, 2, {1, 0}, one(2));
        D.add_term(1, 3, {0, 1}, one(2));
        return D;
    }
    throw std::invalid_argument("catalog: unknown system '" + name + "'");
}

// The exterior derivative d: Lambda^r -> Lambda^{r+1} as a first-order
// operator on C(n,r) unknowns (Poincare sequence pieces; grad, curl, div).
inline DiffOperator poincare_d(int n, int r) {
    auto srcs = subsets_of_size(n, r);
    auto dsts = subsets_of_size(n, r + 1);
    std::map<std::vector<int>, int> spos;
    for (int i = 0; i < (int)srcs.size(); ++i) spos[srcs[i]] = i;
    DiffOperator D(n, (int)srcs.size(), (int)dsts.size());
    for (int row = 0; row < (int)dsts.size(); ++row) {
        const auto& J = dsts[row];
        for (int p = 0; p < (int)J.size(); ++p) {
            std::vector<int> I = J;
            I.erase(I.begin() + p);
            Rational sign((p % 2 == 0) ? 1 : -1);
            D.add_term(row, spos.at(I) + 1, mi_plus(mi_zero(n), J[p]), MPoly::constant(n, sign));
        }
    }
    return D;
}

} // namespace jetpde

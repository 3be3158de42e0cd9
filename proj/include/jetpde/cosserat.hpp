// cosserat.hpp
// ------------
// The stress / couple-stress balance equations as the formal adjoint of the
// first Spencer operator of the Killing system, with the explicit two- and
// three-dimensional checks: the two-potential/three-potential parametrization
// and its Airy specialization.
#pragma once

#include "jetpde/catalog.hpp"
#include "jetpde/sequences.hpp"

#include <string>
#include <vector>

namespace jetpde {

struct CosseratRecord {
    int n = 0;
    DiffOperator d1;          // first Spencer operator in lowered-index coordinates
    DiffOperator equations;   // ad(D1): momentum and couple rows
    std::vector<std::string> dual_names;
    DiffOperator parametrization;      // the phi-potential operator (n = 2)
    bool parametrization_zero = false;
    bool airy_symmetric = false;
    bool airy_couple_free = false;
    bool structure_ok = false;         // rows carry d_r sigma^{ir} resp. couple terms
};

// First Spencer operator of the flat Killing system at order one, written in
// the lowered-index fiber coordinates (xi_1..xi_n, xi_{i,j} for i < j) with
// xi_{j,i} = -xi_{i,j} and all second jets zero.
inline DiffOperator cosserat_d1(int n) {
    auto w = flat_metric(n);
    int nrot = n * (n - 1) / 2;
    auto rot = subsets_of_size(n, 2);    // pairs (i < j) in lex order
    std::map<std::pair<int, int>, int> rpos;
    for (int r = 0; r < nrot; ++r) rpos[{rot[r][0], rot[r][1]}] = r;
    DiffOperator D(n, n + nrot, n * n + nrot * n);
    int row = 0;
    // d_j xi_i - xi_{i,j}
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j, ++row) {
            D.add_term(row, i, mi_plus(mi_zero(n), j), MPoly::constant(n, Rational(1)));
            if (i < j)
                D.add_term(row, n + rpos[{i, j}] + 1, mi_zero(n), MPoly::constant(n, Rational(-1)));
            else if (j < i)
                D.add_term(row, n + rpos[{j, i}] + 1, mi_zero(n), MPoly::constant(n, Rational(1)));
        }
    // d_r xi_{i,j} (second jets vanish)
    for (int r0 = 0; r0 < nrot; ++r0)
        for (int r = 1; r <= n; ++r, ++row)
            D.add_term(row, n + r0 + 1, mi_plus(mi_zero(n), r), MPoly::constant(n, Rational(1)));
    (void)w;
    return D;
}

inline CosseratRecord cosserat_check(int n) {
    if (n != 2 && n != 3) throw std::invalid_argument("cosserat_check: n must be 2 or 3");
    CosseratRecord out;
    out.n = n;
    out.d1 = cosserat_d1(n);
    out.equations = out.d1.adjoint();
    auto rot = subsets_of_size(n, 2);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            out.dual_names.push_back("sigma" + std::to_string(i) + std::to_string(j));
    for (const auto& p : rot)
        for (int r = 1; r <= n; ++r)
            out.dual_names.push_back("mu" + std::to_string(p[0]) + std::to_string(p[1]) +
                                     std::to_string(r));

    // structural check: row i is -d_r sigma^{i,r}; row for the pair (i,j) is
    // -(d_r mu^{ij,r} + sigma^{i,j} - sigma^{j,i})
    auto sig = [&](int i, int j) { return (i - 1) * n + j; };    // dual index of sigma^{i,j}
    bool ok = true;
    for (int i = 1; i <= n; ++i) {
        auto terms = out.equations.row_terms(i - 1);
        if ((int)terms.size() != n) ok = false;
        for (int r = 1; r <= n; ++r) {
            auto it = terms.find({sig(i, r), mi_plus(mi_zero(n), r)});
            if (it == terms.end() || it->second.constant_value() != Rational(-1)) ok = false;
        }
    }
    for (int r0 = 0; r0 < (int)rot.size(); ++r0) {
        int i = rot[r0][0], j = rot[r0][1];
        auto terms = out.equations.row_terms(n + r0);
        for (int r = 1; r <= n; ++r) {
            auto it = terms.find({n * n + r0 * n + r, mi_plus(mi_zero(n), r)});
            if (it == terms.end() || it->second.constant_value() != Rational(-1)) ok = false;
        }
        auto its = terms.find({sig(i, j), mi_zero(n)});
        auto itt = terms.find({sig(j, i), mi_zero(n)});
        if (its == terms.end() || its->second.constant_value() != Rational(-1)) ok = false;
        if (itt == terms.end() || itt->second.constant_value() != Rational(1)) ok = false;
    }
    out.structure_ok = ok;

    if (n == 2) {
        // sigma11 = d2 phi1, sigma12 = -d1 phi1, sigma21 = -d2 phi2,
        // sigma22 = d1 phi2, mu121 = d2 phi3 + phi1, mu122 = -d1 phi3 - phi2
        DiffOperator P(2, 3, 6);
        auto one = MPoly::constant(2, Rational(1));
        P.add_term(0, 1, {0, 1}, one);
        P.add_term(1, 1, {1, 0}, -one);
        P.add_term(2, 2, {0, 1}, -one);
        P.add_term(3, 2, {1, 0}, one);
        P.add_term(4, 3, {0, 1}, one);
        P.add_term(4, 1, {0, 0}, one);
        P.add_term(5, 3, {1, 0}, -one);
        P.add_term(5, 2, {0, 0}, -one);
        out.parametrization = P;
        out.parametrization_zero = out.equations.compose(P).is_zero();
        // Airy specialization phi1 = d2 phi, phi2 = d1 phi, phi3 = -phi
        DiffOperator A(2, 1, 3);
        A.add_term(0, 1, {0, 1}, one);
        A.add_term(1, 1, {1, 0}, one);
        A.add_term(2, 1, {0, 0}, -one);
        DiffOperator full = P.compose(A);
        out.airy_symmetric = (full.row_terms(1) == full.row_terms(2));    // sigma12 = sigma21
        out.airy_couple_free = full.row_terms(4).empty() && full.row_terms(5).empty();
    }
    return out;
}

} // namespace jetpde

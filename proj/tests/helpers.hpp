// helpers.hpp
// -----------
// Shared test utilities: seeded random generators for rationals, polynomials
// and small operators, plus independent oracles (dense rational elimination,
// determinant expansion, k x k minor gcds) kept deliberately separate from
// the library's own elimination path.
#pragma once

#include "jetpde/diffop.hpp"
#include "jetpde/polymatrix.hpp"
#include "jetpde/upoly.hpp"

#include <random>
#include <vector>

namespace testutil {

using namespace jetpde;

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline Rational random_rational(std::mt19937_64& g, int lim = 9) {
    std::uniform_int_distribution<int> num(-lim, lim);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(g), den(g));
}

inline MPoly random_poly(std::mt19937_64& g, int nvars, int deg, int terms, int lim = 6) {
    MPoly p(nvars);
    std::uniform_int_distribution<int> e(0, deg);
    std::uniform_int_distribution<int> c(-lim, lim);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars, 0);
        int budget = deg;
        for (int i = 0; i < nvars; ++i) {
            int ei = e(g) % (budget + 1);
            m[i] = ei;
            budget -= ei;
        }
        p.add_term(m, Rational(c(g)));
    }
    return p;
}

inline PolyMatrix random_int_matrix(std::mt19937_64& g, int rows, int cols, int lim = 9) {
    PolyMatrix M(rows, cols, 1);
    std::uniform_int_distribution<int> c(-lim, lim);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M.at(i, j) = MPoly::constant(1, Rational(c(g)));
    return M;
}

// small random operator with constant or low-degree polynomial coefficients
inline DiffOperator random_operator(std::mt19937_64& g, int nvars, int m, int rows, int order,
                                    bool poly_coeffs = false) {
    DiffOperator D(nvars, m, rows);
    std::uniform_int_distribution<int> pick(0, 100);
    auto mus = multi_indices_up_to(nvars, order);
    for (int r = 0; r < rows; ++r) {
        int placed = 0;
        for (int k = 1; k <= m; ++k)
            for (const auto& mu : mus) {
                if (pick(g) < 60) continue;
                MPoly c = poly_coeffs ? random_poly(g, nvars, 2, 2, 3)
                                      : MPoly::constant(nvars, random_rational(g, 5));
                D.add_term(r, k, mu, c);
                ++placed;
            }
        if (placed == 0) D.add_term(r, 1, mus.back(), MPoly::constant(nvars, Rational(1)));
    }
    return D;
}

// Independent oracle: dense Gaussian elimination over Q (constants only).
inline long rank_oracle_q(const PolyMatrix& M) {
    std::vector<std::vector<Rational>> W(M.rows, std::vector<Rational>(M.cols));
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) W[i][j] = M.at(i, j).constant_value();
    long rank = 0;
    int row = 0;
    for (int col = 0; col < M.cols && row < M.rows; ++col) {
        int pr = -1;
        for (int i = row; i < M.rows; ++i)
            if (!W[i][col].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(W[pr], W[row]);
        for (int i = 0; i < M.rows; ++i) {
            if (i == row || W[i][col].is_zero()) continue;
            Rational f = W[i][col] / W[row][col];
            for (int j = col; j < M.cols; ++j) W[i][j] -= f * W[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Independent oracle: determinant by cofactor expansion (small matrices).
inline MPoly det_oracle(const PolyMatrix& M) {
    if (M.rows != M.cols) throw std::invalid_argument("det oracle: square only");
    int n = M.rows;
    if (n == 0) return MPoly::constant(M.nvars, Rational(1));
    if (n == 1) return M.at(0, 0);
    MPoly det(M.nvars);
    for (int j = 0; j < n; ++j) {
        if (M.at(0, j).is_zero()) continue;
        PolyMatrix sub(n - 1, n - 1, M.nvars);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = M.at(r, c);
            }
        }
        MPoly term = M.at(0, j) * det_oracle(sub);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// Independent oracle for Smith invariant factors: d_1...d_k = gcd of all k x k
// minors (determinantal divisors), for matrices over Q[d] embedded as MPoly.
inline std::vector<UPoly> smith_oracle(const std::vector<std::vector<UPoly>>& M) {
    int rows = (int)M.size(), cols = rows ? (int)M[0].size() : 0;
    auto minor_det = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
        PolyMatrix S((int)rs.size(), (int)cs.size(), 1);
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j) {
                const UPoly& e = M[rs[i]][cs[j]];
                MPoly p(1);
                for (int d = 0; d <= e.degree(); ++d) p.add_term({d}, e[d]);
                S.at((int)i, (int)j) = p;
            }
        MPoly d = det_oracle(S);
        UPoly u;
        std::vector<Rational> coef;
        for (const auto& [mono, c] : d.terms()) {
            if ((int)coef.size() <= mono[0]) coef.resize(mono[0] + 1, Rational(0));
            coef[mono[0]] = c;
        }
        return UPoly(coef);
    };
    std::vector<UPoly> divisors;    // g_k = gcd of k x k minors
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        UPoly g;
        for (const auto& rs : subsets_of_size(rows, k))
            for (const auto& cs : subsets_of_size(cols, k)) {
                std::vector<int> r0(rs.size()), c0(cs.size());
                for (size_t i = 0; i < rs.size(); ++i) r0[i] = rs[i] - 1;
                for (size_t i = 0; i < cs.size(); ++i) c0[i] = cs[i] - 1;
                UPoly mk = minor_det(r0, c0);
                if (!mk.is_zero()) g = g.is_zero() ? mk.monic() : upoly_gcd(g, mk);
            }
        if (g.is_zero()) break;
        divisors.push_back(g);
    }
    std::vector<UPoly> factors;
    UPoly prev{Rational(1)};
    for (const auto& g : divisors) {
        factors.push_back(g.divexact(prev).monic());
        prev = g;
    }
    return factors;
}

} // namespace testutil

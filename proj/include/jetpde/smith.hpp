// smith.hpp
// ---------
// Smith normal form of a matrix over the univariate polynomial ring Q[d].
// Returns monic invariant factors d_1 | d_2 | ... | d_r and, on request, the
// unimodular transforms U, V with U * M * V = diag(d_1..d_r).
#pragma once

#include "jetpde/upoly.hpp"

#include <vector>

namespace jetpde {

struct SmithResult {
    std::vector<UPoly> factors;               // monic, divisibility chain, length = rank
    std::vector<std::vector<UPoly>> U, V;     // optional unimodular transforms
    int rows = 0, cols = 0;
};

namespace detail {

inline void mat_identity(std::vector<std::vector<UPoly>>& M, int k) {
    M.assign(k, std::vector<UPoly>(k, UPoly()));
    for (int i = 0; i < k; ++i) M[i][i] = UPoly(Rational(1));
}

} // namespace detail

inline SmithResult smith_form(std::vector<std::vector<UPoly>> M, bool with_transforms = false) {
    SmithResult out;
    int rows = (int)M.size();
    int cols = rows ? (int)M[0].size() : 0;
    out.rows = rows;
    out.cols = cols;
    std::vector<std::vector<UPoly>> U, V;
    if (with_transforms) {
        detail::mat_identity(U, rows);
        detail::mat_identity(V, cols);
    }
    auto row_sub = [&](int dst, int src, const UPoly& q) {    // row dst -= q * row src
        for (int j = 0; j < cols; ++j) M[dst][j] -= q * M[src][j];
        if (with_transforms)
            for (int j = 0; j < rows; ++j) U[dst][j] -= q * U[src][j];
    };
    auto col_sub = [&](int dst, int src, const UPoly& q) {
        for (int i = 0; i < rows; ++i) M[i][dst] -= q * M[i][src];
        if (with_transforms)
            for (int i = 0; i < cols; ++i) V[i][dst] -= q * V[i][src];
    };
    auto row_swap = [&](int a, int b) {
        std::swap(M[a], M[b]);
        if (with_transforms) std::swap(U[a], U[b]);
    };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(M[i][a], M[i][b]);
        if (with_transforms)
            for (int i = 0; i < cols; ++i) std::swap(V[i][a], V[i][b]);
    };

    int t = 0;
    while (true) {
        // find a nonzero entry of minimal degree in the trailing submatrix
        int pr = -1, pc = -1, best = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (!M[i][j].is_zero() && (best < 0 || M[i][j].degree() < best)) {
                    best = M[i][j].degree();
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        row_swap(t, pr);
        col_swap(t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (M[i][t].is_zero()) continue;
                auto [q, r] = M[i][t].divmod(M[t][t]);
                row_sub(i, t, q);
                if (!M[i][t].is_zero()) {    // remainder has lower degree: promote it
                    row_swap(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (M[t][j].is_zero()) continue;
                auto [q, r] = M[t][j].divmod(M[t][t]);
                col_sub(j, t, q);
                if (!M[t][j].is_zero()) {
                    col_swap(t, j);
                    clean = false;
                }
            }
        }
        // the pivot must divide the whole trailing block
        bool again = false;
        for (int i = t + 1; i < rows && !again; ++i)
            for (int j = t + 1; j < cols && !again; ++j) {
                if (M[i][j].is_zero()) continue;
                if (!M[t][t].divides(M[i][j])) {
                    row_sub(t, i, UPoly(Rational(-1)));    // row t += row i
                    again = true;
                }
            }
        if (again) continue;
        ++t;
    }

    for (int i = 0; i < t; ++i) {
        Rational lead = M[i][i].lead();
        if (with_transforms && !lead.is_one())
            for (int j = 0; j < rows; ++j) U[i][j] = U[i][j].scaled(lead.inv());
        out.factors.push_back(M[i][i].monic());
    }
    if (with_transforms) {
        out.U = std::move(U);
        out.V = std::move(V);
    }
    return out;
}

} // namespace jetpde

// ricci.hpp
// ---------
// Canonical splitting of the linearized curvature space: given a metric omega
// and a symmetric rho_ij, builds
//   rho^k_{l,ij} = 1/(n-2) (delta^k_i rho_lj - delta^k_j rho_li
//                  + omega_lj omega^{ks} rho_si - omega_li omega^{ks} rho_sj)
//                  - rho/((n-1)(n-2)) (delta^k_i omega_lj - delta^k_j omega_li)
// and verifies the trace-back identity rho^r_{i,rj} = rho_ij exactly.
#pragma once

#include "jetpde/rational.hpp"

#include <stdexcept>
#include <vector>

namespace jetpde {

struct SplitTensors {
    int n = 0;
    std::vector<std::vector<Rational>> omega, omega_inv, rho;
    Rational rho_scalar;
    std::vector<std::vector<Rational>> tau;    // (n-2) tau_ij = n rho_ij - (n/(2(n-1))) omega_ij rho
    // rho4[k][l][i][j], antisymmetric in (i, j)
    std::vector<std::vector<std::vector<std::vector<Rational>>>> rho4;
    bool trace_identity_ok = false;
};

namespace detail {

inline std::vector<std::vector<Rational>> invert_sym(const std::vector<std::vector<Rational>>& A) {
    int n = (int)A.size();
    std::vector<std::vector<Rational>> W(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) W[i][j] = A[i][j];
        W[i][n + i] = Rational(1);
    }
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (!W[i][c].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) throw std::invalid_argument("ricci_weyl_split: metric not invertible");
        std::swap(W[c], W[pr]);
        Rational piv = W[c][c];
        for (auto& x : W[c]) x /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == c || W[i][c].is_zero()) continue;
            Rational f = W[i][c];
            for (int j = 0; j < 2 * n; ++j) W[i][j] -= f * W[c][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = W[i][n + j];
    return inv;
}

} // namespace detail

inline SplitTensors ricci_weyl_split(const std::vector<std::vector<Rational>>& omega,
                                     const std::vector<std::vector<Rational>>& rho) {
    int n = (int)omega.size();
    if (n <= 2) throw std::invalid_argument("ricci_weyl_split: needs n >= 3 (formula divides by n-2)");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (omega[i][j] != omega[j][i]) throw std::invalid_argument("ricci_weyl_split: omega not symmetric");
            if (rho[i][j] != rho[j][i]) throw std::invalid_argument("ricci_weyl_split: rho not symmetric");
        }
    SplitTensors out;
    out.n = n;
    out.omega = omega;
    out.rho = rho;
    out.omega_inv = detail::invert_sym(omega);

    out.rho_scalar = Rational(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.rho_scalar += out.omega_inv[i][j] * rho[i][j];

    out.tau.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.tau[i][j] = (Rational(n) * rho[i][j] -
                             Rational(n, 2 * (n - 1)) * omega[i][j] * out.rho_scalar) /
                            Rational(n - 2);

    auto delta = [](int a, int b) { return a == b ? Rational(1) : Rational(0); };
    out.rho4.assign(n, std::vector<std::vector<std::vector<Rational>>>(
                           n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0)))));
    Rational c1 = Rational(1, n - 2);
    Rational c2 = Rational(1, (n - 1) * (n - 2));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Rational s(0);
                    for (int t = 0; t < n; ++t) {
                        s += omega[l][j] * out.omega_inv[k][t] * rho[t][i];
                        s -= omega[l][i] * out.omega_inv[k][t] * rho[t][j];
                    }
                    out.rho4[k][l][i][j] =
                        c1 * (delta(k, i) * rho[l][j] - delta(k, j) * rho[l][i] + s) -
                        c2 * out.rho_scalar * (delta(k, i) * omega[l][j] - delta(k, j) * omega[l][i]);
                }

    out.trace_identity_ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational tr(0);
            for (int r = 0; r < n; ++r) tr += out.rho4[r][i][r][j];
            if (tr != rho[i][j]) out.trace_identity_ok = false;
        }
    return out;
}

inline std::vector<std::vector<Rational>> euclid_metric_matrix(int n) {
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) w[i][i] = Rational(1);
    return w;
}

inline std::vector<std::vector<Rational>> minkowski_metric_matrix(int n) {
    auto w = euclid_metric_matrix(n);
    w[n - 1][n - 1] = Rational(-1);
    return w;
}

} // namespace jetpde

// characters.hpp
// --------------
// Janet characters beta^i_q / alpha^i_q by class-wise elimination of the
// symbol, the Cartan involutivity test, delta-regular coordinate search by
// random unimodular changes, and the character-derived Hilbert polynomial.
//
// alpha^i_q = m*(q+n-i-1)!/((q-1)!(n-i)!) - beta^i_q.  For an involutive
// symbol in delta-regular coordinates the prolonged symbol satisfies
// dim g_{q+1} = sum_i i*alpha^i_q; the detailed dimension count also gives
// dim g_{q+s} = sum_i alpha^i_q * C(s+i-1, i-1), which feeds the Hilbert
// polynomial  dim R_{q+r} = dim R_q + sum_i alpha^i_q (C(r+i, i) - 1).
#pragma once

#include "jetpde/jetsystem.hpp"
#include "jetpde/upoly.hpp"

#include <random>
#include <string>
#include <vector>

namespace jetpde {

struct CharacterTable {
    int n = 0, m = 0, q = 0;
    std::vector<long> beta, alpha;    // index i-1 holds class-i value
    long dim_gq = 0;
    long dim_gq1 = 0;
    long cartan_sum = 0;              // sum_i i*alpha^i_q
    bool involutive_symbol = false;   // Cartan equality achieved
    bool delta_regular = false;
    std::vector<std::vector<long>> coordinate_change;    // identity if none
    std::string status;

    long alpha_total() const {
        long s = 0;
        for (long a : alpha) s += a;
        return s;
    }
};

namespace detail {

inline std::vector<std::vector<long>> identity_change(int n) {
    std::vector<std::vector<long>> A(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) A[i][i] = 1;
    return A;
}

inline long det_sign_or_zero(const std::vector<std::vector<long>>& A) {
    // exact determinant of a small integer matrix
    int n = (int)A.size();
    std::vector<std::vector<Rational>> W(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) W[i][j] = Rational(A[i][j]);
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (!W[i][c].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) return 0;
        if (pr != c) {
            std::swap(W[pr], W[c]);
            det = -det;
        }
        det *= W[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (W[i][c].is_zero()) continue;
            Rational f = W[i][c] / W[c][c];
            for (int j = c; j < n; ++j) W[i][j] -= f * W[c][j];
        }
    }
    if (det == Rational(1)) return 1;
    if (det == Rational(-1)) return -1;
    return 0;
}

// Random integer matrix with entries in [-3, 3] and det = +-1.
inline std::vector<std::vector<long>> random_unimodular(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    for (int attempt = 0; attempt < 5000; ++attempt) {
        std::vector<std::vector<long>> A(n, std::vector<long>(n));
        for (auto& row : A)
            for (auto& x : row) x = d(rng);
        if (det_sign_or_zero(A) != 0) return A;
    }
    return identity_change(n);
}

inline std::vector<std::vector<Rational>> to_rational(const std::vector<std::vector<long>>& A) {
    std::vector<std::vector<Rational>> R(A.size(), std::vector<Rational>(A.size()));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A.size(); ++j) R[i][j] = Rational(A[i][j]);
    return R;
}

// beta^i by class-prioritized elimination of the symbol of D.
inline std::vector<long> class_betas(const DiffOperator& D) {
    int n = D.nvars(), m = D.nunknowns(), q = D.order();
    auto mus = multi_indices_of_length(n, q);
    std::map<std::pair<int, MultiIndex>, int> pos;
    int c = 0;
    for (const auto& mu : mus)
        for (int k = 1; k <= m; ++k) pos[{k, mu}] = c++;
    PolyMatrix M(D.nrows(), c, n);
    for (const auto& [key, a] : D.entries())
        if (mi_length(std::get<2>(key)) == q)
            M.at(std::get<0>(key), pos[{std::get<1>(key), std::get<2>(key)}]) = a;
    // one block per class, highest class first
    std::vector<std::vector<int>> blocks;
    std::vector<int> cls_of(c);
    for (const auto& [km, idx] : pos) cls_of[idx] = mi_class(km.second);
    for (int cls = n; cls >= 1; --cls) {
        std::vector<int> b;
        for (int j = 0; j < c; ++j)
            if (cls_of[j] == cls) b.push_back(j);
        blocks.push_back(b);
    }
    auto elim = eliminate(M, blocks, false);
    std::vector<long> beta(n, 0);
    for (int pc : elim.pivot_cols) beta[cls_of[pc] - 1] += 1;
    return beta;
}

inline std::vector<long> alphas_from_betas(int n, int m, int q, const std::vector<long>& beta) {
    std::vector<long> alpha(n, 0);
    for (int i = 1; i <= n; ++i) {
        mpz_class cnt = binomial(q + n - i - 1, n - i) * m;    // = m (q+n-i-1)!/((q-1)!(n-i)!)
        alpha[i - 1] = (long)cnt.get_si() - beta[i - 1];
    }
    return alpha;
}

} // namespace detail

// Characters of a formally integrable system.  Searches delta-regular
// coordinates with seeded random unimodular changes when the Cartan equality
// fails as given.
inline CharacterTable characters(const DiffOperator& D, unsigned seed = 0, int retries = 25) {
    CharacterTable best;
    int n = D.nvars(), m = D.nunknowns(), q = D.order();
    best.n = n;
    best.m = m;
    best.q = q;

    JetSystem S(D);
    long dim_gq = S.dim_g(0);
    long dim_gq1 = S.dim_g(1);    // invariant under linear coordinate change

    std::mt19937_64 rng(seed ? seed : 0x9e3779b97f4a7c15ULL);
    bool have_best = false;
    for (int t = 0; t <= retries; ++t) {
        std::vector<std::vector<long>> A =
            (t == 0) ? detail::identity_change(n) : detail::random_unimodular(n, rng);
        DiffOperator Dt = (t == 0) ? D : D.transform(detail::to_rational(A));
        auto beta = detail::class_betas(Dt);
        auto alpha = detail::alphas_from_betas(n, m, q, beta);
        long cartan = 0;
        for (int i = 1; i <= n; ++i) cartan += i * alpha[i - 1];
        CharacterTable tab;
        tab.n = n;
        tab.m = m;
        tab.q = q;
        tab.beta = beta;
        tab.alpha = alpha;
        tab.dim_gq = dim_gq;
        tab.dim_gq1 = dim_gq1;
        tab.cartan_sum = cartan;
        tab.coordinate_change = A;
        if (cartan == dim_gq1) {
            tab.involutive_symbol = true;
            tab.delta_regular = true;
            tab.status = (t == 0) ? "involutive"
                                  : "involutive (delta-regular after coordinate change)";
            return tab;
        }
        // keep the lexicographically largest beta vector from class n down
        auto key = [&](const CharacterTable& c) {
            std::vector<long> k(c.beta.rbegin(), c.beta.rend());
            return k;
        };
        if (!have_best || key(tab) > key(best)) {
            best = tab;
            have_best = true;
        }
    }
    best.involutive_symbol = false;
    best.delta_regular = false;
    best.status = "Cartan equality not reached within " + std::to_string(retries) +
                  " coordinate retries; symbol not involutive at this order";
    return best;
}

// dim g_{q+s} predicted by involutive characters.
inline long predicted_dim_g(const CharacterTable& t, int s) {
    if (s == 0) return t.alpha_total();
    Rational total(0);
    for (int i = 1; i <= t.n; ++i)
        total += Rational(binomial(s + i - 1, i - 1)) * Rational(t.alpha[i - 1]);
    return (long)total.num().get_si();
}

// Hilbert polynomial in r: dim R_{q+r} = dim R_q + sum_i alpha^i (C(r+i,i)-1).
inline UPoly hilbert_polynomial(const CharacterTable& t, long dim_Rq) {
    UPoly P{Rational(dim_Rq)};
    for (int i = 1; i <= t.n; ++i) {
        if (t.alpha[i - 1] == 0) continue;
        UPoly binom{Rational(1)};    // C(r+i, i) = prod_{j=1..i} (r+j)/j
        for (int j = 1; j <= i; ++j) {
            UPoly lin(std::vector<Rational>{Rational(j), Rational(1)});
            binom = binom * lin.scaled(Rational(1, j));
        }
        P += (binom - UPoly(Rational(1))).scaled(Rational(t.alpha[i - 1]));
    }
    return P;
}

} // namespace jetpde

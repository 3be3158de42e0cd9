// multiindex.hpp
// --------------
// Derivative multi-indices mu = (mu_1..mu_n) and the jet-coordinate layout
// shared by every matrix in the project: graded by |mu|, class descending
// inside a grade, then lexicographic on mu, then unknown index.
//
// The class of mu is the smallest i with mu_i != 0; the zero multi-index has
// class n+1 by convention so it never competes in class-based orderings.
#pragma once

#include "jetpde/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetpde {

using MultiIndex = Monomial;    // same representation as a monomial exponent

inline int mi_length(const MultiIndex& mu) { return mono_degree(mu); }

inline int mi_class(const MultiIndex& mu) {
    for (size_t i = 0; i < mu.size(); ++i)
        if (mu[i] != 0) return (int)i + 1;
    return (int)mu.size() + 1;
}

inline MultiIndex mi_plus(MultiIndex mu, int i) {    // i is 1-based
    mu[i - 1] += 1;
    return mu;
}

inline MultiIndex mi_zero(int n) { return MultiIndex(n, 0); }

inline MultiIndex mi_sum(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline bool mi_leq(const MultiIndex& a, const MultiIndex& b) {    // componentwise
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline MultiIndex mi_minus(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Rational mi_binomial(const MultiIndex& nu, const MultiIndex& rho) {
    mpz_class r = 1;
    for (size_t i = 0; i < nu.size(); ++i) r *= binomial(nu[i], rho[i]);
    return Rational(r);
}

// All multi-indices of length exactly d, in the jet order for one grade:
// class descending, then lexicographic ascending.
inline std::vector<MultiIndex> multi_indices_of_length(int n, int d) {
    std::vector<MultiIndex> all;
    MultiIndex cur(n, 0);
    // enumerate recursively, then sort into the canonical order
    std::vector<int> stack;
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n - 1) {
            cur[pos] = rem;
            all.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[pos] = v;
            rec(pos + 1, rem - v);
        }
        cur[pos] = 0;
    };
    if (n == 0) {
        if (d == 0) all.push_back(MultiIndex{});
        return all;
    }
    rec(0, d);
    std::sort(all.begin(), all.end(), [](const MultiIndex& a, const MultiIndex& b) {
        int ca = mi_class(a), cb = mi_class(b);
        if (ca != cb) return ca > cb;
        return a < b;
    });
    return all;
}

inline std::vector<MultiIndex> multi_indices_up_to(int n, int d) {
    std::vector<MultiIndex> all;
    for (int k = 0; k <= d; ++k) {
        auto layer = multi_indices_of_length(n, k);
        all.insert(all.end(), layer.begin(), layer.end());
    }
    return all;
}

// Strictly increasing index tuples (1-based), lexicographic order.
inline std::vector<std::vector<int>> subsets_of_size(int n, int s) {
    std::vector<std::vector<int>> out;
    if (s < 0 || s > n) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if ((int)cur.size() == s) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

inline long fiber_dim(int n, int m, int q) {    // dim J_q = m * C(q+n, n)
    return (long)(Rational(binomial(q + n, n)) * Rational(m)).num().get_si();
}

inline long sym_dim(int n, int m, int q) {    // dim S_q T* (x) E = m * C(q+n-1, n-1)
    return (long)(Rational(binomial(q + n - 1, n - 1)) * Rational(m)).num().get_si();
}

// Ordered coordinates (k, mu) of the jet fiber J_q for m unknowns.
struct JetSpace {
    int n, m, q;
    std::vector<std::pair<int, MultiIndex>> coords;    // (unknown 1-based, mu)
    std::map<std::pair<int, MultiIndex>, int> pos;

    JetSpace(int n_, int m_, int q_) : n(n_), m(m_), q(q_) {
        for (const auto& mu : multi_indices_up_to(n, q))
            for (int k = 1; k <= m; ++k) coords.push_back({k, mu});
        for (int i = 0; i < (int)coords.size(); ++i) pos[coords[i]] = i;
    }

    int dim() const { return (int)coords.size(); }
    int idx(int k, const MultiIndex& mu) const {
        auto it = pos.find({k, mu});
        if (it == pos.end()) throw std::out_of_range("JetSpace: coordinate not present");
        return it->second;
    }
    std::vector<int> columns_of_grade(int d) const {
        std::vector<int> out;
        for (int i = 0; i < dim(); ++i)
            if (mi_length(coords[i].second) == d) out.push_back(i);
        return out;
    }
    std::vector<int> columns_of_grade_class(int d, int cls) const {
        std::vector<int> out;
        for (int i = 0; i < dim(); ++i)
            if (mi_length(coords[i].second) == d && mi_class(coords[i].second) == cls) out.push_back(i);
        return out;
    }
};

inline std::string jet_name(int k, const MultiIndex& mu, const std::vector<std::string>& unknowns = {},
                            int style_m = 0) {
    std::string u = (k - 1 < (int)unknowns.size()) ? unknowns[k - 1] : ("u" + std::to_string(k));
    (void)style_m;
    if (mi_length(mu) == 0) return u;
    std::string s = u + "_";
    for (size_t i = 0; i < mu.size(); ++i)
        for (int e = 0; e < mu[i]; ++e) s += std::to_string(i + 1);
    return s;
}

} // namespace jetpde

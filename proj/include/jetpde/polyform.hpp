// polyform.hpp
// ------------
// Exterior forms with polynomial components: omega = omega_I dx^I with I a
// strictly increasing index tuple.  Supports wedge products and the exterior
// derivative d (with d o d = 0).
#pragma once

#include "jetpde/mpoly.hpp"

#include <map>
#include <vector>

namespace jetpde {

struct PolyForm {
    int n = 0;
    int degree = 0;
    std::map<std::vector<int>, MPoly> comp;    // key: strictly increasing 1-based indices

    PolyForm() {}
    PolyForm(int n_, int degree_) : n(n_), degree(degree_) {}

    bool is_zero() const { return comp.empty(); }

    void add_term(const std::vector<int>& I, const MPoly& c) {
        if (c.is_zero()) return;
        auto [it, ins] = comp.emplace(I, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) comp.erase(it);
        }
    }
    MPoly get(const std::vector<int>& I) const {
        auto it = comp.find(I);
        return it == comp.end() ? MPoly(n) : it->second;
    }

    friend bool operator==(const PolyForm& a, const PolyForm& b) {
        return a.n == b.n && a.degree == b.degree && a.comp == b.comp;
    }
};

// d omega = d_i omega_I dx^i ^ dx^I; forms of degree >= n map to zero.
inline PolyForm ext_derivative(const PolyForm& w) {
    PolyForm out(w.n, w.degree + 1);
    if (w.degree >= w.n) return out;
    for (const auto& [I, c] : w.comp) {
        for (int i = 1; i <= w.n; ++i) {
            MPoly dc = c.diff(i);
            if (dc.is_zero()) continue;
            // insert i into I with the sign of the shuffle
            std::vector<int> J;
            bool dup = false;
            int sign = 1;
            bool placed = false;
            for (int j : I) {
                if (j == i) {
                    dup = true;
                    break;
                }
                if (j > i && !placed) {
                    J.push_back(i);
                    placed = true;
                }
                if (!placed) sign = -sign;
                J.push_back(j);
            }
            if (dup) continue;
            if (!placed) J.push_back(i);
            out.add_term(J, sign > 0 ? dc : -dc);
        }
    }
    return out;
}

inline PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    PolyForm out(a.n, a.degree + b.degree);
    if (out.degree > a.n) return out;
    for (const auto& [I, ca] : a.comp)
        for (const auto& [J, cb] : b.comp) {
            // merge with inversion-count sign; a shared index kills the term
            std::vector<int> K;
            K.reserve(I.size() + J.size());
            size_t ii = 0, jj = 0;
            int inversions = 0;
            bool dup = false;
            while (ii < I.size() || jj < J.size()) {
                if (jj == J.size() || (ii < I.size() && I[ii] < J[jj])) {
                    K.push_back(I[ii++]);
                } else if (ii == I.size() || J[jj] < I[ii]) {
                    inversions += (int)(I.size() - ii);
                    K.push_back(J[jj++]);
                } else {
                    dup = true;
                    break;
                }
            }
            if (dup) continue;
            MPoly c = ca * cb;
            out.add_term(K, (inversions % 2 == 0) ? c : -c);
        }
    return out;
}

} // namespace jetpde

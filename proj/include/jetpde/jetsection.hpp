// jetsection.hpp
// --------------
// Polynomial jet sections f_q: x -> (x, f^k_mu(x)) and the Spencer operator
// D f_{q+1} = j_1(f_q) - f_{q+1} with components  d_i f^k_mu - f^k_{mu+1_i}.
#pragma once

#include "jetpde/diffop.hpp"
#include "jetpde/multiindex.hpp"

#include <map>
#include <vector>

namespace jetpde {

struct JetSection {
    int n = 0, m = 0, q = 0;
    std::map<std::pair<int, MultiIndex>, MPoly> comp;    // zero components may be absent

    JetSection() {}
    JetSection(int n_, int m_, int q_) : n(n_), m(m_), q(q_) {}

    MPoly get(int k, const MultiIndex& mu) const {
        auto it = comp.find({k, mu});
        return it == comp.end() ? MPoly(n) : it->second;
    }
    void set(int k, const MultiIndex& mu, const MPoly& v) {
        if (v.is_zero())
            comp.erase({k, mu});
        else
            comp[{k, mu}] = v;
    }
};

// Holonomic lift j_q(f): every component is the honest derivative of f.
inline JetSection jet_lift(const std::vector<MPoly>& f, int q) {
    if (f.empty()) throw std::invalid_argument("jet_lift: empty section");
    int n = f[0].nvars();
    JetSection s(n, (int)f.size(), q);
    for (int k = 1; k <= (int)f.size(); ++k)
        for (const auto& mu : multi_indices_up_to(n, q)) s.set(k, mu, f[k - 1].diff_multi(mu));
    return s;
}

// Components of the Spencer operator for all |mu| <= q where the input has
// order q+1; keys are (k, mu, i).
inline std::map<std::tuple<int, MultiIndex, int>, MPoly> spencer_apply(const JetSection& f) {
    std::map<std::tuple<int, MultiIndex, int>, MPoly> out;
    for (int k = 1; k <= f.m; ++k)
        for (const auto& mu : multi_indices_up_to(f.n, f.q - 1))
            for (int i = 1; i <= f.n; ++i) {
                MPoly v = f.get(k, mu).diff(i) - f.get(k, mi_plus(mu, i));
                if (!v.is_zero()) out[{k, mu, i}] = v;
            }
    return out;
}

inline bool spencer_vanishes(const JetSection& f) { return spencer_apply(f).empty(); }

// Evaluate every operator row on a jet section (substituting jets by components).
inline std::vector<MPoly> apply_operator(const DiffOperator& D, const JetSection& f) {
    std::vector<MPoly> out(D.nrows(), MPoly(D.nvars()));
    for (const auto& [key, a] : D.entries())
        out[std::get<0>(key)] += a * f.get(std::get<1>(key), std::get<2>(key));
    return out;
}

} // namespace jetpde

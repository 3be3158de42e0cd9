// delta.hpp
// ---------
// The Spencer delta-map on form-valued symbols and its cohomology dimensions.
// For omega in Lambda^s T* (x) V with V inside S_d T* (x) E,
//   (delta omega)^k_{nu, J} = sum_p (-1)^p omega^k_{nu+1_{j_p}, J \ j_p},
// a complex whose cohomology H^s(g_{q+r}) controls the order of generating
// compatibility conditions.
#pragma once

#include "jetpde/diffop.hpp"
#include "jetpde/jetsystem.hpp"

#include <vector>

namespace jetpde {

// Coordinates of the grade-d symbol space S_d T* (x) E, jet order, k inner.
struct GradeSpace {
    int n, m, d;
    std::vector<std::pair<int, MultiIndex>> coords;
    std::map<std::pair<int, MultiIndex>, int> pos;

    GradeSpace(int n_, int m_, int d_) : n(n_), m(m_), d(d_) {
        for (const auto& mu : multi_indices_of_length(n, d))
            for (int k = 1; k <= m; ++k) coords.push_back({k, mu});
        for (int i = 0; i < (int)coords.size(); ++i) pos[coords[i]] = i;
    }
    int dim() const { return (int)coords.size(); }
    int idx(int k, const MultiIndex& mu) const { return pos.at({k, mu}); }
};

// Basis of g_{q+r} as vectors over GradeSpace(n, m, q+r); columns follow the
// same layout as DiffOperator::symbol_matrix.
inline std::vector<std::vector<MPoly>> symbol_basis(JetSystem& S, int r) {
    const DiffOperator& P = S.prolonged(r);
    int n = S.nvars(), m = S.nunknowns(), d = S.order() + r;
    GradeSpace gs(n, m, d);
    if (P.order() < d) {    // no equations reach this grade
        std::vector<std::vector<MPoly>> basis;
        for (int i = 0; i < gs.dim(); ++i) {
            std::vector<MPoly> v(gs.dim(), MPoly(n));
            v[i] = MPoly::constant(n, Rational(1));
            basis.push_back(v);
        }
        return basis;
    }
    return right_nullspace(P.symbol_matrix());
}

inline std::vector<std::vector<MPoly>> full_symbol_basis(int n, int m, int d) {
    GradeSpace gs(n, m, d);
    std::vector<std::vector<MPoly>> basis;
    for (int i = 0; i < gs.dim(); ++i) {
        std::vector<MPoly> v(gs.dim(), MPoly(n));
        v[i] = MPoly::constant(n, Rational(1));
        basis.push_back(v);
    }
    return basis;
}

// Matrix of delta : Lambda^s (x) span(basis) -> Lambda^{s+1} (x) S_{d-1}(x)E.
// Columns are (I, basis element), rows (J, ambient coordinate of grade d-1).
inline PolyMatrix delta_matrix(int n, int m, int d, const std::vector<std::vector<MPoly>>& basis,
                               int s) {
    GradeSpace src(n, m, d);
    auto Is = subsets_of_size(n, s);
    auto Js = subsets_of_size(n, s + 1);
    int B = (int)basis.size();
    if (d == 0 || Js.empty()) return PolyMatrix(0, (int)Is.size() * B, n);
    GradeSpace dst(n, m, d - 1);
    std::map<std::vector<int>, int> Ipos;
    for (int i = 0; i < (int)Is.size(); ++i) Ipos[Is[i]] = i;

    PolyMatrix M((int)Js.size() * dst.dim(), (int)Is.size() * B, n);
    for (int jj = 0; jj < (int)Js.size(); ++jj) {
        const auto& J = Js[jj];
        for (int p = 0; p < (int)J.size(); ++p) {
            int i = J[p];
            std::vector<int> I = J;
            I.erase(I.begin() + p);
            int icol = Ipos.at(I);
            Rational sign((p % 2 == 0) ? 1 : -1);
            for (int b = 0; b < B; ++b) {
                int col = icol * B + b;
                for (int rc = 0; rc < dst.dim(); ++rc) {
                    auto [k, nu] = dst.coords[rc];
                    const MPoly& val = basis[b][src.idx(k, mi_plus(nu, i))];
                    if (val.is_zero()) continue;
                    M.at(jj * dst.dim() + rc, col) += val.scaled(sign);
                }
            }
        }
    }
    return M;
}

// dim H^s(g_{q+r}) = dim ker(delta out of Lambda^s (x) g_{q+r}) - rank(delta in).
inline long delta_cohomology_dim(JetSystem& S, int s, int r) {
    int n = S.nvars(), m = S.nunknowns(), d = S.order() + r;
    if (s < 0 || s > n) return 0;
    auto mid = symbol_basis(S, r);
    long cols = (long)subsets_of_size(n, s).size() * (long)mid.size();
    if (cols == 0) return 0;
    long rank_out = 0;
    if (s < n && d > 0) rank_out = generic_rank(delta_matrix(n, m, d, mid, s));
    long ker = cols - rank_out;
    long rank_in = 0;
    if (s >= 1) {
        auto up = symbol_basis(S, r + 1);
        if (!up.empty()) rank_in = generic_rank(delta_matrix(n, m, d + 1, up, s - 1));
    }
    return ker - rank_in;
}

} // namespace jetpde

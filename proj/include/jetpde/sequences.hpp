// sequences.hpp
// -------------
// Janet and Spencer sequence bookkeeping for an involutive system:
//   C_r = Lambda^r T* (x) R_q / delta(Lambda^{r-1} T* (x) g_{q+1}),
//   C_r(E) the same construction on the full jet space, F_r by subtraction
// (the columns of the first-Spencer/Janet diagram are exact), plus explicit
// first and second Spencer operators.
#pragma once

#include "jetpde/delta.hpp"
#include "jetpde/involution.hpp"

#include <string>
#include <vector>

namespace jetpde {

struct SequenceDims {
    int n = 0, q = 0;
    long dim_Rq = 0;
    std::vector<long> F, C, CE;    // indices 0..n
};

inline SequenceDims janet_spencer_dims(JetSystem& S) {
    SequenceDims out;
    const DiffOperator& D = S.op();
    int n = D.nvars(), m = D.nunknowns(), q = D.order();
    out.n = n;
    out.q = q;
    out.dim_Rq = S.dim_R(0);
    long dim_Jq = fiber_dim(n, m, q);
    auto g1 = symbol_basis(S, 1);
    auto full1 = full_symbol_basis(n, m, q + 1);
    for (int r = 0; r <= n; ++r) {
        mpz_class ch = binomial(n, r);
        long lam = (long)ch.get_si();
        long rank_g = 0, rank_full = 0;
        if (r >= 1) {
            if (!g1.empty()) rank_g = generic_rank(delta_matrix(n, m, q + 1, g1, r - 1));
            rank_full = generic_rank(delta_matrix(n, m, q + 1, full1, r - 1));
        }
        out.C.push_back(lam * out.dim_Rq - rank_g);
        out.CE.push_back(lam * dim_Jq - rank_full);
        out.F.push_back(out.CE.back() - out.C.back());
    }
    return out;
}

// ---------------------------------------------------------------------------
// First (and for finite type second) Spencer operators in explicit
// coordinates: the parametric jets of R_q are the fiber coordinates.
// ---------------------------------------------------------------------------

struct SpencerOperators {
    std::vector<std::pair<int, MultiIndex>> parametric;      // z coordinates of R_q
    std::vector<std::pair<int, MultiIndex>> parametric_g1;   // w coordinates of g_{q+1}
    bool finite_type = false;
    DiffOperator D1;    // unknowns z (dim R_q); rows span C_1
    DiffOperator D2;    // finite type only: Lambda^1 (x) R_q -> Lambda^2 (x) R_q
    std::vector<std::string> z_names;
};

namespace detail {

struct LiftTable {
    // expression of every jet (k, mu), |mu| <= q+1, as num/den combination of
    // the parametric coordinates: jet = (1/den) * sum_c num_c * par_c
    std::map<std::pair<int, MultiIndex>, std::pair<std::vector<MPoly>, MPoly>> expr;
    std::vector<std::pair<int, MultiIndex>> pars;    // z list then w list
    int nz = 0;
};

inline LiftTable lift_table(const DiffOperator& D) {
    LiftTable out;
    int n = D.nvars(), m = D.nunknowns(), q = D.order();
    DiffOperator P = D.prolong(1);
    JetSpace js(n, m, q + 1);
    PolyMatrix M = P.full_matrix(q + 1);
    // grade-descending block priority: principal jets are the highest ones
    std::vector<std::vector<int>> blocks(q + 2);
    for (int c = 0; c < js.dim(); ++c) blocks[q + 1 - mi_length(js.coords[c].second)].push_back(c);
    auto elim = eliminate(M, blocks, false);
    // Jordan reduction: clear pivot columns from the rows above
    auto rows = elim.echelon;
    for (int i = (int)rows.size() - 1; i >= 0; --i)
        for (int j = i + 1; j < (int)rows.size(); ++j) {
            int pc = elim.pivot_cols[j];
            if (rows[i][pc].is_zero()) continue;
            const MPoly a = rows[j][pc], b = rows[i][pc];
            for (int c = 0; c < js.dim(); ++c) rows[i][c] = a * rows[i][c] - b * rows[j][c];
            detail::strip_numeric(rows[i]);
        }
    std::vector<bool> is_pivot(js.dim(), false);
    for (int pc : elim.pivot_cols) is_pivot[pc] = true;
    std::map<int, int> par_pos;
    for (int c = 0; c < js.dim(); ++c) {
        if (is_pivot[c]) continue;
        if (mi_length(js.coords[c].second) <= q) {
            par_pos[c] = (int)out.pars.size();
            out.pars.push_back(js.coords[c]);
        }
    }
    out.nz = (int)out.pars.size();
    for (int c = 0; c < js.dim(); ++c) {
        if (is_pivot[c] || mi_length(js.coords[c].second) <= q) continue;
        par_pos[c] = (int)out.pars.size();
        out.pars.push_back(js.coords[c]);
    }
    int npar = (int)out.pars.size();
    for (int c = 0; c < js.dim(); ++c) {
        std::vector<MPoly> num(npar, MPoly(n));
        MPoly den = MPoly::constant(n, Rational(1));
        if (!is_pivot[c]) {
            num[par_pos[c]] = MPoly::constant(n, Rational(1));
        } else {
            int i = 0;
            while (elim.pivot_cols[i] != c) ++i;
            den = rows[i][c];
            for (int f = 0; f < js.dim(); ++f) {
                if (f == c || rows[i][f].is_zero()) continue;
                num[par_pos.at(f)] = -rows[i][f];    // den * jet + sum row_f * par_f = 0
            }
        }
        out.expr[js.coords[c]] = {num, den};
    }
    return out;
}

} // namespace detail

// D assumed formally integrable (and involutive for C_1 to have its meaning).
inline SpencerOperators spencer_operators(const DiffOperator& D) {
    SpencerOperators out;
    int n = D.nvars(), q = D.order();
    auto lift = detail::lift_table(D);
    out.parametric.assign(lift.pars.begin(), lift.pars.begin() + lift.nz);
    out.parametric_g1.assign(lift.pars.begin() + lift.nz, lift.pars.end());
    out.finite_type = out.parametric_g1.empty();
    int K = lift.nz, W = (int)out.parametric_g1.size();

    // ambient Spencer components (a, i): den * d_i z_a - sum num_b par_b
    struct Component {
        int a, i;
        MPoly den;
        std::vector<MPoly> num;    // over all parametric coords (z then w)
    };
    std::vector<Component> comps;
    for (int a = 0; a < K; ++a) {
        auto [k, mu] = out.parametric[a];
        for (int i = 1; i <= n; ++i) {
            const auto& [num, den] = lift.expr.at({k, mi_plus(mu, i)});
            comps.push_back({a, i, den, num});
        }
    }
    // quotient by the w-directions: left nullspace of the W-coefficient block
    PolyMatrix Wmat((int)comps.size(), W, n);
    for (int r = 0; r < (int)comps.size(); ++r)
        for (int c = 0; c < W; ++c) Wmat.at(r, c) = comps[r].num[lift.nz + c];
    std::vector<std::vector<MPoly>> combos;
    if (W == 0) {
        for (int r = 0; r < (int)comps.size(); ++r) {
            std::vector<MPoly> e((int)comps.size(), MPoly(n));
            e[r] = MPoly::constant(n, Rational(1));
            combos.push_back(e);
        }
    } else {
        combos = left_nullspace(Wmat);
    }

    out.D1 = DiffOperator(n, K, (int)combos.size());
    for (int r = 0; r < (int)combos.size(); ++r) {
        // all component denominators are cleared through a common multiple
        MPoly common = MPoly::constant(n, Rational(1));
        for (int c = 0; c < (int)comps.size(); ++c)
            if (!combos[r][c].is_zero()) common = poly_lcm(common, comps[c].den);
        for (int c = 0; c < (int)comps.size(); ++c) {
            if (combos[r][c].is_zero()) continue;
            MPoly scale = combos[r][c] * common.divexact(comps[c].den);
            out.D1.add_term(r, comps[c].a + 1, mi_plus(mi_zero(n), comps[c].i), scale * comps[c].den);
            for (int b = 0; b < K; ++b) {
                if (comps[c].num[b].is_zero()) continue;
                out.D1.add_term(r, b + 1, mi_zero(n), -scale * comps[c].num[b]);
            }
        }
    }
    for (const auto& [k, mu] : out.parametric) out.z_names.push_back(jet_name(k, mu));

    bool trivial_dens = true;
    for (const auto& [km, e] : lift.expr)
        if (!e.second.is_constant()) trivial_dens = false;
    if (out.finite_type && n >= 2 && trivial_dens) {
        // unknown (b, j) of D2 is omega_{b,j}, wired as (b-1)*n + j
        out.D2 = DiffOperator(n, K * n, K * (n * (n - 1) / 2));
        int row = 0;
        for (int a = 0; a < K; ++a) {
            auto [k, mu] = out.parametric[a];
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j, ++row) {
                    const auto& [numi, deni] = lift.expr.at({k, mi_plus(mu, i)});
                    const auto& [numj, denj] = lift.expr.at({k, mi_plus(mu, j)});
                    MPoly common = poly_lcm(deni, denj);
                    auto one = MPoly::constant(n, Rational(1));
                    out.D2.add_term(row, a * n + j, mi_plus(mi_zero(n), i), common);
                    out.D2.add_term(row, a * n + i, mi_plus(mi_zero(n), j), -common);
                    for (int b = 0; b < K; ++b) {
                        if (!numi[b].is_zero())
                            out.D2.add_term(row, b * n + j, mi_zero(n),
                                            -common.divexact(deni) * numi[b]);
                        if (!numj[b].is_zero())
                            out.D2.add_term(row, b * n + i, mi_zero(n),
                                            common.divexact(denj) * numj[b]);
                    }
                }
        }
    }
    return out;
}

// Spencer pair for a finite-type system (g_{q+1} = 0).
inline SpencerOperators spencer_operators_finite_type(const DiffOperator& D) {
    auto out = spencer_operators(D);
    if (!out.finite_type)
        throw std::invalid_argument("spencer_operators_finite_type: not finite type at order q+1 (dim g_{q+1} = " +
                                    std::to_string(out.parametric_g1.size()) + ")");
    return out;
}

} // namespace jetpde

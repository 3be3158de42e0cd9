// linalg.hpp
// ----------
// Exact linear algebra over the rational-function field Q(x1..xn).
//
// Polynomial matrices are eliminated fraction-free (Bareiss); matrices whose
// entries are all constants take a plain rational Gauss path.  Ranks are
// generic-point ranks: every non-constant pivot polynomial is reported so the
// caller can surface the excluded vanishing locus.
//
// Column "blocks" impose an elimination priority: all columns of an earlier
// block are exhausted before a later block is touched.  Within the active
// block the pivot is the entry of lowest total degree, ties broken by lowest
// column index, then lowest row index.
#pragma once

#include "jetpde/polymatrix.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace jetpde {

struct Elimination {
    long rank = 0;
    std::vector<int> pivot_cols;                 // in elimination order
    std::vector<std::vector<MPoly>> echelon;     // snapshot of each pivot row, content-stripped
    std::vector<std::vector<MPoly>> nullspace;   // right-nullspace basis, denominator-free, primitive
    std::vector<MPoly> pivot_polys;              // non-constant pivots (generic-rank exclusions)
};

namespace detail {

// Cheap normalization: numeric content, a common monomial factor, and the
// sign of the first nonzero entry.  Safe anywhere since it only rescales.
inline void strip_numeric(std::vector<MPoly>& v) {
    int n = v.empty() ? 0 : v[0].nvars();
    Rational c(0);
    Monomial shift;
    bool any = false;
    for (const auto& p : v)
        for (const auto& [m, k] : p.terms()) {
            c = rat_gcd(c, k);
            if (!any) {
                shift = m;
                any = true;
            } else {
                for (int i = 0; i < n; ++i) shift[i] = std::min(shift[i], m[i]);
            }
        }
    if (!any) return;
    for (const auto& p : v) {
        if (p.is_zero()) continue;
        if (p.leading_term().second.sign() < 0) c = -c;
        break;
    }
    bool shifted = false;
    for (int i = 0; i < n; ++i) shifted = shifted || shift[i] > 0;
    for (auto& p : v) {
        if (p.is_zero()) continue;
        MPoly q(n);
        for (const auto& [m, k] : p.terms()) {
            Monomial mm = m;
            if (shifted)
                for (int i = 0; i < n; ++i) mm[i] -= shift[i];
            q.add_term(mm, k / c);
        }
        p = q;
    }
}

// Full normalization including the polynomial content; used on final outputs.
// The gcd is skipped on oversized entries (a partial strip is always sound).
inline void strip_content(std::vector<MPoly>& v) {
    strip_numeric(v);
    bool feasible = true;
    for (const auto& p : v)
        if (p.terms().size() > 200 || p.total_degree() > 40) feasible = false;
    if (!feasible) return;
    MPoly g(v.empty() ? 0 : v[0].nvars());
    for (const auto& p : v) {
        if (p.is_zero()) continue;
        g = poly_gcd(g, p);
        if (g.is_constant()) break;
    }
    if (!g.is_zero() && !g.is_constant())
        for (auto& p : v) p = p.divexact(g);
    strip_numeric(v);
}

inline std::vector<std::vector<int>> default_blocks(int cols) {
    std::vector<int> all(cols);
    for (int i = 0; i < cols; ++i) all[i] = i;
    return {all};
}

// Fraction-free (Bareiss) elimination for polynomial entries.
inline Elimination eliminate_poly(const PolyMatrix& M, const std::vector<std::vector<int>>& blocks,
                                  bool want_nullspace) {
    Elimination out;
    const int n = M.nvars;
    std::vector<std::vector<MPoly>> W(M.rows);
    for (int i = 0; i < M.rows; ++i) W[i] = M.row(i);
    std::vector<bool> used(M.rows, false), colled(M.cols, false);
    std::vector<std::vector<MPoly>> pivot_rows;    // live (unstripped) pivot rows, for exact division
    std::vector<MPoly> pivots;
    MPoly prev = MPoly::constant(n, Rational(1));

    for (const auto& block : blocks) {
        for (;;) {
            int pr = -1, pc = -1, best_deg = 0;
            for (int c : block) {
                if (colled[c]) continue;
                for (int i = 0; i < M.rows; ++i) {
                    if (used[i] || W[i][c].is_zero()) continue;
                    int d = W[i][c].total_degree();
                    if (pr < 0 || d < best_deg || (d == best_deg && (c < pc || (c == pc && i < pr)))) {
                        pr = i;
                        pc = c;
                        best_deg = d;
                    }
                }
            }
            if (pr < 0) break;
            const MPoly piv = W[pr][pc];
            for (int i = 0; i < M.rows; ++i) {
                if (used[i] || i == pr) continue;
                const MPoly f = W[i][pc];
                for (int j = 0; j < M.cols; ++j) {
                    if (j == pc) {
                        W[i][j] = MPoly(n);
                        continue;
                    }
                    MPoly t = piv * W[i][j] - f * W[pr][j];
                    W[i][j] = t.is_zero() ? t : t.divexact(prev);
                }
            }
            used[pr] = true;
            colled[pc] = true;
            out.pivot_cols.push_back(pc);
            pivot_rows.push_back(W[pr]);
            pivots.push_back(piv);
            std::vector<MPoly> snap = W[pr];
            strip_numeric(snap);
            out.echelon.push_back(std::move(snap));
            if (!piv.is_constant()) out.pivot_polys.push_back(piv.divexact(MPoly::constant(n, piv.content())));
            prev = piv;
        }
    }
    out.rank = (long)out.pivot_cols.size();

    if (want_nullspace) {
        for (int f = 0; f < M.cols; ++f) {
            if (colled[f]) continue;
            std::vector<MPoly> v(M.cols, MPoly(n));
            v[f] = MPoly::constant(n, Rational(1));
            for (int i = (int)pivot_rows.size() - 1; i >= 0; --i) {
                // enforce pivot_rows[i] . v = 0; rows below i are already zero
                // at this pivot column, so earlier constraints stay satisfied
                MPoly s(n);
                for (int j = 0; j < M.cols; ++j)
                    if (!pivot_rows[i][j].is_zero() && !v[j].is_zero()) s += pivot_rows[i][j] * v[j];
                if (s.is_zero()) continue;
                const MPoly piv = pivot_rows[i][out.pivot_cols[i]];
                for (auto& x : v) x = piv * x;
                v[out.pivot_cols[i]] -= s;
                strip_numeric(v);
            }
            strip_content(v);
            out.nullspace.push_back(std::move(v));
        }
    }
    return out;
}

// Plain rational Gauss for all-constant matrices (same contracts).
inline Elimination eliminate_const(const PolyMatrix& M, const std::vector<std::vector<int>>& blocks,
                                   bool want_nullspace) {
    Elimination out;
    const int n = M.nvars;
    std::vector<std::vector<Rational>> W(M.rows, std::vector<Rational>(M.cols, Rational(0)));
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) W[i][j] = M.at(i, j).constant_value();
    std::vector<bool> used(M.rows, false), colled(M.cols, false);
    std::vector<std::vector<Rational>> pivot_rows;
    std::vector<int> pivot_cols;

    for (const auto& block : blocks) {
        for (int c : block) {
            int pr = -1;
            for (int i = 0; i < M.rows; ++i)
                if (!used[i] && !W[i][c].is_zero()) {
                    pr = i;
                    break;
                }
            if (pr < 0) continue;
            const Rational piv = W[pr][c];
            for (int i = 0; i < M.rows; ++i) {
                if (used[i] || i == pr || W[i][c].is_zero()) continue;
                const Rational f = W[i][c] / piv;
                for (int j = 0; j < M.cols; ++j) W[i][j] -= f * W[pr][j];
                W[i][c] = Rational(0);
            }
            used[pr] = true;
            colled[c] = true;
            pivot_cols.push_back(c);
            pivot_rows.push_back(W[pr]);
        }
    }
    out.rank = (long)pivot_cols.size();
    out.pivot_cols = pivot_cols;
    for (const auto& r : pivot_rows) {
        std::vector<MPoly> row(M.cols, MPoly(n));
        for (int j = 0; j < M.cols; ++j) row[j] = MPoly::constant(n, r[j]);
        strip_content(row);
        out.echelon.push_back(std::move(row));
    }
    if (want_nullspace) {
        for (int f = 0; f < M.cols; ++f) {
            if (colled[f]) continue;
            std::vector<Rational> v(M.cols, Rational(0));
            v[f] = Rational(1);
            for (int i = (int)pivot_rows.size() - 1; i >= 0; --i) {
                Rational s(0);
                for (int j = 0; j < M.cols; ++j)
                    if (!pivot_rows[i][j].is_zero() && !v[j].is_zero()) s += pivot_rows[i][j] * v[j];
                if (!s.is_zero()) v[pivot_cols[i]] -= s / pivot_rows[i][pivot_cols[i]];
            }
            std::vector<MPoly> pv(M.cols, MPoly(n));
            for (int j = 0; j < M.cols; ++j) pv[j] = MPoly::constant(n, v[j]);
            strip_content(pv);
            out.nullspace.push_back(std::move(pv));
        }
    }
    return out;
}

} // namespace detail

inline Elimination eliminate(const PolyMatrix& M, std::vector<std::vector<int>> blocks = {},
                             bool want_nullspace = true) {
    if (blocks.empty()) blocks = detail::default_blocks(M.cols);
    if (M.all_constant()) return detail::eliminate_const(M, blocks, want_nullspace);
    return detail::eliminate_poly(M, blocks, want_nullspace);
}

inline long generic_rank(const PolyMatrix& M) { return eliminate(M, {}, false).rank; }

inline std::vector<std::vector<MPoly>> right_nullspace(const PolyMatrix& M) {
    return eliminate(M).nullspace;
}

inline std::vector<std::vector<MPoly>> left_nullspace(const PolyMatrix& M) {
    return eliminate(M.transpose()).nullspace;
}

// ---------------------------------------------------------------------------
// Incremental row span over Q(x): mutually reduced rows, exact membership.
// ---------------------------------------------------------------------------
class RowSpan {
public:
    RowSpan(int cols, int nvars) : cols_(cols), nvars_(nvars) {}

    long rank() const { return (long)rows_.size(); }
    int cols() const { return cols_; }

    // Reduces v against the stored rows (fraction-free); returns the residue.
    std::vector<MPoly> reduce(std::vector<MPoly> v) const {
        for (const auto& [c, row] : rows_) {
            if (v[c].is_zero()) continue;
            const MPoly a = row[c], b = v[c];
            for (int j = 0; j < cols_; ++j) {
                MPoly t = a * v[j] - b * row[j];
                v[j] = t;
            }
            detail::strip_numeric(v);
        }
        return v;
    }

    bool contains(const std::vector<MPoly>& v) const {
        auto r = reduce(v);
        for (const auto& p : r)
            if (!p.is_zero()) return false;
        return true;
    }

    // Adds v if independent; returns true when the rank grew.
    bool add(std::vector<MPoly> v) {
        v = reduce(std::move(v));
        int lead = -1;
        for (int j = 0; j < cols_; ++j)
            if (!v[j].is_zero()) {
                lead = j;
                break;
            }
        if (lead < 0) return false;
        detail::strip_numeric(v);
        // keep rows mutually reduced: clear column `lead` from stored rows
        for (auto& [c, row] : rows_) {
            if (row[lead].is_zero()) continue;
            const MPoly a = v[lead], b = row[lead];
            for (int j = 0; j < cols_; ++j) row[j] = a * row[j] - b * v[j];
            detail::strip_numeric(row);
        }
        auto pos = std::lower_bound(rows_.begin(), rows_.end(), lead,
                                    [](const auto& r, int c) { return r.first < c; });
        rows_.insert(pos, {lead, std::move(v)});
        return true;
    }

    const std::vector<std::pair<int, std::vector<MPoly>>>& rows() const { return rows_; }

private:
    int cols_;
    int nvars_;
    std::vector<std::pair<int, std::vector<MPoly>>> rows_;    // sorted by pivot column
};

} // namespace jetpde

// diffop.hpp
// ----------
// A rectangular matrix of linear differential operators with polynomial
// coefficients: row tau holds the equation  sum a^{tau mu}_k(x) y^k_mu = 0.
// Carries prolongation, symbol extraction, formal adjoint, composition and
// linear coordinate changes.
#pragma once

#include "jetpde/linalg.hpp"
#include "jetpde/multiindex.hpp"

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace jetpde {

class DiffOperator {
public:
    DiffOperator() : n_(0), m_(0), p_(0) {}
    DiffOperator(int nvars, int nunknowns, int nrows) : n_(nvars), m_(nunknowns), p_(nrows) {}

    int nvars() const { return n_; }
    int nunknowns() const { return m_; }
    int nrows() const { return p_; }
    bool is_zero() const { return entries_.empty(); }

    int order() const {    // max stored |mu|; 0 for an empty operator
        int q = 0;
        for (const auto& [key, c] : entries_) q = std::max(q, mi_length(std::get<2>(key)));
        return q;
    }
    int row_order(int row) const {
        int q = 0;
        for (const auto& [key, c] : entries_)
            if (std::get<0>(key) == row) q = std::max(q, mi_length(std::get<2>(key)));
        return q;
    }

    void add_term(int row, int k, const MultiIndex& mu, const MPoly& a) {
        if (a.is_zero()) return;
        if (row < 0 || row >= p_) throw std::out_of_range("DiffOperator: row");
        if (k < 1 || k > m_) throw std::out_of_range("DiffOperator: unknown index");
        if ((int)mu.size() != n_) throw std::invalid_argument("DiffOperator: multi-index length");
        auto key = std::make_tuple(row, k, mu);
        auto [it, inserted] = entries_.emplace(key, a);
        if (!inserted) {
            it->second += a;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    MPoly coeff(int row, int k, const MultiIndex& mu) const {
        auto it = entries_.find(std::make_tuple(row, k, mu));
        return it == entries_.end() ? MPoly(n_) : it->second;
    }

    const std::map<std::tuple<int, int, MultiIndex>, MPoly>& entries() const { return entries_; }

    // Row as a term map (k, mu) -> coefficient.
    std::map<std::pair<int, MultiIndex>, MPoly> row_terms(int row) const {
        std::map<std::pair<int, MultiIndex>, MPoly> out;
        for (const auto& [key, c] : entries_)
            if (std::get<0>(key) == row) out[{std::get<1>(key), std::get<2>(key)}] = c;
        return out;
    }

    void set_row(int row, const std::map<std::pair<int, MultiIndex>, MPoly>& terms) {
        for (const auto& [km, c] : terms) add_term(row, km.first, km.second, c);
    }

    DiffOperator with_rows(const std::vector<std::map<std::pair<int, MultiIndex>, MPoly>>& rows) const {
        DiffOperator d(n_, m_, (int)rows.size());
        for (int r = 0; r < (int)rows.size(); ++r) d.set_row(r, rows[r]);
        return d;
    }

    // Formal derivative d_i applied to one row: a y_{mu+1_i} + (d_i a) y_mu.
    std::map<std::pair<int, MultiIndex>, MPoly> derive_row(int row, int i) const {
        std::map<std::pair<int, MultiIndex>, MPoly> out;
        auto acc = [&](int k, const MultiIndex& mu, const MPoly& c) {
            if (c.is_zero()) return;
            auto [it, ins] = out.emplace(std::make_pair(k, mu), c);
            if (!ins) {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        };
        for (const auto& [key, a] : entries_) {
            if (std::get<0>(key) != row) continue;
            int k = std::get<1>(key);
            const MultiIndex& mu = std::get<2>(key);
            acc(k, mi_plus(mu, i), a);
            acc(k, mu, a.diff(i));
        }
        return out;
    }

    std::vector<MPoly> row_vector(int row, const JetSpace& js) const {
        std::vector<MPoly> v(js.dim(), MPoly(n_));
        for (const auto& [key, c] : entries_)
            if (std::get<0>(key) == row) v[js.idx(std::get<1>(key), std::get<2>(key))] = c;
        return v;
    }
    static std::map<std::pair<int, MultiIndex>, MPoly> terms_vector(const std::vector<MPoly>& v,
                                                                    const JetSpace& js) {
        std::map<std::pair<int, MultiIndex>, MPoly> out;
        for (int i = 0; i < js.dim(); ++i)
            if (!v[i].is_zero()) out[js.coords[i]] = v[i];
        return out;
    }

    // Coefficient matrix over all jets |mu| <= Q.
    PolyMatrix full_matrix(int Q) const {
        JetSpace js(n_, m_, Q);
        PolyMatrix M(p_, js.dim(), n_);
        for (const auto& [key, c] : entries_)
            M.at(std::get<0>(key), js.idx(std::get<1>(key), std::get<2>(key))) = c;
        return M;
    }

    // Top-order coefficients only: columns are the (k, |mu| = order) jets.
    PolyMatrix symbol_matrix() const {
        int q = order();
        auto mus = multi_indices_of_length(n_, q);
        std::map<std::pair<int, MultiIndex>, int> pos;
        int c = 0;
        for (const auto& mu : mus)
            for (int k = 1; k <= m_; ++k) pos[{k, mu}] = c++;
        PolyMatrix M(p_, c, n_);
        for (const auto& [key, a] : entries_)
            if (mi_length(std::get<2>(key)) == q)
                M.at(std::get<0>(key), pos[{std::get<1>(key), std::get<2>(key)}]) = a;
        return M;
    }

    // r-prolongation: original rows plus all formal derivatives up to order r,
    // keeping only rows independent over Q(x); original row order preserved.
    DiffOperator prolong(int r) const {
        if (r < 0) throw std::invalid_argument("prolong: negative order");
        int q = order();
        JetSpace js(n_, m_, q + r);
        RowSpan span(js.dim(), n_);
        std::vector<std::map<std::pair<int, MultiIndex>, MPoly>> kept;
        auto push = [&](const std::map<std::pair<int, MultiIndex>, MPoly>& terms, bool force) {
            std::vector<MPoly> v(js.dim(), MPoly(n_));
            for (const auto& [km, c] : terms) v[js.idx(km.first, km.second)] = c;
            if (force) {
                span.add(v);
                kept.push_back(terms);
                return;
            }
            if (span.add(std::move(v))) kept.push_back(terms);
        };
        for (int row = 0; row < p_; ++row) push(row_terms(row), true);
        size_t level_begin = 0, level_end = kept.size();
        DiffOperator scratch = *this;
        for (int s = 1; s <= r; ++s) {
            // differentiate every row kept at the previous level
            std::vector<std::map<std::pair<int, MultiIndex>, MPoly>> next;
            for (size_t idx = level_begin; idx < level_end; ++idx) {
                DiffOperator one(n_, m_, 1);
                one.set_row(0, kept[idx]);
                for (int i = 1; i <= n_; ++i) next.push_back(one.derive_row(0, i));
            }
            level_begin = kept.size();
            for (const auto& t : next) push(t, false);
            level_end = kept.size();
        }
        return with_rows(kept);
    }

    // Formal adjoint: a d_mu on unknown k in row tau becomes
    // (-1)^{|mu|} d_mu (a .) on test unknown tau in row k, in normal form.
    DiffOperator adjoint() const {
        DiffOperator ad(n_, p_, m_);
        for (const auto& [key, a] : entries_) {
            int tau = std::get<0>(key);
            int k = std::get<1>(key);
            const MultiIndex& mu = std::get<2>(key);
            Rational sign((mi_length(mu) % 2 == 0) ? 1 : -1);
            for (const auto& rho : multi_indices_up_to(n_, mi_length(mu))) {
                if (!mi_leq(rho, mu)) continue;
                MPoly c = a.diff_multi(mi_minus(mu, rho)).scaled(sign * mi_binomial(mu, rho));
                ad.add_term(k - 1, tau + 1, rho, c);
            }
        }
        return ad;
    }

    // Composition P(*this) after Q: unknown j of *this is wired to row j-1 of Q.
    DiffOperator compose(const DiffOperator& Q) const {
        if (m_ != Q.p_) throw std::invalid_argument("compose: dimension mismatch");
        if (n_ != Q.n_) throw std::invalid_argument("compose: variable mismatch");
        DiffOperator R(n_, Q.m_, p_);
        for (const auto& [pkey, a] : entries_) {
            int tau = std::get<0>(pkey);
            int sigma = std::get<1>(pkey) - 1;    // row of Q
            const MultiIndex& nu = std::get<2>(pkey);
            for (const auto& [qkey, b] : Q.entries_) {
                if (std::get<0>(qkey) != sigma) continue;
                int k = std::get<1>(qkey);
                const MultiIndex& mu = std::get<2>(qkey);
                for (const auto& rho : multi_indices_up_to(n_, mi_length(nu))) {
                    if (!mi_leq(rho, nu)) continue;
                    MPoly c = a * b.diff_multi(mi_minus(nu, rho)).scaled(mi_binomial(nu, rho));
                    R.add_term(tau, k, mi_sum(mu, rho), c);
                }
            }
        }
        return R;
    }

    // Linear change of base coordinates xbar = A x (A invertible over Q).
    // Unknowns are untouched; d_i = sum_j A_ji dbar_j and x = A^{-1} xbar.
    DiffOperator transform(const std::vector<std::vector<Rational>>& A) const {
        int n = n_;
        auto Ainv = invert(A);
        DiffOperator out(n_, m_, p_);
        // images of the d_i as polynomials in the new dbar_j
        std::vector<MPoly> D;
        for (int i = 0; i < n; ++i) {
            MPoly di(n);
            for (int j = 0; j < n; ++j)
                if (!A[j][i].is_zero()) di += MPoly::variable(n, j + 1).scaled(A[j][i]);
            D.push_back(di);
        }
        for (const auto& [key, a] : entries_) {
            int tau = std::get<0>(key);
            int k = std::get<1>(key);
            const MultiIndex& mu = std::get<2>(key);
            MPoly dprod = MPoly::constant(n, Rational(1));
            for (int i = 0; i < n; ++i)
                for (int e = 0; e < mu[i]; ++e) dprod *= D[i];
            MPoly anew = a.substitute_linear(Ainv);
            for (const auto& [nu, c] : dprod.terms()) out.add_term(tau, k, nu, anew.scaled(c));
        }
        return out;
    }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.p_ == b.p_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

    // Rows equal up to one global sign and rational scale per row.
    static bool rows_match_up_to_sign(const DiffOperator& a, const DiffOperator& b) {
        if (a.p_ != b.p_ || a.m_ != b.m_ || a.n_ != b.n_) return false;
        for (int r = 0; r < a.p_; ++r) {
            auto ra = a.row_terms(r), rb = b.row_terms(r);
            if (ra.size() != rb.size()) return false;
            if (ra.empty()) continue;
            // candidate scale from the first common term
            auto ita = ra.begin();
            auto itb = rb.find(ita->first);
            if (itb == rb.end()) return false;
            // scale = b/a on some monomial of the coefficient
            if (ita->second.is_zero()) return false;
            auto [mon, ca] = ita->second.leading_term();
            Rational cb = itb->second.coeff(mon);
            if (cb.is_zero()) return false;
            Rational s = cb / ca;
            bool ok = true;
            for (const auto& [km, c] : ra) {
                auto jb = rb.find(km);
                if (jb == rb.end() || jb->second != c.scaled(s)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    }

    std::string str(const std::vector<std::string>& vars = {}, const std::vector<std::string>& unknowns = {}) const;

private:
    static std::vector<std::vector<Rational>> invert(const std::vector<std::vector<Rational>>& A) {
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
            if (pr < 0) throw std::invalid_argument("transform: singular matrix");
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

    int n_, m_, p_;
    std::map<std::tuple<int, int, MultiIndex>, MPoly> entries_;
};

inline std::string DiffOperator::str(const std::vector<std::string>& vars,
                                     const std::vector<std::string>& unknowns) const {
    std::string s;
    for (int r = 0; r < p_; ++r) {
        if (r) s += "\n";
        auto terms = row_terms(r);
        if (terms.empty()) {
            s += "0 = 0";
            continue;
        }
        // print in descending jet order
        std::vector<std::pair<std::pair<int, MultiIndex>, MPoly>> ts(terms.begin(), terms.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            const auto& ma = a.first.second;
            const auto& mb = b.first.second;
            if (mi_length(ma) != mi_length(mb)) return mi_length(ma) > mi_length(mb);
            if (ma != mb) return ma < mb;
            return a.first.first < b.first.first;
        });
        bool first = true;
        for (const auto& [km, c] : ts) {
            std::string cs = c.str(vars);
            bool neg = false;
            if (cs.size() && cs[0] == '-' && c.terms().size() == 1) {
                neg = true;
                cs = (-c).str(vars);
            }
            if (first) {
                if (neg) s += "-";
            } else {
                s += neg ? " - " : " + ";
            }
            first = false;
            std::string jet = jet_name(km.first, km.second, unknowns);
            if (cs == "1")
                s += jet;
            else
                s += (c.is_constant() || c.terms().size() == 1 ? cs : "(" + cs + ")") + "*" + jet;
        }
        s += " = 0";
    }
    return s;
}

} // namespace jetpde

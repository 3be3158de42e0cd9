// mpoly.hpp
// ---------
// Sparse multivariate polynomials over Rational.  A Monomial is an exponent
// vector of fixed length nvars; the zero polynomial stores no terms.  All
// operations are exact.
#pragma once

#include "jetpde/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetpde {

using Monomial = std::vector<int>;

inline int mono_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Graded lexicographic order; used for leading terms in exact division.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return a < b;
}

class MPoly {
public:
    MPoly() : n_(0) {}
    explicit MPoly(int nvars) : n_(nvars) {}
    MPoly(int nvars, const Rational& c) : n_(nvars) {
        if (!c.is_zero()) terms_[Monomial(nvars, 0)] = c;
    }

    static MPoly constant(int nvars, const Rational& c) { return MPoly(nvars, c); }
    static MPoly variable(int nvars, int i) {    // i is 1-based
        if (i < 1 || i > nvars) throw std::out_of_range("MPoly::variable index");
        MPoly p(nvars);
        Monomial m(nvars, 0);
        m[i - 1] = 1;
        p.terms_[m] = Rational(1);
        return p;
    }
    static MPoly monomial(int nvars, const Monomial& m, const Rational& c) {
        MPoly p(nvars);
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        auto it = terms_.find(Monomial(n_, 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }
    int total_degree() const {    // degree of the zero polynomial is -1
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
        return d;
    }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(n_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    MPoly& operator+=(const MPoly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(a.n_);
                for (int i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly scaled(const Rational& c) const {
        MPoly r(n_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
    bool operator<(const MPoly& o) const {    // arbitrary total order for containers
        if (n_ != o.n_) return n_ < o.n_;
        auto i = terms_.begin();
        auto j = o.terms_.begin();
        for (; i != terms_.end() && j != o.terms_.end(); ++i, ++j) {
            if (i->first != j->first) return i->first < j->first;
            if (i->second != j->second) return i->second < j->second;
        }
        return i == terms_.end() && j != o.terms_.end();
    }

    // Formal partial derivative with respect to variable i (1-based).
    MPoly diff(int i) const {
        if (i < 1 || i > n_) throw std::out_of_range("MPoly::diff index");
        MPoly r(n_);
        for (const auto& [m, c] : terms_) {
            if (m[i - 1] == 0) continue;
            Monomial mm = m;
            mm[i - 1] -= 1;
            r.add_term(mm, c * Rational(m[i - 1]));
        }
        return r;
    }
    // Iterated derivative by a multi-index.
    MPoly diff_multi(const Monomial& mu) const {
        MPoly r = *this;
        for (int i = 0; i < n_ && !r.is_zero(); ++i)
            for (int k = 0; k < mu[i]; ++k) r = r.diff(i + 1);
        return r;
    }

    std::pair<Monomial, Rational> leading_term() const {    // grlex leading term
        if (terms_.empty()) throw std::domain_error("MPoly: leading term of zero");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (grlex_less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    // Exact division: throws if the divisor does not divide exactly.
    MPoly divexact(const MPoly& d) const {
        check(d);
        if (d.is_zero()) throw std::domain_error("MPoly: division by zero");
        MPoly q(n_);
        MPoly r = *this;
        auto [dm, dc] = d.leading_term();
        while (!r.is_zero()) {
            auto [rm, rc] = r.leading_term();
            Monomial m(n_);
            for (int i = 0; i < n_; ++i) {
                m[i] = rm[i] - dm[i];
                if (m[i] < 0) throw std::domain_error("MPoly: inexact division");
            }
            Rational c = rc / dc;
            q.add_term(m, c);
            r -= d * MPoly::monomial(n_, m, c);
        }
        return q;
    }

    bool divides(const MPoly& f) const {
        try {
            (void)f.divexact(*this);
            return true;
        } catch (const std::domain_error&) {
            return false;
        }
    }

    // Numeric content: positive rational c with (*this)/c integer, coprime
    // coefficients; sign chosen so the grlex leading coefficient is positive.
    Rational content() const {
        if (terms_.empty()) return Rational(1);
        Rational g(0);
        for (const auto& [m, c] : terms_) g = rat_gcd(g, c);
        if (leading_term().second.sign() < 0) g = -g;
        return g;
    }

    // Substitute x_i -> sum_j B[i][j] * x_j (B over Rational, same nvars).
    MPoly substitute_linear(const std::vector<std::vector<Rational>>& B) const {
        std::vector<MPoly> images;
        images.reserve(n_);
        for (int i = 0; i < n_; ++i) {
            MPoly im(n_);
            for (int j = 0; j < n_; ++j) {
                if (B[i][j].is_zero()) continue;
                im += MPoly::variable(n_, j + 1).scaled(B[i][j]);
            }
            images.push_back(im);
        }
        MPoly r(n_);
        for (const auto& [m, c] : terms_) {
            MPoly t = MPoly::constant(n_, c);
            for (int i = 0; i < n_; ++i)
                for (int e = 0; e < m[i]; ++e) t *= images[i];
            r += t;
        }
        return r;
    }

    Rational eval(const std::vector<Rational>& x) const {
        Rational s(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < n_; ++i)
                for (int e = 0; e < m[i]; ++e) t *= x[i];
            s += t;
        }
        return s;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print in descending grlex order
        std::vector<const std::pair<const Monomial, Rational>*> ts;
        for (const auto& t : terms_) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
        for (auto* t : ts) {
            const auto& [m, c] = *t;
            Rational a = c;
            if (!first) {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            } else if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
            first = false;
            bool unit = a.is_one() && mono_degree(m) > 0;
            if (!unit) os << a.str();
            bool printed = !unit;
            for (int i = 0; i < n_; ++i) {
                if (m[i] == 0) continue;
                if (printed) os << "*";
                os << var_name(names, i);
                if (m[i] > 1) os << "^" << m[i];
                printed = true;
            }
        }
        return os.str();
    }

private:
    static std::string var_name(const std::vector<std::string>& names, int i) {
        if (i < (int)names.size()) return names[i];
        return "x" + std::to_string(i + 1);
    }
    void check(const MPoly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("MPoly: variable-count mismatch");
    }

    int n_;
    std::map<Monomial, Rational> terms_;
};

// ---------------------------------------------------------------------------
// Multivariate gcd (primitive PRS, recursing on the first variable present).
// Inputs here are small; no modular tricks needed.
// ---------------------------------------------------------------------------

namespace detail {

inline int first_used_var(const MPoly& p) {
    int n = p.nvars();
    for (int i = 0; i < n; ++i)
        for (const auto& [m, c] : p.terms())
            if (m[i] > 0) return i;
    return -1;
}

// View p as univariate in variable v: vector of coefficient polynomials.
inline std::vector<MPoly> as_univariate(const MPoly& p, int v) {
    int n = p.nvars();
    int d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m[v]);
    std::vector<MPoly> cs(d + 1, MPoly(n));
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        int e = mm[v];
        mm[v] = 0;
        cs[e].add_term(mm, c);
    }
    return cs;
}

inline MPoly from_univariate(const std::vector<MPoly>& cs, int v, int n) {
    MPoly p(n);
    MPoly xv = MPoly::variable(n, v + 1);
    MPoly pw = MPoly::constant(n, Rational(1));
    for (size_t e = 0; e < cs.size(); ++e) {
        p += cs[e] * pw;
        pw *= xv;
    }
    return p;
}

} // namespace detail

MPoly poly_gcd(const MPoly& a, const MPoly& b);

namespace detail {

inline MPoly poly_content_in(const MPoly& p, int v) {
    auto cs = as_univariate(p, v);
    MPoly g(p.nvars());
    for (const auto& c : cs)
        if (!c.is_zero()) g = poly_gcd(g, c);
    return g;
}

// Pseudo-remainder of a by b, both univariate in v with polynomial coefficients.
inline MPoly pseudo_rem(const MPoly& a, const MPoly& b, int v) {
    auto ac = as_univariate(a, v);
    auto bc = as_univariate(b, v);
    int db = (int)bc.size() - 1;
    MPoly lb = bc[db];
    std::vector<MPoly> r = ac;
    int n = a.nvars();
    while ((int)r.size() - 1 >= db) {
        int dr = (int)r.size() - 1;
        if (r[dr].is_zero()) {
            r.pop_back();
            continue;
        }
        // r <- lb*r - lead(r)*x^(dr-db)*b, killing the top term exactly
        MPoly lr = r[dr];
        for (auto& c : r) c = c * lb;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * bc[i];
        while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    return from_univariate(r, v, n);
}

} // namespace detail

// gcd up to a rational unit; result is primitive with positive leading coeff.
inline MPoly poly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) {
        if (b.is_zero()) return b;
        return b.divexact(MPoly::constant(b.nvars(), b.content()));
    }
    if (b.is_zero()) return a.divexact(MPoly::constant(a.nvars(), a.content()));
    int n = a.nvars();
    int va = detail::first_used_var(a), vb = detail::first_used_var(b);
    if (va < 0 || vb < 0) return MPoly::constant(n, Rational(1));    // a constant is involved
    int v = std::min(va, vb);
    // contents with respect to v
    MPoly ca = detail::poly_content_in(a, v);
    MPoly cb = detail::poly_content_in(b, v);
    MPoly cg = poly_gcd(ca, cb);
    MPoly pa = a.divexact(ca);
    MPoly pb = b.divexact(cb);
    // primitive Euclidean loop on pseudo-remainders
    while (!pb.is_zero()) {
        MPoly r = detail::pseudo_rem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
            break;
        }
        MPoly cr = detail::poly_content_in(r, v);
        pb = r.divexact(cr);
    }
    MPoly g = cg * pa;
    return g.divexact(MPoly::constant(n, g.content()));
}

inline MPoly poly_lcm(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly(a.nvars());
    return (a * b).divexact(poly_gcd(a, b));
}

} // namespace jetpde

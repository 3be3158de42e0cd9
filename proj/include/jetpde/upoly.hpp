// upoly.hpp
// ---------
// Dense univariate polynomials over Rational: division with remainder, gcd,
// derivatives, rational-root extraction.  Used by the Smith normal form, the
// Macaulay-module analysis and Hilbert polynomials.
#pragma once

#include "jetpde/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetpde {

class UPoly {
public:
    UPoly() {}
    UPoly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    UPoly(long c) : UPoly(Rational(c)) {}
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly x() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static UPoly monomial(int deg, const Rational& c) {
        std::vector<Rational> v(deg + 1, Rational(0));
        v[deg] = c;
        return UPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }    // -1 for zero
    const Rational& operator[](int i) const {
        static const Rational zero(0);
        return (i >= 0 && i < (int)c_.size()) ? c_[i] : zero;
    }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_one() const { return degree() == 0 && c_[0].is_one(); }
    bool is_constant() const { return degree() <= 0; }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(v));
    }
    UPoly& operator+=(const UPoly& o) { *this = *this + o; return *this; }
    UPoly& operator-=(const UPoly& o) { *this = *this - o; return *this; }
    UPoly& operator*=(const UPoly& o) { *this = *this * o; return *this; }
    UPoly scaled(const Rational& s) const {
        UPoly r = *this;
        for (auto& c : r.c_) c = c * s;
        r.trim();
        return r;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    // Euclidean division: returns (quotient, remainder), deg r < deg divisor.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw std::domain_error("UPoly: division by zero");
        UPoly r = *this, q;
        q.c_.assign(std::max<int>(0, degree() - d.degree() + 1), Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rational c = r.lead() / d.lead();
            q.c_[k] += c;
            r -= d * UPoly::monomial(k, c);
        }
        q.trim();
        return {q, r};
    }
    UPoly divexact(const UPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("UPoly: inexact division");
        return q;
    }
    bool divides(const UPoly& f) const { return f.divmod(*this).second.is_zero(); }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(lead().inv());
    }

    UPoly derivative() const {
        if (degree() <= 0) return UPoly();
        std::vector<Rational> v(c_.size() - 1, Rational(0));
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational((long)i);
        return UPoly(std::move(v));
    }

    Rational eval(const Rational& x) const {
        Rational s(0);
        for (int i = degree(); i >= 0; --i) s = s * x + c_[i];
        return s;
    }

    friend UPoly upoly_gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = a.divmod(b).second;
            a = b;
            b = r;
        }
        return a.monic();
    }

    std::string str(const std::string& var = "d") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            Rational a = c_[i];
            if (!first) {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            } else if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
            first = false;
            if (i == 0) {
                os << a.str();
            } else {
                if (!a.is_one()) os << a.str() << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// ---------------------------------------------------------------------------
// Rational root extraction.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<mpz_class> small_divisors(mpz_class n) {
    // All positive divisors; intended for the modest constants that appear in
    // invariant factors.  Trial division with a hard bailout.
    std::vector<mpz_class> ds;
    if (n < 0) n = -n;
    if (n == 0) return ds;
    std::map<mpz_class, int> fac;
    mpz_class p = 2;
    mpz_class m = n;
    long steps = 0;
    while (p * p <= m) {
        if (++steps > 2000000) throw std::runtime_error("UPoly: constant too large to factor");
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            fac[p] = e;
        }
        p += (p == 2) ? 1 : 2;
    }
    if (m > 1) fac[m] = 1;
    ds.push_back(1);
    for (const auto& [q, e] : fac) {
        size_t old = ds.size();
        mpz_class pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= q;
            for (size_t j = 0; j < old; ++j) ds.push_back(ds[j] * pw);
        }
    }
    return ds;
}

} // namespace detail

struct RootSplit {
    std::map<Rational, int> roots;    // rational root -> multiplicity
    UPoly cofactor;                   // monic remaining factor, no rational roots
    int power_of_x = 0;               // multiplicity of the root 0
};

// Splits p (nonzero) into x^k * prod (x - r)^m * cofactor over Q.
inline RootSplit rational_roots(const UPoly& p_in) {
    if (p_in.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    RootSplit out;
    UPoly p = p_in.monic();
    while (p.degree() > 0 && p[0].is_zero()) {
        p = p.divexact(UPoly::x());
        ++out.power_of_x;
    }
    if (out.power_of_x > 0) out.roots[Rational(0)] = out.power_of_x;
    if (p.degree() > 0) {
        // integer-primitive form for the candidate list
        mpz_class den_lcm = 1;
        for (int i = 0; i <= p.degree(); ++i)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), p[i].den().get_mpz_t());
        std::vector<mpz_class> ic(p.degree() + 1);
        for (int i = 0; i <= p.degree(); ++i) ic[i] = p[i].num() * (den_lcm / p[i].den());
        auto ps = detail::small_divisors(ic[0]);
        auto qs = detail::small_divisors(ic.back());
        for (const auto& pp : ps) {
            for (const auto& qq : qs) {
                for (int s : {1, -1}) {
                    Rational cand(pp * s, qq);
                    while (p.degree() > 0 && p.eval(cand).is_zero()) {
                        UPoly lin = UPoly::x() - UPoly(cand);
                        p = p.divexact(lin);
                        out.roots[cand] += 1;
                    }
                }
            }
        }
    }
    out.cofactor = p.monic();
    return out;
}

} // namespace jetpde

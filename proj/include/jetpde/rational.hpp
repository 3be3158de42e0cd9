// rational.hpp
// ------------
// Arbitrary-precision rational numbers backed by GMP.  Values are kept
// canonical at all times: gcd(|num|, den) = 1 and den > 0.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace jetpde {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n, 1) {}
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& num, const mpz_class& den = 1) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "p", "-p", "p/q" with arbitrary-precision decimal digits.
    static Rational from_string(const std::string& s) {
        Rational r;
        if (mpq_set_str(r.v_.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (mpz_sgn(mpq_denref(r.v_.get_mpq_t())) == 0)
            throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        r.v_.canonicalize();
        return r;
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    // Rendered "p" for integers, "p/q" otherwise.  Never floating point.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(const mpq_class& v) : v_(v) {}
    mpq_class v_;
};

inline Rational rat_gcd(const Rational& a, const Rational& b) {
    // gcd of numerators over lcm of denominators; gcd(0,0) = 0.
    mpz_class gn, gl;
    mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(gl.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rational(gn, gl);
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace jetpde

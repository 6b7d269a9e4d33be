#ifndef NORMCURVE_RATIONAL_HPP
#define NORMCURVE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "normcurve/errors.hpp"

namespace normcurve {

/// Exact arbitrary-precision fraction. Always stored reduced with a
/// positive denominator; every operation is exact.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}          // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(static_cast<signed long>(n)) {}           // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : v_(num, den) { canon(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { canon(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" (no whitespace). Throws SyntaxError.
    static Rational from_string(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDivision("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw ZeroDivision("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational pow(unsigned e) const;

    /// "p" when integral, "p/q" otherwise.
    std::string str() const;

    /// Exact cube root when the value is a perfect cube of a rational.
    bool cube_root(Rational& out) const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    void canon() {
        if (sgn(v_.get_den()) == 0) throw ZeroDivision("zero denominator");
        v_.canonicalize();
    }
    mpq_class v_;
};

Rational pow_int(long base, unsigned e);

}  // namespace normcurve

#endif

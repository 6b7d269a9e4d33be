#ifndef NORMCURVE_RATFUNC_HPP
#define NORMCURVE_RATFUNC_HPP

#include <optional>
#include <string>

#include "normcurve/upoly.hpp"

namespace normcurve {

/// Reduced ratio of univariate polynomials: gcd(num, den) = 1 and the
/// denominator is monic. The zero function is 0/1.
class RatFunc {
  public:
    explicit RatFunc(std::string var = "u")
        : num_(UPoly::zero(var)), den_(UPoly::constant(1, var)) {}
    RatFunc(UPoly num, UPoly den);
    /// A polynomial viewed as a rational function.
    explicit RatFunc(UPoly num) : RatFunc(num, UPoly::constant(1, num.var())) {}

    static RatFunc constant(const Rational& c, std::string var) {
        return RatFunc(UPoly::constant(c, var));
    }
    static RatFunc variable(std::string var) { return RatFunc(UPoly::variable(var)); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    const std::string& var() const { return num_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Constant value when is_constant(); throws otherwise.
    Rational constant_value() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc scaled(const Rational& c) const;
    RatFunc inverse() const;
    RatFunc pow(unsigned e) const;
    RatFunc derivative() const;

    /// Exact value; empty at a pole of the reduced representation.
    std::optional<Rational> eval(const Rational& x) const;
    /// Value, throwing ZeroDivision at poles.
    Rational eval_or_throw(const Rational& x) const;

    std::string str() const;

  private:
    struct NoReduce {};
    RatFunc(UPoly num, UPoly den, NoReduce) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize_monic();

    UPoly num_;
    UPoly den_;
};

/// p(f) for a univariate polynomial p; the result is already reduced.
RatFunc compose(const UPoly& p, const RatFunc& f);

}  // namespace normcurve

#endif

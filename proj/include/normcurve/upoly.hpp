#ifndef NORMCURVE_UPOLY_HPP
#define NORMCURVE_UPOLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normcurve/rational.hpp"

namespace normcurve {

/// Dense univariate polynomial over Rational, coefficients stored in
/// ascending order. Carries a variable tag; binary operations accept a
/// constant operand with any tag but reject two different non-constant tags.
class UPoly {
  public:
    explicit UPoly(std::string var = "t") : var_(std::move(var)) {}
    UPoly(std::vector<Rational> ascending, std::string var)
        : coeffs_(std::move(ascending)), var_(std::move(var)) {
        trim();
    }
    UPoly(std::initializer_list<Rational> ascending, std::string var)
        : coeffs_(ascending), var_(std::move(var)) {
        trim();
    }

    static UPoly zero(std::string var) { return UPoly(std::move(var)); }
    static UPoly constant(const Rational& c, std::string var);
    static UPoly monomial(const Rational& c, unsigned exp, std::string var);
    /// The variable itself, e.g. UPoly::variable("u") == u.
    static UPoly variable(std::string var) { return monomial(1, 1, std::move(var)); }

    const std::string& var() const { return var_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Degree; empty for the zero polynomial.
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }
    /// Degree with the zero polynomial mapped to -1 (internal convenience).
    int deg_or_neg1() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coeff(unsigned exp) const {
        return exp < coeffs_.size() ? coeffs_[exp] : Rational(0);
    }
    const Rational& lead() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    friend bool operator==(const UPoly& a, const UPoly& b);
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly scaled(const Rational& c) const;
    UPoly pow(unsigned e) const;
    Rational eval(const Rational& x) const;
    UPoly derivative() const;
    UPoly monic() const;

    /// p(t + c).
    UPoly shift_arg(const Rational& c) const;
    /// p(c * t).
    UPoly scale_arg(const Rational& c) const;
    /// t^n * p(1/t); requires n >= deg(p).
    UPoly reverse(unsigned n) const;
    UPoly with_var(std::string var) const { return UPoly(coeffs_, std::move(var)); }

    /// Content (gcd of coefficients as a positive rational; 0 for zero poly).
    Rational content() const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    static void check_vars(const UPoly& a, const UPoly& b);
    static const std::string& merged_var(const UPoly& a, const UPoly& b);

    std::vector<Rational> coeffs_;
    std::string var_;
};

/// Quotient and remainder over Q; throws ZeroDivision on zero divisor.
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
/// Exact division; throws DomainError if the remainder is nonzero.
UPoly upoly_exact_div(const UPoly& a, const UPoly& b);

/// Monic gcd over Q. gcd(p, 0) = monic p; both zero is an error.
UPoly upoly_gcd(const UPoly& a, const UPoly& b);
/// Monic lcm over Q.
UPoly upoly_lcm(const UPoly& a, const UPoly& b);

/// All rational roots, exactly. `complete` is false when the divisor
/// enumeration budget was exhausted before all candidates could be listed.
struct RationalRoots {
    std::vector<Rational> roots;  // distinct, sorted
    bool complete = true;
};
RationalRoots upoly_rational_roots(const UPoly& p);

}  // namespace normcurve

#endif

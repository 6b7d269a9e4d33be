#ifndef NORMCURVE_MPOLY_HPP
#define NORMCURVE_MPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "normcurve/upoly.hpp"

namespace normcurve {

/// Sparse multivariate polynomial over Rational. Terms are kept in a map
/// ordered lexicographically by exponent vector, so equal polynomials have
/// equal representations. Binary operations require identical variable lists.
class MPoly {
  public:
    using Exponents = std::vector<unsigned>;

    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly zero(std::vector<std::string> vars) { return MPoly(std::move(vars)); }
    static MPoly constant(const Rational& c, std::vector<std::string> vars);
    static MPoly monomial(const Rational& c, Exponents exps, std::vector<std::string> vars);
    static MPoly from_upoly(const UPoly& p, const std::vector<std::string>& vars);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& exps, const Rational& c);

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly scaled(const Rational& c) const;
    MPoly pow(unsigned e) const;

    std::size_t var_index(const std::string& v) const;
    unsigned max_degree(const std::string& v) const;

    /// Full evaluation; every variable must be bound.
    Rational eval(const std::map<std::string, Rational>& values) const;

    /// Embeds into a larger variable universe (missing vars get exponent 0).
    MPoly lifted(const std::vector<std::string>& new_vars) const;

    /// Conversion when at most one variable occurs with positive exponent.
    UPoly to_upoly(const std::string& var) const;

    /// Coefficient of var^k as a polynomial in the remaining variables.
    MPoly coeff_of(const std::string& var, unsigned k) const;

    std::string str() const;

  private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

/// Value of a variable under substitution: a polynomial numerator over an
/// explicit denominator (the denominator is univariate, typically in the
/// curve parameter u, or constant).
struct PolyFraction {
    MPoly num;
    UPoly den;
};

/// Substitutes bindings into p and returns numerator and cleared common
/// denominator with num/den == p o bindings. Unbound variables remain.
/// Every binding numerator must already live in `result_vars`; denominators
/// must share one variable (or be constant).
PolyFraction mpoly_substitute(const MPoly& p,
                              const std::map<std::string, PolyFraction>& bindings,
                              const std::vector<std::string>& result_vars);

/// Polynomial-only convenience overload (denominator 1).
MPoly mpoly_substitute(const MPoly& p, const std::map<std::string, MPoly>& bindings,
                       const std::vector<std::string>& result_vars);

}  // namespace normcurve

#endif

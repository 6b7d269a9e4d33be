#ifndef NORMCURVE_CUBIC_FIELD_HPP
#define NORMCURVE_CUBIC_FIELD_HPP

#include <array>

#include "normcurve/rational.hpp"

namespace normcurve {

/// K = Q(alpha) with alpha^3 + a*alpha + b = 0, validated irreducible.
class CubicField {
  public:
    /// Validates that x^3 + ax + b has no rational root (degree-3
    /// irreducibility over Q) and that the discriminant -4a^3 - 27b^2 is
    /// nonzero; throws Reducible otherwise.
    static CubicField check(const Rational& a, const Rational& b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool pure_cubic() const { return a_.is_zero(); }
    Rational discriminant() const;

  private:
    CubicField(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
    Rational a_, b_;
};

/// Element x + y*alpha + z*alpha^2 of K.
struct FieldElem {
    Rational x, y, z;

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    static FieldElem one() { return {Rational(1), Rational(0), Rational(0)}; }
    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
};

FieldElem field_add(const FieldElem& e1, const FieldElem& e2);
FieldElem field_mul(const FieldElem& e1, const FieldElem& e2, const CubicField& F);
/// Multiplicative inverse (3x3 exact linear solve); throws ZeroElement.
FieldElem field_inv(const FieldElem& e, const CubicField& F);

/// The cubic norm form: x^3 - b y^3 + b^2 z^3 + 3b xyz + a x y^2
/// - 2a x^2 z + a^2 x z^2 - a b y z^2.
Rational norm(const FieldElem& e, const CubicField& F);
/// Norm as the determinant of the multiplication-by-e map; an independent
/// cross-check of the expanded formula.
Rational norm_via_matrix(const FieldElem& e, const CubicField& F);

/// Matrix of multiplication by e in the basis {1, alpha, alpha^2}
/// (columns are e*1, e*alpha, e*alpha^2).
std::array<std::array<Rational, 3>, 3> multiplication_matrix(const FieldElem& e,
                                                             const CubicField& F);

/// Exact test: does x^3 + ax + b have a rational root? Splits off the
/// pure-cubic perfect-cube case and otherwise locates integer roots of the
/// cleared monic cubic by bisection on its monotone pieces (no factoring).
bool depressed_cubic_has_rational_root(const Rational& a, const Rational& b);

}  // namespace normcurve

#endif

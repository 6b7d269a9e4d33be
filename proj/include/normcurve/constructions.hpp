#ifndef NORMCURVE_CONSTRUCTIONS_HPP
#define NORMCURVE_CONSTRUCTIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "normcurve/norm_form.hpp"

namespace normcurve {

/// Parametric rational curve (X1(u), X2(u), X3(u), t(u)) on the original
/// hypersurface; the recorded transform chain is already folded into the
/// components.
struct RationalCurve {
    RatFunc x1, x2, x3, t;
    std::vector<Rational> poles;  // rational u-values excluded (denominator zeros)
    bool poles_complete = true;   // false when root enumeration hit its budget
    TransformChain back;
    std::string method;

    Curve4 components() const { return {x1, x2, x3, t}; }
};

struct ConicData {
    MPoly equation;  // in {X2, X3}
    Rational base_x2, base_x3;
    RatFunc param_x2, param_x3;
};

/// Construction byproducts: the solved ansatz coefficients, the cleared
/// residual coefficients (keys such as "A5","A6" or "A0","A1" or "C0","C1"),
/// the clearing denominator D, and conic data when a conic was parametrized.
struct ConstructionReport {
    std::map<std::string, RatFunc> ansatz;
    std::map<std::string, UPoly> residual;
    UPoly denominator{"u"};
    std::optional<ConicData> conic;
};

using CurveResult = std::pair<RationalCurve, ConstructionReport>;

/// True iff (c2,c4,c5) differs from the degenerate triple
/// (5c1^2/12, -c1(5c1^3-72c3)/144, -c1^2(c1^3-12c3)/144).
bool except_condition(const Rational& c1, const Rational& c2, const Rational& c3,
                      const Rational& c4, const Rational& c5);

/// Coefficients of g = 1 + sum c_i t^i; index 0 holds c1.
using GCoeffs = std::array<Rational, 6>;

/// Ansatz solve and cleared residual for the pure-cubic engine, without the
/// degeneracy gate (A5 vanishes exactly on the gated family).
struct Pure6Internals {
    Rational p, q;
    RatFunc r, s;
    UPoly res5{"u"}, res6{"u"};  // A5, A6
    UPoly denominator{"u"};      // D = 3^12 b^2 u^3 (54 b^2 u^3 + 5c1^3 - 18c1c2 + 27c3)^3
};
Pure6Internals pure6_internals(const CubicField& F, const GCoeffs& c);

/// Main engine: rational curve on S_g, g = 1 + sum c_i t^i, pure cubic field.
CurveResult curve_pure_cubic_deg6(const CubicField& F, const GCoeffs& c);

/// Explicit factors of the degenerate family:
/// g = -(1/144)(c1^2 t^2 + 6c1 t + 12)((c1^3-12c3)t^3 - c1^2 t^2 - 6c1 t - 12).
std::pair<UPoly, UPoly> reducible_factorization(const Rational& c1, const Rational& c3);

/// Degree-4 corollary: delegates to the engine, or runs the explicit
/// parametrization of the square family when (2.2)-style degeneracy forces
/// g(6t/c1) = (3t^2+3t+1)^2.
CurveResult curve_deg4(const CubicField& F, const Rational& c1, const Rational& c2,
                       const Rational& c3, const Rational& c4);

/// Degree-6 corollary: monicize, invert, delegate; the returned curve lives
/// on the original S_f. Throws ExceptionalForm when c2=c4=c5=0 after
/// normalization.
CurveResult curve_deg6_monic(const ProblemInstance& inst);

/// Coefficients of f = a0 t^6 + a2 t^4 + a3 t^3 + a4 t^2 + a5 t + a6 (no t^5
/// term; a0 is the leading coefficient).
struct ApproxInput {
    Rational a0, a2, a3, a4, a5, a6;
};
struct ApproxResult {
    Rational c0, c2, c3, c4, c5, c6;
    FieldElem witness;  // Norm(witness) = c0, independent of b

    UPoly g() const;
};
/// Coefficient perturbation making S_g unirational for every pure cubic
/// field: |a_i - c_i| < eps, c0 a nonzero norm value, and the
/// zeta_3-invariant shape broken when present.
ApproxResult approx_coeffs(const ApproxInput& in, const Rational& eps, const CubicField& F);
/// The perturbed instance with its point at infinity.
ProblemInstance approx_instance(const ApproxResult& res, const CubicField& F);

/// f(t) = t^(3m) + a2 t^m + a1 t + a0 with the degree-m and linear monomials
/// merged when m = 1.
UPoly trinomial_f(unsigned m, const Rational& a2, const Rational& a1, const Rational& a0);
RationalCurve curve_trinomial(const CubicField& F, unsigned m, const Rational& a2,
                              const Rational& a1, const Rational& a0);

/// General cubic extension, f = t^6 + a4 t^4 + a1 t + a0, a1 a4 != 0, a != 0.
CurveResult curve_general_cubic(const CubicField& F, const Rational& a4, const Rational& a1,
                                const Rational& a0);

/// Cubic form X1^3 + aX2^3 + bX3^3 + (cX1 + dX2 + eX3)X2X3.
struct GenForm {
    Rational a, b, c, d, e;
};
/// G = F(X1,X2,X3) - f(t) for f = t^6 + a4 t^4 + ... + a0, over
/// {X1,X2,X3,t}.
MPoly genform_G(const GenForm& form, const std::array<Rational, 5>& f_low);
CurveResult curve_genform(const GenForm& form, const std::array<Rational, 5>& f_low);

/// Rational poles of the reduced components (denominator roots).
void attach_poles(RationalCurve& curve);

/// Prepends `chain` to the curve's record and maps the components backward
/// through it.
void push_chain_front(RationalCurve& curve, const TransformChain& chain, const CubicField& F);

}  // namespace normcurve

#endif

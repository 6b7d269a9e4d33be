#ifndef NORMCURVE_NORM_FORM_HPP
#define NORMCURVE_NORM_FORM_HPP

#include <array>
#include <optional>
#include <vector>

#include "normcurve/cubic_field.hpp"
#include "normcurve/mpoly.hpp"
#include "normcurve/ratfunc.hpp"

namespace normcurve {

/// Known rational point on S_f. An empty t0 means the point at infinity of a
/// degree-6 instance: Norm(x,y,z) equals the leading coefficient of f.
struct KnownPoint {
    FieldElem elem;
    std::optional<Rational> t0;

    bool at_infinity() const { return !t0.has_value(); }
};

struct ProblemInstance {
    CubicField field;
    UPoly f;  // in t
    std::optional<KnownPoint> point;
};

/// Validates the instance: f != 0, and when a point is given,
/// Norm(x,y,z) = f(t0) with f(t0) != 0 (resp. = leading coefficient for a
/// point at infinity, which requires deg f = 6).
ProblemInstance make_instance(const CubicField& F, const UPoly& f,
                              const std::optional<KnownPoint>& point);

/// G = Norm(X1,X2,X3) - f(t) over variables {X1,X2,X3,t}.
MPoly build_G(const ProblemInstance& inst);
/// The norm form as a polynomial in the given variable universe (which must
/// contain X1, X2, X3).
MPoly norm_form_mpoly(const CubicField& F, const std::vector<std::string>& vars);

// ---------------------------------------------------------------------------
// Transform chain between S_f models. Steps map the original polynomial
// toward the normalized one; points and curves map backward.

enum class StepKind {
    TShift,     // f_new(t) = f_old(t + t0)
    TScaleArg,  // f_new(t) = f_old(lambda * t)
    ScaleNorm,  // f_new = Norm(e) * f_old
    InvertT,    // f_new(T) = T^6 * f_old(1/T)
};

struct TransformStep {
    StepKind kind;
    Rational value;  // t0 or lambda
    FieldElem e;     // ScaleNorm only
};

using Point4 = std::array<Rational, 4>;   // (X1, X2, X3, t)
using Curve4 = std::array<RatFunc, 4>;    // components in u

struct TransformChain {
    std::vector<TransformStep> steps;

    bool empty() const { return steps.empty(); }
    UPoly apply_forward_poly(const UPoly& f, const CubicField& F) const;
    Point4 apply_forward_point(const Point4& p, const CubicField& F) const;
    Point4 apply_backward_point(const Point4& p, const CubicField& F) const;
    Curve4 apply_backward_curve(const Curve4& c, const CubicField& F) const;
};

/// Scalar factor lambda with G_old(backward(p)) = lambda * G_new(p); exact
/// for every point where the backward map is defined.
Rational step_equation_factor(const TransformStep& s, const Point4& p, const CubicField& F);

// ---------------------------------------------------------------------------

/// Result of normalization: f is equivalent to g(t) = 1 + sum c_i t^i and the
/// chain maps the known point to (1,0,0) at t = 0.
struct NormalizedTarget {
    std::array<Rational, 6> c;  // c[0] = c_1, ..., c[5] = c_6
    TransformChain chain;

    UPoly g() const;
};

/// Shift-and-scale normalization; requires a finite nontrivial point and
/// deg f <= 6. Throws TrivialPoint when f(t0) = 0.
NormalizedTarget normalize(const ProblemInstance& inst);

struct MonicizeResult {
    ProblemInstance instance;  // monic degree 6, zero t^5 coefficient
    TransformChain chain;
};

/// Degree-6 normal form: translate -> invert -> scale -> translate (the
/// translate/invert prefix is dropped for a point at infinity, where scaling
/// alone makes f monic). Identity chain when f is already in normal form.
MonicizeResult monicize_deg6(const ProblemInstance& inst);

}  // namespace normcurve

#endif

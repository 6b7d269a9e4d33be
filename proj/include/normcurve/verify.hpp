#ifndef NORMCURVE_VERIFY_HPP
#define NORMCURVE_VERIFY_HPP

#include <cstdint>
#include <vector>

#include "normcurve/constructions.hpp"

namespace normcurve {

/// Machine-checked proof that a curve lies on the hypersurface: substituting
/// the components into G and clearing lcm(d_X1,d_X2,d_X3)^degX * d_t^degt
/// yields the zero polynomial.
struct Certificate {
    UPoly cleared_residual{"u"};  // the zero polynomial
    UPoly denominator_used{"u"};
    std::string method;
    std::vector<Rational> checked_at;  // spot-checked u values
};

/// Exact identity check against an arbitrary defining polynomial G over
/// {X1,X2,X3,t}. Throws IdentityFailed (carrying residual data) on a nonzero
/// residual.
Certificate verify_curve_identity(const RationalCurve& curve, const MPoly& G);
/// Norm-form convenience overload.
Certificate verify_curve_identity(const RationalCurve& curve, const ProblemInstance& inst);

struct PointRecord {
    Rational u;
    Point4 point;       // on the original S_f
    Rational norm_value;
};

/// Deterministic seeded sampling of exact points on the original surface;
/// every record satisfies the defining equation with f(t) != 0, and t-values
/// are pairwise distinct.
std::vector<PointRecord> sample_points(const RationalCurve& curve, const ProblemInstance& inst,
                                       std::size_t count, std::uint64_t seed);
/// Generic core used by the norm-form overload and the genform path; f is
/// the right-hand side polynomial (for the f(t) != 0 filter and norm_value).
std::vector<PointRecord> sample_points(const RationalCurve& curve, const MPoly& G,
                                       const UPoly& f, std::size_t count, std::uint64_t seed);

/// True iff t(u) is non-constant (the curve is not contained in a fiber).
bool fiber_check(const RationalCurve& curve);

}  // namespace normcurve

#endif

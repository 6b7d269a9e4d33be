#include "normcurve/cubic_field.hpp"

#include "normcurve/errors.hpp"

namespace normcurve {

CubicField CubicField::check(const Rational& a, const Rational& b) {
    if (depressed_cubic_has_rational_root(a, b)) {
        throw Reducible("x^3 + (" + a.str() + ")x + (" + b.str() +
                        ") has a rational root; the norm form factors");
    }
    CubicField F(a, b);
    if (F.discriminant().is_zero())
        throw Reducible("zero discriminant");  // unreachable given irreducibility
    return F;
}

Rational CubicField::discriminant() const {
    return Rational(-4) * a_.pow(3) - Rational(27) * b_.pow(2);
}

FieldElem field_add(const FieldElem& e1, const FieldElem& e2) {
    return {e1.x + e2.x, e1.y + e2.y, e1.z + e2.z};
}

FieldElem field_mul(const FieldElem& e1, const FieldElem& e2, const CubicField& F) {
    const Rational& a = F.a();
    const Rational& b = F.b();
    // reduce via alpha^3 = -a*alpha - b, alpha^4 = -a*alpha^2 - b*alpha
    Rational c3 = e1.y * e2.z + e1.z * e2.y;  // alpha^3 coefficient
    Rational c4 = e1.z * e2.z;                // alpha^4 coefficient
    return {e1.x * e2.x - b * c3,
            e1.x * e2.y + e1.y * e2.x - a * c3 - b * c4,
            e1.x * e2.z + e1.y * e2.y + e1.z * e2.x - a * c4};
}

std::array<std::array<Rational, 3>, 3> multiplication_matrix(const FieldElem& e,
                                                             const CubicField& F) {
    FieldElem c0 = field_mul(e, FieldElem{1, 0, 0}, F);
    FieldElem c1 = field_mul(e, FieldElem{0, 1, 0}, F);
    FieldElem c2 = field_mul(e, FieldElem{0, 0, 1}, F);
    return {{{c0.x, c1.x, c2.x}, {c0.y, c1.y, c2.y}, {c0.z, c1.z, c2.z}}};
}

Rational norm(const FieldElem& e, const CubicField& F) {
    const Rational& a = F.a();
    const Rational& b = F.b();
    const Rational& x = e.x;
    const Rational& y = e.y;
    const Rational& z = e.z;
    return x.pow(3) - b * y.pow(3) + b.pow(2) * z.pow(3) + Rational(3) * b * x * y * z +
           a * x * y * y - Rational(2) * a * x * x * z + a * a * x * z * z - a * b * y * z * z;
}

Rational norm_via_matrix(const FieldElem& e, const CubicField& F) {
    auto m = multiplication_matrix(e, F);
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

FieldElem field_inv(const FieldElem& e, const CubicField& F) {
    if (e.is_zero()) throw ZeroElement("inverse of the zero element");
    // Solve M_e * v = (1,0,0)^T by Cramer's rule; det = norm(e) != 0 since K
    // is a field.
    auto m = multiplication_matrix(e, F);
    Rational det = norm_via_matrix(e, F);
    auto minor3 = [&](int r1, int r2, int c1, int c2) {
        return m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
    };
    // Right-hand side (1,0,0): each solution component is a signed 2x2 minor
    // of the remaining rows over det.
    Rational vx = minor3(1, 2, 1, 2) / det;
    Rational vy = -minor3(1, 2, 0, 2) / det;
    Rational vz = minor3(1, 2, 0, 1) / det;
    return {vx, vy, vz};
}

namespace {

mpz_class eval_monic_cubic(const mpz_class& A, const mpz_class& B, const mpz_class& y) {
    return y * y * y + A * y + B;
}

// Binary search for an integer zero of the (monotone on [lo,hi]) cubic.
bool search_monotone(const mpz_class& A, const mpz_class& B, mpz_class lo, mpz_class hi,
                     bool increasing) {
    if (lo > hi) return false;
    while (lo < hi) {
        mpz_class mid, sum = lo + hi;
        mpz_fdiv_q_ui(mid.get_mpz_t(), sum.get_mpz_t(), 2);  // floor keeps mid in [lo, hi)
        int s = sgn(eval_monic_cubic(A, B, mid));
        if (s == 0) return true;
        bool go_right = increasing ? (s < 0) : (s > 0);
        if (go_right)
            lo = mid + 1;
        else
            hi = mid - 1;
        if (lo > hi) return false;
    }
    return eval_monic_cubic(A, B, lo) == 0;
}

}  // namespace

bool depressed_cubic_has_rational_root(const Rational& a, const Rational& b) {
    if (b.is_zero()) return true;  // root 0
    if (a.is_zero()) {
        Rational r;
        return b.cube_root(r);  // root is -cbrt(b)
    }
    // Clear denominators: x = y/d with d = lcm(den a, den b) gives the monic
    // integer cubic y^3 + (a d^2) y + (b d^3); rational roots of the original
    // correspond exactly to integer roots here.
    mpz_class d;
    mpz_lcm(d.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    mpz_class A = a.num() * (d / a.den()) * d;
    mpz_class B = b.num() * (d / b.den()) * d * d;

    mpz_class M = 1 + std::max(abs(A), abs(B));  // Cauchy bound
    if (A >= 0) {
        // strictly increasing, single monotone piece
        return search_monotone(A, B, -M, M, true);
    }
    // Critical points at +-sqrt(-A/3): increasing, decreasing, increasing.
    mpz_class s;
    mpz_class q = (-A) / 3;
    mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
    return search_monotone(A, B, -M, -s - 1, true) || search_monotone(A, B, -s, s, false) ||
           search_monotone(A, B, s + 1, M, true);
}

}  // namespace normcurve

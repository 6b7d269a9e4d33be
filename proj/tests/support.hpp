#ifndef NORMCURVE_TESTS_SUPPORT_HPP
#define NORMCURVE_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "normcurve/cubic_field.hpp"
#include "normcurve/upoly.hpp"

namespace nctest {

using normcurve::CubicField;
using normcurve::Rational;
using normcurve::UPoly;

// Deterministic draws built on raw engine output only (modulo arithmetic is
// bit-portable; distributions are not).
inline std::uint64_t draw_u64(std::mt19937_64& eng, std::uint64_t n) { return eng() % n; }

inline long draw_int(std::mt19937_64& eng, long lo, long hi) {
    return lo + static_cast<long>(draw_u64(eng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Rational with |numerator| <= h, 1 <= denominator <= h.
inline Rational draw_rational(std::mt19937_64& eng, long h = 20) {
    return Rational(draw_int(eng, -h, h), draw_int(eng, 1, h));
}

inline Rational draw_nonzero_rational(std::mt19937_64& eng, long h = 20) {
    for (;;) {
        Rational r = draw_rational(eng, h);
        if (!r.is_zero()) return r;
    }
}

// Nonzero rational that is not a perfect cube (valid pure-cubic b).
inline Rational draw_noncube(std::mt19937_64& eng, long h = 20) {
    for (;;) {
        Rational r = draw_rational(eng, h);
        Rational croot;
        if (!r.is_zero() && !r.cube_root(croot)) return r;
    }
}

inline CubicField draw_pure_field(std::mt19937_64& eng, long h = 20) {
    return CubicField::check(Rational(0), draw_noncube(eng, h));
}

// Field with a != 0 and x^3 + ax + b irreducible.
inline CubicField draw_general_field(std::mt19937_64& eng, long h = 12) {
    for (;;) {
        Rational a = draw_nonzero_rational(eng, h);
        Rational b = draw_rational(eng, h);
        if (!normcurve::depressed_cubic_has_rational_root(a, b))
            return CubicField::check(a, b);
    }
}

inline UPoly draw_poly(std::mt19937_64& eng, int max_deg, const std::string& var = "t",
                       long h = 20) {
    int deg = static_cast<int>(draw_u64(eng, static_cast<std::uint64_t>(max_deg + 1)));
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(draw_rational(eng, h));
    return UPoly(std::move(c), var);
}

inline UPoly draw_nonzero_poly(std::mt19937_64& eng, int max_deg, const std::string& var = "t",
                               long h = 20) {
    for (;;) {
        UPoly p = draw_poly(eng, max_deg, var, h);
        if (!p.is_zero()) return p;
    }
}

inline UPoly draw_poly_exact_deg(std::mt19937_64& eng, int deg, const std::string& var = "t",
                                 long h = 20) {
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.push_back(draw_rational(eng, h));
    c.push_back(draw_nonzero_rational(eng, h));
    return UPoly(std::move(c), var);
}

// Schoolbook convolution oracle for polynomial products.
inline std::vector<Rational> convolve(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

}  // namespace nctest

#endif

#include "normcurve/verify.hpp"

#include <random>
#include <set>

#include "normcurve/errors.hpp"

namespace normcurve {

namespace {

// Component split kappa * N / D with N, D primitive integer polynomials;
// keeping the big products integer-valued makes the clearing fast.
struct Cleared {
    Rational kappa;
    UPoly num;  // primitive integer
    UPoly den;  // primitive integer, positive leading coefficient
};

UPoly primitive_int(const UPoly& p, Rational* content_out) {
    Rational c = p.content();
    if (p.is_zero()) {
        if (content_out) *content_out = Rational(0);
        return p;
    }
    if (p.lead().sign() < 0) c = -c;
    if (content_out) *content_out = c;
    return p.scaled(c.inverse());
}

Cleared clear_component(const RatFunc& f) {
    Cleared out;
    if (f.is_zero()) {
        out.kappa = Rational(0);
        out.num = UPoly::zero(f.var());
        out.den = UPoly::constant(1, f.var());
        return out;
    }
    Rational cn, cd;
    out.num = primitive_int(f.num(), &cn);
    out.den = primitive_int(f.den(), &cd);
    out.kappa = cn / cd;
    return out;
}

std::mt19937_64 seeded_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

// Deterministic rational draw; plain modulo keeps the stream bit-portable.
Rational draw_rational(std::mt19937_64& eng, long num_range, long den_range) {
    std::uint64_t r1 = eng();
    std::uint64_t r2 = eng();
    long n = static_cast<long>(r1 % static_cast<std::uint64_t>(2 * num_range + 1)) - num_range;
    long d = static_cast<long>(r2 % static_cast<std::uint64_t>(den_range)) + 1;
    return Rational(n, d);
}

}  // namespace

Certificate verify_curve_identity(const RationalCurve& curve, const MPoly& G) {
    const std::string& uv = curve.t.var();
    std::array<Cleared, 4> comp{clear_component(curve.x1), clear_component(curve.x2),
                                clear_component(curve.x3), clear_component(curve.t)};

    // lcm of the X-denominators (primitive integer representative).
    UPoly L = comp[0].den;
    for (int i = 1; i < 3; ++i) L = upoly_lcm(L, comp[i].den);
    L = primitive_int(L, nullptr);

    unsigned degx = 0, degt = 0;
    const std::size_t it = G.var_index("t");
    std::array<std::size_t, 3> ix{G.var_index("X1"), G.var_index("X2"), G.var_index("X3")};
    for (const auto& [e, c] : G.terms()) {
        degx = std::max(degx, e[ix[0]] + e[ix[1]] + e[ix[2]]);
        degt = std::max(degt, e[it]);
    }

    // Precomputed powers of every factor entering the cleared terms.
    auto powers = [&](const UPoly& p, unsigned n) {
        std::vector<UPoly> v{UPoly::constant(1, uv)};
        for (unsigned k = 1; k <= n; ++k) v.push_back(v.back() * p);
        return v;
    };
    std::array<std::vector<UPoly>, 3> xn, xm;
    for (int i = 0; i < 3; ++i) {
        xn[i] = powers(comp[i].num, degx);
        xm[i] = powers(upoly_exact_div(L, comp[i].den), degx);
    }
    std::vector<UPoly> ln = powers(L, degx);
    std::vector<UPoly> tn = powers(comp[3].num, degt);
    std::vector<UPoly> td = powers(comp[3].den, degt);

    UPoly residual = UPoly::zero(uv);
    for (const auto& [e, c] : G.terms()) {
        unsigned e1 = e[ix[0]], e2 = e[ix[1]], e3 = e[ix[2]], et = e[it];
        Rational scalar = c * comp[0].kappa.pow(e1) * comp[1].kappa.pow(e2) *
                          comp[2].kappa.pow(e3) * comp[3].kappa.pow(et);
        if (scalar.is_zero()) continue;
        UPoly term = xn[0][e1] * xm[0][e1];
        term *= xn[1][e2] * xm[1][e2];
        term *= xn[2][e3] * xm[2][e3];
        term *= ln[degx - (e1 + e2 + e3)];
        term *= tn[et] * td[degt - et];
        residual += term.scaled(scalar);
    }

    Certificate cert;
    cert.denominator_used = ln[degx] * td[degt];
    cert.method = curve.method;
    if (!residual.is_zero()) {
        std::string msg = "nonzero cleared residual (degree " +
                          std::to_string(residual.deg_or_neg1()) + ", leading coefficient " +
                          residual.lead().str() + ")";
        throw IdentityFailed(msg);
    }
    cert.cleared_residual = residual;

    // Spot checks: exact evaluation at 10 non-pole parameter values.
    std::mt19937_64 eng = seeded_engine(0x5eedc0de);
    while (cert.checked_at.size() < 10) {
        Rational u = draw_rational(eng, 50, 8);
        auto x1 = curve.x1.eval(u), x2 = curve.x2.eval(u), x3 = curve.x3.eval(u),
             tv = curve.t.eval(u);
        if (!x1 || !x2 || !x3 || !tv) continue;
        Rational val = G.eval({{"X1", *x1}, {"X2", *x2}, {"X3", *x3}, {"t", *tv}});
        if (!val.is_zero())
            throw IdentityFailed("spot check failed at u = " + u.str());
        cert.checked_at.push_back(u);
    }
    return cert;
}

Certificate verify_curve_identity(const RationalCurve& curve, const ProblemInstance& inst) {
    return verify_curve_identity(curve, build_G(inst));
}

std::vector<PointRecord> sample_points(const RationalCurve& curve, const MPoly& G,
                                       const UPoly& f, std::size_t count, std::uint64_t seed) {
    std::vector<PointRecord> out;
    if (count == 0) return out;
    std::mt19937_64 eng = seeded_engine(seed);
    std::set<Rational> used_u;
    std::set<Rational> used_t;
    std::size_t attempts = 0;
    const std::size_t attempt_cap = 1000 * count + 100000;
    while (out.size() < count) {
        if (++attempts > attempt_cap)
            throw PoleExhaustion("sampling failed to find enough non-pole parameters");
        Rational u = draw_rational(eng, 1000, 30);
        if (!used_u.insert(u).second) continue;
        auto x1 = curve.x1.eval(u), x2 = curve.x2.eval(u), x3 = curve.x3.eval(u),
             tv = curve.t.eval(u);
        if (!x1 || !x2 || !x3 || !tv) continue;  // rational pole
        Rational fv = f.eval(*tv);
        if (fv.is_zero()) continue;  // nontriviality requires f(t) != 0
        if (used_t.count(*tv)) continue;
        Rational g = G.eval({{"X1", *x1}, {"X2", *x2}, {"X3", *x3}, {"t", *tv}});
        if (!g.is_zero())
            throw IdentityFailed("sampled point fails the defining equation at u = " + u.str());
        used_t.insert(*tv);
        out.push_back(PointRecord{u, Point4{*x1, *x2, *x3, *tv}, fv});
    }
    return out;
}

std::vector<PointRecord> sample_points(const RationalCurve& curve, const ProblemInstance& inst,
                                       std::size_t count, std::uint64_t seed) {
    return sample_points(curve, build_G(inst), inst.f, count, seed);
}

bool fiber_check(const RationalCurve& curve) {
    return !curve.t.derivative().is_zero();
}

}  // namespace normcurve

#include "normcurve/constructions.hpp"

#include <algorithm>
#include <set>

#include "normcurve/errors.hpp"

namespace normcurve {

namespace {

const std::vector<std::string> kTU{"T", "u"};

UPoly upoly_u(std::vector<Rational> ascending) { return UPoly(std::move(ascending), "u"); }

void require_pure_cubic(const CubicField& F, const char* who) {
    if (!F.pure_cubic())
        throw UsePureCubicMethod(std::string(who) + " requires a pure cubic field (a = 0)");
}

}  // namespace

bool except_condition(const Rational& c1, const Rational& c2, const Rational& c3,
                      const Rational& c4, const Rational& c5) {
    Rational rhs2 = Rational(5) * c1 * c1 / Rational(12);
    Rational rhs4 = -(c1 * (Rational(5) * c1.pow(3) - Rational(72) * c3)) / Rational(144);
    Rational rhs5 = -(c1 * c1 * (c1.pow(3) - Rational(12) * c3)) / Rational(144);
    return !(c2 == rhs2 && c4 == rhs4 && c5 == rhs5);
}

Pure6Internals pure6_internals(const CubicField& F, const GCoeffs& c) {
    require_pure_cubic(F, "pure-cubic construction");
    const Rational& b = F.b();
    const Rational &c1 = c[0], &c2 = c[1], &c3 = c[2], &c4 = c[3];

    Pure6Internals out;
    out.p = (Rational(3) * c2 - c1 * c1) / Rational(9);
    out.q = c1 / Rational(3);

    // tau = 5c1^3 - 18c1c2 + 27c3 appears in both denominators
    Rational tau = Rational(5) * c1.pow(3) - Rational(18) * c1 * c2 + Rational(27) * c3;
    UPoly r_num = upoly_u({tau, 0, 0, Rational(-27) * b * b});
    UPoly r_den = upoly_u({0, Rational(81) * b});
    Rational sigma = Rational(-5) * c1.pow(4) + Rational(27) * c2 * c1 * c1 -
                     Rational(27) * c3 * c1 - Rational(27) * c2 * c2 + Rational(81) * c4;
    UPoly s_num = upoly_u({0, sigma, 0, 0, Rational(27) * b * b * c1});
    UPoly s_den = upoly_u({Rational(3) * tau, 0, 0, Rational(162) * b * b});
    out.r = RatFunc(r_num, r_den);
    out.s = RatFunc(s_num, s_den);

    // Substitute the ansatz X1 = pT^2 + qT + 1, X2 = rT^2, X3 = sT^2 + uT,
    // t = T into G and clear denominators.
    UPoly g = [&] {
        std::vector<Rational> coeffs{Rational(1)};
        for (const auto& ci : c) coeffs.push_back(ci);
        return UPoly(coeffs, "t");
    }();
    ProblemInstance inst{F, g, std::nullopt};
    MPoly G = build_G(inst);

    MPoly x1_num = MPoly::zero(kTU);
    x1_num.add_term({2, 0}, out.p);
    x1_num.add_term({1, 0}, out.q);
    x1_num.add_term({0, 0}, 1);
    MPoly x2_num = MPoly::from_upoly(r_num, kTU) * MPoly::monomial(1, {2, 0}, kTU);
    MPoly x3_num = MPoly::from_upoly(s_num, kTU) * MPoly::monomial(1, {2, 0}, kTU) +
                   MPoly::from_upoly(s_den, kTU) * MPoly::monomial(1, {1, 1}, kTU);
    UPoly one_u = UPoly::constant(1, "u");

    std::map<std::string, PolyFraction> bind;
    bind.emplace("X1", PolyFraction{x1_num, one_u});
    bind.emplace("X2", PolyFraction{x2_num, r_den});
    bind.emplace("X3", PolyFraction{x3_num, s_den});
    bind.emplace("t", PolyFraction{MPoly::monomial(1, {1, 0}, kTU), one_u});
    PolyFraction res = mpoly_substitute(G, bind, kTU);

    for (unsigned k = 0; k <= 4; ++k) {
        if (!res.num.coeff_of("T", k).is_zero())
            throw DomainError("Internal", "ansatz failed to kill T^" + std::to_string(k));
    }
    // res.den = (81bu)^3 (3E)^3 = 27b * D with D = 3^12 b^2 u^3 E^3.
    Rational scale = (Rational(27) * b).inverse();
    out.res5 = res.num.coeff_of("T", 5).to_upoly("u").scaled(scale);
    out.res6 = res.num.coeff_of("T", 6).to_upoly("u").scaled(scale);
    UPoly E = upoly_u({tau, 0, 0, Rational(54) * b * b});
    out.denominator = UPoly::monomial(pow_int(3, 12) * b * b, 3, "u") * E.pow(3);
    if (res.den != out.denominator.scaled(Rational(27) * b))
        throw DomainError("Internal", "cleared denominator mismatch");
    return out;
}

CurveResult curve_pure_cubic_deg6(const CubicField& F, const GCoeffs& c) {
    if (!except_condition(c[0], c[1], c[2], c[3], c[4]))
        throw ConditionFailed(
            "the coefficient triple (c2,c4,c5) lies on the degenerate family; g factors (see "
            "reducible_factorization)");

    Pure6Internals in = pure6_internals(F, c);
    if (in.res6.is_zero() || in.res5.is_zero())
        throw DegenerateDenominator("cleared residual degenerated unexpectedly");
    if (in.res6.deg_or_neg1() != 18 ||
        in.res6.lead() != pow_int(2, 3) * pow_int(3, 18) * F.b().pow(12))
        throw DomainError("Internal", "sextic residual coefficient has unexpected shape");

    RatFunc phi(-in.res5, in.res6);
    RatFunc u_rf = RatFunc::variable("u");
    RatFunc phi2 = phi.pow(2);

    RationalCurve curve;
    curve.x1 = compose(UPoly({Rational(1), in.q, in.p}, "T"), phi);
    curve.x2 = in.r * phi2;
    curve.x3 = in.s * phi2 + u_rf * phi;
    curve.t = phi;
    curve.method = "pure6";
    attach_poles(curve);

    ConstructionReport report;
    report.ansatz.emplace("p", RatFunc::constant(in.p, "u"));
    report.ansatz.emplace("q", RatFunc::constant(in.q, "u"));
    report.ansatz.emplace("r", in.r);
    report.ansatz.emplace("s", in.s);
    report.residual.emplace("A5", in.res5);
    report.residual.emplace("A6", in.res6);
    report.denominator = in.denominator;
    return {std::move(curve), std::move(report)};
}

std::pair<UPoly, UPoly> reducible_factorization(const Rational& c1, const Rational& c3) {
    UPoly quad({Rational(12), Rational(6) * c1, c1 * c1}, "t");
    UPoly cubic({Rational(-12), Rational(-6) * c1, -(c1 * c1), c1.pow(3) - Rational(12) * c3},
                "t");
    return {quad, cubic};
}

CurveResult curve_deg4(const CubicField& F, const Rational& c1, const Rational& c2,
                       const Rational& c3, const Rational& c4) {
    require_pure_cubic(F, "the degree-4 corollary");
    if (c4.is_zero()) throw ZeroCoefficient("degree-4 construction needs c4 != 0");

    if (except_condition(c1, c2, c3, c4, Rational(0))) {
        GCoeffs c{c1, c2, c3, c4, Rational(0), Rational(0)};
        auto [curve, report] = curve_pure_cubic_deg6(F, c);
        curve.method = "deg4";
        return {std::move(curve), std::move(report)};
    }

    // Degenerate family: c1 != 0 and g(6t/c1) = (3t^2+3t+1)^2.
    const Rational& b = F.b();
    if (c1.is_zero() || c3 != c1.pow(3) / Rational(12) || c4 != c1.pow(4) / Rational(144))
        throw DomainError("Internal", "degenerate degree-4 family has unexpected coefficients");
    Rational lambda = Rational(6) / c1;
    UPoly g({Rational(1), c1, c2, c3, c4}, "t");
    UPoly h_expected({Rational(1), Rational(6), Rational(15), Rational(18), Rational(9)}, "t");
    if (g.scale_arg(lambda) != h_expected)
        throw DomainError("Internal", "scaled degenerate quartic is not the expected square");

    UPoly T_num = upoly_u({Rational(1), 0, 0, Rational(-32) * b, 0, 0, Rational(-64) * b * b});
    UPoly T_den = upoly_u({0, 0, 0, Rational(36) * b});
    RatFunc T(T_num, T_den);
    RatFunc p_rf(UPoly::constant(Rational(1), "u"), UPoly::monomial(Rational(4) * b, 1, "u"));

    RationalCurve curve;
    curve.x1 = T + RatFunc::constant(1, "u");
    curve.x2 = RatFunc::variable("u") * T;
    curve.x3 = p_rf * T;
    curve.t = T.scaled(Rational(1, 2));  // on S_h; the scaling below moves it to S_g
    curve.method = "deg4";

    TransformChain chain;
    chain.steps.push_back({StepKind::TScaleArg, lambda, FieldElem{}});
    curve.back = chain;
    Curve4 mapped = chain.apply_backward_curve(curve.components(), F);
    curve.t = mapped[3];
    attach_poles(curve);

    ConstructionReport report;
    report.ansatz.emplace("p", p_rf);
    report.ansatz.emplace("q", RatFunc::constant(Rational(1, 2), "u"));
    report.residual.emplace("C3", T_num);
    report.residual.emplace("C4", upoly_u({0, 0, 0, Rational(-36) * b}));
    report.denominator = UPoly::monomial(Rational(64) * b, 3, "u");
    return {std::move(curve), std::move(report)};
}

CurveResult curve_deg6_monic(const ProblemInstance& inst) {
    require_pure_cubic(inst.field, "the degree-6 corollary");
    MonicizeResult mon = monicize_deg6(inst);

    UPoly g = mon.instance.f.reverse(6);
    TransformChain chain = mon.chain;
    chain.steps.push_back({StepKind::InvertT, Rational(0), FieldElem{}});
    if (!g.coeff(0).is_one() || !g.coeff(1).is_zero())
        throw DomainError("Internal", "inverted normal form is not 1 + c2 t^2 + ...");

    GCoeffs c;
    for (unsigned i = 0; i < 6; ++i) c[i] = g.coeff(i + 1);
    if (c[1].is_zero() && c[3].is_zero() && c[4].is_zero())
        throw ExceptionalForm(
            "f is equivalent to a zeta_3-invariant polynomial (c2 = c4 = c5 = 0 after "
            "normalization); the construction does not apply");

    auto [curve, report] = curve_pure_cubic_deg6(inst.field, c);
    push_chain_front(curve, chain, inst.field);
    curve.method = "deg6";
    return {std::move(curve), std::move(report)};
}

// ---------------------------------------------------------------------------
// approx_coeffs

namespace {

// Largest integer c with c^3 <= q (q >= 0).
mpz_class floor_cbrt(const Rational& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    mpz_class c;
    mpz_root(c.get_mpz_t(), fl.get_mpz_t(), 3);
    return c;
}

// Nearest integer to cbrt(q), half rounded away from zero.
mpz_class nearest_cbrt(const Rational& q) {
    if (q.sign() < 0) return -nearest_cbrt(-q);
    mpz_class c = floor_cbrt(q);
    // round up iff q >= (c + 1/2)^3, i.e. 8q >= (2c+1)^3
    mpz_class twoc1 = 2 * c + 1;
    Rational threshold(twoc1 * twoc1 * twoc1, mpz_class(8));
    return q >= threshold ? c + 1 : c;
}

}  // namespace

UPoly ApproxResult::g() const {
    return UPoly({c6, c5, c4, c3, c2, Rational(0), c0}, "t");
}

ApproxResult approx_coeffs(const ApproxInput& in, const Rational& eps, const CubicField& F) {
    require_pure_cubic(F, "the approximation theorem");
    if (in.a0.is_zero()) throw ZeroCoefficient("leading coefficient a0 must be nonzero");
    if (eps.sign() <= 0) throw DomainError("InvalidArgument", "eps must be positive");

    ApproxResult out;
    Rational w;
    if (in.a0.cube_root(w)) {
        out.c0 = in.a0;
    } else {
        // Decimal refinement: w_k = round(10^k cbrt(a0)) / 10^k, stopping at
        // the first k with |w^3 - a0| < eps (and w != 0). Exact comparisons
        // throughout.
        for (unsigned k = 0;; ++k) {
            Rational scale = pow_int(10, k);
            mpz_class m = nearest_cbrt(in.a0 * scale.pow(3));
            if (m == 0) continue;
            w = Rational(m) / scale;
            Rational err = (w.pow(3) - in.a0).abs();
            if (err < eps) break;
        }
        out.c0 = w.pow(3);
    }
    out.witness = FieldElem{w, Rational(0), Rational(0)};

    if (in.a2.is_zero() && in.a4.is_zero() && in.a5.is_zero()) {
        // zeta_3-invariant shape: break it with the largest power of two
        // strictly below eps.
        Rational c(1);
        while (c * Rational(2) < eps) c *= Rational(2);
        while (c >= eps) c /= Rational(2);
        out.c2 = c;
        out.c4 = c;
        out.c3 = in.a3;
        out.c5 = in.a5;
        out.c6 = in.a6;
    } else {
        out.c2 = in.a2;
        out.c3 = in.a3;
        out.c4 = in.a4;
        out.c5 = in.a5;
        out.c6 = in.a6;
    }
    return out;
}

ProblemInstance approx_instance(const ApproxResult& res, const CubicField& F) {
    KnownPoint pt{res.witness, std::nullopt};
    return make_instance(F, res.g(), pt);
}

// ---------------------------------------------------------------------------

UPoly trinomial_f(unsigned m, const Rational& a2, const Rational& a1, const Rational& a0) {
    if (m == 0) throw DomainError("InvalidArgument", "m must be positive");
    std::vector<Rational> coeffs(3 * m + 1, Rational(0));
    coeffs[0] = a0;
    coeffs[1] += a1;
    coeffs[m] += a2;
    coeffs[3 * m] += Rational(1);
    return UPoly(std::move(coeffs), "t");
}

RationalCurve curve_trinomial(const CubicField& F, unsigned m, const Rational& a2,
                              const Rational& a1, const Rational& a0) {
    require_pure_cubic(F, "the trinomial construction");
    if (m == 0) throw DomainError("InvalidArgument", "m must be positive");
    if (a1.is_zero()) throw ZeroA1("the trinomial construction needs a1 != 0");
    const Rational& b = F.b();

    UPoly phi_num = upoly_u(
        {a2.pow(3), 0, 0, Rational(-27) * b * a0, 0, 0, Rational(-27) * b * b});
    UPoly phi_den = upoly_u({0, 0, 0, Rational(27) * b * a1});
    RatFunc phi(phi_num, phi_den);

    RationalCurve curve;
    curve.x1 = phi.pow(m);
    curve.x2 = RatFunc::variable("u");
    curve.x3 = RatFunc(UPoly::constant(a2, "u"), UPoly::monomial(Rational(3) * b, 1, "u"));
    curve.t = phi;
    curve.method = "trinomial";
    attach_poles(curve);
    return curve;
}

CurveResult curve_general_cubic(const CubicField& F, const Rational& a4, const Rational& a1,
                                const Rational& a0) {
    const Rational& a = F.a();
    const Rational& b = F.b();
    if (a.is_zero())
        throw UsePureCubicMethod(
            "the conic parametrization divides by a; use the pure-cubic constructions");
    if ((a1 * a4).is_zero()) throw ZeroCoefficient("need a1 * a4 != 0");

    Rational d12 = Rational(12) * a.pow(3) + Rational(81) * b * b;  // 3(4a^3+27b^2)
    UPoly delta = upoly_u({d12, 0, Rational(-1)});

    // conic parametrization and the t^4-elimination value p = (a4 + 2aX3)/3
    UPoly x2_num = upoly_u({0, Rational(4) * a * a4});
    UPoly x3_num = upoly_u({a4 * d12, Rational(18) * a4 * b, a4});
    UPoly p_num = upoly_u(
        {a4 * (Rational(36) * a.pow(3) + Rational(243) * b * b), Rational(36) * a4 * b, a4});
    UPoly x1_den = delta.scaled(3);

    UPoly f({a0, a1, Rational(0), Rational(0), a4, Rational(0), Rational(1)}, "t");
    MPoly G = build_G(ProblemInstance{F, f, std::nullopt});

    const std::vector<std::string> tu{"t", "u"};
    MPoly x1_num_m = MPoly::from_upoly(x1_den, tu) * MPoly::monomial(1, {2, 0}, tu) +
                     MPoly::from_upoly(p_num, tu);
    std::map<std::string, PolyFraction> bind;
    bind.emplace("X1", PolyFraction{x1_num_m, x1_den});
    bind.emplace("X2", PolyFraction{MPoly::from_upoly(x2_num, tu), delta});
    bind.emplace("X3", PolyFraction{MPoly::from_upoly(x3_num, tu), delta.scaled(a)});
    PolyFraction res = mpoly_substitute(G, bind, tu);

    for (unsigned k = 2; k <= 6; ++k) {
        if (!res.num.coeff_of("t", k).is_zero())
            throw DomainError("Internal",
                              "general-cubic residual kept t^" + std::to_string(k));
    }
    // res.den = 27 a^3 delta^9; the clearing denominator is 27 a^3 delta^3.
    UPoly delta6 = delta.pow(6);
    UPoly res0 = upoly_exact_div(res.num.coeff_of("t", 0).to_upoly("u"), delta6);
    UPoly res1 = upoly_exact_div(res.num.coeff_of("t", 1).to_upoly("u"), delta6);
    if (res1.is_zero()) throw DegenerateDenominator("linear residual coefficient vanished");

    RatFunc phi(-res0, res1);
    RatFunc p_rf(p_num, x1_den);

    RationalCurve curve;
    curve.x1 = phi.pow(2) + p_rf;
    curve.x2 = RatFunc(x2_num, delta);
    curve.x3 = RatFunc(x3_num, delta.scaled(a));
    curve.t = phi;
    curve.method = "general";
    attach_poles(curve);

    ConicData conic{MPoly({"X2", "X3"}), Rational(0), a4 / a, curve.x2, curve.x3};
    conic.equation.add_term({0, 2}, Rational(4) * a.pow(4));
    conic.equation.add_term({1, 1}, Rational(-36) * a * a * b);
    conic.equation.add_term({2, 0}, Rational(-12) * a.pow(3));
    conic.equation.add_term({0, 0}, Rational(-4) * a * a * a4 * a4);

    ConstructionReport report;
    report.ansatz.emplace("p", p_rf);
    report.residual.emplace("A0", res0);
    report.residual.emplace("A1", res1);
    report.denominator = delta.pow(3).scaled(Rational(27) * a.pow(3));
    report.conic = std::move(conic);
    return {std::move(curve), std::move(report)};
}

MPoly genform_G(const GenForm& form, const std::array<Rational, 5>& f_low) {
    MPoly G({"X1", "X2", "X3", "t"});
    G.add_term({3, 0, 0, 0}, 1);
    G.add_term({0, 3, 0, 0}, form.a);
    G.add_term({0, 0, 3, 0}, form.b);
    G.add_term({1, 1, 1, 0}, form.c);
    G.add_term({0, 2, 1, 0}, form.d);
    G.add_term({0, 1, 2, 0}, form.e);
    G.add_term({0, 0, 0, 6}, Rational(-1));
    for (unsigned i = 0; i < 5; ++i) G.add_term({0, 0, 0, i}, -f_low[i]);
    return G;
}

CurveResult curve_genform(const GenForm& form, const std::array<Rational, 5>& f_low) {
    const Rational &a3 = f_low[3], &a4 = f_low[4], &a2 = f_low[2];
    if ((form.a * form.b * form.c * form.e * a3).is_zero())
        throw ZeroParameter("the remark construction needs a, b, c, e and a3 all nonzero");

    MPoly G = genform_G(form, f_low);
    const std::vector<std::string> tu{"t", "u"};

    MPoly x1_num_m = MPoly::zero(tu);
    x1_num_m.add_term({2, 0}, Rational(3));
    x1_num_m.add_term({0, 0}, a4);
    UPoly x1_den = UPoly::constant(Rational(3), "u");

    UPoly x2_num = upoly_u({a3, 0, 0, -form.b});
    UPoly x2_den = upoly_u({0, form.c});

    UPoly gamma_num = upoly_u({0, form.c * (Rational(3) * a2 - a4 * a4),
                               Rational(-3) * a3 * form.e, 0, 0, Rational(3) * form.b * form.e});
    UPoly gamma_den = upoly_u({Rational(3) * a3 * form.c, 0, 0, Rational(6) * form.b * form.c});
    MPoly x3_num_m = MPoly::from_upoly(gamma_den, tu) * MPoly::monomial(1, {1, 1}, tu) +
                     MPoly::from_upoly(gamma_num, tu);

    std::map<std::string, PolyFraction> bind;
    bind.emplace("X1", PolyFraction{x1_num_m, x1_den});
    bind.emplace("X2", PolyFraction{MPoly::from_upoly(x2_num, tu), x2_den});
    bind.emplace("X3", PolyFraction{x3_num_m, gamma_den});
    PolyFraction res = mpoly_substitute(G, bind, tu);

    unsigned tmax = res.num.is_zero() ? 0 : res.num.max_degree("t");
    for (unsigned k = 2; k <= tmax; ++k) {
        if (!res.num.coeff_of("t", k).is_zero())
            throw ResidualDegreeError(
                "substituted residual has t-degree > 1; the coefficient resolution in the "
                "substitution display does not hold for these parameters");
    }
    // res.den = 27 c^3 * D with D = 27 c^3 u^3 (2bu^3 + a3)^3.
    Rational scale = (Rational(27) * form.c.pow(3)).inverse();
    UPoly res0 = res.num.coeff_of("t", 0).to_upoly("u").scaled(scale);
    UPoly res1 = res.num.coeff_of("t", 1).to_upoly("u").scaled(scale);
    if (res1.is_zero())
        throw DegenerateDenominator("linear residual coefficient vanished identically");

    RatFunc phi(-res0, res1);
    RatFunc gamma(gamma_num, gamma_den);

    RationalCurve curve;
    curve.x1 = phi.pow(2) + RatFunc::constant(a4 / Rational(3), "u");
    curve.x2 = RatFunc(x2_num, x2_den);
    curve.x3 = RatFunc::variable("u") * phi + gamma;
    curve.t = phi;
    curve.method = "genform";
    attach_poles(curve);

    ConstructionReport report;
    report.ansatz.emplace("x1_shift", RatFunc::constant(a4 / Rational(3), "u"));
    report.ansatz.emplace("x2", curve.x2);
    report.ansatz.emplace("x3_shift", gamma);
    report.residual.emplace("C0", res0);
    report.residual.emplace("C1", res1);
    UPoly core = upoly_u({a3, 0, 0, Rational(2) * form.b});
    report.denominator =
        UPoly::monomial(Rational(27) * form.c.pow(3), 3, "u") * core.pow(3);
    return {std::move(curve), std::move(report)};
}

void attach_poles(RationalCurve& curve) {
    std::set<Rational> poles;
    bool complete = true;
    for (const RatFunc* comp : {&curve.x1, &curve.x2, &curve.x3, &curve.t}) {
        if (comp->den().is_constant()) continue;
        RationalRoots rr = upoly_rational_roots(comp->den());
        complete = complete && rr.complete;
        poles.insert(rr.roots.begin(), rr.roots.end());
    }
    curve.poles.assign(poles.begin(), poles.end());
    curve.poles_complete = complete;
}

void push_chain_front(RationalCurve& curve, const TransformChain& chain, const CubicField& F) {
    if (chain.empty()) return;
    Curve4 mapped = chain.apply_backward_curve(curve.components(), F);
    curve.x1 = mapped[0];
    curve.x2 = mapped[1];
    curve.x3 = mapped[2];
    curve.t = mapped[3];
    curve.back.steps.insert(curve.back.steps.begin(), chain.steps.begin(), chain.steps.end());
    attach_poles(curve);
}

}  // namespace normcurve

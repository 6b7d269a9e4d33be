#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normcurve/constructions.hpp"
#include "normcurve/errors.hpp"
#include "normcurve/verify.hpp"
#include "support.hpp"

using namespace normcurve;

namespace {

UPoly U(std::vector<Rational> c) { return UPoly(std::move(c), "u"); }

GCoeffs draw_gcoeffs(std::mt19937_64& eng, long h = 20) {
    GCoeffs c;
    for (auto& ci : c) ci = nctest::draw_rational(eng, h);
    return c;
}

GCoeffs draw_passing_gcoeffs(std::mt19937_64& eng, long h = 20) {
    for (;;) {
        GCoeffs c = draw_gcoeffs(eng, h);
        if (except_condition(c[0], c[1], c[2], c[3], c[4])) return c;
    }
}

// The degenerate family is parameterized by (c1, c3).
GCoeffs forced_gcoeffs(const Rational& c1, const Rational& c3) {
    GCoeffs c;
    c[0] = c1;
    c[1] = Rational(5) * c1 * c1 / Rational(12);
    c[2] = c3;
    c[3] = -(c1 * (Rational(5) * c1.pow(3) - Rational(72) * c3)) / Rational(144);
    c[4] = -(c1 * c1 * (c1.pow(3) - Rational(12) * c3)) / Rational(144);
    c[5] = Rational(0);
    return c;
}

}  // namespace

TEST_CASE("except_condition worked values") {
    CHECK_FALSE(except_condition(0, 0, 0, 0, 0));
    CHECK(except_condition(0, 1, 0, 0, 0));
    // c1=6, c3=0 forces (c2,c4,c5) = (15,-45,-54)
    CHECK_FALSE(except_condition(6, 15, 0, -45, -54));
    CHECK(except_condition(6, 15, 0, -45, -53));
}

TEST_CASE("pure-cubic ansatz worked example: b=2, g = 1 + t^2") {
    CubicField F = CubicField::check(0, 2);
    GCoeffs c{Rational(0), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)};
    Pure6Internals in = pure6_internals(F, c);
    CHECK(in.p == Rational(1, 3));
    CHECK(in.q == Rational(0));
    CHECK(in.r == RatFunc(U({0, 0, Rational(-2, 3)}), UPoly::constant(1, "u")));
    CHECK(in.s == RatFunc(UPoly::constant(Rational(-1, 24), "u"), U({0, 0, 1})));
    CHECK(in.res6.deg_or_neg1() == 18);
    CHECK(in.res6.lead() == pow_int(2, 3) * pow_int(3, 18) * pow_int(2, 12));
}

TEST_CASE("oracle: the displayed residual coefficients and the triangular solve") {
    // Substitute the ansatz with symbolic p,q,r,s and compare the T^1..T^4
    // coefficients with the four displayed polynomials, then check that the
    // construction's values annihilate them and that each is linear in the
    // unknown it determines (so the solution is unique).
    std::mt19937_64 eng(61);
    const std::vector<std::string> sym{"p", "q", "r", "s", "T", "u"};
    for (int trial = 0; trial < 10; ++trial) {
        CubicField F = nctest::draw_pure_field(eng, 10);
        const Rational& b = F.b();
        GCoeffs c = draw_passing_gcoeffs(eng, 10);
        UPoly g({Rational(1), c[0], c[1], c[2], c[3], c[4], c[5]}, "t");
        MPoly G = build_G(make_instance(F, g, std::nullopt));

        auto mono = [&](const Rational& coeff, unsigned p_, unsigned q_, unsigned r_, unsigned s_,
                        unsigned T_, unsigned u_) {
            return MPoly::monomial(coeff, {p_, q_, r_, s_, T_, u_}, sym);
        };
        std::map<std::string, MPoly> bind;
        bind.emplace("X1", mono(1, 1, 0, 0, 0, 2, 0) + mono(1, 0, 1, 0, 0, 1, 0) +
                               mono(1, 0, 0, 0, 0, 0, 0));
        bind.emplace("X2", mono(1, 0, 0, 1, 0, 2, 0));
        bind.emplace("X3", mono(1, 0, 0, 0, 1, 2, 0) + mono(1, 0, 0, 0, 0, 1, 1));
        bind.emplace("t", mono(1, 0, 0, 0, 0, 1, 0));
        MPoly S = mpoly_substitute(G, bind, sym);

        // the four displayed coefficient polynomials
        MPoly C1 = mono(3, 0, 1, 0, 0, 0, 0) + mono(-c[0], 0, 0, 0, 0, 0, 0);
        MPoly C2 = mono(3, 1, 0, 0, 0, 0, 0) + mono(3, 0, 2, 0, 0, 0, 0) +
                   mono(-c[1], 0, 0, 0, 0, 0, 0);
        MPoly C3 = mono(b * b, 0, 0, 0, 0, 0, 3) + mono(Rational(3) * b, 0, 0, 1, 0, 0, 1) +
                   mono(6, 1, 1, 0, 0, 0, 0) + mono(1, 0, 3, 0, 0, 0, 0) +
                   mono(-c[2], 0, 0, 0, 0, 0, 0);
        MPoly C4 = mono(Rational(3) * b * b, 0, 0, 0, 1, 0, 2) +
                   mono(Rational(3) * b, 0, 1, 1, 0, 0, 1) + mono(Rational(3) * b, 0, 0, 1, 1, 0, 0) +
                   mono(3, 2, 0, 0, 0, 0, 0) + mono(3, 1, 2, 0, 0, 0, 0) +
                   mono(-c[3], 0, 0, 0, 0, 0, 0);
        CHECK(S.coeff_of("T", 1) == C1);
        CHECK(S.coeff_of("T", 2) == C2);
        CHECK(S.coeff_of("T", 3) == C3);
        CHECK(S.coeff_of("T", 4) == C4);

        // linearity in the next unknown (q, p, r, s respectively)
        CHECK(C1.max_degree("q") == 1);
        CHECK(C2.max_degree("p") == 1);
        CHECK(C3.max_degree("r") == 1);
        CHECK(C4.max_degree("s") == 1);

        // the construction's values annihilate C1..C4
        Pure6Internals in = pure6_internals(F, c);
        std::map<std::string, PolyFraction> values;
        values.emplace("p", PolyFraction{MPoly::constant(in.p, {"u"}), UPoly::constant(1, "u")});
        values.emplace("q", PolyFraction{MPoly::constant(in.q, {"u"}), UPoly::constant(1, "u")});
        values.emplace("r", PolyFraction{MPoly::from_upoly(in.r.num(), {"u"}), in.r.den()});
        values.emplace("s", PolyFraction{MPoly::from_upoly(in.s.num(), {"u"}), in.s.den()});
        for (const MPoly* Ci : {&C1, &C2, &C3, &C4}) {
            PolyFraction r = mpoly_substitute(*Ci, values, {"T", "u"});
            CHECK(r.num.is_zero());
        }
    }
}

TEST_CASE("pure-cubic residual structure on random draws") {
    std::mt19937_64 eng(62);
    for (int trial = 0; trial < 8; ++trial) {
        CubicField F = nctest::draw_pure_field(eng);
        GCoeffs c = draw_passing_gcoeffs(eng);
        Pure6Internals in = pure6_internals(F, c);
        const Rational& b = F.b();
        CHECK(in.res6.deg_or_neg1() == 18);
        CHECK(in.res6.lead() == pow_int(2, 3) * pow_int(3, 18) * b.pow(12));
        CHECK_FALSE(in.res5.is_zero());
        Rational gap = Rational(5) * c[0] * c[0] - Rational(12) * c[1];
        if (!gap.is_zero()) {
            CHECK(in.res5.deg_or_neg1() == 15);
            CHECK((-in.res5).lead() == Rational(2) * pow_int(3, 19) * b.pow(10) * gap);
        }
    }
}

TEST_CASE("A5 vanishes exactly on the degenerate family") {
    std::mt19937_64 eng(63);
    for (int trial = 0; trial < 8; ++trial) {
        CubicField F = nctest::draw_pure_field(eng);
        GCoeffs c = forced_gcoeffs(nctest::draw_rational(eng), nctest::draw_rational(eng));
        Pure6Internals in = pure6_internals(F, c);
        CHECK(in.res5.is_zero());
        CHECK(in.res6.deg_or_neg1() == 18);
        CHECK_THROWS_AS(curve_pure_cubic_deg6(F, c), ConditionFailed);
    }
}

TEST_CASE("reducible_factorization") {
    auto [quad, cubic] = reducible_factorization(6, 0);
    CHECK(quad == UPoly({12, 36, 36}, "t"));
    CHECK(cubic == UPoly({-12, -36, -36, 216}, "t"));
    UPoly g = (quad * cubic).scaled(Rational(-1, 144));
    CHECK(g == UPoly({1, 6, 15, 0, -45, -54}, "t"));

    // c1 = 0 degenerates the quadratic to the constant 12: g = 1 + c3 t^3
    auto [q0, c0] = reducible_factorization(0, Rational(7, 3));
    CHECK(q0 == UPoly::constant(12, "t"));
    CHECK((q0 * c0).scaled(Rational(-1, 144)) == UPoly({1, 0, 0, Rational(7, 3)}, "t"));

    std::mt19937_64 eng(64);
    for (int i = 0; i < 100; ++i) {
        Rational c1 = nctest::draw_rational(eng);
        Rational c3 = nctest::draw_rational(eng);
        GCoeffs c = forced_gcoeffs(c1, c3);
        auto [qq, cc] = reducible_factorization(c1, c3);
        UPoly expect({Rational(1), c[0], c[1], c[2], c[3], c[4]}, "t");
        CHECK((qq * cc).scaled(Rational(-1, 144)) == expect);
    }
}

TEST_CASE("deg4: generic inputs delegate to the engine") {
    std::mt19937_64 eng(65);
    CubicField F = nctest::draw_pure_field(eng);
    for (int i = 0; i < 3; ++i) {
        Rational c1 = nctest::draw_rational(eng), c2 = nctest::draw_rational(eng),
                 c3 = nctest::draw_rational(eng), c4 = nctest::draw_nonzero_rational(eng);
        if (!except_condition(c1, c2, c3, c4, 0)) continue;
        auto [curve, report] = curve_deg4(F, c1, c2, c3, c4);
        CHECK(curve.method == "deg4");
        CHECK(report.residual.count("A5") == 1);
        UPoly g({1, c1, c2, c3, c4}, "t");
        verify_curve_identity(curve, make_instance(F, g, std::nullopt));
    }
    CHECK_THROWS_AS(curve_deg4(F, 1, 1, 1, 0), ZeroCoefficient);
}

TEST_CASE("deg4 exceptional branch: frozen point at b=2, u=1") {
    CubicField F = CubicField::check(0, 2);
    // forced family with c1 = 6: g = 1 + 6t + 15t^2 + 18t^3 + 9t^4
    auto [curve, report] = curve_deg4(F, 6, 15, 18, 9);
    CHECK(curve.method == "deg4");
    CHECK(report.ansatz.at("q").constant_value() == Rational(1, 2));
    // p = 1/(4bu) = (1/8)/u
    CHECK(report.ansatz.at("p") ==
          RatFunc(UPoly::constant(Rational(1, 8), "u"), UPoly::variable("u")));

    Rational u(1);
    Rational T = Rational(-64 * 4 - 32 * 2 + 1, 36 * 2);
    CHECK(T == Rational(-319, 72));
    CHECK(curve.x1.eval_or_throw(u) == Rational(-247, 72));
    CHECK(curve.x2.eval_or_throw(u) == Rational(-319, 72));
    CHECK(curve.x3.eval_or_throw(u) == Rational(-319, 576));
    CHECK(curve.t.eval_or_throw(u) == Rational(-319, 144));

    UPoly g({1, 6, 15, 18, 9}, "t");
    ProblemInstance inst = make_instance(F, g, std::nullopt);
    verify_curve_identity(curve, inst);
    // the exact point satisfies the norm equation
    FieldElem X{Rational(-247, 72), Rational(-319, 72), Rational(-319, 576)};
    CHECK(norm(X, F) == g.eval(Rational(-319, 144)));
    // and t rescaling was recorded
    REQUIRE(curve.back.steps.size() == 1);
    CHECK(curve.back.steps[0].kind == StepKind::TScaleArg);
    CHECK(curve.back.steps[0].value == Rational(1));
}

TEST_CASE("deg6 corollary worked examples") {
    CubicField F = CubicField::check(0, 2);
    // t^6 + t^4 + 1 inverts to c = (0,1,0,0,0,1)
    ProblemInstance inst = make_instance(F, UPoly({1, 0, 0, 0, 1, 0, 1}, "t"), std::nullopt);
    auto [curve, report] = curve_deg6_monic(inst);
    CHECK(curve.method == "deg6");
    verify_curve_identity(curve, inst);
    CHECK(fiber_check(curve));

    CHECK_THROWS_AS(
        curve_deg6_monic(make_instance(F, UPoly({1, 0, 0, 1, 0, 0, 1}, "t"), std::nullopt)),
        ExceptionalForm);
    CHECK_THROWS_AS(
        curve_deg6_monic(make_instance(F, UPoly({1, 0, 0, 0, 0, 0, 1}, "t"), std::nullopt)),
        ExceptionalForm);
}

TEST_CASE("approx_coeffs worked examples") {
    CubicField F = CubicField::check(0, 2);
    // leading target 2, eps = 1/100: witness (63/50,0,0)
    ApproxResult r = approx_coeffs({Rational(2), 1, 0, 0, 0, 1}, Rational(1, 100), F);
    CHECK(r.witness == FieldElem{Rational(63, 50), Rational(0), Rational(0)});
    CHECK(r.c0 == Rational(250047, 125000));
    CHECK((r.c0 - Rational(2)).abs() == Rational(47, 125000));
    // non-invariant shape keeps the lower coefficients
    CHECK(r.c2 == Rational(1));
    CHECK(r.c3 == Rational(0));

    // f = t^6 + 1 is zeta_3-invariant; eps = 1/10 breaks it with 1/16
    ApproxResult z = approx_coeffs({Rational(1), 0, 0, 0, 0, 1}, Rational(1, 10), F);
    CHECK(z.c0 == Rational(1));  // 1 is a perfect cube
    CHECK(z.c2 == Rational(1, 16));
    CHECK(z.c4 == Rational(1, 16));
    CHECK(z.c5 == Rational(0));

    CHECK_THROWS_AS(approx_coeffs({Rational(0), 1, 1, 1, 1, 1}, Rational(1, 10), F),
                    ZeroCoefficient);
}

TEST_CASE("approx output is accepted by the degree-6 construction for several fields") {
    std::mt19937_64 eng(66);
    for (int trial = 0; trial < 5; ++trial) {
        ApproxInput in{nctest::draw_nonzero_rational(eng, 8), nctest::draw_rational(eng, 8),
                       nctest::draw_rational(eng, 8),         nctest::draw_rational(eng, 8),
                       nctest::draw_rational(eng, 8),         nctest::draw_rational(eng, 8)};
        Rational eps(1, 50);
        for (long bnum : {2, 3, 5, -2}) {
            CubicField F = CubicField::check(0, bnum);
            ApproxResult res = approx_coeffs(in, eps, F);
            CHECK((res.c0 - in.a0).abs() < eps);
            CHECK((res.c2 - in.a2).abs() < eps);
            CHECK((res.c3 - in.a3).abs() < eps);
            CHECK((res.c4 - in.a4).abs() < eps);
            CHECK((res.c5 - in.a5).abs() < eps);
            CHECK((res.c6 - in.a6).abs() < eps);
            CHECK(res.c0 == norm(res.witness, F));
            CHECK_FALSE(res.c0.is_zero());
            ProblemInstance inst = approx_instance(res, F);
            auto [curve, report] = curve_deg6_monic(inst);
            verify_curve_identity(curve, inst);
        }
    }
}

TEST_CASE("trinomial worked example and edge cases") {
    CubicField F = CubicField::check(0, 2);
    RationalCurve curve = curve_trinomial(F, 2, 6, 1, 1);
    CHECK(curve.x1.eval_or_throw(1) == Rational(1));
    CHECK(curve.x2.eval_or_throw(1) == Rational(1));
    CHECK(curve.x3.eval_or_throw(1) == Rational(1));
    CHECK(curve.t.eval_or_throw(1) == Rational(1));
    UPoly f = trinomial_f(2, 6, 1, 1);
    CHECK(f.eval(Rational(1)) == Rational(9));
    verify_curve_identity(curve, make_instance(F, f, std::nullopt));

    // a2 = 0: X3 vanishes and phi reduces to -(b u^3 + a0)/a1
    RationalCurve c0 = curve_trinomial(F, 2, 0, Rational(3), Rational(5));
    CHECK(c0.x3.is_zero());
    CHECK(c0.t == RatFunc(U({Rational(-5, 3), 0, 0, Rational(-2, 3)}),
                          UPoly::constant(1, "u")));
    CHECK(fiber_check(c0));

    CHECK_THROWS_AS(curve_trinomial(F, 2, 1, 0, 1), ZeroA1);
    // m = 1 merges the linear coefficients
    CHECK(trinomial_f(1, 6, 1, 1) == UPoly({1, 7, 0, 1}, "t"));
}

TEST_CASE("general cubic: worked values and structure") {
    CubicField F = CubicField::check(1, 1);
    auto [curve, report] = curve_general_cubic(F, 1, 1, 1);
    // u = 0 recovers the conic base point (0, a4/a)
    CHECK(curve.x2.eval_or_throw(0) == Rational(0));
    CHECK(curve.x3.eval_or_throw(0) == Rational(1));
    UPoly f({1, 1, 0, 0, 1, 0, 1}, "t");
    verify_curve_identity(curve, make_instance(F, f, std::nullopt));
    CHECK(fiber_check(curve));

    // A1 = -27 a^3 a1 (12a^3 + 81b^2 - u^2)^3
    UPoly delta = U({93, 0, -1});
    CHECK(report.residual.at("A1") == delta.pow(3).scaled(Rational(-27)));

    CHECK_THROWS_AS(curve_general_cubic(CubicField::check(0, 2), 1, 1, 1), UsePureCubicMethod);
    CHECK_THROWS_AS(curve_general_cubic(F, 0, 1, 1), ZeroCoefficient);
    CHECK_THROWS_AS(curve_general_cubic(F, 1, 0, 1), ZeroCoefficient);
}

TEST_CASE("general cubic: conic parametrization satisfies the conic") {
    std::mt19937_64 eng(67);
    for (int trial = 0; trial < 5; ++trial) {
        CubicField F = nctest::draw_general_field(eng, 8);
        Rational a4 = nctest::draw_nonzero_rational(eng, 8);
        Rational a1 = nctest::draw_nonzero_rational(eng, 8);
        Rational a0 = nctest::draw_rational(eng, 8);
        auto [curve, report] = curve_general_cubic(F, a4, a1, a0);
        REQUIRE(report.conic.has_value());
        std::map<std::string, PolyFraction> bind;
        bind.emplace("X2", PolyFraction{MPoly::from_upoly(report.conic->param_x2.num(), {"u"}),
                                        report.conic->param_x2.den()});
        bind.emplace("X3", PolyFraction{MPoly::from_upoly(report.conic->param_x3.num(), {"u"}),
                                        report.conic->param_x3.den()});
        PolyFraction res = mpoly_substitute(report.conic->equation, bind, {"u"});
        CHECK(res.num.is_zero());
        // base point lies on the conic
        CHECK(report.conic->equation
                  .eval({{"X2", report.conic->base_x2}, {"X3", report.conic->base_x3}})
                  .is_zero());
    }
}

TEST_CASE("genform: structure and guards") {
    GenForm form{1, 2, 3, 4, 5};
    std::array<Rational, 5> low{1, 1, 1, 1, 1};
    auto [curve, report] = curve_genform(form, low);
    CHECK(report.residual.at("C1").deg_or_neg1() == 17);
    CHECK(report.residual.at("C0").deg_or_neg1() == 18);
    UPoly D_expect = UPoly::monomial(Rational(27) * Rational(27), 3, "u") *
                     U({1, 0, 0, 4}).pow(3);
    CHECK(report.denominator == D_expect);
    verify_curve_identity(curve, genform_G(form, low));
    CHECK(fiber_check(curve));

    CHECK_THROWS_AS(curve_genform(GenForm{0, 2, 3, 4, 5}, low), ZeroParameter);
    std::array<Rational, 5> no_a3{1, 1, 1, 0, 1};
    CHECK_THROWS_AS(curve_genform(form, no_a3), ZeroParameter);
}

TEST_CASE("every construction yields a non-fiber curve") {
    std::mt19937_64 eng(68);
    CubicField F = nctest::draw_pure_field(eng);
    GCoeffs c = draw_passing_gcoeffs(eng);
    auto [curve, report] = curve_pure_cubic_deg6(F, c);
    CHECK(fiber_check(curve));
    CHECK_FALSE(curve.t.derivative().num().is_zero());
}

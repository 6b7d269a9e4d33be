#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normcurve/errors.hpp"
#include "normcurve/ratfunc.hpp"
#include "support.hpp"

using namespace normcurve;

namespace {
UPoly U(std::vector<Rational> c) { return UPoly(std::move(c), "u"); }

RatFunc draw_ratfunc(std::mt19937_64& eng, int nd = 4, int dd = 3) {
    return RatFunc(nctest::draw_poly(eng, nd, "u", 8), nctest::draw_nonzero_poly(eng, dd, "u", 8));
}
}  // namespace

TEST_CASE("reduction and normalization invariants") {
    // common factor and content are removed, denominator is monic
    RatFunc f(U({0, 2, 2}), U({0, 0, 4}));  // (2u^2+2u)/(4u^2) = (u+1)/(2u)
    CHECK(f.num() == U({Rational(1, 2), Rational(1, 2)}));
    CHECK(f.den() == U({0, 1}));
    CHECK_THROWS_AS(RatFunc(U({1}), UPoly::zero("u")), ZeroDivision);
    // zero is 0/1
    RatFunc z(UPoly::zero("u"), U({0, 5}));
    CHECK(z.is_zero());
    CHECK(z.den() == UPoly::constant(1, "u"));
}

TEST_CASE("u * (1/u) = 1 and division errors") {
    RatFunc u = RatFunc::variable("u");
    CHECK(u * u.inverse() == RatFunc::constant(1, "u"));
    CHECK_THROWS_AS(RatFunc("u").inverse(), ZeroDivision);
    CHECK_THROWS_AS(u / RatFunc("u"), ZeroDivision);
}

TEST_CASE("compose g(T) = 1 + T^2 with T = 1/u") {
    UPoly g({1, 0, 1}, "T");
    RatFunc T(UPoly::constant(1, "u"), UPoly::variable("u"));
    RatFunc r = compose(g, T);
    CHECK(r.num() == U({1, 0, 1}));
    CHECK(r.den() == U({0, 0, 1}));
}

TEST_CASE("evaluation matches num/den pointwise") {
    std::mt19937_64 eng(31);
    for (int i = 0; i < 50; ++i) {
        UPoly p = nctest::draw_poly(eng, 5, "u", 9);
        UPoly q = nctest::draw_nonzero_poly(eng, 4, "u", 9);
        RatFunc f(p, q);
        int checked = 0;
        while (checked < 20) {
            Rational x = nctest::draw_rational(eng, 60);
            if (q.eval(x).is_zero()) continue;
            auto v = f.eval(x);
            REQUIRE(v.has_value());
            CHECK(*v == p.eval(x) / q.eval(x));
            ++checked;
        }
    }
}

TEST_CASE("field axioms and reduced invariant on random functions") {
    std::mt19937_64 eng(32);
    for (int i = 0; i < 60; ++i) {
        RatFunc a = draw_ratfunc(eng);
        RatFunc b = draw_ratfunc(eng);
        RatFunc c = draw_ratfunc(eng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RatFunc("u"));
        if (!a.is_zero()) CHECK(a / a == RatFunc::constant(1, "u"));
        for (const RatFunc* f : {&a, &b}) {
            if (f->is_zero()) continue;
            CHECK(f->den().lead().is_one());
            CHECK(upoly_gcd(f->num(), f->den()).is_constant());
        }
        CHECK((a * b + c).den().lead().is_one());
    }
}

TEST_CASE("powers stay reduced without recomputation") {
    std::mt19937_64 eng(33);
    for (int i = 0; i < 30; ++i) {
        RatFunc a = draw_ratfunc(eng);
        if (a.is_zero()) continue;
        RatFunc p3 = a.pow(3);
        CHECK(p3 == a * a * a);
        CHECK(upoly_gcd(p3.num(), p3.den()).is_constant());
    }
}

TEST_CASE("derivative quotient rule") {
    // d/du (u^2+1)/u = (u^2-1)/u^2
    RatFunc f(U({1, 0, 1}), U({0, 1}));
    CHECK(f.derivative() == RatFunc(U({-1, 0, 1}), U({0, 0, 1})));
    CHECK(RatFunc::constant(5, "u").derivative().is_zero());
}

TEST_CASE("composition agrees with evaluation") {
    std::mt19937_64 eng(34);
    for (int i = 0; i < 40; ++i) {
        UPoly p = nctest::draw_poly(eng, 5, "T", 9);
        RatFunc f = draw_ratfunc(eng);
        RatFunc comp = compose(p, f);
        for (int k = 0; k < 5; ++k) {
            Rational x = nctest::draw_rational(eng, 30);
            auto fv = f.eval(x);
            auto cv = comp.eval(x);
            if (!fv || !cv) continue;
            CHECK(*cv == p.eval(*fv));
        }
    }
}

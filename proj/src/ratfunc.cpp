#include "normcurve/ratfunc.hpp"

#include "normcurve/errors.hpp"

namespace normcurve {

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDivision("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UPoly::constant(1, den_.var());
        return;
    }
    UPoly g = upoly_gcd(num_, den_);
    if (g.deg_or_neg1() > 0) {
        num_ = upoly_exact_div(num_, g);
        den_ = upoly_exact_div(den_, g);
    }
    normalize_monic();
}

void RatFunc::normalize_monic() {
    const Rational& l = den_.lead();
    if (!l.is_one()) {
        Rational inv = l.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw DomainError("NotConstant", "rational function is not constant");
    return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, NoReduce{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    // Henrici's scheme: only small cross-gcds are ever computed.
    UPoly g0 = upoly_gcd(a.den_, b.den_);
    if (g0.is_constant()) {
        RatFunc r(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::NoReduce{});
        if (r.num_.is_zero()) return RatFunc(a.var());
        r.normalize_monic();
        return r;
    }
    UPoly da = upoly_exact_div(a.den_, g0);
    UPoly db = upoly_exact_div(b.den_, g0);
    UPoly t = a.num_ * db + b.num_ * da;
    if (t.is_zero()) return RatFunc(a.var());
    UPoly g1 = upoly_gcd(t, g0);
    if (!g1.is_constant()) {
        t = upoly_exact_div(t, g1);
        g0 = upoly_exact_div(g0, g1);
    }
    RatFunc r(std::move(t), da * g0 * db, RatFunc::NoReduce{});
    r.normalize_monic();
    return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.var());
    UPoly g1 = upoly_gcd(a.num_, b.den_);
    UPoly g2 = upoly_gcd(b.num_, a.den_);
    UPoly n = upoly_exact_div(a.num_, g1) * upoly_exact_div(b.num_, g2);
    UPoly d = upoly_exact_div(a.den_, g2) * upoly_exact_div(b.den_, g1);
    RatFunc r(std::move(n), std::move(d), RatFunc::NoReduce{});
    r.normalize_monic();
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroDivision("division by the zero rational function");
    return a * b.inverse();
}

RatFunc RatFunc::scaled(const Rational& c) const {
    if (c.is_zero()) return RatFunc(var());
    return RatFunc(num_.scaled(c), den_, NoReduce{});
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ZeroDivision("inverse of the zero rational function");
    RatFunc r(den_, num_, NoReduce{});
    r.normalize_monic();
    return r;
}

RatFunc RatFunc::pow(unsigned e) const {
    if (e == 0) return RatFunc::constant(1, var());
    // num and den are coprime, so their powers are as well.
    RatFunc r(num_.pow(e), den_.pow(e), NoReduce{});
    r.normalize_monic();
    return r;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::optional<Rational> RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(x) / d;
}

Rational RatFunc::eval_or_throw(const Rational& x) const {
    auto v = eval(x);
    if (!v) throw ZeroDivision("evaluation at a pole (" + x.str() + ")");
    return *v;
}

std::string RatFunc::str() const {
    auto poly_str = [](const UPoly& p) {
        if (p.is_zero()) return std::string("0");
        std::string s = "[";
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            if (i) s += ",";
            s += p.coeffs()[i].str();
        }
        return s + "]";
    };
    return poly_str(num_) + "/" + poly_str(den_);
}

RatFunc compose(const UPoly& p, const RatFunc& f) {
    const std::string& var = f.var();
    if (p.is_zero()) return RatFunc(var);
    const int d = p.deg_or_neg1();
    // sum p_i num^i den^(d-i); coprime to den^d by coprimality of num and den.
    std::vector<UPoly> den_pow;
    den_pow.reserve(static_cast<std::size_t>(d) + 1);
    den_pow.push_back(UPoly::constant(1, var));
    for (int i = 1; i <= d; ++i) den_pow.push_back(den_pow.back() * f.den());
    UPoly acc = UPoly::zero(var);
    UPoly num_pow = UPoly::constant(1, var);
    for (int i = 0; i <= d; ++i) {
        const Rational& c = p.coeff(static_cast<unsigned>(i));
        if (!c.is_zero()) acc += (num_pow * den_pow[static_cast<std::size_t>(d - i)]).scaled(c);
        if (i < d) num_pow *= f.num();
    }
    if (acc.is_zero()) return RatFunc(var);
    RatFunc r(acc, den_pow.back());
    return r;
}

}  // namespace normcurve

#include "normcurve/norm_form.hpp"

#include <algorithm>

#include "normcurve/errors.hpp"

namespace normcurve {

ProblemInstance make_instance(const CubicField& F, const UPoly& f,
                              const std::optional<KnownPoint>& point) {
    if (f.is_zero()) throw DomainError("ZeroPolynomial", "f must be nonzero");
    if (point) {
        Rational n = norm(point->elem, F);
        if (point->at_infinity()) {
            if (f.deg_or_neg1() != 6)
                throw InvalidPoint("a point at infinity requires deg f = 6");
            if (n != f.lead())
                throw InvalidPoint("Norm(point) != leading coefficient of f");
        } else {
            Rational v = f.eval(*point->t0);
            if (v.is_zero())
                throw TrivialPoint("f(t0) = 0: the known point is trivial");
            if (n != v) throw InvalidPoint("Norm(point) != f(t0)");
        }
    }
    return ProblemInstance{F, f, point};
}

MPoly norm_form_mpoly(const CubicField& F, const std::vector<std::string>& vars) {
    const Rational& a = F.a();
    const Rational& b = F.b();
    MPoly base({"X1", "X2", "X3"});
    auto add = [&](const Rational& c, unsigned e1, unsigned e2, unsigned e3) {
        base.add_term({e1, e2, e3}, c);
    };
    add(1, 3, 0, 0);
    add(-b, 0, 3, 0);
    add(b * b, 0, 0, 3);
    add(Rational(3) * b, 1, 1, 1);
    add(a, 1, 2, 0);
    add(Rational(-2) * a, 2, 0, 1);
    add(a * a, 1, 0, 2);
    add(-(a * b), 0, 1, 2);
    return base.lifted(vars);
}

MPoly build_G(const ProblemInstance& inst) {
    std::vector<std::string> vars{"X1", "X2", "X3", "t"};
    MPoly G = norm_form_mpoly(inst.field, vars);
    const auto& fc = inst.f.coeffs();
    for (std::size_t i = 0; i < fc.size(); ++i)
        G.add_term({0, 0, 0, static_cast<unsigned>(i)}, -fc[i]);
    return G;
}

// ---------------------------------------------------------------------------

namespace {

FieldElem mul_point(const FieldElem& e, const Rational& x, const Rational& y, const Rational& z,
                    const CubicField& F) {
    return field_mul(e, FieldElem{x, y, z}, F);
}

// e * (X1, X2, X3) where the coordinates are rational functions; the same
// bilinear reduction as field_mul with e's coordinates as scalars.
std::array<RatFunc, 3> mul_triple(const FieldElem& e, const std::array<RatFunc, 3>& v,
                                  const CubicField& F) {
    const Rational& a = F.a();
    const Rational& b = F.b();
    const RatFunc& X = v[0];
    const RatFunc& Y = v[1];
    const RatFunc& Z = v[2];
    RatFunc c3 = Y.scaled(e.z) + Z.scaled(e.y);
    RatFunc c4 = Z.scaled(e.z);
    return {X.scaled(e.x) - c3.scaled(b),
            Y.scaled(e.x) + X.scaled(e.y) - c3.scaled(a) - c4.scaled(b),
            Z.scaled(e.x) + Y.scaled(e.y) + X.scaled(e.z) - c4.scaled(a)};
}

}  // namespace

UPoly TransformChain::apply_forward_poly(const UPoly& f, const CubicField& F) const {
    UPoly g = f;
    for (const auto& s : steps) {
        switch (s.kind) {
            case StepKind::TShift:
                g = g.shift_arg(s.value);
                break;
            case StepKind::TScaleArg:
                g = g.scale_arg(s.value);
                break;
            case StepKind::ScaleNorm:
                g = g.scaled(norm(s.e, F));
                break;
            case StepKind::InvertT:
                g = g.reverse(6);
                break;
        }
    }
    return g;
}

Point4 TransformChain::apply_forward_point(const Point4& p, const CubicField& F) const {
    Point4 q = p;
    for (const auto& s : steps) {
        switch (s.kind) {
            case StepKind::TShift:
                q[3] -= s.value;
                break;
            case StepKind::TScaleArg:
                q[3] /= s.value;
                break;
            case StepKind::ScaleNorm: {
                FieldElem r = mul_point(s.e, q[0], q[1], q[2], F);
                q[0] = r.x;
                q[1] = r.y;
                q[2] = r.z;
                break;
            }
            case StepKind::InvertT: {
                if (q[3].is_zero())
                    throw ZeroDivision("inversion undefined at t = 0");
                Rational t2 = q[3] * q[3];
                q[0] /= t2;
                q[1] /= t2;
                q[2] /= t2;
                q[3] = q[3].inverse();
                break;
            }
        }
    }
    return q;
}

Point4 TransformChain::apply_backward_point(const Point4& p, const CubicField& F) const {
    Point4 q = p;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        switch (it->kind) {
            case StepKind::TShift:
                q[3] += it->value;
                break;
            case StepKind::TScaleArg:
                q[3] *= it->value;
                break;
            case StepKind::ScaleNorm: {
                FieldElem inv = field_inv(it->e, F);
                FieldElem r = mul_point(inv, q[0], q[1], q[2], F);
                q[0] = r.x;
                q[1] = r.y;
                q[2] = r.z;
                break;
            }
            case StepKind::InvertT: {
                if (q[3].is_zero())
                    throw ZeroDivision("inversion undefined at t = 0");
                Rational t2 = q[3] * q[3];
                q[0] /= t2;
                q[1] /= t2;
                q[2] /= t2;
                q[3] = q[3].inverse();
                break;
            }
        }
    }
    return q;
}

Curve4 TransformChain::apply_backward_curve(const Curve4& c, const CubicField& F) const {
    Curve4 q = c;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        switch (it->kind) {
            case StepKind::TShift:
                q[3] += RatFunc::constant(it->value, q[3].var());
                break;
            case StepKind::TScaleArg:
                q[3] = q[3].scaled(it->value);
                break;
            case StepKind::ScaleNorm: {
                FieldElem inv = field_inv(it->e, F);
                auto r = mul_triple(inv, {q[0], q[1], q[2]}, F);
                q[0] = r[0];
                q[1] = r[1];
                q[2] = r[2];
                break;
            }
            case StepKind::InvertT: {
                if (q[3].is_zero())
                    throw ZeroDivision("curve lies in the fiber t = 0; cannot invert");
                RatFunc t2inv = q[3].pow(2).inverse();
                q[0] *= t2inv;
                q[1] *= t2inv;
                q[2] *= t2inv;
                q[3] = q[3].inverse();
                break;
            }
        }
    }
    return q;
}

Rational step_equation_factor(const TransformStep& s, const Point4& p, const CubicField& F) {
    switch (s.kind) {
        case StepKind::TShift:
        case StepKind::TScaleArg:
            return Rational(1);
        case StepKind::ScaleNorm:
            return norm(s.e, F).inverse();
        case StepKind::InvertT:
            return p[3].pow(6).inverse();
    }
    return Rational(1);
}

// ---------------------------------------------------------------------------

UPoly NormalizedTarget::g() const {
    std::vector<Rational> coeffs;
    coeffs.emplace_back(1);
    for (const auto& ci : c) coeffs.push_back(ci);
    return UPoly(std::move(coeffs), "t");
}

NormalizedTarget normalize(const ProblemInstance& inst) {
    if (!inst.point) throw DomainError("MissingPoint", "normalization needs a known point");
    if (inst.point->at_infinity())
        throw DomainError("UnsupportedPoint",
                          "normalize needs a finite point; use the degree-6 path for a point at "
                          "infinity");
    if (inst.f.deg_or_neg1() > 6)
        throw DomainError("DegreeTooHigh", "normalization target holds degrees up to 6");

    const Rational t0 = *inst.point->t0;
    const Rational c0 = inst.f.eval(t0);
    if (c0.is_zero()) throw TrivialPoint("f(t0) = 0");

    NormalizedTarget out;
    UPoly g = inst.f;
    if (!t0.is_zero()) {
        out.chain.steps.push_back({StepKind::TShift, t0, FieldElem{}});
        g = g.shift_arg(t0);
    }
    if (inst.point->elem != FieldElem::one()) {
        FieldElem e = field_inv(inst.point->elem, inst.field);
        out.chain.steps.push_back({StepKind::ScaleNorm, Rational(0), e});
        g = g.scaled(norm(e, inst.field));
    }
    if (!g.coeff(0).is_one())
        throw DomainError("Internal", "normalization did not reach g(0) = 1");
    for (unsigned i = 0; i < 6; ++i) out.c[i] = g.coeff(i + 1);
    return out;
}

MonicizeResult monicize_deg6(const ProblemInstance& inst) {
    if (inst.f.deg_or_neg1() != 6)
        throw DomainError("DegreeMismatch", "monicize expects deg f = 6");

    if (inst.f.lead().is_one()) {
        // Already monic: at most the degree-5 coefficient remains to kill.
        TransformChain chain;
        UPoly h = inst.f;
        const Rational c5 = h.coeff(5);
        if (!c5.is_zero()) {
            Rational tau = -c5 / Rational(6);
            chain.steps.push_back({StepKind::TShift, tau, FieldElem{}});
            h = h.shift_arg(tau);
        }
        std::optional<KnownPoint> pt = inst.point;
        if (pt && !pt->at_infinity() && !chain.empty()) {
            Point4 moved = chain.apply_forward_point(
                {pt->elem.x, pt->elem.y, pt->elem.z, *pt->t0}, inst.field);
            pt = KnownPoint{FieldElem{moved[0], moved[1], moved[2]}, moved[3]};
        }
        if (!pt) pt = KnownPoint{FieldElem::one(), std::nullopt};  // (1,0,0) at infinity
        return {make_instance(inst.field, h, pt), chain};
    }

    if (!inst.point) throw DomainError("MissingPoint", "monicize needs a known point");

    TransformChain chain;
    UPoly h = inst.f;
    FieldElem pt = inst.point->elem;

    if (!inst.point->at_infinity()) {
        const Rational t0 = *inst.point->t0;
        if (inst.f.eval(t0).is_zero()) throw TrivialPoint("f(t0) = 0");
        if (!t0.is_zero()) {
            chain.steps.push_back({StepKind::TShift, t0, FieldElem{}});
            h = h.shift_arg(t0);
        }
        chain.steps.push_back({StepKind::InvertT, Rational(0), FieldElem{}});
        h = h.reverse(6);  // leading coefficient is now h_old(0) = Norm(pt)
    }
    if (pt != FieldElem::one()) {
        FieldElem e = field_inv(pt, inst.field);
        chain.steps.push_back({StepKind::ScaleNorm, Rational(0), e});
        h = h.scaled(norm(e, inst.field));
    }
    if (!h.lead().is_one()) throw DomainError("Internal", "monicize did not reach a monic form");
    const Rational c5 = h.coeff(5);
    if (!c5.is_zero()) {
        Rational tau = -c5 / Rational(6);
        chain.steps.push_back({StepKind::TShift, tau, FieldElem{}});
        h = h.shift_arg(tau);
    }
    KnownPoint new_pt{FieldElem::one(), std::nullopt};
    return {make_instance(inst.field, h, new_pt), chain};
}

}  // namespace normcurve

#include "normcurve/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "normcurve/errors.hpp"

namespace normcurve {

namespace {
void check_universe(const MPoly& a, const MPoly& b) {
    if (a.vars() != b.vars())
        throw VariableMismatch("multivariate operands have different variable lists");
}
}  // namespace

MPoly MPoly::constant(const Rational& c, std::vector<std::string> vars) {
    MPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MPoly MPoly::monomial(const Rational& c, Exponents exps, std::vector<std::string> vars) {
    MPoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
        throw VariableMismatch("exponent vector length does not match variable list");
    p.add_term(exps, c);
    return p;
}

MPoly MPoly::from_upoly(const UPoly& p, const std::vector<std::string>& vars) {
    MPoly r(vars);
    std::size_t idx = r.var_index(p.is_constant() && std::find(vars.begin(), vars.end(), p.var()) ==
                                          vars.end()
                                      ? vars.front()
                                      : p.var());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i].is_zero()) continue;
        Exponents e(vars.size(), 0);
        e[idx] = static_cast<unsigned>(i);
        r.add_term(e, p.coeffs()[i]);
    }
    return r;
}

void MPoly::add_term(const Exponents& exps, const Rational& c) {
    if (c.is_zero()) return;
    if (exps.size() != vars_.size())
        throw VariableMismatch("exponent vector length does not match variable list");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    check_universe(a, b);
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    check_universe(a, b);
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    check_universe(a, b);
    MPoly r(a.vars_);
    MPoly::Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::scaled(const Rational& c) const {
    MPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result = MPoly::constant(1, vars_);
    MPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

std::size_t MPoly::var_index(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) throw VariableMismatch("unknown variable '" + v + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

unsigned MPoly::max_degree(const std::string& v) const {
    std::size_t i = var_index(v);
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

Rational MPoly::eval(const std::map<std::string, Rational>& values) const {
    for (const auto& v : vars_)
        if (!values.count(v)) throw VariableMismatch("evaluation misses variable '" + v + "'");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (e[i]) term *= values.at(vars_[i]).pow(e[i]);
        acc += term;
    }
    return acc;
}

MPoly MPoly::lifted(const std::vector<std::string>& new_vars) const {
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it == new_vars.end())
            throw VariableMismatch("lift target misses variable '" + vars_[i] + "'");
        pos[i] = static_cast<std::size_t>(it - new_vars.begin());
    }
    MPoly r(new_vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_vars.size(), 0);
        for (std::size_t i = 0; i < vars_.size(); ++i) ne[pos[i]] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

UPoly MPoly::to_upoly(const std::string& var) const {
    std::size_t idx = var_index(var);
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (i != idx && e[i] != 0)
                throw VariableMismatch("polynomial is not univariate in '" + var + "'");
        if (e[idx] >= coeffs.size()) coeffs.resize(e[idx] + 1, Rational(0));
        coeffs[e[idx]] = c;
    }
    return UPoly(std::move(coeffs), var);
}

MPoly MPoly::coeff_of(const std::string& var, unsigned k) const {
    std::size_t idx = var_index(var);
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] != k) continue;
        Exponents ne = e;
        ne[idx] = 0;
        r.add_term(ne, c);
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

PolyFraction mpoly_substitute(const MPoly& p, const std::map<std::string, PolyFraction>& bindings,
                              const std::vector<std::string>& result_vars) {
    // All denominators must agree on one variable (or be constants).
    std::string den_var;
    for (const auto& [v, pf] : bindings) {
        p.var_index(v);  // throws on unknown variable
        if (!pf.den.is_constant()) {
            if (den_var.empty())
                den_var = pf.den.var();
            else if (den_var != pf.den.var())
                throw VariableMismatch("substituted denominators use different variables");
        }
        if (pf.den.is_zero()) throw ZeroDivision("binding with zero denominator");
    }
    if (den_var.empty()) den_var = "u";

    struct Prepared {
        std::vector<MPoly> num_pow;
        std::vector<MPoly> den_pow_m;  // lifted to result_vars
        unsigned max_deg;
    };
    std::map<std::size_t, Prepared> prep;
    UPoly den_total = UPoly::constant(1, den_var);
    for (const auto& [v, pf] : bindings) {
        unsigned d = p.max_degree(v);
        Prepared pr;
        pr.max_deg = d;
        pr.num_pow.reserve(d + 1);
        pr.den_pow_m.reserve(d + 1);
        MPoly nl = pf.num.lifted(result_vars);
        UPoly dpow = UPoly::constant(1, den_var);
        for (unsigned k = 0; k <= d; ++k) {
            pr.num_pow.push_back(k == 0 ? MPoly::constant(1, result_vars)
                                        : pr.num_pow.back() * nl);
            if (k > 0) dpow *= pf.den;
            pr.den_pow_m.push_back(MPoly::from_upoly(dpow, result_vars));
        }
        den_total *= dpow;
        prep.emplace(p.var_index(v), std::move(pr));
    }

    // Result position of every variable of p that remains unbound.
    std::vector<long> remap(p.vars().size(), -1);
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        if (prep.count(i)) continue;
        auto it = std::find(result_vars.begin(), result_vars.end(), p.vars()[i]);
        if (it == result_vars.end())
            throw VariableMismatch("result variables miss '" + p.vars()[i] + "'");
        remap[i] = it - result_vars.begin();
    }

    MPoly acc = MPoly::zero(result_vars);
    for (const auto& [e, c] : p.terms()) {
        MPoly term = MPoly::constant(c, result_vars);
        MPoly::Exponents mono(result_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto it = prep.find(i);
            if (it == prep.end()) {
                if (e[i]) mono[static_cast<std::size_t>(remap[i])] += e[i];
                continue;
            }
            const Prepared& pr = it->second;
            if (e[i]) term *= pr.num_pow[e[i]];
            // complementary denominator power keeps the common denominator exact
            if (pr.max_deg > e[i]) term *= pr.den_pow_m[pr.max_deg - e[i]];
        }
        term *= MPoly::monomial(1, mono, result_vars);
        acc += term;
    }
    return {acc, den_total};
}

MPoly mpoly_substitute(const MPoly& p, const std::map<std::string, MPoly>& bindings,
                       const std::vector<std::string>& result_vars) {
    std::map<std::string, PolyFraction> b;
    for (const auto& [v, m] : bindings) b.emplace(v, PolyFraction{m, UPoly::constant(1, "u")});
    return mpoly_substitute(p, b, result_vars).num;
}

}  // namespace normcurve

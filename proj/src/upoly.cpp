#include "normcurve/upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "normcurve/errors.hpp"

namespace normcurve {

UPoly UPoly::constant(const Rational& c, std::string var) {
    UPoly p(std::move(var));
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

UPoly UPoly::monomial(const Rational& c, unsigned exp, std::string var) {
    UPoly p(std::move(var));
    if (!c.is_zero()) {
        p.coeffs_.assign(exp + 1, Rational(0));
        p.coeffs_[exp] = c;
    }
    return p;
}

const Rational& UPoly::lead() const {
    if (coeffs_.empty()) throw DomainError("ZeroPolynomial", "leading coefficient of zero polynomial");
    return coeffs_.back();
}

void UPoly::check_vars(const UPoly& a, const UPoly& b) {
    if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_)
        throw VariableMismatch("polynomial variables differ: '" + a.var_ + "' vs '" + b.var_ + "'");
}

const std::string& UPoly::merged_var(const UPoly& a, const UPoly& b) {
    check_vars(a, b);
    return a.is_constant() && !b.is_constant() ? b.var_ : a.var_;
}

UPoly UPoly::operator-() const {
    UPoly r(var_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r(UPoly::merged_var(a, b));
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    r.trim();
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r(UPoly::merged_var(a, b));
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

bool operator==(const UPoly& a, const UPoly& b) {
    if (a.coeffs_ != b.coeffs_) return false;
    if (a.is_constant() || b.is_constant()) return true;
    return a.var_ == b.var_;
}

UPoly UPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return UPoly::zero(var_);
    UPoly r(var_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& x : coeffs_) r.coeffs_.push_back(x * c);
    return r;
}

UPoly UPoly::pow(unsigned e) const {
    UPoly result = UPoly::constant(1, var_);
    UPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    UPoly r(var_);
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    r.trim();
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) throw DomainError("ZeroPolynomial", "monic of zero polynomial");
    return scaled(lead().inverse());
}

UPoly UPoly::shift_arg(const Rational& c) const {
    // Horner: p(t+c) built from the leading coefficient down.
    UPoly shifted_var = UPoly({c, Rational(1)}, var_);
    UPoly acc = UPoly::zero(var_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * shifted_var + UPoly::constant(*it, var_);
    return acc;
}

UPoly UPoly::scale_arg(const Rational& c) const {
    UPoly r(var_);
    r.coeffs_.reserve(coeffs_.size());
    Rational p(1);
    for (const auto& x : coeffs_) {
        r.coeffs_.push_back(x * p);
        p *= c;
    }
    r.trim();
    return r;
}

UPoly UPoly::reverse(unsigned n) const {
    if (static_cast<int>(n) < deg_or_neg1())
        throw DomainError("BadReversal", "reversal order below degree");
    UPoly r(var_);
    r.coeffs_.assign(n + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[n - i] = coeffs_[i];
    r.trim();
    return r;
}

Rational UPoly::content() const {
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    return Rational(num_gcd, den_lcm);
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw ZeroDivision("polynomial division by zero");
    UPoly q = UPoly::zero(a.var());
    UPoly r = a;
    const int db = b.deg_or_neg1();
    const Rational lb_inv = b.lead().inverse();
    while (!r.is_zero() && r.deg_or_neg1() >= db) {
        const int k = r.deg_or_neg1() - db;
        const Rational c = r.lead() * lb_inv;
        UPoly m = UPoly::monomial(c, static_cast<unsigned>(k), a.var());
        q += m;
        r -= m * b;
    }
    return {q, r};
}

UPoly upoly_exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = upoly_divmod(a, b);
    if (!r.is_zero()) throw DomainError("InexactDivision", "polynomial division was not exact");
    return q;
}

// ---------------------------------------------------------------------------
// gcd machinery: content clearing, modular coprimality screen, subresultant
// pseudo-remainder sequence.

namespace {

std::vector<mpz_class> to_primitive_int(const UPoly& p) {
    mpz_class den_lcm(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> v;
    v.reserve(p.coeffs().size());
    mpz_class g(0);
    for (const auto& c : p.coeffs()) {
        mpz_class x = c.num() * (den_lcm / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        v.push_back(std::move(x));
    }
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

void int_trim(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(std::vector<mpz_class>& v) {
    mpz_class g(0);
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (!v.empty() && v.back() < 0)
        for (auto& x : v) x = -x;
}

constexpr std::uint64_t kScreenPrimes[] = {2305843009213693951ULL /* 2^61-1 */,
                                           2147483647ULL /* 2^31-1 */};

std::uint64_t mod_reduce(const mpz_class& x, std::uint64_t p) {
    return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1u) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1u;
    }
    return r;
}

// Degree of gcd(A, B) mod p, or -2 when p is unusable (divides a leading
// coefficient). Since deg gcd over Q <= deg gcd mod p for good primes,
// a result of 0 certifies coprimality over Q.
int gcd_degree_mod_p(const std::vector<mpz_class>& A, const std::vector<mpz_class>& B,
                     std::uint64_t p) {
    if (mod_reduce(A.back(), p) == 0 || mod_reduce(B.back(), p) == 0) return -2;
    auto reduce = [&](const std::vector<mpz_class>& v) {
        std::vector<std::uint64_t> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = mod_reduce(v[i], p);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    };
    std::vector<std::uint64_t> a = reduce(A), b = reduce(B);
    while (!b.empty()) {
        // r = a mod b over F_p
        std::uint64_t inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            std::uint64_t c = mulmod(a.back(), inv, p);
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t t = mulmod(c, b[i], p);
                std::uint64_t& ai = a[off + i];
                ai = (ai >= t) ? ai - t : ai + p - t;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B, all over Z.
std::vector<mpz_class> prem(std::vector<mpz_class> A, const std::vector<mpz_class>& B) {
    const mpz_class& lb = B.back();
    long e = static_cast<long>(A.size()) - static_cast<long>(B.size()) + 1;
    while (!A.empty() && A.size() >= B.size()) {
        mpz_class la = A.back();
        std::size_t off = A.size() - B.size();
        for (auto& x : A) x *= lb;
        for (std::size_t i = 0; i < B.size(); ++i) A[off + i] -= la * B[i];
        int_trim(A);
        --e;
    }
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& x : A) x *= f;
    }
    return A;
}

std::vector<mpz_class> subresultant_gcd(std::vector<mpz_class> A, std::vector<mpz_class> B) {
    if (A.size() < B.size()) std::swap(A, B);
    mpz_class g(1), h(1);
    for (;;) {
        if (B.size() == 1) return {mpz_class(1)};  // constant remainder, coprime
        long delta = static_cast<long>(A.size()) - static_cast<long>(B.size());
        std::vector<mpz_class> R = prem(A, B);
        if (R.empty()) {
            make_primitive(B);
            return B;
        }
        if (R.size() == 1) return {mpz_class(1)};
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        mpz_class divisor = g * hd;
        A = std::move(B);
        B = std::move(R);
        for (auto& x : B) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
        g = A.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            mpz_class gd;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_class hd1;
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
        }
    }
}

}  // namespace

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw DomainError("ZeroPolynomial", "gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const std::string& var = a.is_constant() ? b.var() : a.var();
    if (a.is_constant() || b.is_constant()) return UPoly::constant(1, var);
    if (!a.is_constant() && !b.is_constant() && a.var() != b.var())
        throw VariableMismatch("gcd of polynomials in different variables");

    std::vector<mpz_class> A = to_primitive_int(a), B = to_primitive_int(b);
    for (std::uint64_t p : kScreenPrimes) {
        int d = gcd_degree_mod_p(A, B, p);
        if (d == 0) return UPoly::constant(1, var);
        if (d > 0) break;  // a common factor is plausible; compute it exactly
    }
    std::vector<mpz_class> G = subresultant_gcd(std::move(A), std::move(B));
    std::vector<Rational> coeffs;
    coeffs.reserve(G.size());
    for (auto& x : G) coeffs.emplace_back(x);
    return UPoly(std::move(coeffs), var).monic();
}

UPoly upoly_lcm(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero())
        throw DomainError("ZeroPolynomial", "lcm with zero polynomial");
    UPoly g = upoly_gcd(a, b);
    return upoly_exact_div(a * b, g).monic();
}

// ---------------------------------------------------------------------------
// Rational roots via the rational-root test. Lead/constant are factored by
// trial division with a budget; enumeration is screened mod 2^64 before the
// exact check.

namespace {

struct Factorization {
    std::vector<std::pair<mpz_class, unsigned>> primes;
    bool complete = true;
};

Factorization factor_with_budget(mpz_class n) {
    Factorization f;
    if (n < 0) n = -n;
    if (n <= 1) return f;
    constexpr unsigned long kTrialLimit = 1000000;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    for (unsigned long d = 2; d <= kTrialLimit && root >= d; d = (d == 2 ? 3 : d + 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
                ++e;
            }
            f.primes.emplace_back(mpz_class(d), e);
            mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        }
    }
    if (n > 1) {
        // No factor <= 10^6 remains, so a cofactor <= 10^12 is prime.
        mpz_class certain_limit;
        mpz_ui_pow_ui(certain_limit.get_mpz_t(), 10, 12);
        f.primes.emplace_back(n, 1);
        if (n > certain_limit) f.complete = false;  // treated as one unit, may be composite
    }
    return f;
}

void enumerate_divisors(const Factorization& f, std::size_t cap, std::vector<mpz_class>& out,
                        bool& truncated) {
    out.assign(1, mpz_class(1));
    for (const auto& [p, e] : f.primes) {
        std::size_t n = out.size();
        mpz_class pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < n; ++i) {
                if (out.size() >= cap) {
                    truncated = true;
                    return;
                }
                out.push_back(out[i] * pk);
            }
        }
    }
}

std::uint64_t low64(const mpz_class& x) {
    // Value mod 2^64; mpz_fdiv_r_2exp rounds toward -inf so the remainder is
    // already non-negative.
    mpz_class lo;
    mpz_fdiv_r_2exp(lo.get_mpz_t(), x.get_mpz_t(), 64);
    return static_cast<std::uint64_t>(mpz_get_ui(lo.get_mpz_t()));
}

}  // namespace

RationalRoots upoly_rational_roots(const UPoly& p) {
    if (p.is_zero()) throw DomainError("ZeroPolynomial", "roots of the zero polynomial");
    RationalRoots out;
    if (p.is_constant()) return out;

    std::vector<mpz_class> c = to_primitive_int(p);
    std::size_t low = 0;
    while (c[low] == 0) ++low;
    if (low > 0) {
        out.roots.emplace_back(0);
        c.erase(c.begin(), c.begin() + static_cast<long>(low));
    }
    if (c.size() <= 1) return out;

    const std::size_t n = c.size() - 1;
    Factorization f0 = factor_with_budget(c.front());
    Factorization fn = factor_with_budget(c.back());
    out.complete = f0.complete && fn.complete;

    constexpr std::size_t kDivisorCap = 4096;
    bool truncated = false;
    std::vector<mpz_class> ps, qs;
    enumerate_divisors(f0, kDivisorCap, ps, truncated);
    enumerate_divisors(fn, kDivisorCap, qs, truncated);
    if (truncated) out.complete = false;

    std::vector<std::uint64_t> c64(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c64[i] = low64(c[i]);

    std::set<Rational> found;
    for (const mpz_class& q : qs) {
        std::uint64_t q64 = low64(q);
        // powers of q64: q^(n-i)
        std::vector<std::uint64_t> qp(n + 1);
        qp[0] = 1;
        for (std::size_t i = 1; i <= n; ++i) qp[i] = qp[i - 1] * q64;
        for (const mpz_class& pp : ps) {
            for (int sign = 0; sign < 2; ++sign) {
                mpz_class pv = sign ? mpz_class(-pp) : pp;
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), pv.get_mpz_t(), q.get_mpz_t());
                if (g != 1) continue;
                std::uint64_t p64 = low64(pv);
                // screen: sum c_i p^i q^(n-i) mod 2^64
                std::uint64_t acc = 0, ppow = 1;
                for (std::size_t i = 0; i <= n; ++i) {
                    acc += c64[i] * ppow * qp[n - i];
                    ppow *= p64;
                }
                if (acc != 0) continue;
                // exact confirmation
                mpz_class exact(0), ppw(1);
                for (std::size_t i = 0; i <= n; ++i) {
                    mpz_class qpw;
                    mpz_pow_ui(qpw.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n - i));
                    exact += c[i] * ppw * qpw;
                    ppw *= pv;
                }
                if (exact == 0) found.insert(Rational(pv, q));
            }
        }
    }
    for (const auto& r : found) out.roots.push_back(r);
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

}  // namespace normcurve

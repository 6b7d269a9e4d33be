#include "normcurve/rational.hpp"

#include <cctype>
#include <ostream>

namespace normcurve {

Rational Rational::from_string(const std::string& s) {
    std::size_t i = 0;
    auto fail = [&](std::size_t at, const char* expected) -> Rational {
        throw SyntaxError(at, expected, "invalid rational '" + s + "' at offset " + std::to_string(at));
    };
    if (s.empty()) return fail(0, "sign or digit");
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_start) return fail(i, "digit");
    mpz_class num(s.substr(num_start, i - num_start), 10);
    mpz_class den(1);
    if (i < s.size()) {
        if (s[i] != '/') return fail(i, "'/' or end");
        ++i;
        std::size_t den_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_start) return fail(i, "digit");
        if (i != s.size()) return fail(i, "end");
        den = mpz_class(s.substr(den_start, i - den_start), 10);
        if (den == 0) throw SyntaxError(den_start, "nonzero integer", "zero denominator in '" + s + "'");
    }
    if (neg) num = -num;
    return Rational(num, den);
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

bool Rational::cube_root(Rational& out) const {
    mpz_class rn, rd;
    // mpz_root truncates toward zero and reports exactness; works for negatives
    // since the index is odd.
    int exact_n = mpz_root(rn.get_mpz_t(), num().get_mpz_t(), 3);
    if (!exact_n) return false;
    int exact_d = mpz_root(rd.get_mpz_t(), den().get_mpz_t(), 3);
    if (!exact_d) return false;
    out = Rational(rn, rd);
    return true;
}

Rational pow_int(long base, unsigned e) {
    mpz_class b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace normcurve

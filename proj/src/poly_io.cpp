#include "normcurve/poly_io.hpp"

#include <cctype>

#include "normcurve/errors.hpp"

namespace normcurve {

namespace {

// Grammar:
//   poly   := ws term (ws ('+'|'-') ws term)* ws
//   term   := coeff (ws '*'? ws varpow)? | varpow
//   varpow := VAR (ws '^' ws UINT)?
//   coeff  := UINT (ws '/' ws UINT)?
// A leading sign on the first term is allowed.
class Parser {
  public:
    Parser(const std::string& src, std::string var) : s_(src), var_(std::move(var)) {}

    UPoly run() {
        skip_ws();
        UPoly acc = UPoly::zero(var_);
        bool first = true;
        for (;;) {
            int sign = 1;
            if (first) {
                if (peek() == '+' || peek() == '-') sign = (take() == '-') ? -1 : 1;
            } else {
                skip_ws();
                if (at_end()) break;
                char c = peek();
                if (c != '+' && c != '-') fail("'+', '-' or end of input");
                sign = (take() == '-') ? -1 : 1;
            }
            skip_ws();
            acc += term(sign);
            first = false;
        }
        return acc;
    }

  private:
    [[noreturn]] void fail(const std::string& expected) {
        throw SyntaxError(pos_, expected,
                          "syntax error at offset " + std::to_string(pos_) + ": expected " +
                              expected);
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char take() { return s_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at_var() const {
        return !at_end() && s_.compare(pos_, var_.size(), var_) == 0;
    }

    mpz_class integer() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("integer");
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return mpz_class(s_.substr(start, pos_ - start), 10);
    }

    Rational coefficient() {
        mpz_class num = integer();
        skip_ws();
        if (peek() == '/') {
            take();
            skip_ws();
            std::size_t den_at = pos_;
            mpz_class den = integer();
            if (den == 0)
                throw SyntaxError(den_at, "nonzero integer", "zero denominator at offset " +
                                                                 std::to_string(den_at));
            return Rational(num, den);
        }
        return Rational(num);
    }

    unsigned exponent() {
        std::size_t at = pos_;
        mpz_class e = integer();
        if (e > 1000000)
            throw SyntaxError(at, "exponent <= 1000000",
                              "exponent too large at offset " + std::to_string(at));
        return static_cast<unsigned>(e.get_ui());
    }

    // var ('^' uint)?; returns the exponent.
    unsigned varpow() {
        pos_ += var_.size();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            return exponent();
        }
        return 1;
    }

    UPoly term(int sign) {
        if (at_end()) fail("coefficient or '" + var_ + "'");
        Rational c(sign);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = coefficient() * Rational(sign);
            have_coeff = true;
        } else if (!at_var()) {
            fail("coefficient or '" + var_ + "'");
        }
        skip_ws();
        if (have_coeff && peek() == '*') {
            take();
            skip_ws();
            if (!at_var()) fail("'" + var_ + "'");
        }
        if (at_var()) return UPoly::monomial(c, varpow(), var_);
        if (!have_coeff) fail("coefficient or '" + var_ + "'");
        return UPoly::constant(c, var_);
    }

    const std::string& s_;
    std::string var_;
    std::size_t pos_ = 0;
};

}  // namespace

UPoly parse_poly(const std::string& src, const std::string& var) {
    return Parser(src, var).run();
}

std::string print_poly(const UPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.deg_or_neg1(); i >= 0; --i) {
        const Rational c = p.coeff(static_cast<unsigned>(i));
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational a = c.abs();
        if (i == 0) {
            out += a.str();
        } else {
            if (!a.is_one()) out += a.str() + "*";
            out += p.var();
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace normcurve

#ifndef NORMCURVE_POLY_IO_HPP
#define NORMCURVE_POLY_IO_HPP

#include <string>

#include "normcurve/upoly.hpp"

namespace normcurve {

/// Parses a polynomial expression: signed rational coefficients ("p/q" or
/// integers), one variable, '^' powers, optional '*', whitespace anywhere.
/// Throws SyntaxError with byte offset and expected-token set.
UPoly parse_poly(const std::string& src, const std::string& var = "t");

/// Canonical printer; parse_poly(print_poly(p)) == p.
std::string print_poly(const UPoly& p);

}  // namespace normcurve

#endif

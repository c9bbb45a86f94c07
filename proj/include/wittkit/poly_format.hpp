#pragma once

#include <string>
#include <string_view>

#include "wittkit/polynomial.hpp"

namespace wittkit {

/// Parses the polynomial text grammar: terms joined by '+'/'-', a term is
/// `coeff`, `coeff*mono` or `mono`, a monomial is `x^2*y`. Whitespace is
/// ignored. Throws ParseError with a 1-based column, tagged with `where`.
Polynomial parse_polynomial(const PolyRing& ring, std::string_view text,
                            const std::string& where = {});

/// Canonical text: descending terms, no spaces, unit coefficients omitted
/// on non-constant terms, "0" for zero.
std::string format_polynomial(const PolyRing& ring, const Polynomial& f);

std::string format_coeff(const Coeff& c);

}  // namespace wittkit

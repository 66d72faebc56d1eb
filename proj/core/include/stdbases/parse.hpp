#pragma once

#include "stdbases/polynomial.hpp"

#include <string_view>

namespace stdbases {

/// Parses a signed sum of rational-coefficient monomial products.
///
/// Grammar: `^` for exponents, `*` optional between factors, coefficients as
/// `p` or `p/q`, e.g. "3/2*x^2*y - y^2z + 1". "0" is the zero polynomial.
/// Throws ParseError with a byte offset on bad syntax or unknown variables.
Polynomial parse_form(std::string_view text, const RingDescriptor& ring);

}  // namespace stdbases

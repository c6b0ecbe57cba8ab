#pragma once

// Text front end for scalars, maps, points and directions.
//
//   expr   := term (("+" | "-") term)*
//   term   := unary (("*" | "/") unary | unary)*     juxtaposition multiplies
//   unary  := ("-" | "+") unary | power
//   power  := atom ("^" exponent)?
//   atom   := integer | "t" | "z" | "(" expr ")"
//   exponent := ["-"] integer | "(" ["-"] integer ["/" integer] ")"
//
// Rational exponents are accepted on t only.

#include <string>
#include <string_view>

#include "nadyn/berkspace.hpp"
#include "nadyn/redux.hpp"

namespace nadyn {

/// A scalar expression (no z).
KScalar parse_scalar(std::string_view text);

/// A polynomial in z with rational coefficients.
QPoly parse_residue_poly(std::string_view text);

/// Rational expression in z over K. Common factors are cancelled and the
/// result padded to its degree; constants and zero resultants throw
/// DegenerateMap.
RationalMapK parse_map(std::string_view text);

/// "gauss" | "a=<scalar>;s=<rational>".
TypeIIPoint parse_point(std::string_view text);

/// "inf" | "res=<rational>" | "factor=<poly in z>" | "toward:<point>",
/// based at `at`.
Direction parse_direction(std::string_view text, const TypeIIPoint& at);

/// Text that parse_map reads back to the same map.
std::string to_string(const RationalMapK& phi);

std::string to_string(const Direction& v);

}  // namespace nadyn

#pragma once

// Expression grammar shared by the library and the CLI:
//
//   expr  := ratio | poly
//   ratio := "(" poly ")" "/" "(" poly ")" | poly "/" "(" poly ")"
//   poly  := term (("+" | "-") term)*
//   term  := c | c "*" v ["^" k] | v ["^" k]
//
// with integer c, k >= 0 and a single variable v.

#include <cstdint>
#include <string_view>
#include <vector>

#include "towers/p1.hpp"

namespace towers {

/// Integer coefficients, index i for v^i, of a polynomial in `var`.
std::vector<std::int64_t> parse_int_poly(std::string_view text, char var);

/// A polynomial over `field` in x or y.
Poly parse_poly(std::string_view text, const Field& field);

/// Throws SyntaxError, or DegreeZero for constant maps.
RatMap map_parse(std::string_view text, const Field& field);

/// "inf", an integer, or a fraction "a/b" reduced in the field.
ProjPoint parse_point(std::string_view text, const Field& field);

}  // namespace towers

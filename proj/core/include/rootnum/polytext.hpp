#pragma once

// Text format for polynomials and rational functions:
//   1 - 1728*t,  t^-2*(t^-2 - 1728),  8/3*t + 1,  x^3 + 2*y^3
// Operators + - * / ^ and parentheses; exponents are integers (negative ones
// only for rational functions). Errors carry 1-based line/column positions.

#include "rootnum/poly.hpp"

#include <string>
#include <string_view>

namespace rootnum {

/// Rational function in the single variable `var`.
RatFunc parse_ratfunc(std::string_view text, char var = 't');

/// Polynomial in x and y with integer coefficients after clearing
/// denominators by the positive lcm of the coefficient denominators.
BiPoly parse_bipoly(std::string_view text);

/// Homogeneous form in x and y (denominators cleared as above).
HomPoly parse_form(std::string_view text);

std::string to_string(const IntPoly& f, char var = 't');
std::string to_string(const RatFunc& f, char var = 't');
std::string to_string(const HomPoly& f);
std::string to_string(const BiPoly& f);

}  // namespace rootnum

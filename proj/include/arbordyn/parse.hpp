#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arbordyn/ratmap.hpp"

namespace arbordyn {

/// Polynomial in z with integer or rational coefficients, e.g. "z^2 - 1/2z + 3",
/// "5*z^2", "-z". Coefficients are returned low to high.
std::vector<Rat> parse_rat_poly(std::string_view text);

/// "p/q" with each side parenthesized or a single term: "(z^2-98)/z^2",
/// "(z^2+1)/(z^2+3)", "5z^2", "(z^2+2)/(z^2+2z+2)". A bare polynomial has
/// q = 1. Rational coefficients are cleared jointly. Whitespace is ignored.
/// Throws Error(parse) on malformed input; RationalMap::create errors
/// (degenerate map, degree < 2) pass through.
RationalMap parse_map(std::string_view text);

/// Comma-separated integers, e.g. "2,3,5". Empty input gives an empty list.
std::vector<Int> parse_int_list(std::string_view text);

}  // namespace arbordyn

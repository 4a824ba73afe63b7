#pragma once

#include <string>

#include "matsing/poly.hpp"

namespace matsing {

// Parse a polynomial from text.  Grammar: integers, rationals `a/b`,
// variable names, the operators + - * ^ and parentheses.  Implicit
// multiplication is rejected (`2*x^3*y`, never `2x^3y`).  Errors carry the
// offending position.
Polynomial parse_poly(const RingPtr& ring, const std::string& text);

// Canonical printing: terms in decreasing ring order, explicit `*` between
// factors, exponent 1 omitted.  parse_poly(print) round-trips exactly.
std::string poly_to_string(const Polynomial& f);

}  // namespace matsing

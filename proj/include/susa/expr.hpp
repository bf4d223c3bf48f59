#pragma once

#include <string>

#include "susa/rational.hpp"

namespace susa {

// Exact arithmetic over sexagesimal, decimal, and integer literals.
// Supports + - * / (also the signs U+00D7, U+00F7, U+2212), parentheses
// and unary minus; whitespace separates tokens. Commas and semicolons
// bind to the literal they appear in.
Rational evaluate_expression(const std::string& text);

}  // namespace susa

#pragma once

#include <string>
#include <vector>

#include "susa/bigfloat.hpp"
#include "susa/rational.hpp"

namespace susa {

// How to handle values that do not terminate within the digit budget.
//   truncate:      drop excess digits (toward zero on the magnitude)
//   nearest:       round the last kept digit, ties away from zero
//   require_exact: throw DomainError instead of losing digits
enum class RenderMode { truncate, nearest, require_exact };

// Base-60 digit expansion. Digits are 0..59, most significant first.
// fraction_digits carries no trailing zeros; exact is false iff digits
// beyond max_places were discarded or rounded.
struct SexagesimalDigits {
    int sign = 0;
    std::vector<int> integer_digits{0};
    std::vector<int> fraction_digits;
    bool exact = true;

    // "[-]d,d,...;d,d,..." with ';' separating the fractional part.
    std::string to_string() const;
    Rational to_rational() const;
};

// Accepts "[-]d(,d)*(;d(,d)*)?", digit groups of 1-2 decimal chars with
// value <= 59, no whitespace. Throws ParseError otherwise.
Rational parse_sexagesimal(const std::string& text);

SexagesimalDigits render_sexagesimal(const Rational& x, int max_places,
                                     RenderMode mode = RenderMode::truncate);

// Truncating render for irrational values; exact is false unless the
// value terminates within max_places.
SexagesimalDigits render_sexagesimal(const BigFloat& x, int max_places);

// True iff n = 2^p 3^q 5^r, i.e. 1/n terminates in base 60.
bool is_regular(const BigInt& n);

// Dispatch on notation: ';' or ',' selects sexagesimal, '.' selects
// decimal, otherwise a plain integer.
Rational parse_number(const std::string& text);

// Magnitude truncation at 60^-places (toward zero).
Rational truncate_places(const Rational& x, int places);

}  // namespace susa

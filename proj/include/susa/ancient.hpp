#pragma once

#include <string>
#include <vector>

#include "susa/rational.hpp"

namespace susa {

// Writes x = anchor^2 + remainder (plus) or anchor^2 - remainder (minus),
// feeding the one-step rule sqrt(x) ~ anchor +- remainder / (2 anchor).
enum class SqrtBranch { plus, minus };

struct SqrtDecomposition {
    Rational anchor;     // > 0
    Rational remainder;  // >= 0; for minus additionally remainder < anchor^2
    SqrtBranch branch = SqrtBranch::plus;

    Rational radicand() const;
};

// One-step approximation sqrt(x) ~ anchor +- remainder / (2 anchor).
// For the plus branch the result always overestimates:
//   approx^2 - x = (remainder / (2 anchor))^2.
Rational babylonian_sqrt(const SqrtDecomposition& d);

// Decomposes x >= 1 around the largest integer i with i^2 <= x,
// so x = i^2 + (x - i^2) on the plus branch.
SqrtDecomposition nearest_integer_anchor(const Rational& x);

// A traditional coefficient together with the value it stands in for.
struct NamedConstant {
    std::string id;
    Rational value;
    std::string replaces;  // the quantity the coefficient approximates
    std::string source;    // attribution to the ancient source
};

const std::vector<NamedConstant>& constants_catalog();
const NamedConstant& named_constant(const std::string& id);

// Heptagon conversions used throughout: perimeter = circumference under
// pi ~ 3 gives 7a = 6r, Heron's rule uses r = (8/7)a.
Rational heptagon_side_from_radius(const Rational& r);    // a = (6/7) r
Rational heptagon_radius_from_side(const Rational& a);    // r = (7/6) a
Rational heron_radius_from_side(const Rational& a);       // r = (8/7) a

}  // namespace susa

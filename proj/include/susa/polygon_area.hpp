#pragma once

#include <string>
#include <vector>

#include "susa/bigfloat.hpp"
#include "susa/rational.hpp"
#include "susa/sexagesimal.hpp"

namespace susa {

// Area rules of the form  S = coefficient * side^2.
enum class FormulaId {
    exact,                       // (n/4) cot(pi/n), transcendental
    heron_heptagon,              // 43/12
    babylonian_heptagon,         // 221/60, the truncated tablet coefficient
    elamite_heptagon,            // 11/3
    triangle_seven_sixteenths,   // 7/16, from sqrt(3) ~ 7/4
};

std::string formula_id_name(FormulaId id);

struct AreaFormula {
    FormulaId id;
    bool transcendental;     // true: no rational coefficient (exact rule)
    Rational coefficient;    // valid only when !transcendental
    int applicable_n;        // 0 = any n
};

const std::vector<AreaFormula>& formula_catalog();
const AreaFormula& area_formula(FormulaId id);

// (n/4) cot(pi/n) for n >= 3.
BigFloat exact_area_coefficient(int n);

// coefficient * side^2; requires a rational-coefficient formula and side > 0.
Rational approximate_area(const AreaFormula& f, const Rational& side);
Rational approximate_area(FormulaId id, const Rational& side);

// The tablet's un-truncated heptagon coefficient 133/36 = 3;41,40;
// truncation to one fractional place yields 221/60 = 3;41.
Rational babylonian_untruncated_coefficient();

// One labeled stop along a derivation, with its base-60 reading.
struct TraceStep {
    std::string label;
    Rational value;
    SexagesimalDigits rendering;
};

struct DerivationTrace {
    std::string id;
    std::vector<TraceStep> steps;

    const TraceStep& step(const std::string& label) const;
    const Rational& final_value() const;
};

// Heptagon area from the circumradius, replaying the tablet procedure:
// a = (6/7) r, height via the one-step square root with anchor 2a,
// triangle and heptagon areas, coefficient, truncation to 3;41.
DerivationTrace smt2_derivation(const Rational& r);

// Heron's chain from the side: r = (8/7) a, height via sqrt(23) ~ 43/9,
// S = (7/2) a h = (43/12) a^2.
DerivationTrace heron_derivation(const Rational& a);

// The working rule S = 4 a^2 - (1/12) 4 a^2 = (11/3) a^2.
DerivationTrace elamite_instruction(const Rational& a);

// Relative error of each rational heptagon rule against the exact
// coefficient, in catalog order.
struct ErrorReport {
    FormulaId id;
    Rational coefficient;
    BigFloat exact_coefficient;
    BigFloat absolute_error;
    BigFloat relative_error_percent;
};

std::vector<ErrorReport> error_analysis(int n);

}  // namespace susa

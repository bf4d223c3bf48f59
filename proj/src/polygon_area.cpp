#include "susa/polygon_area.hpp"

#include "susa/ancient.hpp"
#include "susa/errors.hpp"

namespace susa {

namespace {

constexpr int kTracePlaces = 12;

TraceStep make_step(const std::string& label, const Rational& value) {
    return {label, value, render_sexagesimal(value, kTracePlaces, RenderMode::truncate)};
}

}  // namespace

std::string formula_id_name(FormulaId id) {
    switch (id) {
        case FormulaId::exact: return "exact";
        case FormulaId::heron_heptagon: return "heron_heptagon";
        case FormulaId::babylonian_heptagon: return "babylonian_heptagon";
        case FormulaId::elamite_heptagon: return "elamite_heptagon";
        case FormulaId::triangle_seven_sixteenths: return "triangle_seven_sixteenths";
    }
    throw DomainError("unknown formula id");
}

const std::vector<AreaFormula>& formula_catalog() {
    static const std::vector<AreaFormula> catalog = {
        {FormulaId::exact, true, Rational(0), 0},
        {FormulaId::heron_heptagon, false, Rational(43, 12), 7},
        {FormulaId::babylonian_heptagon, false, Rational(221, 60), 7},
        {FormulaId::elamite_heptagon, false, Rational(11, 3), 7},
        {FormulaId::triangle_seven_sixteenths, false, Rational(7, 16), 3},
    };
    return catalog;
}

const AreaFormula& area_formula(FormulaId id) {
    for (const AreaFormula& f : formula_catalog())
        if (f.id == id) return f;
    throw DomainError("unknown formula id");
}

BigFloat exact_area_coefficient(int n) {
    if (n < 3) throw DomainError("polygon needs at least 3 sides");
    BigFloat nf(n);
    return nf / 4 / boost::multiprecision::tan(big_pi() / nf);
}

Rational approximate_area(const AreaFormula& f, const Rational& side) {
    if (f.transcendental) throw DomainError("formula has no rational coefficient");
    if (side.sign() <= 0) throw DomainError("side must be positive");
    return f.coefficient * side * side;
}

Rational approximate_area(FormulaId id, const Rational& side) {
    return approximate_area(area_formula(id), side);
}

Rational babylonian_untruncated_coefficient() { return Rational(133, 36); }

const TraceStep& DerivationTrace::step(const std::string& label) const {
    for (const TraceStep& s : steps)
        if (s.label == label) return s;
    throw DomainError("no derivation step labeled '" + label + "'");
}

const Rational& DerivationTrace::final_value() const {
    if (steps.empty()) throw DomainError("empty derivation");
    return steps.back().value;
}

DerivationTrace smt2_derivation(const Rational& r) {
    if (r.sign() <= 0) throw DomainError("radius must be positive");
    DerivationTrace t;
    t.id = "smt2";

    Rational a = heptagon_side_from_radius(r);
    t.steps.push_back(make_step("a = (6/7) r", a));

    Rational radicand = Rational(4) * r * r - a * a;
    t.steps.push_back(make_step("4 r^2 - a^2", radicand));

    // One-step rule around anchor 2a: 4 r^2 - a^2 = (2a)^2 + (4 r^2 - 5 a^2).
    SqrtDecomposition d{Rational(2) * a, Rational(4) * r * r - Rational(5) * a * a, SqrtBranch::plus};
    Rational root = babylonian_sqrt(d);
    t.steps.push_back(make_step("sqrt(4 r^2 - a^2) ~ 2a + (4 r^2 - 5 a^2) / (4a)", root));

    Rational h = root / Rational(2);
    t.steps.push_back(make_step("h = sqrt(4 r^2 - a^2) / 2", h));

    Rational triangle = a * h / Rational(2);
    t.steps.push_back(make_step("triangle area = a h / 2", triangle));

    Rational heptagon = Rational(7) * triangle;
    t.steps.push_back(make_step("heptagon area = 7 a h / 2", heptagon));

    Rational coefficient = heptagon / (a * a);
    t.steps.push_back(make_step("coefficient = area / a^2", coefficient));

    Rational truncated = truncate_places(coefficient, 1);
    t.steps.push_back(make_step("coefficient truncated to one fractional place", truncated));
    return t;
}

DerivationTrace heron_derivation(const Rational& a) {
    if (a.sign() <= 0) throw DomainError("side must be positive");
    DerivationTrace t;
    t.id = "heron";

    Rational r = heron_radius_from_side(a);
    t.steps.push_back(make_step("r = (8/7) a", r));

    Rational radicand = r * r - (a / Rational(2)) * (a / Rational(2));
    t.steps.push_back(make_step("h^2 = r^2 - (a/2)^2 = (9 * 23 / 196) a^2", radicand));

    Rational sqrt23 = named_constant("sqrt23_heron").value;
    t.steps.push_back(make_step("sqrt(23) ~ 43/9", sqrt23));

    Rational h = Rational(3, 14) * sqrt23 * a;
    t.steps.push_back(make_step("h = (3/14) sqrt(23) a ~ (43/42) a", h));

    Rational area = Rational(7, 2) * a * h;
    t.steps.push_back(make_step("S = (7/2) a h = (43/12) a^2", area));
    return t;
}

DerivationTrace elamite_instruction(const Rational& a) {
    if (a.sign() <= 0) throw DomainError("side must be positive");
    DerivationTrace t;
    t.id = "elamite";

    Rational squared = Rational(4) * a * a;
    t.steps.push_back(make_step("square the doubled side: 4 a^2", squared));

    Rational twelfth = squared / Rational(12);
    t.steps.push_back(make_step("take one twelfth: (1/12) 4 a^2", twelfth));

    Rational area = squared - twelfth;
    t.steps.push_back(make_step("subtract: S = (11/3) a^2", area));
    return t;
}

std::vector<ErrorReport> error_analysis(int n) {
    if (n != 7) throw DomainError("error analysis covers the heptagon rules only");
    BigFloat exact = exact_area_coefficient(n);
    std::vector<ErrorReport> rows;
    for (const AreaFormula& f : formula_catalog()) {
        if (f.transcendental || f.applicable_n != n) continue;
        ErrorReport row;
        row.id = f.id;
        row.coefficient = f.coefficient;
        row.exact_coefficient = exact;
        row.absolute_error = boost::multiprecision::abs(to_bigfloat(f.coefficient) - exact);
        row.relative_error_percent = row.absolute_error / exact * 100;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace susa

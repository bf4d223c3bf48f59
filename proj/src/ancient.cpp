#include "susa/ancient.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "susa/errors.hpp"

namespace susa {

Rational SqrtDecomposition::radicand() const {
    Rational a2 = anchor * anchor;
    return branch == SqrtBranch::plus ? a2 + remainder : a2 - remainder;
}

Rational babylonian_sqrt(const SqrtDecomposition& d) {
    if (d.anchor.sign() <= 0) throw DomainError("sqrt anchor must be positive");
    if (d.remainder.sign() < 0) throw DomainError("sqrt remainder must be non-negative");
    if (d.branch == SqrtBranch::minus && !(d.remainder < d.anchor * d.anchor))
        throw DomainError("sqrt remainder must stay below anchor^2 on the minus branch");
    Rational correction = d.remainder / (Rational(2) * d.anchor);
    return d.branch == SqrtBranch::plus ? d.anchor + correction : d.anchor - correction;
}

SqrtDecomposition nearest_integer_anchor(const Rational& x) {
    if (x < Rational(1)) throw DomainError("integer anchor requires x >= 1");
    BigInt floor_x = x.numerator() / x.denominator();
    BigInt i = boost::multiprecision::sqrt(floor_x);
    // sqrt() floors, so i^2 <= floor(x) <= x and (i+1)^2 > floor(x);
    // bump once if (i+1)^2 still fits under x itself.
    if (Rational((i + 1) * (i + 1)) <= x) i += 1;
    SqrtDecomposition d;
    d.anchor = Rational(i);
    d.remainder = x - d.anchor * d.anchor;
    d.branch = SqrtBranch::plus;
    return d;
}

const std::vector<NamedConstant>& constants_catalog() {
    static const std::vector<NamedConstant> catalog = {
        {"pi_babylonian", Rational(3), "pi", "standard Babylonian practice (circumference = 3 x diameter)"},
        {"sqrt3_approx", Rational(7, 4), "sqrt(3)", "Susa constant lists (equilateral triangle rules)"},
        {"sqrt23_heron", Rational(43, 9), "sqrt(23)", "Heron, Metrica (heptagon height)"},
        {"heron_radius_ratio", Rational(8, 7), "circumradius / side of the regular heptagon", "Heron, Metrica"},
        {"heron_side_ratio", Rational(7, 8), "side / circumradius of the regular heptagon", "Heron, Metrica"},
        {"elamite_radius_ratio", Rational(7, 6), "circumradius / side of the regular heptagon",
         "SMT No. 2 (perimeter = circumference under pi ~ 3)"},
        {"golden_ratio_target", Rational(BigInt("6180339887"), BigInt("10000000000")),
         "(sqrt(5)-1)/2, the ratio realized by the pentagon cut", "Ptolemy, Almagest (decimal check value)"},
    };
    return catalog;
}

const NamedConstant& named_constant(const std::string& id) {
    for (const NamedConstant& c : constants_catalog())
        if (c.id == id) return c;
    throw DomainError("unknown constant id '" + id + "'");
}

Rational heptagon_side_from_radius(const Rational& r) {
    if (r.sign() <= 0) throw DomainError("radius must be positive");
    return r * Rational(6, 7);
}

Rational heptagon_radius_from_side(const Rational& a) {
    if (a.sign() <= 0) throw DomainError("side must be positive");
    return a * Rational(7, 6);
}

Rational heron_radius_from_side(const Rational& a) {
    if (a.sign() <= 0) throw DomainError("side must be positive");
    return a * Rational(8, 7);
}

}  // namespace susa

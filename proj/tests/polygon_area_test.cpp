#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "susa/errors.hpp"
#include "susa/polygon_area.hpp"
#include "susa/sexagesimal.hpp"

using susa::BigFloat;
using susa::DomainError;
using susa::FormulaId;
using susa::Rational;

TEST_CASE("exact coefficient (n/4) cot(pi/n)") {
    // 50 digits for n = 7.
    BigFloat c7_ref("3.6339124440015889925361930076002205787350103615954");
    BigFloat c7 = susa::exact_area_coefficient(7);
    CHECK(boost::multiprecision::abs(c7 - c7_ref).convert_to<double>() < 1e-45);

    CHECK(susa::exact_area_coefficient(3).convert_to<double>() ==
          doctest::Approx(0.433012701892219323).epsilon(1e-15));
    CHECK(boost::multiprecision::abs(susa::exact_area_coefficient(4) - 1).convert_to<double>() <
          1e-50);
    CHECK(susa::exact_area_coefficient(5).convert_to<double>() ==
          doctest::Approx(1.72047740058896692).epsilon(1e-15));
    CHECK(susa::exact_area_coefficient(6).convert_to<double>() ==
          doctest::Approx(2.59807621135331594).epsilon(1e-15));
    CHECK(susa::exact_area_coefficient(12).convert_to<double>() ==
          doctest::Approx(11.1961524227066319).epsilon(1e-15));
    CHECK_THROWS_AS(susa::exact_area_coefficient(2), DomainError);
}

TEST_CASE("the heptagon coefficient reads 3;38,2,5,5 to four places") {
    auto digits = susa::render_sexagesimal(susa::exact_area_coefficient(7), 4);
    CHECK(digits.to_string() == "3;38,2,5,5");
    CHECK_FALSE(digits.exact);
}

TEST_CASE("formula catalog") {
    CHECK(susa::area_formula(FormulaId::heron_heptagon).coefficient == Rational(43, 12));
    CHECK(susa::area_formula(FormulaId::babylonian_heptagon).coefficient == Rational(221, 60));
    CHECK(susa::area_formula(FormulaId::elamite_heptagon).coefficient == Rational(11, 3));
    CHECK(susa::area_formula(FormulaId::triangle_seven_sixteenths).coefficient == Rational(7, 16));
    CHECK(susa::area_formula(FormulaId::exact).transcendental);
    for (const auto& f : susa::formula_catalog())
        if (!f.transcendental && f.id != FormulaId::triangle_seven_sixteenths)
            CHECK(f.applicable_n == 7);
    CHECK(susa::area_formula(FormulaId::triangle_seven_sixteenths).applicable_n == 3);
    CHECK(susa::babylonian_untruncated_coefficient() == Rational(133, 36));
    CHECK(susa::truncate_places(susa::babylonian_untruncated_coefficient(), 1) == Rational(221, 60));
    CHECK(susa::formula_id_name(FormulaId::elamite_heptagon) == "elamite_heptagon");
}

TEST_CASE("approximate areas scale with the squared side") {
    CHECK(susa::approximate_area(FormulaId::elamite_heptagon, Rational(1, 2)) == Rational(11, 12));
    CHECK(susa::approximate_area(FormulaId::babylonian_heptagon, Rational(1)) == Rational(221, 60));
    CHECK(susa::approximate_area(FormulaId::heron_heptagon, Rational(2)) == Rational(43, 3));
    CHECK(susa::approximate_area(FormulaId::triangle_seven_sixteenths, Rational(4)) == Rational(7));
    for (FormulaId id : {FormulaId::heron_heptagon, FormulaId::babylonian_heptagon,
                         FormulaId::elamite_heptagon, FormulaId::triangle_seven_sixteenths})
        for (Rational k : {Rational(2), Rational(3), Rational(1, 2)}) {
            Rational unit = susa::approximate_area(id, Rational(1));
            CHECK(susa::approximate_area(id, k) == unit * k * k);
        }
    CHECK_THROWS_AS(susa::approximate_area(FormulaId::exact, Rational(1)), DomainError);
    CHECK_THROWS_AS(susa::approximate_area(FormulaId::elamite_heptagon, Rational(0)), DomainError);
    CHECK_THROWS_AS(susa::approximate_area(FormulaId::elamite_heptagon, Rational(-1)), DomainError);
}

TEST_CASE("tablet derivation at the attested radius 0;35") {
    auto t = susa::smt2_derivation(Rational(7, 12));
    CHECK(t.id == "smt2");
    REQUIRE(t.steps.size() == 8);

    CHECK(t.steps[0].value == Rational(1, 2));
    CHECK(t.steps[0].rendering.to_string() == "0;30");
    CHECK(t.steps[1].value == Rational(10, 9));
    CHECK(t.steps[1].rendering.to_string() == "1;6,40");
    CHECK(t.steps[2].value == Rational(19, 18));
    CHECK(t.steps[2].rendering.to_string() == "1;3,20");
    CHECK(t.steps[3].value == Rational(19, 36));
    CHECK(t.steps[3].rendering.to_string() == "0;31,40");
    CHECK(t.steps[4].value == Rational(19, 144));
    CHECK(t.steps[4].rendering.to_string() == "0;7,55");
    CHECK(t.steps[5].value == Rational(133, 144));
    CHECK(t.steps[5].rendering.to_string() == "0;55,25");
    CHECK(t.steps[6].value == Rational(133, 36));
    CHECK(t.steps[6].rendering.to_string() == "3;41,40");
    CHECK(t.steps[7].value == Rational(221, 60));
    CHECK(t.steps[7].rendering.to_string() == "3;41");
    CHECK(t.final_value() == Rational(221, 60));

    CHECK(t.step("a = (6/7) r").value == Rational(1, 2));
    CHECK_THROWS_AS(t.step("missing"), DomainError);
}

TEST_CASE("tablet derivation is scale invariant in the coefficient") {
    for (Rational r : {Rational(7, 6), Rational(1), Rational(35, 60), Rational(3)}) {
        auto t = susa::smt2_derivation(r);
        CHECK(t.steps[6].value == Rational(133, 36));
        CHECK(t.final_value() == Rational(221, 60));
    }
    auto t = susa::smt2_derivation(Rational(1));
    CHECK(t.steps[0].value == Rational(6, 7));
    CHECK(t.steps[2].value == Rational(38, 21));
    CHECK(t.steps[3].value == Rational(19, 21));
    CHECK_THROWS_AS(susa::smt2_derivation(Rational(0)), DomainError);
}

TEST_CASE("heron derivation") {
    auto t = susa::heron_derivation(Rational(1));
    CHECK(t.id == "heron");
    REQUIRE(t.steps.size() == 5);
    CHECK(t.steps[0].value == Rational(8, 7));
    CHECK(t.steps[1].value == Rational(207, 196));
    CHECK(t.steps[1].value == Rational(9 * 23, 4 * 49));
    CHECK(t.steps[2].value == Rational(43, 9));
    CHECK(t.steps[3].value == Rational(43, 42));
    // 42 is not regular, so the height cannot terminate in base 60.
    CHECK_FALSE(t.steps[3].rendering.exact);
    CHECK(t.steps[4].value == Rational(43, 12));
    CHECK(t.steps[4].rendering.to_string() == "3;35");

    CHECK(susa::heron_derivation(Rational(2)).final_value() == Rational(43, 3));
    CHECK_THROWS_AS(susa::heron_derivation(Rational(-1)), DomainError);
}

TEST_CASE("working-rule instruction") {
    auto t = susa::elamite_instruction(Rational(1));
    CHECK(t.id == "elamite");
    REQUIRE(t.steps.size() == 3);
    CHECK(t.steps[0].value == Rational(4));
    CHECK(t.steps[1].value == Rational(1, 3));
    CHECK(t.steps[1].rendering.to_string() == "0;20");
    CHECK(t.steps[2].value == Rational(11, 3));
    CHECK(t.steps[2].rendering.to_string() == "3;40");

    auto h = susa::elamite_instruction(Rational(1, 2));
    CHECK(h.steps[0].value == Rational(1));
    CHECK(h.steps[1].value == Rational(1, 12));
    CHECK(h.steps[2].value == Rational(11, 12));
    CHECK_THROWS_AS(susa::elamite_instruction(Rational(0)), DomainError);
}

TEST_CASE("error analysis against the exact coefficient") {
    auto rows = susa::error_analysis(7);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].id == FormulaId::heron_heptagon);
    CHECK(rows[1].id == FormulaId::babylonian_heptagon);
    CHECK(rows[2].id == FormulaId::elamite_heptagon);

    CHECK(rows[0].relative_error_percent.convert_to<double>() ==
          doctest::Approx(1.39186376798).epsilon(1e-9));
    CHECK(rows[1].relative_error_percent.convert_to<double>() ==
          doctest::Approx(1.35999119663).epsilon(1e-9));
    CHECK(rows[2].relative_error_percent.convert_to<double>() ==
          doctest::Approx(0.90134870253).epsilon(1e-9));

    // The working rule beats the tablet value, which beats Heron's.
    CHECK(rows[2].relative_error_percent < rows[1].relative_error_percent);
    CHECK(rows[1].relative_error_percent < rows[0].relative_error_percent);

    CHECK_THROWS_AS(susa::error_analysis(5), DomainError);
}

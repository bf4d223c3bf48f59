#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "susa/dissection.hpp"
#include "susa/errors.hpp"

using susa::DomainError;
using susa::GoalRegion;
using susa::ParseError;
using susa::PieceKind;
using susa::Placement;
using susa::Point;
using susa::Rational;
using susa::SplitMode;

namespace {

constexpr double kCoefficient = 3.6339124440015889925;  // (7/4) cot(pi/7)

std::string write_temp(const char* name, const std::string& content) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("decomposition into 9 or 11 pieces") {
    auto two = susa::decompose(1.0, SplitMode::two);
    REQUIRE(two.size() == 9);
    int isos = 0;
    int rights = 0;
    for (const auto& p : two) (p.kind == PieceKind::isosceles ? isos : rights) += 1;
    CHECK(isos == 5);
    CHECK(rights == 4);
    for (size_t i = 0; i < two.size(); ++i) CHECK(two[i].id == static_cast<int>(i));
    for (size_t i = 0; i + 1 < two.size(); ++i)
        CHECK(static_cast<int>(two[i].kind) <= static_cast<int>(two[i + 1].kind));

    auto four = susa::decompose(1.0, SplitMode::four);
    REQUIRE(four.size() == 11);
    isos = rights = 0;
    for (const auto& p : four) (p.kind == PieceKind::isosceles ? isos : rights) += 1;
    CHECK(isos == 3);
    CHECK(rights == 8);

    CHECK_THROWS_AS(susa::decompose(0.0, SplitMode::two), DomainError);
    CHECK_THROWS_AS(susa::decompose(-1.0, SplitMode::four), DomainError);
}

TEST_CASE("piece geometry matches the radial triangle of the heptagon") {
    auto pieces = susa::decompose(1.0, SplitMode::two);
    const auto& iso = pieces[0];
    REQUIRE(iso.local_vertices.size() == 3);
    double h = 1.0382606982861683;  // cot(pi/7) / 2
    CHECK(iso.local_vertices[2].y == doctest::Approx(h).epsilon(1e-15));
    CHECK(iso.area() == doctest::Approx(0.51913034914308414179).epsilon(1e-13));

    double leg = susa::distance(iso.local_vertices[0], iso.local_vertices[2]);
    CHECK(leg == doctest::Approx(1.15238243548123913154).epsilon(1e-13));

    const auto& right = pieces[5];
    CHECK(right.kind == PieceKind::right);
    CHECK(right.area() == doctest::Approx(0.51913034914308414179 / 2).epsilon(1e-13));

    double total = 0;
    for (const auto& p : pieces) total += p.area();
    CHECK(total == doctest::Approx(kCoefficient).epsilon(1e-13));

    total = 0;
    for (const auto& p : susa::decompose(1.0, SplitMode::four)) total += p.area();
    CHECK(total == doctest::Approx(kCoefficient).epsilon(1e-13));

    // Quadratic scaling.
    total = 0;
    for (const auto& p : susa::decompose(2.0, SplitMode::two)) total += p.area();
    CHECK(total == doctest::Approx(4 * kCoefficient).epsilon(1e-12));
}

TEST_CASE("placement applies reflect, then rotate, then translate") {
    susa::TrianglePiece probe{0, PieceKind::right, {{0, 0}, {1, 0}, {0, 2}}};

    Placement rot{0, 10, 20, 90, false};
    auto v = susa::placed_vertices(probe, rot);
    CHECK(v[1].x == doctest::Approx(10.0));
    CHECK(v[1].y == doctest::Approx(21.0));
    CHECK(v[2].x == doctest::Approx(8.0));
    CHECK(v[2].y == doctest::Approx(20.0));

    Placement both{0, 0, 0, 90, true};
    v = susa::placed_vertices(probe, both);
    // (1,0) reflects to (-1,0), then rotates to (0,-1).
    CHECK(v[1].x == doctest::Approx(0.0));
    CHECK(v[1].y == doctest::Approx(-1.0));
    CHECK(v[2].x == doctest::Approx(-2.0));
    CHECK(v[2].y == doctest::Approx(0.0));

    // Rigid motions preserve area, reflection included.
    CHECK(susa::polygon_area(v) == doctest::Approx(susa::polygon_area(probe.local_vertices)));
}

TEST_CASE("goal regions measure exactly 11/3 a^2") {
    auto square = susa::goal_region("square", 1.0);
    CHECK(square.outline.size() == 6);
    CHECK(square.area() == doctest::Approx(11.0 / 3).epsilon(1e-15));
    CHECK(square.removed_lo.x == doctest::Approx(1.5));
    CHECK(square.removed_lo.y == doctest::Approx(4.0 / 3));

    auto rect = susa::goal_region("rectangle", 1.0);
    CHECK(rect.outline.size() == 4);
    CHECK(rect.area() == doctest::Approx(11.0 / 3).epsilon(1e-15));
    CHECK(rect.removed_lo.x == doctest::Approx(11.0 / 3));

    auto scaled = susa::goal_region("square", 0.5);
    CHECK(scaled.area() == doctest::Approx(11.0 / 12).epsilon(1e-15));

    CHECK_THROWS_AS(susa::goal_region("hexagon", 1.0), DomainError);
    CHECK_THROWS_AS(susa::goal_region("square", 0.0), DomainError);
}

TEST_CASE("polygon area and region clipping") {
    CHECK(susa::polygon_area({{0, 0}, {1, 0}, {1, 1}, {0, 1}}) == doctest::Approx(1.0));
    CHECK(susa::polygon_area({{0, 0}, {0, 1}, {1, 1}, {1, 0}}) == doctest::Approx(1.0));  // CW
    CHECK(susa::polygon_area({{0, 0}, {1, 0}, {0, 1}}) == doctest::Approx(0.5));
    CHECK(susa::polygon_area({{0, 0}, {1, 0}}) == 0.0);

    auto region = susa::goal_region("square", 1.0);
    // Fully inside.
    std::vector<Point> tri{{0.1, 0.1}, {0.6, 0.1}, {0.1, 0.6}};
    CHECK(susa::piece_region_area(tri, region) == doctest::Approx(0.125).epsilon(1e-12));
    // Fully outside.
    std::vector<Point> out{{3, 3}, {4, 3}, {3, 4}};
    CHECK(susa::piece_region_area(out, region) == doctest::Approx(0.0));
    // Straddling the removed corner: the part in the cut is excluded.
    std::vector<Point> corner{{1.0, 1.5}, {2.0, 1.5}, {1.0, 2.5}};
    double kept = susa::piece_region_area(corner, region);
    CHECK(kept > 0);
    CHECK(kept < susa::polygon_area(corner));
}

TEST_CASE("cell sums reproduce the region intersection") {
    auto region = susa::goal_region("square", 1.0);
    auto pieces = susa::decompose(1.0, SplitMode::two);
    Placement pl{0, 1.4, 1.2, 25.0, false};  // straddles the removed corner
    auto rep = susa::grid_classify(region, pieces, {pl});
    auto tri = susa::placed_vertices(pieces[0], pl);
    CHECK(rep.covered_area == doctest::Approx(susa::piece_region_area(tri, region)).epsilon(1e-9));
    CHECK(rep.cells == 528);
    CHECK(rep.complete_colored + rep.almost_colored + rep.partial + rep.almost_blank_half +
              rep.blank ==
          rep.cells);
    CHECK(rep.goal_area == doctest::Approx(11.0 / 3).epsilon(1e-12));
    CHECK(rep.net_uncovered == doctest::Approx(rep.goal_area - rep.covered_area).epsilon(1e-12));
    CHECK(rep.warnings.empty());
}

TEST_CASE("grid density must align with the removed cell") {
    auto region = susa::goal_region("square", 1.0);
    auto pieces = susa::decompose(1.0, SplitMode::two);
    CHECK(susa::grid_classify(region, pieces, {}, 0.99, 0.80, 6).cells == 132);
    CHECK(susa::grid_classify(region, pieces, {}, 0.99, 0.80, 24).cells == 2112);
    CHECK_THROWS_AS(susa::grid_classify(region, pieces, {}, 0.99, 0.80, 5), DomainError);
    CHECK_THROWS_AS(susa::grid_classify(region, pieces, {}, 0.99, 0.80, 8), DomainError);

    auto rect = susa::goal_region("rectangle", 1.0);
    CHECK(susa::grid_classify(rect, pieces, {}, 0.99, 0.80, 6).cells == 132);
    CHECK_THROWS_AS(susa::grid_classify(rect, pieces, {}, 0.99, 0.80, 4), DomainError);
    CHECK_THROWS_AS(susa::grid_classify(rect, pieces, {}, 0.99, 0.80, 0), DomainError);
}

TEST_CASE("classification thresholds") {
    auto region = susa::goal_region("square", 1.0);
    auto pieces = susa::decompose(1.0, SplitMode::two);
    CHECK_THROWS_AS(susa::grid_classify(region, pieces, {}, 0.5, 0.8), DomainError);
    CHECK_THROWS_AS(susa::grid_classify(region, pieces, {}, 1.2, 0.8), DomainError);
    CHECK_THROWS_AS(susa::grid_classify(region, pieces, {}, 0.99, 0.0), DomainError);

    // Empty placement list: every cell is blank.
    auto rep = susa::grid_classify(region, pieces, {});
    CHECK(rep.blank == rep.cells);
    CHECK(rep.covered_area == doctest::Approx(0.0));

    // A placement pushed far away only raises a warning.
    auto rep2 = susa::grid_classify(region, pieces, {{0, 100, 100, 0, false}});
    REQUIRE(rep2.warnings.size() == 1);
    CHECK(rep2.warnings[0].find("outside the goal region") != std::string::npos);

    CHECK_THROWS_AS(susa::grid_classify(region, pieces, {{42, 0, 0, 0, false}}), DomainError);
}

TEST_CASE("residual identity") {
    auto r = susa::residual_identity(Rational(1));
    CHECK(r.residual_area == Rational(1, 48));
    CHECK(r.goal_area == Rational(11, 3));
    CHECK(r.percent == Rational(25, 44));

    auto h = susa::residual_identity(Rational(1, 2));
    CHECK(h.residual_area == Rational(1, 192));
    CHECK(h.goal_area == Rational(11, 12));
    CHECK(h.percent == Rational(25, 44));  // scale free

    CHECK_THROWS_AS(susa::residual_identity(Rational(0)), DomainError);

    // Numeric cross-check: goal minus the seven triangles is close to,
    // but not exactly, the three half cells (that is the point).
    double net = 11.0 / 3 - kCoefficient;
    CHECK(net == doctest::Approx(0.03275422266507767413).epsilon(1e-10));
    CHECK(std::abs(net - 1.0 / 48) < 0.013);
}

TEST_CASE("placement files parse and validate") {
    std::string good = R"({
      "layout": "square", "a": 1.0,
      "placements": [
        {"piece_id": 0, "dx": 1.0, "dy": 0.0, "rot_deg": 0.0},
        {"piece_id": 8, "dx": 2.0, "dy": 0.0, "rot_deg": 0.0, "reflected": true}
      ]})";
    auto f = susa::load_placements(write_temp("pl_good.json", good));
    CHECK(f.layout == "square");
    CHECK(f.a == 1.0);
    REQUIRE(f.placements.size() == 2);
    CHECK_FALSE(f.placements[0].reflected);
    CHECK(f.placements[1].reflected);
    CHECK(f.placements[1].piece_id == 8);

    CHECK_THROWS_AS(susa::load_placements("/tmp/definitely_missing_file.json"), ParseError);
    CHECK_THROWS_AS(susa::load_placements(write_temp("pl_bad1.json", "{not json")), ParseError);
    CHECK_THROWS_AS(
        susa::load_placements(write_temp("pl_bad2.json", R"({"layout":"blob","a":1,"placements":[]})")),
        ParseError);
    CHECK_THROWS_AS(
        susa::load_placements(write_temp("pl_bad3.json", R"({"layout":"square","placements":[]})")),
        ParseError);
    CHECK_THROWS_AS(
        susa::load_placements(write_temp(
            "pl_bad4.json", R"({"layout":"square","a":1,"placements":[{"piece_id":0,"dx":0}]})")),
        ParseError);
    CHECK_THROWS_AS(
        susa::load_placements(write_temp("pl_bad5.json", R"({"layout":"square","a":-1,"placements":[]})")),
        ParseError);
}

TEST_CASE("shipped placements cover both layouts") {
    auto sq = susa::load_placements(std::string(SUSA_DATA_DIR) + "/placements_square.json");
    CHECK(sq.layout == "square");
    REQUIRE(sq.placements.size() == 9);
    auto sq_pieces = susa::decompose(sq.a, SplitMode::two);
    auto sq_rep = susa::grid_classify(susa::goal_region(sq.layout, sq.a), sq_pieces, sq.placements);
    // Every piece lands fully inside, so covered area equals the sum of
    // the nine pieces and the shortfall is the exact residual.
    CHECK(sq_rep.covered_area == doctest::Approx(kCoefficient).epsilon(1e-9));
    CHECK(sq_rep.net_uncovered == doctest::Approx(11.0 / 3 - kCoefficient).epsilon(1e-9));
    CHECK(sq_rep.blank + sq_rep.almost_blank_half + sq_rep.partial + sq_rep.almost_colored +
              sq_rep.complete_colored ==
          528);
    for (const auto& w : sq_rep.warnings) CHECK(w.find("outside") == std::string::npos);

    auto rc = susa::load_placements(std::string(SUSA_DATA_DIR) + "/placements_rectangle.json");
    CHECK(rc.layout == "rectangle");
    REQUIRE(rc.placements.size() == 11);
    auto rc_pieces = susa::decompose(rc.a, SplitMode::four);
    auto rc_rep = susa::grid_classify(susa::goal_region(rc.layout, rc.a), rc_pieces, rc.placements);
    CHECK(rc_rep.covered_area == doctest::Approx(kCoefficient).epsilon(1e-9));
    CHECK(rc_rep.net_uncovered == doctest::Approx(11.0 / 3 - kCoefficient).epsilon(1e-9));
    for (const auto& w : rc_rep.warnings) CHECK(w.find("outside") == std::string::npos);
}

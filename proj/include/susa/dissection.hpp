#pragma once

#include <string>
#include <vector>

#include "susa/geometry.hpp"
#include "susa/rational.hpp"

namespace susa {

// How many of the heptagon's seven radial triangles are halved into
// right triangles: two (9 pieces total) or four (11 pieces total).
enum class SplitMode { two, four };

enum class PieceKind { isosceles, right };

// Triangle in its own frame: base on the x axis, apex height
// h = cot(pi/7) / 2 per unit of side length a.
struct TrianglePiece {
    int id;
    PieceKind kind;
    std::vector<Point> local_vertices;  // counter-clockwise

    double area() const;
};

std::vector<TrianglePiece> decompose(double a, SplitMode mode);

// Rigid motion: reflect across x = 0 first (when set), then rotate
// counter-clockwise, then translate.
struct Placement {
    int piece_id = 0;
    double dx = 0;
    double dy = 0;
    double rot_deg = 0;
    bool reflected = false;
};

std::vector<Point> placed_vertices(const TrianglePiece& piece, const Placement& pl);

// Target outline with one grid cell removed from a corner, leaving an
// area of exactly (11/3) a^2: a 2a x 2a square missing its top-right
// a/2 x 2a/3 cell, or a 4a x a rectangle missing its last a/3 x a strip.
struct GoalRegion {
    std::string layout;  // "square" or "rectangle"
    double a = 1;
    std::vector<Point> outline;  // counter-clockwise
    Point outer_lo, outer_hi;    // uncut bounding rectangle
    Point removed_lo, removed_hi;

    double area() const;
};

GoalRegion goal_region(const std::string& layout, double a);

// |shoelace| / 2.
double polygon_area(const std::vector<Point>& poly);

// Area of triangle ∩ region (outer rectangle minus removed rectangle).
double piece_region_area(const std::vector<Point>& triangle, const GoalRegion& region);

enum class CellClass { blank, almost_blank_half, partial, almost_colored, complete_colored };

struct CellInfo {
    int ix = 0;
    int iy = 0;
    double fraction = 0;  // covered share of the cell, capped at 1
    CellClass cls = CellClass::blank;
};

// Coverage census over the (a/grid)-cell lattice. Cell classes by
// covered fraction f (capped at 1): complete_colored f >= complete,
// almost_colored f >= almost, partial f > 1/2, almost_blank_half
// 0 < f <= 1/2, blank f = 0. covered_area sums piece-in-region areas
// without capping, so overlaps surface as covered_area > sum of cells.
struct GridReport {
    int grid = 12;  // cells per side length a
    double cell_size = 0;
    int cells = 0;
    int complete_colored = 0;
    int almost_colored = 0;
    int partial = 0;
    int almost_blank_half = 0;
    int blank = 0;
    double covered_area = 0;
    double goal_area = 0;
    double net_uncovered = 0;
    std::vector<CellInfo> cells_detail;  // row-major, removed cells omitted
    std::vector<std::string> warnings;
};

GridReport grid_classify(const GoalRegion& region, const std::vector<TrianglePiece>& pieces,
                         const std::vector<Placement>& placements, double complete_threshold = 0.99,
                         double almost_threshold = 0.80, int grid = 12);

// The exact shortfall of the dissection: the goal region measures
// (11/3) a^2 while the seven triangles sum to (7/4) cot(pi/7) a^2,
// leaving three half-cells worth a^2/48 = 25/44 percent of the goal.
struct ResidualIdentity {
    Rational residual_area;  // a^2 / 48
    Rational goal_area;      // (11/3) a^2
    Rational percent;        // 25/44
};

ResidualIdentity residual_identity(const Rational& a);

struct PlacementFile {
    std::string layout;
    double a = 1;
    std::vector<Placement> placements;
};

// JSON document {"layout", "a", "placements": [{"piece_id", "dx", "dy",
// "rot_deg", "reflected"?}]}. Throws ParseError on malformed input.
PlacementFile load_placements(const std::string& path);

}  // namespace susa

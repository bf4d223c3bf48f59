#pragma once

#include <string>
#include <vector>

#include "susa/geometry.hpp"

namespace susa {

// One recorded compass-and-straightedge move. Indices reference earlier
// objects in the owning trace; pick selects one candidate from the
// deterministic intersection ordering.
enum class StepKind {
    mark_point,        // free point at (x, y)
    draw_circle,       // center a, radius = |points[b] points[c]|
    draw_line,         // through points a, b
    intersect_circles, // circles a, b, candidate pick
    intersect_line_circle,
    intersect_lines,
    mark_arc_midpoint, // circle a, counter-clockwise arc from point b to point c
};

struct Step {
    StepKind kind;
    int a = -1;
    int b = -1;
    int c = -1;
    int pick = -1;
    double x = 0;
    double y = 0;
    std::string label;
};

// Eagerly evaluated construction log. Every builder both computes the
// new object and records the step, so replay() reproduces the exact
// same coordinates from the step list alone.
class ConstructionTrace {
public:
    int mark_point(Point p, const std::string& label = "");
    int draw_circle(int center_pt, int radius_from_pt, int radius_to_pt);
    int draw_line(int p1, int p2);
    int intersect_circles(int c1, int c2, int pick, const std::string& label = "");
    int intersect_line_circle(int l, int c, int pick, const std::string& label = "");
    int intersect_lines(int l1, int l2, const std::string& label = "");
    int mark_arc_midpoint(int circle_idx, int from_pt, int to_pt, const std::string& label = "");

    const std::vector<Point>& points() const { return points_; }
    const std::vector<Circle>& circles() const { return circles_; }
    const std::vector<Line>& lines() const { return lines_; }
    const std::vector<Step>& steps() const { return steps_; }
    const Point& point(int idx) const;
    const Circle& circle(int idx) const;
    const Line& line(int idx) const;

    // Point index by label; DomainError when absent.
    int labeled(const std::string& label) const;

    ConstructionTrace replay() const;

private:
    int add_point(Point p, const std::string& label);

    std::vector<Point> points_;
    std::vector<std::string> labels_;  // parallel to points_
    std::vector<Circle> circles_;
    std::vector<Line> lines_;
    std::vector<Step> steps_;
};

// How a seven-chord march is closed into a polygon.
//   connect_to_start:     join the last mark back to the starting point
//   midpoint_of_gap_arc:  split the leftover arc at its midpoint
enum class ClosureMode { connect_to_start, midpoint_of_gap_arc };

struct GapReport {
    double chord_length = 0;
    int chords = 0;
    double per_chord_angle_deg = 0;
    double cumulative_angle_deg = 0;
    double gap_deg = 0;  // 360 - cumulative; negative when the march overshoots
    ClosureMode closure = ClosureMode::connect_to_start;
};

struct NgonConstruction {
    std::vector<Point> vertices;
    ConstructionTrace trace;
};

struct HeptagonConstruction {
    std::vector<Point> vertices;
    ConstructionTrace trace;
    GapReport gap;
};

// Reference n-gon on the circle of radius r about the origin, first
// vertex at phase_deg, counter-clockwise.
NgonConstruction exact_ngon(int n, double r, double phase_deg = 0.0);
std::vector<Point> exact_ngon_vertices(int n, const Circle& c, double phase_deg);

// Marks the six hexagon vertices by walking the radius around the
// circle from start; validates closure back onto start.
NgonConstruction hexagon_march(const Circle& c, Point start);

// Odd vertices of a counter-clockwise hexagon.
std::vector<Point> triangle_from_hexagon(const std::vector<Point>& hex, const Circle& c);

// First and fourth hexagon vertices plus the midpoints of the arcs
// between the second/third and fifth/sixth vertices.
std::vector<Point> square_from_hexagon(const std::vector<Point>& hex, const Circle& c);

// Pentagon side transferred from the cut |CE| of the diameter: C is the
// arc midpoint above the diameter AB, D the midpoint of OB, E on AB at
// distance |DC| from D, with OE/OB = OB/EB = (sqrt(5)-1)/2.
NgonConstruction ptolemy_pentagon(const Circle& c);

// Arc-bisects every side of a regular counter-clockwise n-gon, giving
// the 2n-gon that interleaves vertices and arc midpoints.
std::vector<Point> double_ngon(const std::vector<Point>& vertices, const Circle& c);

// Overlays the n-gon and m-gon sharing shared_vertex (gcd(n, m) = 1,
// n > m > 2); the union of their vertices is the regular nm-gon.
std::vector<Point> compose_ngon(int n, int m, const Circle& c, Point shared_vertex);

// Seven chords of the hexagon apothem (sqrt(3)/2 r, or 7/8 r with the
// rational sqrt(3) shortcut), taken from the chord midpoint construction.
HeptagonConstruction heron_heptagon(const Circle& c, bool rational_sqrt3 = false);

// Same opening obtained from the inscribed triangle: the line from the
// center through the opposite hexagon vertex bisects the triangle side.
HeptagonConstruction durer_heptagon(const Circle& c, bool rational_sqrt3 = false);

// Seven chords of 6/7 r; the leftover arc is closed per ClosureMode.
HeptagonConstruction elamite_heptagon(const Circle& c, ClosureMode mode);

// max_i distance(vertex_i, nearest vertex of the best-aligned exact
// n-gon on c), divided by the radius. Minimized over the phase.
double polygon_regularity_error(const std::vector<Point>& vertices, const Circle& c);

}  // namespace susa

#include "susa/construction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "susa/errors.hpp"

namespace susa {

namespace {

constexpr double kPi = std::numbers::pi;

double deg2rad(double d) { return d * kPi / 180.0; }
double rad2deg(double r) { return r * 180.0 / kPi; }

void require_positive_radius(const Circle& c) {
    if (!(c.radius > 0)) throw DomainError("radius must be positive");
}

void require_on_circle(const Circle& c, Point p, const char* what) {
    if (std::abs(distance(c.center, p) - c.radius) > 10 * kKernelEpsilon * c.radius)
        throw DomainError(std::string(what) + " must lie on the circle");
}

double angle_of(const Circle& c, Point p) { return std::atan2(p.y - c.center.y, p.x - c.center.x); }

Point at_angle(const Circle& c, double theta) {
    return {c.center.x + c.radius * std::cos(theta), c.center.y + c.radius * std::sin(theta)};
}

// Counter-clockwise arc length from -> to, in [0, 2 pi).
double ccw_arc(const Circle& c, Point from, Point to) {
    double d = std::fmod(angle_of(c, to) - angle_of(c, from), 2 * kPi);
    if (d < 0) d += 2 * kPi;
    return d;
}

Point arc_midpoint_ccw(const Circle& c, Point from, Point to) {
    return at_angle(c, angle_of(c, from) + ccw_arc(c, from, to) / 2);
}

void require_regular_ccw(const std::vector<Point>& v, const Circle& c, size_t n, const char* what) {
    if (v.size() != n)
        throw DomainError(std::string(what) + " needs exactly " + std::to_string(n) + " vertices");
    for (Point p : v) require_on_circle(c, p, what);
    double expected = 2 * kPi / static_cast<double>(n);
    for (size_t i = 0; i < n; ++i) {
        double d = ccw_arc(c, v[i], v[(i + 1) % n]);
        if (std::abs(d - expected) > 1e-6)
            throw DomainError(std::string(what) + " must be a regular counter-clockwise polygon");
    }
}

// Walks one compass opening around base_circle from the current point,
// always taking the counter-clockwise candidate; returns the new point
// indices in march order.
std::vector<int> march_chords(ConstructionTrace& t, int base_circle, int center_pt, int start_pt,
                              int compass_from, int compass_to, int count,
                              const std::string& prefix) {
    std::vector<int> out;
    int cur = start_pt;
    for (int i = 1; i <= count; ++i) {
        int step_circle = t.draw_circle(cur, compass_from, compass_to);
        auto cands = circle_circle_intersect(t.circle(base_circle), t.circle(step_circle));
        if (cands.size() < 2) throw DomainError("march chord does not cross the circle twice");
        Point center = t.point(center_pt);
        Point from = t.point(cur);
        int pick = cross(from - center, cands[0] - center) > 0 ? 0 : 1;
        cur = t.intersect_circles(base_circle, step_circle, pick, prefix + std::to_string(i));
        out.push_back(cur);
    }
    return out;
}

GapReport make_gap_report(double chord, double radius, int chords, ClosureMode closure) {
    GapReport g;
    g.chord_length = chord;
    g.chords = chords;
    g.per_chord_angle_deg = rad2deg(2 * std::asin(chord / (2 * radius)));
    g.cumulative_angle_deg = chords * g.per_chord_angle_deg;
    g.gap_deg = 360.0 - g.cumulative_angle_deg;
    g.closure = closure;
    return g;
}

// Common preamble: center O, start A on the positive x axis, the base
// circle, and the five-chord hexagon march from A.
struct MarchBase {
    int O;
    int A;
    int base;
    std::vector<int> hex;  // marks after A, counter-clockwise
};

MarchBase build_hexagon_base(ConstructionTrace& t, const Circle& c) {
    MarchBase mb;
    mb.O = t.mark_point(c.center, "O");
    mb.A = t.mark_point({c.center.x + c.radius, c.center.y}, "A");
    mb.base = t.draw_circle(mb.O, mb.O, mb.A);
    mb.hex = march_chords(t, mb.base, mb.O, mb.A, mb.O, mb.A, 5, "p");
    return mb;
}

}  // namespace

int ConstructionTrace::add_point(Point p, const std::string& label) {
    points_.push_back(p);
    labels_.push_back(label);
    return static_cast<int>(points_.size()) - 1;
}

int ConstructionTrace::mark_point(Point p, const std::string& label) {
    Step s;
    s.kind = StepKind::mark_point;
    s.x = p.x;
    s.y = p.y;
    s.label = label;
    steps_.push_back(s);
    return add_point(p, label);
}

int ConstructionTrace::draw_circle(int center_pt, int radius_from_pt, int radius_to_pt) {
    double radius = distance(point(radius_from_pt), point(radius_to_pt));
    if (!(radius > 0)) throw DomainError("zero compass opening");
    Step s;
    s.kind = StepKind::draw_circle;
    s.a = center_pt;
    s.b = radius_from_pt;
    s.c = radius_to_pt;
    steps_.push_back(s);
    circles_.push_back({point(center_pt), radius});
    return static_cast<int>(circles_.size()) - 1;
}

int ConstructionTrace::draw_line(int p1, int p2) {
    if (!(distance(point(p1), point(p2)) > 0)) throw DomainError("line needs two distinct points");
    Step s;
    s.kind = StepKind::draw_line;
    s.a = p1;
    s.b = p2;
    steps_.push_back(s);
    lines_.push_back({point(p1), point(p2)});
    return static_cast<int>(lines_.size()) - 1;
}

int ConstructionTrace::intersect_circles(int c1, int c2, int pick, const std::string& label) {
    auto cands = circle_circle_intersect(circle(c1), circle(c2));
    if (pick < 0 || pick >= static_cast<int>(cands.size()))
        throw DomainError("no circle intersection candidate at pick " + std::to_string(pick));
    Step s;
    s.kind = StepKind::intersect_circles;
    s.a = c1;
    s.b = c2;
    s.pick = pick;
    s.label = label;
    steps_.push_back(s);
    return add_point(cands[pick], label);
}

int ConstructionTrace::intersect_line_circle(int l, int c, int pick, const std::string& label) {
    auto cands = line_circle_intersect(line(l), circle(c));
    if (pick < 0 || pick >= static_cast<int>(cands.size()))
        throw DomainError("no line-circle intersection candidate at pick " + std::to_string(pick));
    Step s;
    s.kind = StepKind::intersect_line_circle;
    s.a = l;
    s.b = c;
    s.pick = pick;
    s.label = label;
    steps_.push_back(s);
    return add_point(cands[pick], label);
}

int ConstructionTrace::intersect_lines(int l1, int l2, const std::string& label) {
    auto cands = line_line_intersect(line(l1), line(l2));
    if (cands.empty()) throw DomainError("lines do not intersect");
    Step s;
    s.kind = StepKind::intersect_lines;
    s.a = l1;
    s.b = l2;
    s.label = label;
    steps_.push_back(s);
    return add_point(cands[0], label);
}

int ConstructionTrace::mark_arc_midpoint(int circle_idx, int from_pt, int to_pt,
                                         const std::string& label) {
    const Circle& c = circle(circle_idx);
    require_on_circle(c, point(from_pt), "arc endpoint");
    require_on_circle(c, point(to_pt), "arc endpoint");
    Step s;
    s.kind = StepKind::mark_arc_midpoint;
    s.a = circle_idx;
    s.b = from_pt;
    s.c = to_pt;
    s.label = label;
    steps_.push_back(s);
    return add_point(arc_midpoint_ccw(c, point(from_pt), point(to_pt)), label);
}

const Point& ConstructionTrace::point(int idx) const {
    if (idx < 0 || idx >= static_cast<int>(points_.size())) throw DomainError("bad point index");
    return points_[static_cast<size_t>(idx)];
}

const Circle& ConstructionTrace::circle(int idx) const {
    if (idx < 0 || idx >= static_cast<int>(circles_.size())) throw DomainError("bad circle index");
    return circles_[static_cast<size_t>(idx)];
}

const Line& ConstructionTrace::line(int idx) const {
    if (idx < 0 || idx >= static_cast<int>(lines_.size())) throw DomainError("bad line index");
    return lines_[static_cast<size_t>(idx)];
}

int ConstructionTrace::labeled(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (!label.empty() && labels_[i] == label) return static_cast<int>(i);
    throw DomainError("no point labeled '" + label + "'");
}

ConstructionTrace ConstructionTrace::replay() const {
    ConstructionTrace out;
    for (const Step& s : steps_) {
        switch (s.kind) {
            case StepKind::mark_point: out.mark_point({s.x, s.y}, s.label); break;
            case StepKind::draw_circle: out.draw_circle(s.a, s.b, s.c); break;
            case StepKind::draw_line: out.draw_line(s.a, s.b); break;
            case StepKind::intersect_circles: out.intersect_circles(s.a, s.b, s.pick, s.label); break;
            case StepKind::intersect_line_circle:
                out.intersect_line_circle(s.a, s.b, s.pick, s.label);
                break;
            case StepKind::intersect_lines: out.intersect_lines(s.a, s.b, s.label); break;
            case StepKind::mark_arc_midpoint: out.mark_arc_midpoint(s.a, s.b, s.c, s.label); break;
        }
    }
    return out;
}

NgonConstruction exact_ngon(int n, double r, double phase_deg) {
    if (n < 3) throw DomainError("polygon needs at least 3 sides");
    if (!(r > 0)) throw DomainError("radius must be positive");
    NgonConstruction res;
    int O = res.trace.mark_point({0, 0}, "O");
    Circle c{{0, 0}, r};
    int first = -1;
    for (int k = 0; k < n; ++k) {
        Point p = at_angle(c, deg2rad(phase_deg + 360.0 * k / n));
        int idx = res.trace.mark_point(p, "v" + std::to_string(k));
        if (k == 0) {
            first = idx;
            res.trace.draw_circle(O, O, first);
        }
        res.vertices.push_back(p);
    }
    return res;
}

std::vector<Point> exact_ngon_vertices(int n, const Circle& c, double phase_deg) {
    if (n < 3) throw DomainError("polygon needs at least 3 sides");
    require_positive_radius(c);
    std::vector<Point> out;
    for (int k = 0; k < n; ++k) out.push_back(at_angle(c, deg2rad(phase_deg + 360.0 * k / n)));
    return out;
}

NgonConstruction hexagon_march(const Circle& c, Point start) {
    require_positive_radius(c);
    require_on_circle(c, start, "march start");
    NgonConstruction res;
    auto& t = res.trace;
    int O = t.mark_point(c.center, "O");
    int A = t.mark_point(start, "A");
    int base = t.draw_circle(O, O, A);
    auto marks = march_chords(t, base, O, A, O, A, 5, "p");

    // The sixth chord must land back on the start.
    auto cands = circle_circle_intersect(t.circle(base), Circle{t.point(marks.back()), c.radius});
    double closure = std::numeric_limits<double>::infinity();
    for (Point p : cands) closure = std::min(closure, distance(p, start));
    if (closure > 100 * kKernelEpsilon * c.radius) throw DomainError("hexagon march failed to close");

    res.vertices.push_back(start);
    for (int idx : marks) res.vertices.push_back(t.point(idx));
    return res;
}

std::vector<Point> triangle_from_hexagon(const std::vector<Point>& hex, const Circle& c) {
    require_positive_radius(c);
    require_regular_ccw(hex, c, 6, "hexagon");
    return {hex[0], hex[2], hex[4]};
}

std::vector<Point> square_from_hexagon(const std::vector<Point>& hex, const Circle& c) {
    require_positive_radius(c);
    require_regular_ccw(hex, c, 6, "hexagon");
    return {hex[0], arc_midpoint_ccw(c, hex[1], hex[2]), hex[3], arc_midpoint_ccw(c, hex[4], hex[5])};
}

NgonConstruction ptolemy_pentagon(const Circle& c) {
    require_positive_radius(c);
    NgonConstruction res;
    auto& t = res.trace;
    int O = t.mark_point(c.center, "O");
    int A = t.mark_point({c.center.x - c.radius, c.center.y}, "A");
    int B = t.mark_point({c.center.x + c.radius, c.center.y}, "B");
    int base = t.draw_circle(O, O, B);
    int diam = t.draw_line(A, B);
    int C = t.mark_arc_midpoint(base, B, A, "C");

    // Perpendicular bisector of OB locates D, the midpoint of OB.
    int cB = t.draw_circle(B, O, B);
    int u1 = t.intersect_circles(base, cB, 0);
    int u2 = t.intersect_circles(base, cB, 1);
    int bis = t.draw_line(u1, u2);
    int D = t.intersect_lines(bis, diam, "D");

    // E cuts the diameter at distance |DC| from D, inside the circle.
    int cD = t.draw_circle(D, D, C);
    int E = t.intersect_line_circle(diam, cD, 1, "E");

    double OE = distance(t.point(O), t.point(E));
    double OB = distance(t.point(O), t.point(B));
    double EB = distance(t.point(E), t.point(B));
    double golden = (std::sqrt(5.0) - 1) / 2;
    if (std::abs(OE / OB - golden) > 1e-9 || std::abs(OB / EB - golden) > 1e-9)
        throw DomainError("pentagon cut failed the golden-ratio check");

    auto marks = march_chords(t, base, O, C, C, E, 4, "w");
    res.vertices.push_back(t.point(C));
    for (int idx : marks) res.vertices.push_back(t.point(idx));
    return res;
}

std::vector<Point> double_ngon(const std::vector<Point>& vertices, const Circle& c) {
    require_positive_radius(c);
    if (vertices.size() < 3) throw DomainError("polygon needs at least 3 sides");
    require_regular_ccw(vertices, c, vertices.size(), "polygon");
    std::vector<Point> out;
    size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i) {
        out.push_back(vertices[i]);
        out.push_back(arc_midpoint_ccw(c, vertices[i], vertices[(i + 1) % n]));
    }
    return out;
}

std::vector<Point> compose_ngon(int n, int m, const Circle& c, Point shared_vertex) {
    require_positive_radius(c);
    if (!(n > m && m > 2)) throw DomainError("composition requires n > m > 2");
    if (std::gcd(n, m) != 1) throw DomainError("n and m must be coprime");
    require_on_circle(c, shared_vertex, "shared vertex");

    double phase = angle_of(c, shared_vertex);
    std::vector<double> offsets;
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < m; ++j) {
            double off = std::fmod(static_cast<double>(k) / n + static_cast<double>(j) / m, 1.0);
            offsets.push_back(off);
        }
    std::sort(offsets.begin(), offsets.end());
    double expected = 1.0 / (n * m);
    for (size_t i = 0; i + 1 < offsets.size(); ++i)
        if (std::abs(offsets[i + 1] - offsets[i] - expected) > 1e-9)
            throw DomainError("vertex union is not uniformly spaced");

    std::vector<Point> out;
    for (double off : offsets) out.push_back(at_angle(c, phase + off * 2 * kPi));
    return out;
}

HeptagonConstruction heron_heptagon(const Circle& c, bool rational_sqrt3) {
    require_positive_radius(c);
    HeptagonConstruction res;
    auto& t = res.trace;
    MarchBase mb = build_hexagon_base(t, c);

    int compass_from = mb.O;
    int compass_to;
    if (rational_sqrt3) {
        // sqrt(3)/2 ~ 7/8: transfer the opening from a marked point on the axis.
        compass_to = t.mark_point({c.center.x + 0.875 * c.radius, c.center.y}, "S");
    } else {
        // Apothem of the hexagon: from the center to the chord midpoint.
        int amid = t.mark_arc_midpoint(mb.base, mb.A, mb.hex[0], "");
        int chord = t.draw_line(mb.A, mb.hex[0]);
        int apo = t.draw_line(mb.O, amid);
        compass_to = t.intersect_lines(chord, apo, "F");
    }

    auto marks = march_chords(t, mb.base, mb.O, mb.A, compass_from, compass_to, 7, "w");
    res.vertices.push_back(t.point(mb.A));
    for (int i = 0; i < 6; ++i) res.vertices.push_back(t.point(marks[static_cast<size_t>(i)]));
    double chord_len = distance(t.point(compass_from), t.point(compass_to));
    res.gap = make_gap_report(chord_len, c.radius, 7, ClosureMode::connect_to_start);
    return res;
}

HeptagonConstruction durer_heptagon(const Circle& c, bool rational_sqrt3) {
    require_positive_radius(c);
    HeptagonConstruction res;
    auto& t = res.trace;
    MarchBase mb = build_hexagon_base(t, c);

    int compass_from = mb.A;
    int compass_to;
    if (rational_sqrt3) {
        compass_from = mb.O;
        compass_to = t.mark_point({c.center.x + 0.875 * c.radius, c.center.y}, "S");
    } else {
        // Triangle on the odd hexagon vertices; the line from the center
        // through the vertex beyond side A-p2 bisects that side.
        int side = t.draw_line(mb.A, mb.hex[1]);
        t.draw_line(mb.hex[1], mb.hex[3]);
        t.draw_line(mb.hex[3], mb.A);
        int ray = t.draw_line(mb.O, mb.hex[0]);
        compass_to = t.intersect_lines(side, ray, "M");
    }

    auto marks = march_chords(t, mb.base, mb.O, mb.A, compass_from, compass_to, 7, "w");
    res.vertices.push_back(t.point(mb.A));
    for (int i = 0; i < 6; ++i) res.vertices.push_back(t.point(marks[static_cast<size_t>(i)]));
    double chord_len = distance(t.point(compass_from), t.point(compass_to));
    res.gap = make_gap_report(chord_len, c.radius, 7, ClosureMode::connect_to_start);
    return res;
}

HeptagonConstruction elamite_heptagon(const Circle& c, ClosureMode mode) {
    require_positive_radius(c);
    HeptagonConstruction res;
    auto& t = res.trace;
    int O = t.mark_point(c.center, "O");
    int A = t.mark_point({c.center.x + c.radius, c.center.y}, "A");
    int base = t.draw_circle(O, O, A);
    int S = t.mark_point({c.center.x + c.radius * 6.0 / 7.0, c.center.y}, "S");

    auto marks = march_chords(t, base, O, A, O, S, 7, "m");
    if (mode == ClosureMode::connect_to_start) {
        res.vertices.push_back(t.point(A));
        for (int i = 0; i < 6; ++i) res.vertices.push_back(t.point(marks[static_cast<size_t>(i)]));
    } else {
        // Split the leftover arc: drop the start, keep marks 1..6 and the
        // midpoint of the arc from the seventh mark back to the start.
        int M = t.mark_arc_midpoint(base, marks[6], A, "M");
        for (int i = 0; i < 6; ++i) res.vertices.push_back(t.point(marks[static_cast<size_t>(i)]));
        res.vertices.push_back(t.point(M));
    }
    res.gap = make_gap_report(c.radius * 6.0 / 7.0, c.radius, 7, mode);
    return res;
}

double polygon_regularity_error(const std::vector<Point>& vertices, const Circle& c) {
    require_positive_radius(c);
    if (vertices.size() < 3) throw DomainError("polygon needs at least 3 sides");
    size_t n = vertices.size();

    auto worst_fit = [&](double phase) {
        double worst = 0;
        for (Point p : vertices) {
            double best = std::numeric_limits<double>::infinity();
            for (size_t k = 0; k < n; ++k) {
                Point q = at_angle(c, phase + 2 * kPi * static_cast<double>(k) / static_cast<double>(n));
                best = std::min(best, distance(p, q));
            }
            worst = std::max(worst, best);
        }
        return worst;
    };

    double period = 2 * kPi / static_cast<double>(n);
    int samples = 200;
    double step = period / samples;
    double best_t = 0;
    double best_v = std::numeric_limits<double>::infinity();
    for (int j = 0; j < samples; ++j) {
        double v = worst_fit(j * step);
        if (v < best_v) {
            best_v = v;
            best_t = j * step;
        }
    }
    double lo = best_t - step;
    double hi = best_t + step;
    const double gr = (std::sqrt(5.0) - 1) / 2;
    while (hi - lo > 1e-9) {
        double m1 = hi - gr * (hi - lo);
        double m2 = lo + gr * (hi - lo);
        if (worst_fit(m1) <= worst_fit(m2))
            hi = m2;
        else
            lo = m1;
    }
    return worst_fit((lo + hi) / 2) / c.radius;
}

}  // namespace susa

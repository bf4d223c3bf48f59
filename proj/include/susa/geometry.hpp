#pragma once

#include <cmath>
#include <vector>

namespace susa {

// Tolerance for geometric predicates, relative to the circle radii or
// segment lengths involved.
constexpr double kKernelEpsilon = 1e-9;

struct Point {
    double x = 0;
    double y = 0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point midpoint(Point a, Point b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

struct Circle {
    Point center;
    double radius = 1;
};

// Infinite line through two distinct points.
struct Line {
    Point p;
    Point q;
};

// All intersection routines order results by descending y, then
// descending x, so a pick index is stable across runs and platforms.
// Tangency within tolerance collapses to a single point. Coincident
// inputs (same circle, same line) throw DomainError.
std::vector<Point> circle_circle_intersect(const Circle& a, const Circle& b);
std::vector<Point> line_circle_intersect(const Line& l, const Circle& c);
std::vector<Point> line_line_intersect(const Line& a, const Line& b);

}  // namespace susa

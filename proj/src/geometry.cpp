#include "susa/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "susa/errors.hpp"

namespace susa {

namespace {

void sort_candidates(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        if (a.y != b.y) return a.y > b.y;
        return a.x > b.x;
    });
}

}  // namespace

std::vector<Point> circle_circle_intersect(const Circle& a, const Circle& b) {
    // Canonical argument order makes the result exactly symmetric.
    const Circle* c1 = &a;
    const Circle* c2 = &b;
    auto key = [](const Circle& c) { return std::array<double, 3>{c.center.x, c.center.y, c.radius}; };
    if (key(b) < key(a)) std::swap(c1, c2);

    double eps = kKernelEpsilon * std::max(c1->radius, c2->radius);
    Point delta = c2->center - c1->center;
    double d = norm(delta);
    if (d <= eps && std::abs(c1->radius - c2->radius) <= eps)
        throw DomainError("coincident circles");
    if (d <= eps) return {};  // concentric

    double along = (d * d + c1->radius * c1->radius - c2->radius * c2->radius) / (2 * d);
    double h2 = c1->radius * c1->radius - along * along;
    double tol = eps * eps;
    if (h2 < -tol) return {};

    Point u = (1 / d) * delta;
    Point foot = c1->center + along * u;
    if (h2 <= tol) return {foot};

    double h = std::sqrt(h2);
    Point perp{-u.y, u.x};
    std::vector<Point> pts{foot + h * perp, foot - h * perp};
    sort_candidates(pts);
    return pts;
}

std::vector<Point> line_circle_intersect(const Line& l, const Circle& c) {
    Point d = l.q - l.p;
    double len = norm(d);
    if (len <= kKernelEpsilon * std::max(1.0, c.radius))
        throw DomainError("degenerate line");

    Point rel = l.p - c.center;
    double qa = dot(d, d);
    double qb = 2 * dot(d, rel);
    double qc = dot(rel, rel) - c.radius * c.radius;
    double disc = qb * qb - 4 * qa * qc;
    double tol = 4 * qa * (kKernelEpsilon * c.radius) * (kKernelEpsilon * c.radius);
    if (disc < -tol) return {};

    if (disc <= tol) {
        double t = -qb / (2 * qa);
        return {l.p + t * d};
    }
    double root = std::sqrt(disc);
    std::vector<Point> pts{l.p + ((-qb + root) / (2 * qa)) * d, l.p + ((-qb - root) / (2 * qa)) * d};
    sort_candidates(pts);
    return pts;
}

std::vector<Point> line_line_intersect(const Line& a, const Line& b) {
    Point d1 = a.q - a.p;
    Point d2 = b.q - b.p;
    double len1 = norm(d1);
    double len2 = norm(d2);
    if (len1 == 0 || len2 == 0) throw DomainError("degenerate line");

    double denom = cross(d1, d2);
    if (std::abs(denom) <= kKernelEpsilon * len1 * len2) {
        // Parallel; coincident when b.p sits on a.
        double offset = std::abs(cross(d1, b.p - a.p)) / len1;
        if (offset <= kKernelEpsilon * std::max(len1, len2))
            throw DomainError("coincident lines");
        return {};
    }
    double t = cross(b.p - a.p, d2) / denom;
    return {a.p + t * d1};
}

}  // namespace susa

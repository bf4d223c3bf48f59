#include "susa/dissection.hpp"

#include "json.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "susa/errors.hpp"

namespace susa {

namespace {

constexpr double kPi = std::numbers::pi;

double apex_height(double a) { return a / (2 * std::tan(kPi / 7)); }

// Clips poly against one half-plane of an axis-aligned boundary:
// keep x >= bound / x <= bound (axis 0) or the same in y (axis 1).
std::vector<Point> clip_axis(const std::vector<Point>& poly, int axis, double bound, bool keep_ge) {
    auto coord = [&](Point p) { return axis == 0 ? p.x : p.y; };
    auto inside = [&](Point p) { return keep_ge ? coord(p) >= bound : coord(p) <= bound; };
    std::vector<Point> out;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        Point cur = poly[i];
        Point nxt = poly[(i + 1) % n];
        bool cur_in = inside(cur);
        bool nxt_in = inside(nxt);
        if (cur_in) out.push_back(cur);
        if (cur_in != nxt_in) {
            double t = (bound - coord(cur)) / (coord(nxt) - coord(cur));
            out.push_back(cur + t * (nxt - cur));
        }
    }
    return out;
}

double clipped_area(std::vector<Point> poly, Point lo, Point hi) {
    poly = clip_axis(poly, 0, lo.x, true);
    poly = clip_axis(poly, 0, hi.x, false);
    poly = clip_axis(poly, 1, lo.y, true);
    poly = clip_axis(poly, 1, hi.y, false);
    return polygon_area(poly);
}

}  // namespace

double TrianglePiece::area() const { return polygon_area(local_vertices); }

std::vector<TrianglePiece> decompose(double a, SplitMode mode) {
    if (!(a > 0)) throw DomainError("side must be positive");
    double h = apex_height(a);
    std::vector<Point> iso{{-a / 2, 0}, {a / 2, 0}, {0, h}};
    std::vector<Point> right{{0, 0}, {a / 2, 0}, {0, h}};

    int halved = mode == SplitMode::two ? 2 : 4;
    std::vector<TrianglePiece> pieces;
    int id = 0;
    for (int i = 0; i < 7 - halved; ++i) pieces.push_back({id++, PieceKind::isosceles, iso});
    for (int i = 0; i < 2 * halved; ++i) pieces.push_back({id++, PieceKind::right, right});
    return pieces;
}

std::vector<Point> placed_vertices(const TrianglePiece& piece, const Placement& pl) {
    double t = pl.rot_deg * kPi / 180.0;
    double c = std::cos(t);
    double s = std::sin(t);
    std::vector<Point> out;
    for (Point v : piece.local_vertices) {
        double x = pl.reflected ? -v.x : v.x;
        out.push_back({c * x - s * v.y + pl.dx, s * x + c * v.y + pl.dy});
    }
    return out;
}

double GoalRegion::area() const { return polygon_area(outline); }

GoalRegion goal_region(const std::string& layout, double a) {
    if (!(a > 0)) throw DomainError("side must be positive");
    GoalRegion r;
    r.layout = layout;
    r.a = a;
    if (layout == "square") {
        r.outline = {{0, 0},         {2 * a, 0},         {2 * a, 4 * a / 3},
                     {1.5 * a, 4 * a / 3}, {1.5 * a, 2 * a}, {0, 2 * a}};
        r.outer_lo = {0, 0};
        r.outer_hi = {2 * a, 2 * a};
        r.removed_lo = {1.5 * a, 4 * a / 3};
        r.removed_hi = {2 * a, 2 * a};
    } else if (layout == "rectangle") {
        r.outline = {{0, 0}, {11 * a / 3, 0}, {11 * a / 3, a}, {0, a}};
        r.outer_lo = {0, 0};
        r.outer_hi = {4 * a, a};
        r.removed_lo = {11 * a / 3, 0};
        r.removed_hi = {4 * a, a};
    } else {
        throw DomainError("unknown layout '" + layout + "'");
    }
    return r;
}

double polygon_area(const std::vector<Point>& poly) {
    if (poly.size() < 3) return 0;
    double twice = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        Point a = poly[i];
        Point b = poly[(i + 1) % poly.size()];
        twice += a.x * b.y - a.y * b.x;
    }
    return std::abs(twice) / 2;
}

double piece_region_area(const std::vector<Point>& triangle, const GoalRegion& region) {
    double whole = clipped_area(triangle, region.outer_lo, region.outer_hi);
    double cut = clipped_area(triangle, region.removed_lo, region.removed_hi);
    return whole - cut;
}

GridReport grid_classify(const GoalRegion& region, const std::vector<TrianglePiece>& pieces,
                         const std::vector<Placement>& placements, double complete_threshold,
                         double almost_threshold, int grid) {
    if (!(almost_threshold > 0) || !(complete_threshold <= 1) ||
        !(almost_threshold <= complete_threshold))
        throw DomainError("thresholds must satisfy 0 < almost <= complete <= 1");
    if (grid < 1) throw DomainError("grid must be positive");

    bool square = region.layout == "square";
    // Removed-corner boundaries must land on cell boundaries.
    if (square ? (3 * grid % 2 != 0 || 4 * grid % 3 != 0) : (11 * grid % 3 != 0))
        throw DomainError("grid does not align the removed cell with cell boundaries");

    int nx = square ? 2 * grid : 4 * grid;
    int ny = square ? 2 * grid : grid;
    int removed_x = square ? 3 * grid / 2 : 11 * grid / 3;
    int removed_y = square ? 4 * grid / 3 : 0;

    GridReport rep;
    rep.grid = grid;
    rep.cell_size = region.a / grid;
    rep.goal_area = region.area();

    std::vector<std::vector<Point>> placed;
    for (const Placement& pl : placements) {
        if (pl.piece_id < 0 || pl.piece_id >= static_cast<int>(pieces.size()))
            throw DomainError("placement references piece " + std::to_string(pl.piece_id) +
                              " outside the piece list");
        placed.push_back(placed_vertices(pieces[static_cast<size_t>(pl.piece_id)], pl));
    }
    for (size_t i = 0; i < placed.size(); ++i) {
        if (piece_region_area(placed[i], region) <= 1e-12 * region.a * region.a)
            rep.warnings.push_back("piece " + std::to_string(placements[i].piece_id) +
                                   " (placement " + std::to_string(i) + ") lies outside the goal region");
    }

    double cell_area = rep.cell_size * rep.cell_size;
    int overfull = 0;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            if (ix >= removed_x && iy >= removed_y) continue;  // the missing corner cell
            Point lo{ix * rep.cell_size, iy * rep.cell_size};
            Point hi{(ix + 1) * rep.cell_size, (iy + 1) * rep.cell_size};
            double covered = 0;
            for (const auto& tri : placed) covered += clipped_area(tri, lo, hi);
            rep.covered_area += covered;
            rep.cells += 1;

            double f = covered / cell_area;
            if (f > 1 + 1e-9) overfull += 1;
            f = std::min(f, 1.0);
            CellClass cls;
            if (f <= 1e-12) {
                rep.blank += 1;
                cls = CellClass::blank;
            } else if (f >= complete_threshold) {
                rep.complete_colored += 1;
                cls = CellClass::complete_colored;
            } else if (f >= almost_threshold) {
                rep.almost_colored += 1;
                cls = CellClass::almost_colored;
            } else if (f > 0.5) {
                rep.partial += 1;
                cls = CellClass::partial;
            } else {
                rep.almost_blank_half += 1;
                cls = CellClass::almost_blank_half;
            }
            rep.cells_detail.push_back(CellInfo{ix, iy, f, cls});
        }
    }
    if (overfull > 0)
        rep.warnings.push_back(std::to_string(overfull) +
                               " cells receive more piece area than they hold (overlapping pieces)");
    rep.net_uncovered = rep.goal_area - rep.covered_area;
    return rep;
}

ResidualIdentity residual_identity(const Rational& a) {
    if (a.sign() <= 0) throw DomainError("side must be positive");
    ResidualIdentity r;
    r.residual_area = a * a / Rational(48);
    r.goal_area = Rational(11, 3) * a * a;
    r.percent = r.residual_area / r.goal_area * Rational(100);
    return r;
}

PlacementFile load_placements(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open placement file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad placement JSON: " + std::string(e.what()));
    }

    try {
        PlacementFile f;
        f.layout = doc.at("layout").get<std::string>();
        if (f.layout != "square" && f.layout != "rectangle")
            throw ParseError("unknown layout '" + f.layout + "'");
        f.a = doc.at("a").get<double>();
        if (!(f.a > 0)) throw ParseError("side 'a' must be positive");
        for (const auto& item : doc.at("placements")) {
            Placement pl;
            pl.piece_id = item.at("piece_id").get<int>();
            pl.dx = item.at("dx").get<double>();
            pl.dy = item.at("dy").get<double>();
            pl.rot_deg = item.at("rot_deg").get<double>();
            pl.reflected = item.value("reflected", false);
            f.placements.push_back(pl);
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad placement JSON: " + std::string(e.what()));
    }
}

}  // namespace susa

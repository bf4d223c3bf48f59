#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "susa/ancient.hpp"
#include "susa/bigfloat.hpp"
#include "susa/construction.hpp"
#include "susa/dissection.hpp"
#include "susa/errors.hpp"
#include "susa/expr.hpp"
#include "susa/polygon_area.hpp"
#include "susa/rational.hpp"
#include "susa/sexagesimal.hpp"
#include "susa/svg.hpp"

namespace {

using nlohmann::ordered_json;

std::string fd(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string fd2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Base-60 reading with a trailing "..." whenever digits were dropped.
std::string marked(const susa::SexagesimalDigits& d) {
    std::string s = d.to_string();
    if (!d.exact) s += "...";
    return s;
}

std::string sexa_of(const susa::Rational& x, int places) {
    return marked(susa::render_sexagesimal(x, places, susa::RenderMode::truncate));
}

std::string sexa_of(const susa::BigFloat& x, int places) {
    return marked(susa::render_sexagesimal(x, places));
}

// Left-aligned columns separated by two spaces; rows may be ragged.
void print_columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.resize(i + 1, 0);
            width[i] = std::max(width[i], row[i].size());
        }
    for (const auto& row : rows) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += row[i];
            if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
        }
        std::cout << line << "\n";
    }
}

susa::Rational arg_value(const std::string& text, const char* what) {
    try {
        return susa::evaluate_expression(text);
    } catch (const susa::ParseError& e) {
        throw susa::ParseError(std::string(what) + ": " + e.what());
    }
}

bool is_json(const std::string& format) { return format == "json"; }

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- sexa eval

void run_eval(const std::string& expr, int places, const std::string& format) {
    susa::Rational v = susa::evaluate_expression(expr);
    auto digits = susa::render_sexagesimal(v, places, susa::RenderMode::truncate);
    if (is_json(format)) {
        ordered_json j;
        j["expression"] = expr;
        j["rational"] = v.to_string();
        j["sexagesimal"] = marked(digits);
        j["exact"] = digits.exact;
        emit_json(j);
        return;
    }
    print_columns({{"rational", v.to_string()}, {"sexagesimal", marked(digits)}});
}

// -------------------------------------------------------------------- areas

void run_areas(int n, const std::string& side_text, int places, const std::string& format) {
    if (n < 3) throw susa::DomainError("polygon needs at least 3 sides");
    susa::Rational side = arg_value(side_text, "--side");
    if (side <= susa::Rational(0)) throw susa::DomainError("side must be positive");

    susa::BigFloat exact_coeff = susa::exact_area_coefficient(n);
    susa::BigFloat side_big = susa::to_bigfloat(side);

    ordered_json jrows = ordered_json::array();
    std::vector<std::vector<std::string>> rows{
        {"formula", "coefficient", "coefficient_sexagesimal", "area", "area_sexagesimal"}};
    for (const auto& f : susa::formula_catalog()) {
        if (f.applicable_n != 0 && f.applicable_n != n) continue;
        std::string name = susa::formula_id_name(f.id);
        if (f.transcendental) {
            susa::BigFloat area = exact_coeff * side_big * side_big;
            rows.push_back({name, "-", sexa_of(exact_coeff, places), "-", sexa_of(area, places)});
            jrows.push_back({{"formula", name},
                             {"coefficient", nullptr},
                             {"coefficient_sexagesimal", sexa_of(exact_coeff, places)},
                             {"area", nullptr},
                             {"area_sexagesimal", sexa_of(area, places)}});
        } else {
            susa::Rational area = susa::approximate_area(f, side);
            rows.push_back({name, f.coefficient.to_string(), sexa_of(f.coefficient, places),
                            area.to_string(), sexa_of(area, places)});
            jrows.push_back({{"formula", name},
                             {"coefficient", f.coefficient.to_string()},
                             {"coefficient_sexagesimal", sexa_of(f.coefficient, places)},
                             {"area", area.to_string()},
                             {"area_sexagesimal", sexa_of(area, places)}});
        }
    }
    if (is_json(format)) {
        ordered_json j;
        j["n"] = n;
        j["side"] = side.to_string();
        j["rows"] = jrows;
        emit_json(j);
        return;
    }
    print_columns(rows);
}

// ------------------------------------------------------------------- errors

void run_errors(int n, int places, const std::string& format) {
    auto reports = susa::error_analysis(n);
    ordered_json jrows = ordered_json::array();
    std::vector<std::vector<std::string>> rows{
        {"formula_id", "coefficient_sexagesimal", "coefficient_rational", "relative_error_percent"}};
    for (const auto& r : reports) {
        std::string name = susa::formula_id_name(r.id);
        std::string pct = fd2(r.relative_error_percent.convert_to<double>());
        rows.push_back({name, sexa_of(r.coefficient, places), r.coefficient.to_string(), pct});
        jrows.push_back({{"formula_id", name},
                         {"coefficient_sexagesimal", sexa_of(r.coefficient, places)},
                         {"coefficient_rational", r.coefficient.to_string()},
                         {"relative_error_percent", pct}});
    }
    if (is_json(format)) {
        emit_json(jrows);
        return;
    }
    print_columns(rows);
}

// ------------------------------------------------------------------- derive

void run_derive(const std::string& chain, const std::string& r_text, const std::string& a_text,
                bool r_given, bool a_given, int places, const std::string& format) {
    if (chain == "smt2" && a_given) throw susa::DomainError("--a applies to the heron and elamite chains; smt2 starts from --r");
    if (chain != "smt2" && r_given) throw susa::DomainError("--r applies only to the smt2 chain");

    susa::DerivationTrace trace;
    std::string input_key, input_value;
    if (chain == "smt2") {
        susa::Rational r = arg_value(r_text, "--r");
        if (r <= susa::Rational(0)) throw susa::DomainError("radius must be positive");
        trace = susa::smt2_derivation(r);
        input_key = "r";
        input_value = r.to_string();
    } else {
        susa::Rational a = arg_value(a_text, "--a");
        if (a <= susa::Rational(0)) throw susa::DomainError("side must be positive");
        trace = chain == "heron" ? susa::heron_derivation(a) : susa::elamite_instruction(a);
        input_key = "a";
        input_value = a.to_string();
    }

    if (is_json(format)) {
        ordered_json j;
        j["derivation"] = trace.id;
        j["input"] = {{input_key, input_value}};
        ordered_json steps = ordered_json::array();
        for (const auto& s : trace.steps) {
            auto digits = susa::render_sexagesimal(s.value, places, susa::RenderMode::truncate);
            steps.push_back({{"label", s.label},
                             {"rational", s.value.to_string()},
                             {"sexagesimal", marked(digits)},
                             {"exact", digits.exact}});
        }
        j["steps"] = steps;
        emit_json(j);
        return;
    }
    print_columns({{"derivation", trace.id}, {"input", input_key + " = " + input_value}});
    std::vector<std::vector<std::string>> rows{{"step", "rational", "sexagesimal"}};
    for (const auto& s : trace.steps)
        rows.push_back({s.label, s.value.to_string(), sexa_of(s.value, places)});
    print_columns(rows);
}

// ---------------------------------------------------------------- constants

void run_constants(int places, const std::string& format) {
    ordered_json jrows = ordered_json::array();
    std::vector<std::vector<std::string>> rows{{"id", "value", "sexagesimal", "replaces", "source"}};
    for (const auto& c : susa::constants_catalog()) {
        rows.push_back({c.id, c.value.to_string(), sexa_of(c.value, places), c.replaces, c.source});
        jrows.push_back({{"id", c.id},
                         {"value", c.value.to_string()},
                         {"sexagesimal", sexa_of(c.value, places)},
                         {"replaces", c.replaces},
                         {"source", c.source}});
    }
    if (is_json(format)) {
        emit_json(jrows);
        return;
    }
    print_columns(rows);
}

// ---------------------------------------------------------------- construct

struct BuildResult {
    std::vector<susa::Point> vertices;
    susa::ConstructionTrace trace;
    bool has_gap = false;
    susa::GapReport gap;
    bool has_golden = false;
    double golden = 0;
};

susa::Point circle_point(const susa::Circle& c, double phase_deg) {
    double t = phase_deg * std::acos(-1.0) / 180.0;
    return {c.center.x + c.radius * std::cos(t), c.center.y + c.radius * std::sin(t)};
}

BuildResult build_shape(const std::string& shape, const std::string& method, double radius,
                        double phase, int n, int m, susa::ClosureMode closure,
                        bool rational_sqrt3, bool n_given, bool m_given, bool closure_given,
                        bool sqrt3_given, bool phase_given) {
    auto combo_error = [&]() -> susa::DomainError {
        return susa::DomainError("method '" + method + "' does not apply to shape '" + shape + "'");
    };
    auto require_zero_phase = [&]() {
        if (phase_given) throw susa::DomainError("--phase is fixed by the '" + method + "' construction");
    };
    if (n_given && shape != "ngon") throw susa::DomainError("--n applies only to --shape ngon");
    if (m_given && method != "compose") throw susa::DomainError("--m applies only to --method compose");
    if (closure_given && method != "elamite") throw susa::DomainError("--closure applies only to --method elamite");
    if (sqrt3_given && method != "heron" && method != "durer")
        throw susa::DomainError("--rational-sqrt3 applies only to the heron and durer methods");

    susa::Circle c{{0, 0}, radius};
    BuildResult out;

    auto from_march = [&](int keep) {
        auto hex = susa::hexagon_march(c, circle_point(c, phase));
        out.trace = hex.trace;
        if (keep == 6)
            out.vertices = hex.vertices;
        else if (keep == 3)
            out.vertices = susa::triangle_from_hexagon(hex.vertices, c);
        else
            out.vertices = susa::square_from_hexagon(hex.vertices, c);
    };

    if (shape == "ngon") {
        if (!n_given) throw susa::DomainError("--shape ngon requires --n");
        if (method == "exact") {
            auto g = susa::exact_ngon(n, radius, phase);
            out.vertices = g.vertices;
            out.trace = g.trace;
        } else if (method == "double") {
            auto g = susa::exact_ngon(n, radius, phase);
            out.vertices = susa::double_ngon(g.vertices, c);
            out.trace = g.trace;
        } else if (method == "compose") {
            if (!m_given) throw susa::DomainError("--method compose requires --m");
            susa::Point shared = circle_point(c, phase);
            out.vertices = susa::compose_ngon(n, m, c, shared);
            int O = out.trace.mark_point(c.center, "O");
            int A = out.trace.mark_point(shared, "A");
            out.trace.draw_circle(O, O, A);
        } else {
            throw combo_error();
        }
        return out;
    }

    int sides = shape == "triangle" ? 3 : shape == "square" ? 4 : shape == "pentagon" ? 5
                : shape == "hexagon" ? 6 : 7;
    if (method == "exact") {
        auto g = susa::exact_ngon(sides, radius, phase);
        out.vertices = g.vertices;
        out.trace = g.trace;
        return out;
    }
    if (shape == "triangle" || shape == "square" || shape == "hexagon") {
        if (method != "march") throw combo_error();
        from_march(sides);
        return out;
    }
    if (shape == "pentagon") {
        if (method != "ptolemy") throw combo_error();
        require_zero_phase();
        auto g = susa::ptolemy_pentagon(c);
        out.vertices = g.vertices;
        out.trace = g.trace;
        out.has_golden = true;
        out.golden = susa::distance(g.trace.point(g.trace.labeled("O")),
                                    g.trace.point(g.trace.labeled("E"))) /
                     radius;
        return out;
    }
    // heptagon
    susa::HeptagonConstruction h;
    if (method == "heron")
        h = susa::heron_heptagon(c, rational_sqrt3);
    else if (method == "durer")
        h = susa::durer_heptagon(c, rational_sqrt3);
    else if (method == "elamite")
        h = susa::elamite_heptagon(c, closure);
    else
        throw combo_error();
    require_zero_phase();
    out.vertices = h.vertices;
    out.trace = h.trace;
    out.has_gap = true;
    out.gap = h.gap;
    return out;
}

void write_construct_svg(const std::string& path, const BuildResult& b, double radius) {
    double lo_x = -radius, lo_y = -radius, hi_x = radius, hi_y = radius;
    auto grow = [&](susa::Point p) {
        lo_x = std::min(lo_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_x = std::max(hi_x, p.x);
        hi_y = std::max(hi_y, p.y);
    };
    for (const auto& p : b.trace.points()) grow(p);
    for (const auto& c : b.trace.circles()) {
        grow({c.center.x - c.radius, c.center.y - c.radius});
        grow({c.center.x + c.radius, c.center.y + c.radius});
    }
    for (const auto& p : b.vertices) grow(p);

    susa::SvgWriter svg(lo_x, lo_y, hi_x, hi_y);
    svg.begin_group("construction");
    for (const auto& c : b.trace.circles()) svg.add_circle(c, "#8a8a8a", 1.5);
    for (const auto& l : b.trace.lines()) svg.add_line(l, "#8a8a8a", 1.5);
    for (const auto& p : b.trace.points()) svg.add_dot(p, "#444444");
    svg.end_group();
    svg.begin_group("polygon");
    svg.add_polygon(b.vertices, "#f2d8a0", "#7a4a12", 2.5);
    for (const auto& p : b.vertices) svg.add_dot(p, "#7a4a12");
    svg.end_group();
    svg.write(path);
}

void run_construct(const std::string& shape, const std::string& method, double radius, double phase,
                   int n, int m, const std::string& closure_name, bool rational_sqrt3,
                   const std::string& svg_path, bool report, const std::string& format,
                   bool n_given, bool m_given, bool closure_given, bool sqrt3_given,
                   bool phase_given) {
    if (!(radius > 0)) throw susa::DomainError("radius must be positive");
    susa::ClosureMode closure = closure_name == "midpoint" ? susa::ClosureMode::midpoint_of_gap_arc
                                                           : susa::ClosureMode::connect_to_start;
    BuildResult b = build_shape(shape, method, radius, phase, n, m, closure, rational_sqrt3,
                                n_given, m_given, closure_given, sqrt3_given, phase_given);

    susa::Circle c{{0, 0}, radius};
    double regularity = susa::polygon_regularity_error(b.vertices, c);
    std::vector<double> sides;
    for (size_t i = 0; i < b.vertices.size(); ++i)
        sides.push_back(susa::distance(b.vertices[i], b.vertices[(i + 1) % b.vertices.size()]));

    if (!svg_path.empty()) write_construct_svg(svg_path, b, radius);

    const char* closure_label = closure == susa::ClosureMode::midpoint_of_gap_arc
                                    ? "midpoint_of_gap_arc"
                                    : "connect_to_start";
    if (is_json(format)) {
        ordered_json j;
        j["shape"] = shape;
        j["method"] = method;
        j["radius"] = radius;
        j["phase"] = phase;
        if (method == "elamite") j["closure"] = closure_label;
        ordered_json verts = ordered_json::array();
        for (const auto& p : b.vertices) verts.push_back({p.x, p.y});
        j["vertices"] = verts;
        if (report) {
            ordered_json rep;
            if (b.has_golden) rep["golden_segment"] = b.golden;
            if (b.has_gap) {
                rep["chord_length"] = b.gap.chord_length;
                rep["chords"] = b.gap.chords;
                rep["per_chord_angle_deg"] = b.gap.per_chord_angle_deg;
                rep["cumulative_angle_deg"] = b.gap.cumulative_angle_deg;
                rep["gap_deg"] = b.gap.gap_deg;
            }
            rep["regularity_error"] = regularity;
            rep["sides"] = sides;
            j["report"] = rep;
        }
        if (!svg_path.empty()) j["svg"] = svg_path;
        emit_json(j);
        return;
    }

    std::vector<std::vector<std::string>> rows{{"shape", shape},
                                               {"method", method},
                                               {"radius", fd(radius)},
                                               {"phase", fd(phase)}};
    if (method == "elamite") rows.push_back({"closure", closure_label});
    rows.push_back({"vertices", std::to_string(b.vertices.size())});
    for (size_t i = 0; i < b.vertices.size(); ++i)
        rows.push_back({"v" + std::to_string(i), fd(b.vertices[i].x), fd(b.vertices[i].y)});
    if (!svg_path.empty()) rows.push_back({"svg", svg_path});
    print_columns(rows);
    if (report) {
        std::cout << "report\n";
        std::vector<std::vector<std::string>> rep;
        if (b.has_golden) rep.push_back({"golden_segment", fd(b.golden)});
        if (b.has_gap) {
            rep.push_back({"chord_length", fd(b.gap.chord_length)});
            rep.push_back({"chords", std::to_string(b.gap.chords)});
            rep.push_back({"per_chord_angle_deg", fd(b.gap.per_chord_angle_deg)});
            rep.push_back({"cumulative_angle_deg", fd(b.gap.cumulative_angle_deg)});
            rep.push_back({"gap_deg", fd(b.gap.gap_deg)});
        }
        rep.push_back({"regularity_error", fd(regularity)});
        for (size_t i = 0; i < sides.size(); ++i)
            rep.push_back({"side_" + std::to_string(i), fd(sides[i])});
        print_columns(rep);
    }
}

// ------------------------------------------------------------------ dissect

const char* cell_fill(susa::CellClass cls) {
    switch (cls) {
        case susa::CellClass::complete_colored: return "#7db36b";
        case susa::CellClass::almost_colored: return "#a9cd8f";
        case susa::CellClass::partial: return "#d9c979";
        case susa::CellClass::almost_blank_half: return "#efe7cd";
        default: return "none";
    }
}

void write_dissect_svg(const std::string& path, const susa::GoalRegion& region,
                       const std::vector<susa::TrianglePiece>& pieces,
                       const std::vector<susa::Placement>& placements,
                       const susa::GridReport& rep) {
    susa::SvgWriter svg(region.outer_lo.x, region.outer_lo.y, region.outer_hi.x, region.outer_hi.y);
    svg.begin_group("region");
    svg.add_polygon(region.outline, "#fbf3df", "#555555", 2);
    svg.add_rect(region.removed_lo, region.removed_hi, "#eeeeee", "#aaaaaa", 1);
    svg.end_group();
    svg.begin_group("cells");
    for (const auto& cell : rep.cells_detail) {
        if (cell.cls == susa::CellClass::blank) continue;
        susa::Point lo{cell.ix * rep.cell_size, cell.iy * rep.cell_size};
        susa::Point hi{lo.x + rep.cell_size, lo.y + rep.cell_size};
        svg.add_rect(lo, hi, cell_fill(cell.cls), "none", 0);
    }
    svg.end_group();
    svg.begin_group("grid");
    int nx = (int)std::lround((region.outer_hi.x - region.outer_lo.x) / rep.cell_size);
    int ny = (int)std::lround((region.outer_hi.y - region.outer_lo.y) / rep.cell_size);
    for (int ix = 0; ix <= nx; ++ix) {
        double x = region.outer_lo.x + ix * rep.cell_size;
        svg.add_segment({x, region.outer_lo.y}, {x, region.outer_hi.y}, "#dddddd", 0.5);
    }
    for (int iy = 0; iy <= ny; ++iy) {
        double y = region.outer_lo.y + iy * rep.cell_size;
        svg.add_segment({region.outer_lo.x, y}, {region.outer_hi.x, y}, "#dddddd", 0.5);
    }
    svg.end_group();
    svg.begin_group("pieces");
    for (const auto& pl : placements)
        svg.add_polygon(susa::placed_vertices(pieces.at(pl.piece_id), pl), "none", "#b3402e", 2);
    svg.end_group();
    svg.write(path);
}

void run_dissect(const std::string& layout, const std::string& a_text, bool a_given,
                 const std::string& split_name, bool split_given, const std::string& placements_path,
                 int grid, double complete_threshold, double almost_threshold,
                 const std::string& svg_path, bool report, const std::string& format) {
    double a = susa::to_double(arg_value(a_text, "--a"));
    if (!(a > 0)) throw susa::DomainError("side a must be positive");

    std::vector<susa::Placement> placements;
    if (!placements_path.empty()) {
        susa::PlacementFile file = susa::load_placements(placements_path);
        if (file.layout != layout)
            throw susa::DomainError("placement file targets layout '" + file.layout +
                                    "', not '" + layout + "'");
        if (a_given && std::abs(file.a - a) > 1e-12)
            throw susa::DomainError("--a conflicts with the placement file's side length");
        a = file.a;
        placements = file.placements;
    }

    susa::SplitMode split;
    if (split_given)
        split = split_name == "two" ? susa::SplitMode::two : susa::SplitMode::four;
    else
        split = layout == "square" ? susa::SplitMode::two : susa::SplitMode::four;

    auto pieces = susa::decompose(a, split);
    susa::GoalRegion region = susa::goal_region(layout, a);
    susa::GridReport rep = susa::grid_classify(region, pieces, placements, complete_threshold,
                                               almost_threshold, grid);
    double piece_total = 0;
    for (const auto& p : pieces) piece_total += p.area();
    susa::ResidualIdentity res = susa::residual_identity(susa::Rational(1));
    double residual_area = a * a * susa::to_double(res.residual_area);
    double residual_percent = susa::to_double(res.percent);
    const char* split_label = split == susa::SplitMode::two ? "two" : "four";

    if (!svg_path.empty()) write_dissect_svg(svg_path, region, pieces, placements, rep);

    if (is_json(format)) {
        ordered_json j;
        j["layout"] = layout;
        j["a"] = a;
        j["split"] = split_label;
        j["pieces"] = (int)pieces.size();
        j["piece_area_total"] = piece_total;
        j["goal_area"] = rep.goal_area;
        j["covered_area"] = rep.covered_area;
        j["net_uncovered"] = rep.net_uncovered;
        if (report) {
            ordered_json r;
            r["grid"] = rep.grid;
            r["cell_size"] = rep.cell_size;
            r["cells"] = rep.cells;
            r["complete_colored"] = rep.complete_colored;
            r["almost_colored"] = rep.almost_colored;
            r["partial"] = rep.partial;
            r["almost_blank_half"] = rep.almost_blank_half;
            r["blank"] = rep.blank;
            r["residual_area"] = residual_area;
            r["residual_percent"] = residual_percent;
            r["warnings"] = rep.warnings;
            j["report"] = r;
        }
        if (!svg_path.empty()) j["svg"] = svg_path;
        emit_json(j);
        return;
    }

    std::vector<std::vector<std::string>> rows{{"layout", layout},
                                               {"a", fd(a)},
                                               {"split", split_label},
                                               {"pieces", std::to_string(pieces.size())},
                                               {"piece_area_total", fd(piece_total)},
                                               {"goal_area", fd(rep.goal_area)},
                                               {"covered_area", fd(rep.covered_area)},
                                               {"net_uncovered", fd(rep.net_uncovered)}};
    if (!svg_path.empty()) rows.push_back({"svg", svg_path});
    print_columns(rows);
    if (report) {
        std::cout << "report\n";
        std::vector<std::vector<std::string>> rep_rows{
            {"grid", std::to_string(rep.grid)},
            {"cell_size", fd(rep.cell_size)},
            {"cells", std::to_string(rep.cells)},
            {"complete_colored", std::to_string(rep.complete_colored)},
            {"almost_colored", std::to_string(rep.almost_colored)},
            {"partial", std::to_string(rep.partial)},
            {"almost_blank_half", std::to_string(rep.almost_blank_half)},
            {"blank", std::to_string(rep.blank)},
            {"residual_area", fd(residual_area)},
            {"residual_percent", fd2(residual_percent)}};
        for (const auto& w : rep.warnings) rep_rows.push_back({"warning", w});
        print_columns(rep_rows);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sexagesimal arithmetic, ancient heptagon area rules, and compass constructions"};
    app.require_subcommand(1);

    auto add_format = [](CLI::App* cmd, std::string& format) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json"}))
            ->capture_default_str();
    };

    // sexa eval
    auto* sexa = app.add_subcommand("sexa", "base-60 arithmetic");
    sexa->require_subcommand(1);
    auto* eval = sexa->add_subcommand("eval", "evaluate an expression exactly");
    std::string eval_expr;
    int eval_places = 6;
    std::string eval_format = "table";
    eval->add_option("expression", eval_expr, "arithmetic over base-60, decimal, and integer literals")
        ->required();
    eval->add_option("--places", eval_places, "fractional base-60 places")->check(CLI::Range(0, 50))
        ->capture_default_str();
    add_format(eval, eval_format);

    // areas
    auto* areas = app.add_subcommand("areas", "area rules for the regular n-gon");
    int areas_n = 7;
    std::string areas_side = "1";
    int areas_places = 6;
    std::string areas_format = "table";
    areas->add_option("--n", areas_n, "number of sides")->capture_default_str();
    areas->add_option("--side", areas_side, "side length (expression)")->capture_default_str();
    areas->add_option("--places", areas_places, "fractional base-60 places")
        ->check(CLI::Range(0, 50))->capture_default_str();
    add_format(areas, areas_format);

    // errors
    auto* errors = app.add_subcommand("errors", "relative error of each rational rule");
    int errors_n = 7;
    int errors_places = 6;
    std::string errors_format = "table";
    errors->add_option("--n", errors_n, "number of sides")->capture_default_str();
    errors->add_option("--places", errors_places, "fractional base-60 places")
        ->check(CLI::Range(0, 50))->capture_default_str();
    add_format(errors, errors_format);

    // derive
    auto* derive = app.add_subcommand("derive", "step-by-step area derivations");
    std::string derive_chain;
    std::string derive_r = "7/12";
    std::string derive_a = "1";
    int derive_places = 6;
    std::string derive_format = "table";
    derive->add_option("chain", derive_chain, "derivation to replay")
        ->required()
        ->check(CLI::IsMember({"smt2", "heron", "elamite"}));
    auto* derive_r_opt = derive->add_option("--r", derive_r, "circumradius for smt2 (expression)")
        ->capture_default_str();
    auto* derive_a_opt = derive->add_option("--a", derive_a, "side length for heron/elamite (expression)")
        ->capture_default_str();
    derive->add_option("--places", derive_places, "fractional base-60 places")
        ->check(CLI::Range(0, 50))->capture_default_str();
    add_format(derive, derive_format);

    // constants
    auto* constants = app.add_subcommand("constants", "catalog of traditional coefficients");
    int constants_places = 6;
    std::string constants_format = "table";
    constants->add_option("--places", constants_places, "fractional base-60 places")
        ->check(CLI::Range(0, 50))->capture_default_str();
    add_format(constants, constants_format);

    // construct
    auto* construct = app.add_subcommand("construct", "compass-and-straightedge constructions");
    std::string con_shape, con_method = "exact", con_closure = "start", con_svg, con_format = "table";
    double con_radius = 1.0, con_phase = 0.0;
    int con_n = 0, con_m = 0;
    bool con_sqrt3 = false, con_report = false;
    construct->add_option("--shape", con_shape, "target polygon")
        ->required()
        ->check(CLI::IsMember({"triangle", "square", "pentagon", "hexagon", "heptagon", "ngon"}));
    construct->add_option("--method", con_method, "construction recipe")
        ->check(CLI::IsMember({"exact", "march", "ptolemy", "heron", "durer", "elamite", "double", "compose"}))
        ->capture_default_str();
    construct->add_option("--radius", con_radius, "circumradius")->capture_default_str();
    auto* con_phase_opt = construct->add_option("--phase", con_phase, "first-vertex angle, degrees")
        ->capture_default_str();
    auto* con_n_opt = construct->add_option("--n", con_n, "sides for --shape ngon");
    auto* con_m_opt = construct->add_option("--m", con_m, "second factor for --method compose");
    auto* con_closure_opt = construct->add_option("--closure", con_closure, "how the seventh chord gap is closed")
        ->check(CLI::IsMember({"start", "midpoint"}))
        ->capture_default_str();
    auto* con_sqrt3_opt = construct->add_flag("--rational-sqrt3", con_sqrt3,
                                              "use 7/8 in place of sqrt(3)/2 for the opening chord");
    construct->add_option("--svg", con_svg, "write the construction drawing to this path");
    construct->add_flag("--report", con_report, "append chord, gap, and regularity details");
    add_format(construct, con_format);

    // dissect
    auto* dissect = app.add_subcommand("dissect", "triangle dissection over the twelfth-grid");
    std::string dis_layout, dis_a = "1", dis_split = "two", dis_placements, dis_svg,
                dis_format = "table";
    int dis_grid = 12;
    double dis_complete = 0.99, dis_almost = 0.80;
    bool dis_report = false;
    dissect->add_option("--layout", dis_layout, "goal region")
        ->required()
        ->check(CLI::IsMember({"square", "rectangle"}));
    auto* dis_a_opt = dissect->add_option("--a", dis_a, "triangle side length (expression)")
        ->capture_default_str();
    auto* dis_split_opt = dissect->add_option("--split", dis_split, "piece decomposition")
        ->check(CLI::IsMember({"two", "four"}));
    dissect->add_option("--placements", dis_placements, "JSON placement file");
    dissect->add_option("--grid", dis_grid, "cells per side length a")
        ->check(CLI::Range(1, 1000))->capture_default_str();
    dissect->add_option("--complete-threshold", dis_complete, "complete_colored cutoff")
        ->capture_default_str();
    dissect->add_option("--almost-threshold", dis_almost, "almost_colored cutoff")
        ->capture_default_str();
    dissect->add_option("--svg", dis_svg, "write the coverage drawing to this path");
    dissect->add_flag("--report", dis_report, "append the cell census and residual identity");
    add_format(dissect, dis_format);

    try {
        app.parse(argc, argv);
        if (eval->parsed()) {
            run_eval(eval_expr, eval_places, eval_format);
        } else if (areas->parsed()) {
            run_areas(areas_n, areas_side, areas_places, areas_format);
        } else if (errors->parsed()) {
            run_errors(errors_n, errors_places, errors_format);
        } else if (derive->parsed()) {
            run_derive(derive_chain, derive_r, derive_a, derive_r_opt->count() > 0,
                       derive_a_opt->count() > 0, derive_places, derive_format);
        } else if (constants->parsed()) {
            run_constants(constants_places, constants_format);
        } else if (construct->parsed()) {
            run_construct(con_shape, con_method, con_radius, con_phase, con_n, con_m, con_closure,
                          con_sqrt3, con_svg, con_report, con_format, con_n_opt->count() > 0,
                          con_m_opt->count() > 0, con_closure_opt->count() > 0,
                          con_sqrt3_opt->count() > 0, con_phase_opt->count() > 0);
        } else if (dissect->parsed()) {
            run_dissect(dis_layout, dis_a, dis_a_opt->count() > 0, dis_split,
                        dis_split_opt->count() > 0, dis_placements, dis_grid, dis_complete,
                        dis_almost, dis_svg, dis_report, dis_format);
        }
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const susa::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const susa::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

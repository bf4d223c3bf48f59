#include "susa/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "susa/errors.hpp"

namespace susa {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

SvgWriter::SvgWriter(double min_x, double min_y, double max_x, double max_y)
    : min_x_(min_x), min_y_(min_y), max_x_(max_x), max_y_(max_y) {
    if (!(max_x > min_x) || !(max_y > min_y)) throw DomainError("empty drawing area");
    cx_ = (min_x + max_x) / 2;
    cy_ = (min_y + max_y) / 2;
    scale_ = 900.0 / std::max(max_x - min_x, max_y - min_y);
}

Point SvgWriter::map(Point world) const {
    return {500.0 + (world.x - cx_) * scale_, 500.0 - (world.y - cy_) * scale_};
}

void SvgWriter::begin_group(const std::string& id) { body_ += "<g id=\"" + id + "\">\n"; }

void SvgWriter::end_group() { body_ += "</g>\n"; }

void SvgWriter::add_circle(const Circle& c, const std::string& stroke, double stroke_width) {
    Point p = map(c.center);
    body_ += "<circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"" + fmt(c.radius * scale_) +
             "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(stroke_width) + "\"/>\n";
}

void SvgWriter::add_segment(Point a, Point b, const std::string& stroke, double stroke_width) {
    Point pa = map(a);
    Point pb = map(b);
    body_ += "<line x1=\"" + fmt(pa.x) + "\" y1=\"" + fmt(pa.y) + "\" x2=\"" + fmt(pb.x) + "\" y2=\"" +
             fmt(pb.y) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(stroke_width) + "\"/>\n";
}

void SvgWriter::add_line(const Line& l, const std::string& stroke, double stroke_width) {
    // Clip p + t (q - p) to the framed world rectangle via slabs.
    Point d = l.q - l.p;
    double t_lo = -1e30;
    double t_hi = 1e30;
    auto slab = [&](double p0, double dir, double lo, double hi) {
        if (dir == 0) return p0 >= lo && p0 <= hi;
        double t1 = (lo - p0) / dir;
        double t2 = (hi - p0) / dir;
        if (t1 > t2) std::swap(t1, t2);
        t_lo = std::max(t_lo, t1);
        t_hi = std::min(t_hi, t2);
        return true;
    };
    double mx = 0.05 * (max_x_ - min_x_);
    double my = 0.05 * (max_y_ - min_y_);
    if (!slab(l.p.x, d.x, min_x_ - mx, max_x_ + mx)) return;
    if (!slab(l.p.y, d.y, min_y_ - my, max_y_ + my)) return;
    if (t_lo > t_hi) return;
    add_segment(l.p + t_lo * d, l.p + t_hi * d, stroke, stroke_width);
}

void SvgWriter::add_polygon(const std::vector<Point>& pts, const std::string& fill,
                            const std::string& stroke, double stroke_width) {
    body_ += "<polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        Point p = map(pts[i]);
        if (i) body_ += " ";
        body_ += fmt(p.x) + "," + fmt(p.y);
    }
    body_ += "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(stroke_width) +
             "\"/>\n";
}

void SvgWriter::add_rect(Point lo, Point hi, const std::string& fill, const std::string& stroke,
                         double stroke_width) {
    add_polygon({{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}}, fill, stroke, stroke_width);
}

void SvgWriter::add_dot(Point p, const std::string& fill) {
    Point m = map(p);
    body_ += "<circle cx=\"" + fmt(m.x) + "\" cy=\"" + fmt(m.y) + "\" r=\"4.000000\" fill=\"" + fill +
             "\"/>\n";
}

std::string SvgWriter::str() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n" + body_ + "</svg>\n";
}

void SvgWriter::write(const std::string& path) const {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("cannot write '" + tmp + "'");
        out << str();
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw DomainError("cannot move '" + tmp + "' to '" + path + "'");
}

}  // namespace susa

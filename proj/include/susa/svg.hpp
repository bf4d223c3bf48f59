#pragma once

#include <string>
#include <vector>

#include "susa/geometry.hpp"

namespace susa {

// Deterministic SVG assembly: fixed 1000 x 1000 viewBox, uniform scale
// fitting the world rectangle with a 5% margin, y axis pointing up,
// coordinates printed with exactly six decimals, elements emitted in
// call order. write() replaces the target atomically.
class SvgWriter {
public:
    SvgWriter(double min_x, double min_y, double max_x, double max_y);

    void begin_group(const std::string& id);
    void end_group();

    void add_circle(const Circle& c, const std::string& stroke, double stroke_width);
    void add_segment(Point a, Point b, const std::string& stroke, double stroke_width);
    // Infinite line clipped to the framed world rectangle.
    void add_line(const Line& l, const std::string& stroke, double stroke_width);
    void add_polygon(const std::vector<Point>& pts, const std::string& fill,
                     const std::string& stroke, double stroke_width);
    void add_rect(Point lo, Point hi, const std::string& fill, const std::string& stroke,
                  double stroke_width);
    // Screen-size dot marking a world point.
    void add_dot(Point p, const std::string& fill);

    std::string str() const;
    void write(const std::string& path) const;

private:
    Point map(Point world) const;

    double cx_, cy_, scale_;
    double min_x_, min_y_, max_x_, max_y_;
    std::string body_;
};

}  // namespace susa

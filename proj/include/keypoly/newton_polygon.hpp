#pragma once

#include "keypoly/inductive_valuation.hpp"

#include <vector>

namespace keypoly {

struct PolygonPoint {
    long abscissa;
    Rational ordinate;
};

struct Segment {
    Rational slope;  ///< Δordinate / Δabscissa, read left to right
    long length;     ///< horizontal length
    long start;      ///< abscissa of the left end
};

/// Lower convex hull of the points (m − i, v(f_i)) of the φ-expansion of f.
struct NewtonPolygon {
    std::vector<PolygonPoint> points;
    std::vector<PolygonPoint> vertices;
    std::vector<Segment> segments;
};

NewtonPolygon newton_polygon(const std::vector<PolygonPoint>& points);
/// Polygon of f with respect to φ, with digit values taken in v.
NewtonPolygon polygon(const InductiveValuation& v, const Poly& phi, const Poly& f);
/// Segments of slope strictly above the threshold.
std::vector<Segment> principal_part(const NewtonPolygon& N, const Value& threshold);

}  // namespace keypoly

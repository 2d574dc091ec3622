#include "keypoly/newton_polygon.hpp"

#include <algorithm>

namespace keypoly {

NewtonPolygon newton_polygon(const std::vector<PolygonPoint>& points) {
    NewtonPolygon N;
    N.points = points;
    std::vector<PolygonPoint> ps = points;
    std::sort(ps.begin(), ps.end(), [](const auto& a, const auto& b) {
        return a.abscissa != b.abscissa ? a.abscissa < b.abscissa : a.ordinate < b.ordinate;
    });
    auto& H = N.vertices;
    for (const auto& p : ps) {
        if (!H.empty() && H.back().abscissa == p.abscissa) continue;
        while (H.size() >= 2) {
            const auto& a = H[H.size() - 2];
            const auto& b = H.back();
            Rational cross = (b.abscissa - a.abscissa) * (p.ordinate - a.ordinate) -
                             (b.ordinate - a.ordinate) * (p.abscissa - a.abscissa);
            if (cross > 0) break;
            H.pop_back();
        }
        H.push_back(p);
    }
    for (size_t i = 1; i < H.size(); ++i) {
        long dx = H[i].abscissa - H[i - 1].abscissa;
        N.segments.push_back({Rational((H[i].ordinate - H[i - 1].ordinate) / dx), dx, H[i - 1].abscissa});
    }
    return N;
}

NewtonPolygon polygon(const InductiveValuation& v, const Poly& phi, const Poly& f) {
    std::vector<Poly> digits;
    Poly rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = poly_divmod(rest, phi);
        digits.push_back(std::move(r));
        rest = std::move(q);
    }
    const long m = static_cast<long>(digits.size()) - 1;
    std::vector<PolygonPoint> pts;
    for (long i = 0; i <= m; ++i)
        if (!digits[i].is_zero()) pts.push_back({m - i, v.value(digits[i]).finite()});
    return newton_polygon(pts);
}

std::vector<Segment> principal_part(const NewtonPolygon& N, const Value& threshold) {
    std::vector<Segment> out;
    for (const auto& s : N.segments)
        if (Value(s.slope) > threshold) out.push_back(s);
    return out;
}

}  // namespace keypoly

#include "cfp/geometry.hpp"

namespace cfp {

Point circumcenter(const Point& a, const Point& b, const Point& c, double eps) {
    double d = 2.0 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
    // scale-aware degeneracy test: |cross| relative to the span of the triple
    double span = std::max({dist(a, b), dist(b, c), dist(a, c)});
    if (std::fabs(d) <= 2.0 * eps * std::max(1.0, span * span)) {
        throw CollinearPoints("circumcenter: points are collinear");
    }
    double a2 = a.x * a.x + a.y * a.y;
    double b2 = b.x * b.x + b.y * b.y;
    double c2 = c.x * c.x + c.y * c.y;
    double ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
    double uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
    return {ux, uy};
}

Angle angle_ccw(const Point& center, const Point& from, const Point& to) {
    if (dist(from, center) == 0.0 || dist(to, center) == 0.0) {
        throw DegenerateRay("angle_ccw: point coincides with center");
    }
    double a0 = std::atan2(from.y - center.y, from.x - center.x);
    double a1 = std::atan2(to.y - center.y, to.x - center.x);
    return Angle::radians(a1 - a0);
}

Point rotate_about(const Point& center, const Point& p, const Angle& theta,
                   Orientation orientation) {
    double r = dist(p, center);
    if (r == 0.0) throw DegenerateRay("rotate_about: point coincides with center");
    double t = theta.radians();
    if (orientation == Orientation::Cw) t = -t;
    double dx = p.x - center.x, dy = p.y - center.y;
    double ct = std::cos(t), st = std::sin(t);
    return {center.x + dx * ct - dy * st, center.y + dx * st + dy * ct};
}

Point project_to_circle(const Circle& target, const Point& p) {
    double r = dist(p, target.center);
    if (r == 0.0) throw DegenerateRay("project_to_circle: point coincides with center");
    double k = target.radius / r;
    return {target.center.x + (p.x - target.center.x) * k,
            target.center.y + (p.y - target.center.y) * k};
}

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

bool segments_cross(const Point& a1, const Point& a2, const Point& b1, const Point& b2,
                    double eps) {
    double scale = std::max({1.0, dist(a1, a2), dist(b1, b2)});
    double tol = eps * scale * scale;
    double d1 = cross(a1, a2, b1);
    double d2 = cross(a1, a2, b2);
    double d3 = cross(b1, b2, a1);
    double d4 = cross(b1, b2, a2);
    return ((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol)) &&
           ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol));
}

}  // namespace cfp

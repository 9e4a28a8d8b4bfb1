#pragma once

#include <cmath>

#include "cfp/angle.hpp"
#include "cfp/errors.hpp"

namespace cfp {

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double px, double py) : x(px), y(py) {
        if (!std::isfinite(x) || !std::isfinite(y)) throw Error("Point: non-finite coordinate");
    }

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(double k) const { return {x * k, y * k}; }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

inline double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }

/// Relative comparison used throughout: |a-b| <= eps*max(1,|a|,|b|).
inline bool close(double a, double b, double eps) {
    return std::fabs(a - b) <= eps * std::max({1.0, std::fabs(a), std::fabs(b)});
}

struct Circle {
    Point center;
    double radius;

    Circle(Point c, double r) : center(c), radius(r) {
        if (!(r > 0.0) || !std::isfinite(r)) throw Error("Circle: radius must be > 0");
    }
};

enum class Orientation { Ccw, Cw };

/// Center of the circle through three pairwise distinct points.
/// Throws CollinearPoints when the points are collinear within eps.
Point circumcenter(const Point& a, const Point& b, const Point& c, double eps = 1e-9);

/// Counterclockwise angle in [0, 2pi) from ray [center,from) to ray [center,to).
/// Radians-mode result; exactness, where available, is tracked by callers that
/// know the rational turns of both points.
Angle angle_ccw(const Point& center, const Point& from, const Point& to);

/// Point at the same distance from center as p, rotated by theta.
Point rotate_about(const Point& center, const Point& p, const Angle& theta,
                   Orientation orientation = Orientation::Ccw);

/// Intersection of the half-line [center, p) with the circle.
Point project_to_circle(const Circle& target, const Point& p);

/// Point on the circle at the given angle from the positive x axis.
inline Point point_on_circle(const Point& center, double radius, const Angle& theta) {
    double r = theta.radians();
    return {center.x + radius * std::cos(r), center.y + radius * std::sin(r)};
}

/// Proper intersection test for the open segments (a1,a2) and (b1,b2).
/// Shared endpoints do not count.
bool segments_cross(const Point& a1, const Point& a2, const Point& b1, const Point& b2,
                    double eps = 1e-9);

}  // namespace cfp

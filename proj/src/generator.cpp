#include "cfp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cfp/errors.hpp"

namespace cfp::gen {

Configuration regular_ngon(int n, const Point& center, double radius, const Rational& phase) {
    if (n < 2) throw Error("regular_ngon: n must be >= 2");
    std::vector<std::pair<Rational, double>> polar;
    for (int k = 0; k < n; ++k) {
        polar.emplace_back(phase + Rational(k, n), radius);
    }
    return Configuration::from_polar(center, std::move(polar));
}

Configuration strict_biangular(int n, const Angle& alpha, const Point& center, double radius) {
    if (n < 4 || n % 2 != 0) throw Error("strict_biangular: n must be even and >= 4");
    if (alpha.exact()) {
        Rational a = alpha.turns_exact();
        if (!(Rational(0, 1) < a) || !(a < Rational(1, n))) {
            throw InvalidAlpha("strict_biangular: alpha must be in (0, 2pi/n)");
        }
        std::vector<std::pair<Rational, double>> polar;
        for (int k = 0; k < n / 2; ++k) {
            Rational base(2 * k, n);  // k*(alpha+beta)
            polar.emplace_back(base, radius);
            polar.emplace_back(base + a, radius);
        }
        return Configuration::from_polar(center, std::move(polar));
    }
    double a = alpha.radians();
    if (!(a > 0.0) || !(a < kTwoPi / n)) {
        throw InvalidAlpha("strict_biangular: alpha must be in (0, 2pi/n)");
    }
    std::vector<Point> pts;
    for (int k = 0; k < n / 2; ++k) {
        double base = k * (2.0 * kTwoPi / n);
        pts.push_back(point_on_circle(center, radius, Angle::radians(base)));
        pts.push_back(point_on_circle(center, radius, Angle::radians(base + a)));
    }
    return Configuration::from_points(std::move(pts));
}

Configuration quasi_ngon(int n, bool aligned, uint64_t seed, const Point& center, double r1,
                         double r2) {
    if (n < 9) throw Error("quasi_ngon: n must be >= 9");
    if (!(r1 > r2) || !(r2 > 0.0)) throw Error("quasi_ngon: need r1 > r2 > 0");
    std::mt19937_64 rng(seed ^ 0x51ab5f1c3d2e4a01ULL);

    // pick which n-gon slots are missing from C1 (at least one missing, at
    // least one present)
    int missing = std::max(1, n / 4);
    std::vector<int> slots(n);
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<bool> is_missing(n, false);
    for (int i = 0; i < missing; ++i) is_missing[slots[i]] = true;

    std::vector<std::pair<Rational, double>> polar;
    for (int s = 0; s < n; ++s) {
        if (!is_missing[s]) polar.emplace_back(Rational(s, n), r1);
    }
    for (int s = 0; s < n; ++s) {
        if (!is_missing[s]) continue;
        Rational turn(s, n);
        if (!aligned) {
            // nudge within the sector: offsets < 1/n keep the robot between
            // its own slot and the next one, so sector membership holds
            long long a = 1 + static_cast<long long>(rng() % 3);
            turn = turn + Rational(a, 4LL * n);
        }
        polar.emplace_back(turn, r2);
    }
    return Configuration::from_polar(center, std::move(polar));
}

Configuration random_two_circle(int n, uint64_t seed) {
    if (n < 3) throw Error("random_two_circle: n must be >= 3");
    std::mt19937_64 rng(seed ^ 0xa0761d6478bd642fULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Point center{unit(rng) * 8.0 - 4.0, unit(rng) * 8.0 - 4.0};
    double r2 = 0.5 + unit(rng) * 2.0;
    double r1 = r2 * (1.5 + unit(rng) * 2.0);
    int on_outer = 1 + static_cast<int>(rng() % static_cast<uint64_t>(n - 1));
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        double r = i < on_outer ? r1 : r2;
        pts.push_back(point_on_circle(center, r, Angle::radians(unit(rng) * kTwoPi)));
    }
    return Configuration::from_points(std::move(pts));
}

namespace {

std::pair<Point, Point> circle_intersection(const Circle& a, const Circle& b) {
    double d = dist(a.center, b.center);
    if (!(d > 0.0) || d > a.radius + b.radius || d < std::fabs(a.radius - b.radius)) {
        throw Error("circle_intersection: circles do not intersect in two points");
    }
    double x = (d * d - b.radius * b.radius + a.radius * a.radius) / (2.0 * d);
    double h2 = a.radius * a.radius - x * x;
    double h = std::sqrt(std::max(0.0, h2));
    double ux = (b.center.x - a.center.x) / d, uy = (b.center.y - a.center.y) / d;
    Point mid{a.center.x + ux * x, a.center.y + uy * x};
    return {Point{mid.x - uy * h, mid.y + ux * h}, Point{mid.x + uy * h, mid.y - ux * h}};
}

}  // namespace

Configuration ambiguous_concentric_8() {
    Circle c1({0, 0}, 2.0), c2({0, 0}, 1.7);
    Circle d1({3, 0}, 2.4), d2({3, 0}, 1.6);
    std::vector<Point> pts;
    for (const Circle* a : {&c1, &c2}) {
        for (const Circle* b : {&d1, &d2}) {
            auto [p, q] = circle_intersection(*a, *b);
            pts.push_back(p);
            pts.push_back(q);
        }
    }
    return Configuration::from_points(std::move(pts));
}

}  // namespace cfp::gen

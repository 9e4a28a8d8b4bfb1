#include <doctest.h>

#include <cmath>
#include <random>

#include "cfp/geometry.hpp"

using namespace cfp;

namespace {

bool near(double a, double b, double eps = 1e-9) { return close(a, b, eps); }
bool near(const Point& a, const Point& b, double eps = 1e-9) { return dist(a, b) <= eps; }

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK((a + Rational(1, 3)) == Rational(5, 6));
    CHECK((a - Rational(1, 2)) == Rational(0, 1));
    CHECK((a * Rational(4, 3)) == Rational(2, 3));
    CHECK((a / Rational(1, 4)) == Rational(2, 1));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-7, 5).mod1() == Rational(3, 5));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0, 1), Error);
}

TEST_CASE("rational overflow is detected") {
    Rational big(INT64_MAX, 3);
    CHECK_THROWS_AS(big * big, RationalOverflow);
}

TEST_CASE("angle arithmetic is exact on rational turns") {
    Angle a = Angle::turns(1, 3);
    Angle b = Angle::turns(5, 6);
    Angle sum = a + b;
    REQUIRE(sum.exact());
    CHECK(sum.turns_exact() == Rational(1, 6));  // wraps past a full turn
    Angle diff = a - b;
    REQUIRE(diff.exact());
    CHECK(diff.turns_exact() == Rational(1, 2));
    Angle scaled = a.scaled(Rational(3, 4));
    CHECK(scaled.turns_exact() == Rational(1, 4));
    CHECK(!(a + Angle::radians(0.1)).exact());
    CHECK(near(Angle::turns(1, 4).radians(), kTwoPi / 4.0));
}

TEST_CASE("angle comparison wraps at a full turn") {
    CHECK(angle_eq(Angle::radians(1e-12), Angle::radians(kTwoPi - 1e-12), 1e-9));
    CHECK(!angle_eq(Angle::radians(0.1), Angle::radians(0.2), 1e-9));
    CHECK(angle_eq(Angle::turns(1, 4), Angle::turns(5, 4), 1e-9));  // normalized
    CHECK(!angle_eq(Angle::turns(1, 4), Angle::turns(1, 3), 1e-9));
    CHECK(angle_is_zero(Angle::turns(0, 1), 1e-9));
}

TEST_CASE("angle printing") {
    CHECK(Angle::turns(1, 4).str() == "1/2 pi");
    CHECK(Angle::turns(1, 2).str() == "pi");
    CHECK(Angle::turns(0, 1).str() == "0");
    CHECK(Angle::turns(3, 4).str() == "3/2 pi");
}

TEST_CASE("point rejects non-finite coordinates") {
    CHECK_THROWS_AS(Point(std::nan(""), 0.0), Error);
    CHECK_THROWS_AS(Point(0.0, INFINITY), Error);
    CHECK_THROWS_AS(Circle({0, 0}, 0.0), Error);
    CHECK_THROWS_AS(Circle({0, 0}, -1.0), Error);
}

TEST_CASE("circumcenter of hand-solved triples") {
    CHECK(near(circumcenter({0, 0}, {2, 0}, {1, 1}), Point{1, 0}));
    CHECK(near(circumcenter({1, 0}, {0, 1}, {-1, 0}), Point{0, 0}));
    CHECK_THROWS_AS(circumcenter({0, 0}, {1, 0}, {2, 0}), CollinearPoints);
}

TEST_CASE("circumcenter result is equidistant from its inputs") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int t = 0; t < 50; ++t) {
        Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
        try {
            Point o = circumcenter(a, b, c);
            CHECK(near(dist(o, a), dist(o, b), 1e-7));
            CHECK(near(dist(o, a), dist(o, c), 1e-7));
        } catch (const CollinearPoints&) {
        }
    }
}

TEST_CASE("circumcenter is equivariant under similarity transforms") {
    Point a{0.3, -1.2}, b{2.4, 0.7}, c{-0.9, 1.8};
    Point o = circumcenter(a, b, c);
    double th = 0.83;
    auto t = [&](const Point& p) {
        return Point{p.x * std::cos(th) - p.y * std::sin(th) + 3.0,
                     p.x * std::sin(th) + p.y * std::cos(th) - 1.5};
    };
    CHECK(near(circumcenter(t(a), t(b), t(c)), t(o), 1e-8));
    auto mirror = [](const Point& p) { return Point{p.x, -p.y}; };
    CHECK(near(circumcenter(mirror(a), mirror(b), mirror(c)), mirror(o), 1e-8));
}

TEST_CASE("angle_ccw basic rays") {
    CHECK(near(angle_ccw({0, 0}, {1, 0}, {0, 1}).radians(), kTwoPi / 4.0));
    CHECK(near(angle_ccw({0, 0}, {1, 0}, {1, 0}).radians(), 0.0));
    CHECK(near(angle_ccw({0, 0}, {0, 1}, {1, 0}).radians(), 3.0 * kTwoPi / 4.0));
    CHECK_THROWS_AS(angle_ccw({0, 0}, {0, 0}, {1, 0}), DegenerateRay);
    CHECK_THROWS_AS(angle_ccw({0, 0}, {1, 0}, {0, 0}), DegenerateRay);
}

TEST_CASE("angle_ccw and its reverse sum to a full turn") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int t = 0; t < 50; ++t) {
        Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
        if (norm(a) < 1e-3 || norm(b) < 1e-3) continue;
        double s = angle_ccw({0, 0}, a, b).radians() + angle_ccw({0, 0}, b, a).radians();
        CHECK((near(s, kTwoPi, 1e-7) || near(s, 0.0, 1e-7)));  // 0 when collinear rays
    }
}

TEST_CASE("rotate_about hand cases") {
    CHECK(near(rotate_about({0, 0}, {1, 0}, Angle::turns(1, 4)), Point{0, 1}));
    CHECK(near(rotate_about({0, 0}, {2, 0}, Angle::turns(0, 1)), Point{2, 0}));
    double a = kTwoPi / 40.0;  // pi/20
    CHECK(near(rotate_about({0, 0}, {1, 0}, Angle::radians(a), Orientation::Cw),
               Point{std::cos(-a), std::sin(-a)}));
    CHECK_THROWS_AS(rotate_about({0, 0}, {0, 0}, Angle::turns(1, 4)), DegenerateRay);
}

TEST_CASE("rotation preserves distance to the center") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int t = 0; t < 50; ++t) {
        Point c{u(rng), u(rng)}, p{u(rng), u(rng)};
        if (dist(c, p) < 1e-6) continue;
        Point q = rotate_about(c, p, Angle::radians(u(rng)));
        CHECK(near(dist(c, p), dist(c, q), 1e-9));
    }
}

TEST_CASE("project_to_circle hand cases and idempotence") {
    Circle c2({0, 0}, 2.0);
    CHECK(near(project_to_circle(c2, {1, 0}), Point{2, 0}));
    CHECK(near(project_to_circle(c2, {2, 0}), Point{2, 0}));
    CHECK(near(project_to_circle(Circle({0, 0}, 5.0), {0.6, 0.8}), Point{3, 4}));
    CHECK_THROWS_AS(project_to_circle(c2, {0, 0}), DegenerateRay);

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int t = 0; t < 50; ++t) {
        Point p{u(rng), u(rng)};
        if (norm(p) < 1e-6) continue;
        Point q = project_to_circle(c2, p);
        CHECK(near(project_to_circle(c2, q), q, 1e-9));
        CHECK(near(norm(q), 2.0));
    }
}

TEST_CASE("segments_cross detects proper crossings only") {
    CHECK(segments_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK(!segments_cross({0, 0}, {1, 0}, {2, 0}, {3, 0}));
    CHECK(!segments_cross({0, 0}, {1, 1}, {1, 1}, {2, 0}));  // shared endpoint
    CHECK(!segments_cross({0, 0}, {1, 0}, {0, 1}, {1, 1}));  // parallel
}

TEST_CASE("point_on_circle matches polar form") {
    CHECK(near(point_on_circle({1, 1}, 2.0, Angle::turns(1, 4)), Point{1, 3}));
    CHECK(near(point_on_circle({0, 0}, 1.0, Angle::turns(1, 2)), Point{-1, 0}));
}

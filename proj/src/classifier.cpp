#include "cfp/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cfp {

std::string to_string(ConfigKind k) {
    switch (k) {
        case ConfigKind::RegularNGon: return "RegularNGon";
        case ConfigKind::StrictBiangular: return "StrictBiangular";
        case ConfigKind::QuasiAligned: return "QuasiAligned";
        case ConfigKind::QuasiArbitrary: return "QuasiArbitrary";
        case ConfigKind::Arbitrary: return "Arbitrary";
    }
    return "?";
}

namespace {

double config_span(const Configuration& config) {
    double s = 1.0;
    for (const auto& p : config.positions) s = std::max(s, std::fabs(p.x) + std::fabs(p.y));
    return s;
}

bool exact_center_matches(const Configuration& config, const Point& center) {
    if (!config.exact) return false;
    double scale = 1.0;
    for (double r : config.exact->radii) scale = std::max(scale, r);
    return dist(center, config.exact->center) <= config.epsilon * scale * 16.0;
}

/// Indices sorted by angle, counterclockwise.
std::vector<int> sorted_ccw(const std::vector<Angle>& theta) {
    std::vector<int> idx(theta.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return theta[a] < theta[b]; });
    return idx;
}

/// Cyclic gaps between consecutive angles in ccw order; gaps[i] is the angle
/// from order[i] to order[i+1].
std::vector<Angle> ccw_gaps(const std::vector<Angle>& theta, const std::vector<int>& order) {
    std::vector<Angle> gaps;
    size_t n = order.size();
    for (size_t i = 0; i < n; ++i) {
        gaps.push_back(theta[order[(i + 1) % n]] - theta[order[i]]);
    }
    return gaps;
}

}  // namespace

std::vector<Angle> polar_angles(const Configuration& config, const Point& center) {
    std::vector<Angle> theta;
    theta.reserve(config.positions.size());
    if (exact_center_matches(config, center)) {
        for (const auto& t : config.exact->turns) theta.push_back(Angle::turns(t));
        return theta;
    }
    for (const auto& p : config.positions) {
        theta.push_back(Angle::radians(std::atan2(p.y - center.y, p.x - center.x)));
    }
    return theta;
}

std::optional<Circle> common_circle(const Configuration& config) {
    const int n = config.n();
    if (n <= 2) return std::nullopt;
    const double eps = config.epsilon;

    Point center{0, 0};
    if (config.exact) {
        center = config.exact->center;
    } else {
        bool found = false;
        for (int c = 2; c < n && !found; ++c) {
            try {
                center = circumcenter(config.positions[0], config.positions[1],
                                      config.positions[c], eps);
                found = true;
            } catch (const CollinearPoints&) {
            }
        }
        if (!found) return std::nullopt;
    }

    double rsum = 0.0;
    for (const auto& p : config.positions) rsum += dist(p, center);
    double r = rsum / n;
    if (!(r > eps)) return std::nullopt;
    for (const auto& p : config.positions) {
        if (!close(dist(p, center), r, eps)) return std::nullopt;
    }
    return Circle(center, r);
}

std::optional<std::pair<Circle, Angle>> is_regular_ngon(const Configuration& config) {
    const int n = config.n();
    if (n == 2) {
        // Two distinct robots always form a regular 2-gon on the circle whose
        // diameter they span.
        double d = dist(config.positions[0], config.positions[1]);
        if (d <= config.epsilon) return std::nullopt;
        Point mid{(config.positions[0].x + config.positions[1].x) / 2,
                  (config.positions[0].y + config.positions[1].y) / 2};
        return std::make_pair(Circle(mid, d / 2), Angle::turns(1, 2));
    }
    auto circle = common_circle(config);
    if (!circle) return std::nullopt;
    auto theta = polar_angles(config, circle->center);
    auto order = sorted_ccw(theta);
    Angle delta = Angle::turns(1, n);
    for (const auto& g : ccw_gaps(theta, order)) {
        if (!angle_eq(g, delta, config.epsilon)) return std::nullopt;
    }
    return std::make_pair(*circle, delta);
}

std::optional<BiangularDescriptor> biangular(const Configuration& config) {
    const int n = config.n();
    if (n == 2) {
        auto reg = is_regular_ngon(config);
        if (!reg) return std::nullopt;
        BiangularDescriptor d{reg->first, reg->second, reg->second, {0, 1}, false};
        return d;
    }
    auto circle = common_circle(config);
    if (!circle) return std::nullopt;
    const double eps = config.epsilon;
    auto theta = polar_angles(config, circle->center);
    auto order = sorted_ccw(theta);
    auto gaps = ccw_gaps(theta, order);

    Angle a = gaps[0];
    if (angle_is_zero(a, eps)) return std::nullopt;  // coincident robots
    std::optional<Angle> b;
    std::vector<int> cls(n, 0);  // 0 -> a, 1 -> b
    for (int i = 1; i < n; ++i) {
        if (angle_eq(gaps[i], a, eps)) continue;
        if (!b) {
            if (angle_is_zero(gaps[i], eps)) return std::nullopt;
            b = gaps[i];
        } else if (!angle_eq(gaps[i], *b, eps)) {
            return std::nullopt;  // more than two gap values
        }
        cls[i] = 1;
    }
    bool strict = b.has_value();
    if (strict) {
        // two values must alternate around the whole cycle
        for (int i = 0; i < n; ++i) {
            if (cls[i] == cls[(i + 1) % n]) return std::nullopt;
        }
    }

    BiangularDescriptor d{*circle, a, b.value_or(a), {}, strict};
    if (d.beta < d.alpha) std::swap(d.alpha, d.beta);
    if (!d.alpha.exact() || !d.beta.exact()) {
        Angle sum = d.alpha + d.beta;
        if (!angle_eq(sum, Angle::turns(2, n), eps)) return std::nullopt;
    }
    // clockwise alternation, starting from the ccw-first robot
    d.alternation.push_back(order[0]);
    for (int i = n - 1; i >= 1; --i) d.alternation.push_back(order[i]);
    return d;
}

namespace {

/// Center equidistant from a,b and from c,d (intersection of the two
/// perpendicular bisectors), if the bisectors are not parallel.
std::optional<Point> bisector_intersection(const Point& a, const Point& b, const Point& c,
                                           const Point& d, double eps) {
    double ux = b.x - a.x, uy = b.y - a.y;
    double vx = d.x - c.x, vy = d.y - c.y;
    double det = ux * vy - uy * vx;
    double scale = std::max({1.0, std::hypot(ux, uy), std::hypot(vx, vy)});
    if (std::fabs(det) <= eps * scale * scale) return std::nullopt;
    double e1 = (ux * (a.x + b.x) + uy * (a.y + b.y)) / 2.0;
    double e2 = (vx * (c.x + d.x) + vy * (c.y + d.y)) / 2.0;
    return Point{(e1 * vy - uy * e2) / det, (ux * e2 - e1 * vx) / det};
}

std::optional<ConcentricPair> validate_center(const Configuration& config, const Point& center) {
    const double eps = config.epsilon;
    const int n = config.n();
    // at most two distance classes, with early exit
    double rep[2] = {0, 0};
    int count[2] = {0, 0};
    std::vector<int> cls(n, -1);
    int nclasses = 0;
    for (int i = 0; i < n; ++i) {
        double d = dist(config.positions[i], center);
        int c = -1;
        for (int j = 0; j < nclasses; ++j) {
            if (close(d, rep[j] / count[j], eps)) {
                c = j;
                break;
            }
        }
        if (c < 0) {
            if (nclasses == 2) return std::nullopt;
            c = nclasses++;
        }
        rep[c] += d;
        count[c] += 1;
        cls[i] = c;
    }
    if (nclasses != 2) return std::nullopt;
    double r0 = rep[0] / count[0], r1 = rep[1] / count[1];
    if (!(std::min(r0, r1) > eps)) return std::nullopt;  // radius must be > 0
    if (close(r0, r1, eps)) return std::nullopt;
    int outer_cls = r0 > r1 ? 0 : 1;
    ConcentricPair pair{Circle(center, std::max(r0, r1)), Circle(center, std::min(r0, r1))};
    for (int i = 0; i < n; ++i) {
        (cls[i] == outer_cls ? pair.on_outer : pair.on_inner).push_back(i);
    }
    return pair;
}

}  // namespace

std::vector<ConcentricPair> find_concentric_pairs(const Configuration& config) {
    const int n = config.n();
    const double eps = config.epsilon;
    const double span = config_span(config);
    std::vector<ConcentricPair> pairs;

    auto consider = [&](const Point& center) {
        auto pair = validate_center(config, center);
        if (!pair) return;
        for (const auto& p : pairs) {
            if (dist(p.outer.center, center) <= eps * span * 16.0 &&
                close(p.outer.radius, pair->outer.radius, eps) &&
                close(p.inner.radius, pair->inner.radius, eps)) {
                return;  // duplicate
            }
        }
        pairs.push_back(*pair);
    };

    if (config.exact) consider(config.exact->center);
    // Any valid pair splits the robots onto two circles, so at least three of
    // the first five robots share a circle and their circumcenter is the
    // pair's center. For n >= 9 the ten triples among the first five robots
    // therefore surface every pair; below that, enumerate everything.
    const int m = n >= 9 ? 5 : n;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (int k = j + 1; k < m; ++k) {
                try {
                    consider(circumcenter(config.positions[i], config.positions[j],
                                          config.positions[k], eps));
                } catch (const CollinearPoints&) {
                }
            }
        }
    }
    if (n <= 8) {
        // splits with <= 2 robots per circle leave no triple on one circle
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    for (int l = k + 1; l < n; ++l) {
                        if (k == i || k == j || l == i || l == j) continue;
                        auto c = bisector_intersection(config.positions[i], config.positions[j],
                                                       config.positions[k], config.positions[l],
                                                       eps);
                        if (c) consider(*c);
                    }
                }
            }
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const ConcentricPair& a, const ConcentricPair& b) {
        if (a.outer.center.x != b.outer.center.x) return a.outer.center.x < b.outer.center.x;
        if (a.outer.center.y != b.outer.center.y) return a.outer.center.y < b.outer.center.y;
        return a.outer.radius < b.outer.radius;
    });
    return pairs;
}

std::optional<SectorDecomposition> sector_decomposition(const ConcentricPair& pair,
                                                        const Configuration& config) {
    const int n = config.n();
    const double eps = config.epsilon;
    const Point center = pair.outer.center;
    auto theta = polar_angles(config, center);

    // |Pi| = n: all projections distinct
    auto order = sorted_ccw(theta);
    for (int i = 0; i < n; ++i) {
        if (angle_eq(theta[order[i]], theta[order[(i + 1) % n]], eps) && n > 1) {
            return std::nullopt;
        }
    }

    SectorDecomposition sd{pair, {}, {}, {}};
    for (int i = 0; i < n; ++i) {
        sd.projections.push_back(point_on_circle(center, pair.outer.radius, theta[i]));
        sd.proj_turns.push_back(theta[i]);
    }

    std::vector<int> c1 = pair.on_outer;
    std::sort(c1.begin(), c1.end(), [&](int a, int b) { return theta[a] < theta[b]; });
    const int k = static_cast<int>(c1.size());

    auto clockwise_offset = [&](const Angle& from, const Angle& to) { return from - to; };

    auto build_sector = [&](int b1_robot, int b2_robot, bool full) {
        Sector s;
        s.center = center;
        s.c2_radius = pair.inner.radius;
        s.b1_turn = theta[b1_robot];
        s.b2_turn = theta[b2_robot];
        s.full_turn = full;
        s.b1 = point_on_circle(center, pair.inner.radius, s.b1_turn);
        s.b2 = point_on_circle(center, pair.inner.radius, s.b2_turn);
        // collect inner robots strictly inside, clockwise from b1
        std::vector<std::pair<Angle, int>> members;
        for (int r : pair.on_inner) {
            Angle off = clockwise_offset(s.b1_turn, theta[r]);
            if (!full) {
                Angle span = s.span();
                if (!(off < span)) continue;  // outside this sector
            }
            members.emplace_back(off, r);
        }
        std::sort(members.begin(), members.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [off, r] : members) {
            s.inner_robots.push_back(r);
            s.inner_turns.push_back(theta[r]);
        }
        double span_turns = full ? 1.0 : s.span().turns_value();
        s.missing_count = std::max(0, static_cast<int>(std::lround(span_turns * n)) - 1);
        return s;
    };

    if (k == 1) {
        sd.sectors.push_back(build_sector(c1[0], c1[0], true));
    } else {
        // clockwise order: descending ccw angle of the leading boundary
        for (int j = k - 1; j >= 0; --j) {
            int b1_robot = c1[j];
            int b2_robot = c1[(j - 1 + k) % k];
            sd.sectors.push_back(build_sector(b1_robot, b2_robot, false));
        }
    }
    return sd;
}

std::optional<QuasiDescriptor> is_quasi_ngon(const Configuration& config) {
    const int n = config.n();
    if (n <= 8) throw TooFewRobots("is_quasi_ngon: requires n >= 9");
    const double eps = config.epsilon;

    auto pairs = find_concentric_pairs(config);
    if (pairs.size() != 1) return std::nullopt;
    auto sd = sector_decomposition(pairs[0], config);
    if (!sd) return std::nullopt;

    // C1 robots form a regular (k,n)-gon: every sector's span is a positive
    // multiple of 2pi/n, and each sector holds as many C2 robots as vertices
    // are missing in it.
    for (const auto& s : sd->sectors) {
        if (!s.full_turn) {
            Angle expected = Angle::turns(s.missing_count + 1, n);
            if (!angle_eq(s.span(), expected, eps)) return std::nullopt;
        }
        if (static_cast<int>(s.inner_robots.size()) != s.missing_count) return std::nullopt;
    }

    QuasiDescriptor q{pairs[0], *sd, static_cast<int>(pairs[0].on_outer.size()), n, false};

    // aligned iff the projection set coincides with a regular n-gon
    auto order = sorted_ccw(sd->proj_turns);
    q.aligned = true;
    Angle delta = Angle::turns(1, n);
    for (const auto& g : ccw_gaps(sd->proj_turns, order)) {
        if (!angle_eq(g, delta, eps)) {
            q.aligned = false;
            break;
        }
    }
    return q;
}

ConfigClass classify(const Configuration& config) {
    ConfigClass out;
    if (auto reg = is_regular_ngon(config)) {
        out.kind = ConfigKind::RegularNGon;
        out.circle = reg->first;
        out.delta = reg->second;
        return out;
    }
    if (config.n() >= 9) {
        if (auto q = is_quasi_ngon(config)) {
            out.kind = q->aligned ? ConfigKind::QuasiAligned : ConfigKind::QuasiArbitrary;
            out.quasi = std::move(q);
            return out;
        }
    }
    if (auto b = biangular(config); b && b->strict) {
        out.kind = ConfigKind::StrictBiangular;
        out.biangular = std::move(b);
        return out;
    }
    out.kind = ConfigKind::Arbitrary;
    return out;
}

}  // namespace cfp

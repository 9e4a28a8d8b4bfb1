#include "cfp/procedures.hpp"

#include <algorithm>
#include <cmath>

namespace cfp {

Point LocalFrame::to_local(const Point& g) const {
    double vx = g.x - origin.x, vy = g.y - origin.y;
    double t = -rotation.radians();
    double ct = std::cos(t), st = std::sin(t);
    double rx = vx * ct - vy * st;
    double ry = vx * st + vy * ct;
    if (handedness < 0) ry = -ry;
    return {rx * scale, ry * scale};
}

Point LocalFrame::to_global(const Point& l) const {
    double vx = l.x / scale, vy = l.y / scale;
    if (handedness < 0) vy = -vy;
    double t = rotation.radians();
    double ct = std::cos(t), st = std::sin(t);
    double rx = vx * ct - vy * st;
    double ry = vx * st + vy * ct;
    return {rx + origin.x, ry + origin.y};
}

Configuration view_config(const View& view) {
    Configuration cfg = Configuration::from_points(view.all(), view.epsilon);
    if (!view.rel_turns) return cfg;

    // locate the center from the raw points, then attach the exact turns
    Point center{0, 0};
    if (auto circle = common_circle(cfg)) {
        center = circle->center;
    } else {
        auto pairs = find_concentric_pairs(cfg);
        if (pairs.size() != 1) return cfg;  // no usable center; stay in radians mode
        center = pairs[0].outer.center;
    }
    PolarExact ex;
    ex.center = center;
    ex.turns = *view.rel_turns;
    for (const auto& p : cfg.positions) ex.radii.push_back(dist(p, center));
    cfg.exact = std::move(ex);
    return cfg;
}

// --- sector planning ------------------------------------------------------

std::vector<Angle> final_position_turns(const Sector& sector, int n) {
    std::vector<Angle> out;
    for (int k = 1; k <= sector.missing_count; ++k) {
        out.push_back(sector.b1_turn - Angle::turns(k, n));
    }
    return out;
}

std::vector<Point> find_final_pos(const Sector& sector, int n) {
    std::vector<Point> out;
    for (const auto& t : final_position_turns(sector, n)) {
        out.push_back(point_on_circle(sector.center, sector.c2_radius, t));
    }
    return out;
}

namespace {

bool on_some_final(const Angle& turn, const std::vector<Angle>& finals, double eps) {
    for (const auto& f : finals) {
        if (angle_eq(turn, f, eps)) return true;
    }
    return false;
}

SectorPlan plan_with_finals(const Sector& sector, std::vector<Angle> finals, double eps) {
    SectorPlan plan;
    plan.final_turns = std::move(finals);
    // inner robots are already ordered clockwise from b1
    for (size_t i = 0; i < sector.inner_robots.size(); ++i) {
        if (!on_some_final(sector.inner_turns[i], plan.final_turns, eps)) {
            plan.free_robots.push_back(sector.inner_robots[i]);
        }
    }
    for (const auto& f : plan.final_turns) {
        bool occupied = false;
        for (const auto& t : sector.inner_turns) {
            if (angle_eq(t, f, eps)) {
                occupied = true;
                break;
            }
        }
        if (!occupied) plan.free_final_turns.push_back(f);
    }
    if (plan.free_robots.empty()) return plan;

    int near_b1 = plan.free_robots.front();
    int near_b2 = plan.free_robots.back();
    plan.elected.push_back(near_b1);
    if (near_b2 != near_b1) plan.elected.push_back(near_b2);

    if (plan.elected.size() == 1) {
        if (plan.free_final_turns.size() != 1) {
            throw Error("associate: one elected robot but not exactly one free position");
        }
        plan.association[near_b1] = plan.free_final_turns.front();
    } else {
        plan.association[near_b1] = plan.free_final_turns.front();
        plan.association[near_b2] = plan.free_final_turns.back();
    }
    return plan;
}

Angle turn_of(const Sector& sector, const Point& p) {
    return Angle::radians(std::atan2(p.y - sector.center.y, p.x - sector.center.x));
}

}  // namespace

SectorPlan plan_sector(const Sector& sector, int n, double eps) {
    return plan_with_finals(sector, final_position_turns(sector, n), eps);
}

std::vector<int> elect_free_robots(const Sector& sector, const std::vector<Point>& final_positions,
                                   double eps) {
    std::vector<Angle> finals;
    for (const auto& p : final_positions) finals.push_back(turn_of(sector, p));
    SectorPlan plan;
    try {
        plan = plan_with_finals(sector, finals, eps);
    } catch (const Error&) {
        // election itself is still well defined when association is not
        plan.final_turns = finals;
        for (size_t i = 0; i < sector.inner_robots.size(); ++i) {
            if (!on_some_final(sector.inner_turns[i], finals, eps)) {
                plan.free_robots.push_back(sector.inner_robots[i]);
            }
        }
        if (!plan.free_robots.empty()) {
            plan.elected.push_back(plan.free_robots.front());
            if (plan.free_robots.back() != plan.free_robots.front()) {
                plan.elected.push_back(plan.free_robots.back());
            }
        }
    }
    return plan.elected;
}

std::map<int, Point> associate(const std::vector<int>& elected,
                               const std::vector<Point>& free_positions, const Sector& sector,
                               double eps) {
    if (elected.empty()) throw Error("associate: empty election");
    if (free_positions.size() < elected.size()) {
        throw Error("associate: fewer free positions than elected robots");
    }
    auto cw_offset = [&](const Angle& t) { return sector.b1_turn - t; };
    // positions ordered clockwise from b1
    std::vector<std::pair<Angle, Point>> pos;
    for (const auto& p : free_positions) pos.emplace_back(cw_offset(turn_of(sector, p)), p);
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    auto robot_offset = [&](int robot) {
        for (size_t i = 0; i < sector.inner_robots.size(); ++i) {
            if (sector.inner_robots[i] == robot) return cw_offset(sector.inner_turns[i]);
        }
        throw Error("associate: robot is not in the sector");
    };

    std::map<int, Point> out;
    if (elected.size() == 1) {
        if (free_positions.size() != 1) {
            throw Error("associate: one elected robot but not exactly one free position");
        }
        out[elected[0]] = pos.front().second;
        return out;
    }
    int a = elected[0], b = elected[1];
    if (robot_offset(b) < robot_offset(a)) std::swap(a, b);  // a is B1-closest
    out[a] = pos.front().second;
    out[b] = pos.back().second;
    return out;
}

// --- decision rules -------------------------------------------------------

MoveDecision polar_move(const View& view, const Point& center, const Angle& my_turn,
                        const Angle& target_turn, double radius_factor) {
    Angle dturn = target_turn - my_turn;
    Point on_ring = angle_is_zero(dturn, view.epsilon / 16.0)
                        ? view.my_position
                        : rotate_about(center, view.my_position, dturn, Orientation::Ccw);
    Point target{center.x + (on_ring.x - center.x) * radius_factor,
                 center.y + (on_ring.y - center.y) * radius_factor};
    MoveDecision d{target, std::nullopt};
    if (view.rel_turns && dturn.exact()) {
        d.exact = ExactMove{dturn.turns_exact(), radius_factor};
    }
    return d;
}

MoveDecision aqn_step(const View& view) {
    Configuration cfg = view_config(view);
    ConfigClass cls = classify(cfg);
    if (cls.kind != ConfigKind::QuasiAligned) {
        throw NotAlignedQuasi("aqn_step: configuration is not an aligned quasi n-gon");
    }
    const auto& pair = cls.quasi->pair;
    for (int i : pair.on_outer) {
        if (i == 0) return MoveDecision::stay(view);  // already on its projection
    }
    auto theta = polar_angles(cfg, pair.outer.center);
    double my_r = dist(view.my_position, pair.outer.center);
    return polar_move(view, pair.outer.center, theta[0], theta[0], pair.outer.radius / my_r);
}

MoveDecision qaq_step(const View& view) {
    Configuration cfg = view_config(view);
    ConfigClass cls = classify(cfg);
    if (cls.kind != ConfigKind::QuasiArbitrary) {
        throw NotArbitraryQuasi("qaq_step: configuration is not an arbitrary quasi n-gon");
    }
    const auto& quasi = *cls.quasi;
    for (int i : quasi.pair.on_outer) {
        if (i == 0) return MoveDecision::stay(view);
    }
    const Sector* mine = nullptr;
    for (const auto& s : quasi.sectors.sectors) {
        if (std::find(s.inner_robots.begin(), s.inner_robots.end(), 0) != s.inner_robots.end()) {
            mine = &s;
            break;
        }
    }
    if (!mine) throw Error("qaq_step: observer not found in any sector");

    SectorPlan plan = plan_sector(*mine, quasi.n, view.epsilon);
    auto it = plan.association.find(0);
    if (it == plan.association.end()) return MoveDecision::stay(view);

    auto theta = polar_angles(cfg, quasi.pair.outer.center);
    return polar_move(view, quasi.pair.outer.center, theta[0], it->second, 1.0);
}

MoveDecision bq_step(const View& view) {
    Configuration cfg = view_config(view);
    ConfigClass cls = classify(cfg);
    if (cls.kind != ConfigKind::StrictBiangular) {
        throw NotStrictBiangular("bq_step: configuration is not a strict biangular circle");
    }
    const auto& desc = *cls.biangular;
    const int n = cfg.n();
    const Point center = desc.circle.center;
    auto theta = polar_angles(cfg, center);

    // neighbor gaps around me (index 0)
    std::optional<Angle> ccw_gap, cw_gap;
    for (int i = 1; i < n; ++i) {
        Angle fwd = theta[i] - theta[0];
        Angle bwd = theta[0] - theta[i];
        if (!ccw_gap || fwd < *ccw_gap) ccw_gap = fwd;
        if (!cw_gap || bwd < *cw_gap) cw_gap = bwd;
    }
    // alpha is the strictly smaller of the two alternating angles, so exactly
    // one adjacent gap matches it
    Angle mag = (Angle::turns(1, n) - desc.alpha).scaled(Rational(1, 2));
    Angle target_turn;
    if (angle_eq(*ccw_gap, desc.alpha, view.epsilon)) {
        target_turn = theta[0] - mag;  // neighbor ahead ccw: move clockwise
    } else if (angle_eq(*cw_gap, desc.alpha, view.epsilon)) {
        target_turn = theta[0] + mag;
    } else {
        throw NotStrictBiangular("bq_step: no adjacent alpha-neighbor");
    }
    return polar_move(view, center, theta[0], target_turn, 2.0);
}

MoveDecision ab_stub(const View& view) { return MoveDecision::stay(view); }

MoveDecision ngon_dispatch(const View& view, const Rule& ab_rule) {
    const int n = view.n();
    if (n == 4 || n == 6 || n == 8) {
        throw UnsupportedN("ngon_dispatch: n in {4, 6, 8} is not supported");
    }
    if (n % 2 != 0) return ab_rule(view);

    Configuration cfg = view_config(view);
    ConfigClass cls = classify(cfg);
    switch (cls.kind) {
        case ConfigKind::RegularNGon: return MoveDecision::stay(view);
        case ConfigKind::QuasiAligned: return aqn_step(view);
        case ConfigKind::QuasiArbitrary: return qaq_step(view);
        case ConfigKind::StrictBiangular: return bq_step(view);
        case ConfigKind::Arbitrary: return ab_rule(view);
    }
    return MoveDecision::stay(view);
}

MoveDecision ngon_step(const View& view) { return ngon_dispatch(view, ab_stub); }

}  // namespace cfp

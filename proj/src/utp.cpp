#include "cfp/utp.hpp"

#include <algorithm>
#include <cmath>

#include "cfp/generator.hpp"

namespace cfp {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::GroupsMerged: return "groups-merged";
        case Verdict::Violated: return "violated";
    }
    return "?";
}

SpecialBiangular make_special_biangular(int n, const Angle& alpha) {
    if (n < 4 || n % 2 != 0) throw InvalidAlpha("make_special_biangular: n must be even, >= 4");
    Configuration config;
    try {
        config = gen::strict_biangular(n, alpha);
    } catch (const InvalidAlpha&) {
        throw;
    } catch (const Error& e) {
        throw InvalidAlpha(e.what());
    }
    SpecialBiangular s{std::move(config), Circle({0, 0}, 1.0), {}, {}, alpha,
                       Angle::turns(2, n) - alpha, {}};
    // generator emits robots as alternating G1, G2 pairs
    for (int i = 0; i < n; ++i) {
        (i % 2 == 0 ? s.group_g1 : s.group_g2).push_back(i);
    }
    // shared center origin; each robot's frame is rotated so it sees itself
    // at angle zero, which makes views within a group coincide
    auto theta = polar_angles(s.config, s.circle.center);
    for (int i = 0; i < n; ++i) {
        LocalFrame f;
        f.origin = s.circle.center;
        f.rotation = theta[i];
        s.frames.push_back(f);
    }
    return s;
}

namespace {

Angle robot_turn(const Configuration& config, const Point& center, int robot) {
    if (config.exact) return Angle::turns(config.exact->turns[robot]);
    const Point& p = config.positions[robot];
    return Angle::radians(std::atan2(p.y - center.y, p.x - center.x));
}

bool same_position(const Configuration& config, const Point& a, const Point& b) {
    return dist(a, b) <= config.epsilon * std::max(1.0, std::max(norm(a), norm(b)));
}

}  // namespace

AdversaryStepResult adversary_step(SpecialBiangular& state, const Rule& rule) {
    AdversaryStepResult res;
    const Configuration& config = state.config;
    auto frames = [&state](int, int robot) { return state.frames[robot]; };

    StepRecord rec = step(config, state.group_g1, rule, frames, config.time_index);
    if (is_regular_ngon(rec.after)) {
        // the proof's case 2: G2 moves in the same step to spoil the n-gon
        std::vector<int> all = state.group_g1;
        all.insert(all.end(), state.group_g2.begin(), state.group_g2.end());
        std::sort(all.begin(), all.end());
        rec = step(config, all, rule, frames, config.time_index);
        res.both_groups = true;
    }
    res.active = rec.active;

    // on-circle contract, checked at commit time
    for (int r : rec.active) {
        if (!close(dist(rec.after.positions[r], state.circle.center), state.circle.radius,
                   config.epsilon)) {
            throw RuleContractViolation("UTP rule moved robot " + std::to_string(r) +
                                        " off the circle");
        }
    }
    // merge hazard: a mover targeted some other robot's current position
    for (const auto& [r, target] : rec.targets) {
        for (int other = 0; other < config.n(); ++other) {
            if (other != r && same_position(config, target, config.positions[other])) {
                res.merge_hazard = true;
            }
        }
    }
    // within-group displacement agreement (identical views, deterministic rule)
    for (const auto& group : {state.group_g1, state.group_g2}) {
        std::optional<Angle> d0;
        for (int r : group) {
            if (std::find(rec.active.begin(), rec.active.end(), r) == rec.active.end()) continue;
            Angle d = robot_turn(rec.after, state.circle.center, r) -
                      robot_turn(rec.before, state.circle.center, r);
            if (!d0) {
                d0 = d;
            } else if (!angle_eq(d, *d0, config.epsilon)) {
                res.uniform = false;
            }
        }
    }

    state.config = rec.after;
    auto theta = polar_angles(state.config, state.circle.center);
    for (int i = 0; i < state.config.n(); ++i) state.frames[i].rotation = theta[i];

    // merged groups: the two (n/2)-gons coincide
    auto turns_of = [&](const std::vector<int>& group) {
        std::vector<Angle> t;
        for (int r : group) t.push_back(theta[r]);
        std::sort(t.begin(), t.end());
        return t;
    };
    auto t1 = turns_of(state.group_g1), t2 = turns_of(state.group_g2);
    res.groups_merged = true;
    for (size_t i = 0; i < t1.size(); ++i) {
        if (!angle_eq(t1[i], t2[i], config.epsilon)) {
            res.groups_merged = false;
            break;
        }
    }
    return res;
}

Certificate demonstrate(const Rule& rule, int n, const Angle& alpha, int budget) {
    if (budget < 1) throw Error("demonstrate: budget must be >= 1");
    Certificate cert;
    cert.n = n;
    cert.alpha = alpha;
    cert.budget = budget;

    SpecialBiangular state = make_special_biangular(n, alpha);
    for (int s = 1; s <= budget; ++s) {
        AdversaryStepResult res = adversary_step(state, rule);
        ConfigKind cls = classify(state.config).kind;
        cert.steps.push_back({s, cls, res.both_groups, res.merge_hazard});
        cert.steps_run = s;
        if (cls == ConfigKind::RegularNGon) {
            cert.verdict = Verdict::Violated;
            cert.message = "regular n-gon observed at step " + std::to_string(s) +
                           "; the rule escaped the adversarial schedule";
            return cert;
        }
        if (res.groups_merged) {
            cert.verdict = Verdict::GroupsMerged;
            cert.message = "groups merged at step " + std::to_string(s) +
                           "; separation is impossible from here";
            return cert;
        }
    }
    cert.verdict = Verdict::Certified;
    return cert;
}

// --- reference rules ------------------------------------------------------

namespace {

MoveDecision utp_midpoint(const View& view) {
    Configuration cfg = view_config(view);
    auto circle = common_circle(cfg);
    if (!circle) return MoveDecision::stay(view);
    auto theta = polar_angles(cfg, circle->center);
    std::optional<Angle> fwd, bwd;
    for (int i = 1; i < cfg.n(); ++i) {
        Angle f = theta[i] - theta[0];
        Angle b = theta[0] - theta[i];
        if (!fwd || f < *fwd) fwd = f;
        if (!bwd || b < *bwd) bwd = b;
    }
    // midpoint of the two adjacent neighbors, along the arc through me;
    // the gaps are halved individually so a negative difference never wraps
    Angle target = theta[0] + fwd->scaled(Rational(1, 2)) - bwd->scaled(Rational(1, 2));
    return polar_move(view, circle->center, theta[0], target, 1.0);
}

MoveDecision utp_bq_analogue(const View& view) {
    Configuration cfg = view_config(view);
    auto desc = biangular(cfg);
    if (!desc || !desc->strict) return MoveDecision::stay(view);
    const int n = cfg.n();
    auto theta = polar_angles(cfg, desc->circle.center);
    std::optional<Angle> fwd, bwd;
    for (int i = 1; i < n; ++i) {
        Angle f = theta[i] - theta[0];
        Angle b = theta[0] - theta[i];
        if (!fwd || f < *fwd) fwd = f;
        if (!bwd || b < *bwd) bwd = b;
    }
    // rotate away from the alpha-neighbor until that gap equals the regular
    // gap 2pi/n, the post-move separation the doubled-radius procedure
    // establishes; this is the on-circle analogue that keeps the move exact
    Angle mag = Angle::turns(1, n) - desc->alpha;
    Angle target;
    if (angle_eq(*fwd, desc->alpha, view.epsilon)) {
        target = theta[0] - mag;
    } else {
        target = theta[0] + mag;
    }
    return polar_move(view, desc->circle.center, theta[0], target, 1.0);
}

}  // namespace

std::vector<std::string> utp_rule_names() { return {"stay-put", "midpoint", "bq-analogue"}; }

Rule utp_rule(const std::string& name) {
    if (name == "stay-put") return ab_stub;
    if (name == "midpoint") return utp_midpoint;
    if (name == "bq-analogue") return utp_bq_analogue;
    throw Error("unknown UTP rule: " + name);
}

}  // namespace cfp

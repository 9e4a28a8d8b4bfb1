#include "cfp/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cfp {

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Formed: return "Formed";
        case Outcome::BudgetExhausted: return "BudgetExhausted";
        case Outcome::Quiescent: return "Quiescent";
    }
    return "?";
}

// --- scheduling -----------------------------------------------------------

int policy_idle_window(const SchedulerPolicy& policy, int n) {
    if (std::holds_alternative<Synchronous>(policy)) return 1;
    if (auto* rr = std::get_if<RoundRobin>(&policy)) {
        int b = std::max(1, rr->block_size);
        return (n + b - 1) / b;
    }
    if (auto* rf = std::get_if<SeededRandomFair>(&policy)) return rf->max_idle_window;
    return n;  // scripted: caller's responsibility; a loose default
}

Scheduler::Scheduler(SchedulerPolicy policy, int n) : policy_(std::move(policy)), n_(n) {
    idle_.assign(n_, 0);
    if (auto* rf = std::get_if<SeededRandomFair>(&policy_)) {
        rng_state_ = rf->seed ^ 0x9e3779b97f4a7c15ULL;
    }
    if (auto* sc = std::get_if<Scripted>(&policy_)) {
        if (sc->sets.empty()) throw Error("Scripted scheduler: empty activation list");
        for (const auto& s : sc->sets) {
            if (s.empty()) throw Error("Scripted scheduler: empty activation set");
        }
    }
}

namespace {

uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::vector<int> Scheduler::next() {
    std::vector<int> active;
    if (std::holds_alternative<Synchronous>(policy_)) {
        for (int i = 0; i < n_; ++i) active.push_back(i);
    } else if (auto* rr = std::get_if<RoundRobin>(&policy_)) {
        int b = std::max(1, rr->block_size);
        for (int j = 0; j < b && j < n_; ++j) {
            active.push_back((step_ * b + j) % n_);
        }
        std::sort(active.begin(), active.end());
        active.erase(std::unique(active.begin(), active.end()), active.end());
    } else if (auto* rf = std::get_if<SeededRandomFair>(&policy_)) {
        for (int i = 0; i < n_; ++i) {
            if (splitmix64(rng_state_) & 1) active.push_back(i);
        }
        // fairness: a robot idle for K steps already must run now
        for (int i = 0; i < n_; ++i) {
            if (idle_[i] >= rf->max_idle_window &&
                std::find(active.begin(), active.end(), i) == active.end()) {
                active.push_back(i);
            }
        }
        std::sort(active.begin(), active.end());
        if (active.empty()) active.push_back(static_cast<int>(splitmix64(rng_state_) % n_));
    } else {
        auto* sc = std::get_if<Scripted>(&policy_);
        active = sc->sets[step_ % sc->sets.size()];
    }
    for (int i = 0; i < n_; ++i) idle_[i] += 1;
    for (int i : active) idle_[i] = 0;
    step_ += 1;
    return active;
}

// --- frames ---------------------------------------------------------------

FrameSource identity_frames() {
    return [](int, int) { return LocalFrame::identity(); };
}

LocalFrame sample_frame(uint64_t seed, int step, int robot) {
    uint64_t s = seed;
    (void)splitmix64(s);
    s ^= static_cast<uint64_t>(step) * 0xd1342543de82ef95ULL;
    s ^= static_cast<uint64_t>(robot) * 0xaf251af3b0f025b5ULL;
    std::mt19937_64 rng(splitmix64(s));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    LocalFrame f;
    f.rotation = Angle::radians(unit(rng) * kTwoPi);
    f.handedness = (rng() & 1) ? 1 : -1;
    f.scale = std::exp(std::log(0.1) + unit(rng) * (std::log(10.0) - std::log(0.1)));
    f.origin = Point{unit(rng) * 20.0 - 10.0, unit(rng) * 20.0 - 10.0};
    return f;
}

FrameSource random_frames(uint64_t seed) {
    return [seed](int step, int robot) { return sample_frame(seed, step, robot); };
}

// --- execution ------------------------------------------------------------

View make_view(const Configuration& config, int robot, const LocalFrame& frame) {
    const int n = config.n();
    if (robot < 0 || robot >= n) throw Error("make_view: robot index out of range");
    View v;
    v.frame = frame;
    v.epsilon = config.epsilon;
    v.my_position = frame.to_local(config.positions[robot]);

    std::vector<std::pair<Point, int>> rest;
    for (int i = 0; i < n; ++i) {
        if (i != robot) rest.emplace_back(frame.to_local(config.positions[i]), i);
    }
    // deterministic order that carries no simulator index information
    std::sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
        if (a.first.x != b.first.x) return a.first.x < b.first.x;
        return a.first.y < b.first.y;
    });
    for (auto& [p, i] : rest) v.others.push_back(p);

    if (config.exact) {
        Rational h(frame.handedness, 1);
        const Rational& mine = config.exact->turns[robot];
        std::vector<Rational> rel;
        rel.push_back(Rational(0, 1));
        for (auto& [p, i] : rest) {
            rel.push_back(((config.exact->turns[i] - mine) * h).mod1());
        }
        v.rel_turns = std::move(rel);
    }
    return v;
}

StepRecord step(const Configuration& config, const std::vector<int>& active, const Rule& rule,
                const FrameSource& frames, int step_index) {
    if (active.empty()) throw Error("step: activation set must be nonempty");
    StepRecord rec;
    rec.before = config;
    rec.active = active;

    struct Committed {
        int robot;
        Point global_target;
        bool exact = false;
        Rational new_turn{0, 1};
        double new_radius = 0.0;
    };
    std::vector<Committed> moves;
    for (int r : active) {
        LocalFrame frame = frames(step_index, r);
        View view = make_view(config, r, frame);
        MoveDecision d;
        try {
            d = rule(view);
        } catch (const Error& e) {
            throw Error("step " + std::to_string(step_index) + ", robot " + std::to_string(r) +
                        ": " + e.what());
        }
        Committed c;
        c.robot = r;
        if (config.exact && d.exact) {
            Rational dglobal = (d.exact->dturn * Rational(frame.handedness, 1)).mod1();
            c.exact = true;
            c.new_turn = (config.exact->turns[r] + dglobal).mod1();
            c.new_radius = config.exact->radii[r] * d.exact->radius_factor;
            c.global_target =
                point_on_circle(config.exact->center, c.new_radius, Angle::turns(c.new_turn));
        } else {
            c.global_target = frame.to_global(d.target);
        }
        moves.push_back(c);
        rec.targets.emplace_back(r, c.global_target);
    }

    // collision diagnostics: straight-line trajectories of concurrent movers
    for (size_t i = 0; i < moves.size(); ++i) {
        for (size_t j = i + 1; j < moves.size(); ++j) {
            const auto& a = moves[i];
            const auto& b = moves[j];
            if (segments_cross(config.positions[a.robot], a.global_target,
                               config.positions[b.robot], b.global_target, config.epsilon)) {
                rec.warnings.push_back("trajectories cross: robots " + std::to_string(a.robot) +
                                       " and " + std::to_string(b.robot));
            }
        }
    }

    // atomic commit
    rec.after = config;
    rec.after.time_index = config.time_index + 1;
    bool keep_exact = config.exact.has_value();
    for (const auto& c : moves) keep_exact = keep_exact && c.exact;
    for (const auto& c : moves) {
        rec.after.positions[c.robot] = c.global_target;
        if (keep_exact) {
            rec.after.exact->turns[c.robot] = c.new_turn;
            rec.after.exact->radii[c.robot] = c.new_radius;
        }
    }
    if (!keep_exact) rec.after.exact.reset();
    if (keep_exact) rec.after.sync_positions();

    for (int i = 0; i < rec.after.n(); ++i) {
        for (int j = i + 1; j < rec.after.n(); ++j) {
            if (dist(rec.after.positions[i], rec.after.positions[j]) <= config.epsilon) {
                rec.warnings.push_back("robots " + std::to_string(i) + " and " +
                                       std::to_string(j) + " coincide");
            }
        }
    }
    return rec;
}

Trace run(const Configuration& config, const SchedulerPolicy& policy, const Rule& rule, int budget,
          const FrameSource& frames) {
    if (budget < 1) throw Error("run: budget must be >= 1");
    Trace trace;
    trace.initial = config;
    Configuration current = config;
    Scheduler sched(policy, config.n());
    const int quiet_window = std::max(config.n(), policy_idle_window(policy, config.n()));
    int quiet = 0;

    trace.class_sequence.push_back(classify(current).kind);
    if (trace.class_sequence.back() == ConfigKind::RegularNGon) {
        trace.outcome = Outcome::Formed;
        trace.formed_step = 0;
        return trace;
    }
    for (int s = 0; s < budget; ++s) {
        auto active = sched.next();
        StepRecord rec = step(current, active, rule, frames, s);
        bool moved = false;
        for (int i = 0; i < current.n(); ++i) {
            if (dist(rec.before.positions[i], rec.after.positions[i]) > 0.0) moved = true;
        }
        current = rec.after;
        trace.steps.push_back(std::move(rec));
        trace.class_sequence.push_back(classify(current).kind);
        if (trace.class_sequence.back() == ConfigKind::RegularNGon) {
            trace.outcome = Outcome::Formed;
            trace.formed_step = s + 1;
            return trace;
        }
        quiet = moved ? 0 : quiet + 1;
        if (quiet >= quiet_window) {
            trace.outcome = Outcome::Quiescent;
            return trace;
        }
    }
    trace.outcome = Outcome::BudgetExhausted;
    return trace;
}

bool fairness_check(const Trace& trace, int window) {
    if (trace.steps.empty()) throw Error("fairness_check: empty trace");
    const int n = trace.initial.n();
    std::vector<int> idle(n, 0);
    for (const auto& rec : trace.steps) {
        for (int i = 0; i < n; ++i) idle[i] += 1;
        for (int r : rec.active) idle[r] = 0;
        for (int i = 0; i < n; ++i) {
            if (idle[i] > window) return false;
        }
    }
    return true;
}

}  // namespace cfp

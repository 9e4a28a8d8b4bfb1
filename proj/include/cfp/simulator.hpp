#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cfp/procedures.hpp"

namespace cfp {

// --- scheduling -----------------------------------------------------------

struct Synchronous {};
struct RoundRobin {
    int block_size = 1;
};
struct SeededRandomFair {
    uint64_t seed = 0;
    int max_idle_window = 3;  // K: no robot idles more than K consecutive steps
};
struct Scripted {
    std::vector<std::vector<int>> sets;  // cycled when exhausted
};

using SchedulerPolicy = std::variant<Synchronous, RoundRobin, SeededRandomFair, Scripted>;

/// Steps a robot can sit idle under the policy before it is guaranteed a turn.
int policy_idle_window(const SchedulerPolicy& policy, int n);

/// Stateful activation-set source for one run.
class Scheduler {
public:
    Scheduler(SchedulerPolicy policy, int n);
    std::vector<int> next();

private:
    SchedulerPolicy policy_;
    int n_;
    int step_ = 0;
    uint64_t rng_state_ = 0;
    std::vector<int> idle_;
};

// --- frames ---------------------------------------------------------------

using FrameSource = std::function<LocalFrame(int step, int robot)>;

FrameSource identity_frames();

/// Fresh random similarity per robot per activation: uniform rotation, fair
/// reflection coin, log-uniform scale in [0.1, 10], bounded translation.
/// Deterministic in (seed, step, robot).
FrameSource random_frames(uint64_t seed);

LocalFrame sample_frame(uint64_t seed, int step, int robot);

// --- execution ------------------------------------------------------------

struct StepRecord {
    Configuration before;
    Configuration after;
    std::vector<int> active;
    std::vector<std::pair<int, Point>> targets;  // global, per active robot
    std::vector<std::string> warnings;
};

enum class Outcome { Formed, BudgetExhausted, Quiescent };

std::string to_string(Outcome o);

struct Trace {
    Configuration initial;
    std::vector<StepRecord> steps;
    Outcome outcome = Outcome::BudgetExhausted;
    int formed_step = -1;
    std::vector<ConfigKind> class_sequence;  // class at t_0, t_1, ...
};

View make_view(const Configuration& config, int robot, const LocalFrame& frame);

/// One SSM step: every active robot observes through a fresh local frame,
/// decides, and all moves commit simultaneously. Inactive robots are
/// untouched. Rule errors propagate with the robot's step context attached.
StepRecord step(const Configuration& config, const std::vector<int>& active, const Rule& rule,
                const FrameSource& frames = identity_frames(), int step_index = 0);

/// Iterate step until a regular n-gon forms, the budget runs out, or nothing
/// moves for a full idle window (quiescent).
Trace run(const Configuration& config, const SchedulerPolicy& policy, const Rule& rule,
          int budget, const FrameSource& frames = identity_frames());

/// True iff no robot is inactive for more than K consecutive steps.
bool fairness_check(const Trace& trace, int window);

}  // namespace cfp

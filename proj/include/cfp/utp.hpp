#pragma once

#include <string>
#include <vector>

#include "cfp/simulator.hpp"

namespace cfp {

/// Strict biangular circle with the two interleaved (n/2)-gon groups pinned,
/// plus the fixed per-robot frames that make views coincide within a group.
struct SpecialBiangular {
    Configuration config;
    Circle circle;
    std::vector<int> group_g1;
    std::vector<int> group_g2;
    Angle alpha;
    Angle beta;
    std::vector<LocalFrame> frames;  // fixed at construction, rotated with the robots
};

/// Throws InvalidAlpha unless 0 < alpha < 2pi/n; n must be even, >= 4.
SpecialBiangular make_special_biangular(int n, const Angle& alpha);

struct AdversaryStepResult {
    std::vector<int> active;
    bool both_groups = false;    // G2 had to be activated to spoil the n-gon
    bool merge_hazard = false;   // some mover targeted another robot's position
    bool groups_merged = false;  // G1 and G2 coincide; separation impossible
    bool uniform = true;         // per-group displacements agreed
};

/// One round of the adversarial schedule: activate all of G1; if G1's moves
/// together with the stationary G2 would complete a regular n-gon, activate
/// G2 in the same step as well. Commits the move into the state.
AdversaryStepResult adversary_step(SpecialBiangular& state, const Rule& rule);

enum class Verdict { Certified, GroupsMerged, Violated };

std::string to_string(Verdict v);

struct CertificateStep {
    int step = 0;
    ConfigKind cls = ConfigKind::Arbitrary;
    bool both_groups = false;
    bool merge_hazard = false;
};

struct Certificate {
    int n = 0;
    Angle alpha;
    int budget = 0;
    int steps_run = 0;
    Verdict verdict = Verdict::Certified;
    std::string message;
    std::vector<CertificateStep> steps;
};

/// Drive the rule through the adversarial schedule for up to budget steps and
/// record, per step, that no regular n-gon formed. A Violated verdict means
/// the rule escaped the schedule and is surfaced prominently by the CLI.
Certificate demonstrate(const Rule& rule, int n, const Angle& alpha, int budget);

/// Registered reference rules: "stay-put", "midpoint", "bq-analogue".
Rule utp_rule(const std::string& name);
std::vector<std::string> utp_rule_names();

}  // namespace cfp

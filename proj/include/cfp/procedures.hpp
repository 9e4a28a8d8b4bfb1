#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "cfp/classifier.hpp"

namespace cfp {

/// Similarity transform from the global frame into a robot's local frame:
/// translate by -origin, rotate by -rotation, mirror across the x axis when
/// handedness is -1, then scale.
struct LocalFrame {
    Point origin{0, 0};
    Angle rotation = Angle::turns(0, 1);
    double scale = 1.0;
    int handedness = 1;  // +1 or -1

    Point to_local(const Point& g) const;
    Point to_global(const Point& l) const;

    static LocalFrame identity() { return {}; }
};

/// A robot's snapshot: every position mapped into its local frame. others is
/// sorted by local coordinates so no simulator index order leaks through.
/// rel_turns, when present, carries the exact angular structure: entry i is
/// the handedness-adjusted rational turn of robot i relative to the observer,
/// aligned with [my_position, others...].
struct View {
    Point my_position;
    std::vector<Point> others;
    LocalFrame frame;
    double epsilon = 1e-9;
    std::optional<std::vector<Rational>> rel_turns;

    int n() const { return 1 + static_cast<int>(others.size()); }
    std::vector<Point> all() const {
        std::vector<Point> v{my_position};
        v.insert(v.end(), others.begin(), others.end());
        return v;
    }
};

/// Exact form of a move: rotate about the configuration's center by dturn
/// (local ccw) and scale the distance to the center by radius_factor. Lets
/// the simulator commit moves in the rational-angle representation even when
/// the decision was taken through an arbitrary local frame.
struct ExactMove {
    Rational dturn{0, 1};
    double radius_factor = 1.0;
};

struct MoveDecision {
    Point target;  // local frame
    std::optional<ExactMove> exact;

    static MoveDecision stay(const View& v) {
        return {v.my_position, ExactMove{}};
    }
};

using Rule = std::function<MoveDecision(const View&)>;

/// Configuration as seen in the view (observer at index 0), with the exact
/// polar block reattached when the view carries rel_turns. The block's turns
/// live in a rotated coordinate system, so only angle differences and radii
/// are meaningful; that is all the classifier and the rules consume.
Configuration view_config(const View& view);

// --- decision rules ------------------------------------------------------

/// Aligned quasi n-gon: robots on C2 move to their projection on C1.
MoveDecision aqn_step(const View& view);

/// Arbitrary quasi n-gon: the per-sector elected robots move to their
/// associated final positions on C2; everyone else stays.
MoveDecision qaq_step(const View& view);

/// Strict biangular circle: move away from the alpha-neighbor onto the
/// doubled-radius circle by pi/n - alpha/2.
MoveDecision bq_step(const View& view);

/// Pluggable arbitrary-to-biangular slot; the default stub stays put.
MoveDecision ab_stub(const View& view);

/// Top-level dispatcher. Throws UnsupportedN for n in {4, 6, 8}.
MoveDecision ngon_dispatch(const View& view, const Rule& ab_rule);

/// ngon_dispatch with the stay-put AB stub.
MoveDecision ngon_step(const View& view);

// --- QaQ helpers (also exposed on their own) ------------------------------

/// Final positions on C2 inside the sector, clockwise from B1 at multiples of
/// 2pi/n; exactly missing_count of them.
std::vector<Point> find_final_pos(const Sector& sector, int n);
std::vector<Angle> final_position_turns(const Sector& sector, int n);

/// Free robots closest to B1 and to B2 by central angle (at most two,
/// possibly one, empty when every robot sits on a final position).
std::vector<int> elect_free_robots(const Sector& sector,
                                   const std::vector<Point>& final_positions, double eps = 1e-9);

/// B1-closest robot -> B1-closest free position, B2-closest -> B2-closest.
std::map<int, Point> associate(const std::vector<int>& elected,
                               const std::vector<Point>& free_positions, const Sector& sector,
                               double eps = 1e-9);

/// Decision that rotates the observer about the configuration's center from
/// my_turn to target_turn and scales its center distance by radius_factor;
/// carries the exact form when the view does.
MoveDecision polar_move(const View& view, const Point& center, const Angle& my_turn,
                        const Angle& target_turn, double radius_factor);

/// The full per-sector computation on exact angles; the Point-based helpers
/// above wrap this.
struct SectorPlan {
    std::vector<Angle> final_turns;       // clockwise from b1
    std::vector<int> free_robots;         // clockwise from b1
    std::vector<Angle> free_final_turns;  // unoccupied finals, clockwise from b1
    std::vector<int> elected;             // size <= 2
    std::map<int, Angle> association;     // elected robot -> target turn
};
SectorPlan plan_sector(const Sector& sector, int n, double eps);

}  // namespace cfp

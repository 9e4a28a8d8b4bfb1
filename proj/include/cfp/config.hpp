#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cfp/geometry.hpp"

namespace cfp {

/// Exact polar annotation for a configuration: every robot sits at a rational
/// number of turns about a shared center. Radii stay as doubles; only the
/// angular structure needs exactness for classification.
struct PolarExact {
    Point center;
    std::vector<Rational> turns;  // normalized to [0,1), one per robot
    std::vector<double> radii;    // one per robot, > 0
};

/// Timestamped multiset of robot positions. The index order is simulator
/// bookkeeping only and never reaches a robot's decision rule.
struct Configuration {
    std::vector<Point> positions;
    int time_index = 0;
    double epsilon = 1e-9;
    std::optional<PolarExact> exact;  // authoritative when present

    int n() const { return static_cast<int>(positions.size()); }

    static Configuration from_points(std::vector<Point> pts, double eps = 1e-9) {
        if (pts.size() < 2) throw Error("Configuration: need at least 2 robots");
        Configuration c;
        c.positions = std::move(pts);
        c.epsilon = eps;
        return c;
    }

    static Configuration from_polar(const Point& center,
                                    std::vector<std::pair<Rational, double>> polar,
                                    double eps = 1e-9) {
        if (polar.size() < 2) throw Error("Configuration: need at least 2 robots");
        Configuration c;
        c.epsilon = eps;
        PolarExact ex;
        ex.center = center;
        for (auto& [t, r] : polar) {
            if (!(r > 0.0)) throw Error("Configuration: polar radius must be > 0");
            ex.turns.push_back(t.mod1());
            ex.radii.push_back(r);
        }
        c.exact = std::move(ex);
        c.sync_positions();
        return c;
    }

    /// Rederive cartesian positions from the exact block.
    void sync_positions() {
        if (!exact) return;
        positions.clear();
        positions.reserve(exact->turns.size());
        for (size_t i = 0; i < exact->turns.size(); ++i) {
            positions.push_back(
                point_on_circle(exact->center, exact->radii[i], Angle::turns(exact->turns[i])));
        }
    }
};

}  // namespace cfp

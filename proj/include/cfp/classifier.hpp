#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfp/config.hpp"

namespace cfp {

/// Robots on one circle whose consecutive central angles alternate between
/// alpha and beta (alpha <= beta, alpha + beta = 4pi/n). strict means
/// alpha != beta, which forces n even.
struct BiangularDescriptor {
    Circle circle;
    Angle alpha;
    Angle beta;
    std::vector<int> alternation;  // robot indices in clockwise order
    bool strict = false;
};

/// Two circles sharing a center, all robots on one circumference or the other,
/// both occupied. outer is C1 (greatest radius), inner is C2.
struct ConcentricPair {
    Circle outer;
    Circle inner;
    std::vector<int> on_outer;  // A, sorted
    std::vector<int> on_inner;  // B, sorted

    ConcentricPair(Circle o, Circle i) : outer(o), inner(i) {}
};

/// One sector of the C1 disk, bounded by the radii through two adjacent C1
/// robots. b1/b2 are the boundary radii's intersections with C2; the sector
/// extends clockwise from b1 to b2 (full turn when b1 == b2).
struct Sector {
    Point center;
    double c2_radius = 0.0;
    Point b1, b2;
    Angle b1_turn, b2_turn;           // polar angles of the boundary radii
    bool full_turn = false;           // single robot on C1
    std::vector<int> inner_robots;    // on C2 strictly inside, clockwise from b1
    std::vector<Angle> inner_turns;   // aligned with inner_robots
    int missing_count = 0;

    /// Clockwise angular extent of the sector.
    Angle span() const {
        return full_turn ? Angle::turns(0, 1) : b1_turn - b2_turn;
    }
};

struct SectorDecomposition {
    ConcentricPair pair;
    std::vector<Point> projections;  // per robot index (the set Pi)
    std::vector<Angle> proj_turns;   // per robot index
    std::vector<Sector> sectors;     // clockwise order
};

struct QuasiDescriptor {
    ConcentricPair pair;
    SectorDecomposition sectors;
    int k = 0;  // robots on C1
    int n = 0;
    bool aligned = false;
};

enum class ConfigKind { RegularNGon, StrictBiangular, QuasiAligned, QuasiArbitrary, Arbitrary };

struct ConfigClass {
    ConfigKind kind = ConfigKind::Arbitrary;
    std::optional<Circle> circle;  // RegularNGon
    std::optional<Angle> delta;    // RegularNGon
    std::optional<BiangularDescriptor> biangular;
    std::optional<QuasiDescriptor> quasi;
};

std::string to_string(ConfigKind k);

/// Circle through all robots, if any. Absent for n <= 2 (infinitely many
/// circles pass through one or two points).
std::optional<Circle> common_circle(const Configuration& config);

std::optional<std::pair<Circle, Angle>> is_regular_ngon(const Configuration& config);

std::optional<BiangularDescriptor> biangular(const Configuration& config);

/// Every concentric pair (within epsilon) partitioning the robots onto two
/// circumferences. Candidate centers come from circumcenters of robot triples
/// (for n >= 9 the triples among the first five robots suffice by pigeonhole);
/// for n <= 8, perpendicular-bisector intersections of disjoint robot pairs
/// are added so splits with at most two robots per circle are found too.
std::vector<ConcentricPair> find_concentric_pairs(const Configuration& config);

/// Present iff all n projections on C1 are distinct (|Pi| = n).
std::optional<SectorDecomposition> sector_decomposition(const ConcentricPair& pair,
                                                        const Configuration& config);

/// Throws TooFewRobots for n <= 8, where the concentric pair may be ambiguous.
std::optional<QuasiDescriptor> is_quasi_ngon(const Configuration& config);

ConfigClass classify(const Configuration& config);

/// Polar angle of each robot about the given center. Exact when the
/// configuration carries an exact block for (within epsilon) the same center.
std::vector<Angle> polar_angles(const Configuration& config, const Point& center);

}  // namespace cfp

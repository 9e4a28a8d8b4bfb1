#pragma once

#include <cstdint>

#include "cfp/config.hpp"

namespace cfp::gen {

Configuration regular_ngon(int n, const Point& center = {0, 0}, double radius = 1.0,
                           const Rational& phase = Rational(0, 1));

/// Alternating gaps alpha, beta = 4pi/n - alpha. Throws for odd n and for
/// alpha outside (0, 2pi/n). Exact when alpha is exact.
Configuration strict_biangular(int n, const Angle& alpha, const Point& center = {0, 0},
                               double radius = 1.0);

/// Quasi n-gon on circles of radius r1/r2; the missing C1 slots and, for the
/// arbitrary flavor, the inner displacements are drawn from the seed.
Configuration quasi_ngon(int n, bool aligned, uint64_t seed = 0, const Point& center = {0, 0},
                         double r1 = 2.0, double r2 = 1.0);

/// Raw-point configuration on two random concentric circles (no exact block);
/// exercises concentric-pair discovery from scratch.
Configuration random_two_circle(int n, uint64_t seed);

/// Eight points at the pairwise intersections of two distinct concentric
/// pairs, so both pairs validate.
Configuration ambiguous_concentric_8();

}  // namespace cfp::gen

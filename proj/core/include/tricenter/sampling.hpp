#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "tricenter/geom_core.hpp"

namespace tricenter {

using Rng = std::mt19937_64;

// Shape space: a = 1, b and c uniform in (0.05, 1.95), triangle inequalities
// satisfied with margin 0.02.
inline constexpr double kShapeLo = 0.05;
inline constexpr double kShapeHi = 1.95;
inline constexpr double kShapeMargin = 0.02;

bool in_shape_region(const Real& b, const Real& c);
Real uniform(Rng& rng, double lo, double hi);
SideLengths sample_shape(Rng& rng);

// Canonical placement of a sampled shape, then a random similarity
// (scale in [0.5, 3], rotation, translation). Orientation is preserved.
Triangle random_triangle(Rng& rng);
// Same, but guaranteed to be at least `min_dist` away from the equilateral
// shape in (b, c).
Triangle random_non_equilateral_triangle(Rng& rng, double min_dist = 0.05);

// Derivative-free local refinement inside the shape region; compass search
// with step halving. Returns the best (b, c) found.
std::pair<Real, Real> refine_shape(const std::function<Real(const Real&, const Real&)>& f, Real b, Real c,
                                   Real step, int max_iter = 200);

}  // namespace tricenter

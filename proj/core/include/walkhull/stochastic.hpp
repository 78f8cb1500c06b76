#pragma once

#include <span>

#include "walkhull/path.hpp"
#include "walkhull/rng.hpp"

namespace walkhull {

/// n independent standard normals. Rejects n = 0.
Vec gaussian_vector(std::size_t n, Rng& rng);

/// Standard Brownian motion in R^n on the given grid. The grid must start
/// at 0 and increase strictly; increments over consecutive intervals are
/// independent centered Gaussians with per-coordinate variance equal to
/// the interval length.
WalkPath sample_brownian(std::size_t n, std::span<const double> grid, Rng& rng);

/// Poisson point process on [0,1] with intensity alpha > 0. Count is
/// Poisson(alpha); given the count, events are i.i.d. uniform, sorted.
/// Sampled by CDF inversion for alpha <= 30 and by exponential gaps above,
/// so the law is exact at every intensity.
PoissonSample sample_poisson_times(double alpha, Rng& rng);

/// Brownian bridge in R^n from `a` at time 0 to `b` at time `horizon`,
/// sampled on a grid that must contain 0 and horizon. Built as the linear
/// interpolation of the endpoints plus a scaled standard bridge pinned to
/// zero, so the endpoint rows equal a and b exactly.
BridgePath sample_bridge(std::size_t n, double horizon, const Vec& a, const Vec& b,
                         std::span<const double> grid, Rng& rng);

/// Standard random walk on Z^n: each increment is +-e_j, uniform over the
/// 2n signed unit coordinate vectors; times are 0,1,...,steps.
WalkPath sample_lattice_walk(std::size_t n, std::size_t steps, Rng& rng);

/// Inserts new interior times into a Brownian path, drawing the inserted
/// values from the conditional (bridge) law given the bracketing values.
/// Existing knots are unchanged. New times must lie strictly inside the
/// path's span and must not duplicate any knot.
WalkPath refine_brownian(const WalkPath& path, std::span<const double> new_times, Rng& rng);

/// Brownian scale map: times become times * factor and points become
/// points * sqrt(factor), which preserves the Brownian law.
WalkPath rescaled(const WalkPath& path, double time_factor);

/// Value of the path at time t. The time must be a knot of the grid.
std::span<const double> path_value_at(const WalkPath& path, double t);

}  // namespace walkhull

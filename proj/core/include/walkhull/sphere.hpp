#pragma once

#include <cstdint>
#include <optional>

#include "walkhull/estimate.hpp"
#include "walkhull/hull.hpp"
#include "walkhull/path.hpp"
#include "walkhull/rng.hpp"

namespace walkhull {

/// Spherical Brownian sample: directions theta_k = B(T_k)/|B(T_k)| indexed
/// by both clocks. The spherical clock s accumulates ds = dt/|B(t)|^2 from
/// the Euclidean clock, which starts at T_0 = 1.
struct TimeChangedPath {
    std::size_t dim = 0;
    std::vector<double> spherical_times;
    std::vector<double> euclidean_times;
    PointList directions;
};

struct TimeChangeControl {
    /// Geometric Euclidean grid t_{k+1} = t_k * (1 + growth); the clock
    /// grows like e^{n t}, so uniform grids are hopeless.
    double growth = 1.0 / 64.0;
};

/// Covering checks run at spherical times first, first*factor, ...
struct CheckSchedule {
    double first = 1.0 / 32.0;
    double factor = 1.25;
};

struct CoveringOutcome {
    /// Bracket midpoint when detected; the censoring horizon when censored.
    double tau1 = 0.0;
    double bracket_low = 0.0;
    double bracket_high = 0.0;
    bool censored = false;
    int hull_checks = 0;
    int ambiguous_checks = 0;
    std::size_t final_point_count = 0;
};

/// Simulates the spherical Brownian motion up to spherical time s_max by
/// integrating the inverse clock 1/|B|^2 (trapezoid) along a geometric
/// Euclidean grid. Requires dim >= 3.
TimeChangedPath simulate_time_change(std::size_t n, double s_max, const TimeChangeControl& control,
                                     Rng& rng);

/// Euclidean clock at spherical time t, linearly interpolated between
/// samples. t must not exceed the sampled horizon.
double euclidean_clock_at(const TimeChangedPath& path, double t);

struct CoveringOptions {
    double s_max = 0.0;  // <= 0 selects 100 * ln(n)
    CheckSchedule schedule;
    TimeChangeControl control;
    double hull_tol = 1e-9;
    /// Optional row-major n x n orthogonal matrix applied to every sampled
    /// increment (used by rotation-invariance checks).
    const std::vector<double>* rotation = nullptr;
};

/// First scheduled check time at which the accumulated directions contain
/// the origin in the interior of their hull, bracketed by the preceding
/// check time; censored at s_max. Checks never consume randomness, so the
/// underlying path is independent of the schedule.
CoveringOutcome covering_time(std::size_t n, Rng& rng, const CoveringOptions& options = {});

/// Pure detection pass over a precomputed path (same logic covering_time
/// applies while simulating).
CoveringOutcome covering_scan(const TimeChangedPath& path, const CheckSchedule& schedule,
                              double s_max, double hull_tol = 1e-9);

/// Mean of tau1 over independent trials. Censored trials contribute s_max,
/// so the reported mean is a lower bound when censoring occurred; the
/// uncensored count is reported in `successes`. Throws if every trial
/// censored.
EstimateCI estimate_covering_mean(std::size_t n, std::int64_t trials, double s_max,
                                  std::uint64_t seed, int workers = 1, double confidence = 0.997);

/// The per-trial outcomes behind estimate_covering_mean.
std::vector<CoveringOutcome> covering_samples(std::size_t n, std::int64_t trials,
                                              const CoveringOptions& options, std::uint64_t seed,
                                              int workers = 1);

}  // namespace walkhull

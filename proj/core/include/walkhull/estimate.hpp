#pragma once

#include <cstdint>
#include <string>

namespace walkhull {

/// Monte Carlo proportion or mean with a confidence interval. Proportions
/// carry a Wilson score interval; means a normal interval with the sample
/// variance. Ambiguous hull verdicts are excluded from both numerator and
/// denominator and counted here.
struct EstimateCI {
    double estimate = 0.0;
    std::int64_t trials = 0;
    std::int64_t successes = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double confidence = 0.997;
    std::int64_t ambiguous_count = 0;
    /// Set when the interval carries no information (e.g. a single trial).
    bool degenerate = false;
};

/// Two-sided normal quantile: z with P(|Z| <= z) = confidence.
double z_from_confidence(double confidence);

/// Wilson score interval for `successes` out of `trials`.
EstimateCI wilson_interval(std::int64_t successes, std::int64_t trials, double confidence = 0.997);

/// Normal interval for a sample mean given sum and sum of squares.
EstimateCI mean_interval(double sum, double sum_sq, std::int64_t count, double confidence = 0.997);

}  // namespace walkhull

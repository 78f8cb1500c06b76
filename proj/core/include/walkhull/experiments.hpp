#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walkhull/estimate.hpp"
#include "walkhull/hull.hpp"
#include "walkhull/path.hpp"

namespace walkhull {

struct TrialConfig {
    std::int64_t trials = 10000;
    std::uint64_t seed = 0;
    int workers = 1;
    double confidence = 0.997;
    /// Estimators throw when the ambiguous-verdict rate exceeds this.
    double max_ambiguous_rate = 0.001;
};

/// p(n, alpha): probability that the origin is extremal for the Brownian
/// walk sampled at Poisson(alpha) times on [0,1]. Ambiguous verdicts are
/// excluded and counted.
EstimateCI estimate_extremal_probability(std::size_t n, double alpha, const TrialConfig& cfg);

/// Same event for the standard lattice walk with N steps.
EstimateCI estimate_discrete_probability(std::size_t n, std::size_t N, const TrialConfig& cfg);

/// P(S_j extremal in the walk S_1..S_N), decided by recentering the walk
/// at S_j and classifying the origin against both segments.
EstimateCI intermediate_point_probability(std::size_t n, std::size_t N, std::size_t j,
                                          const TrialConfig& cfg);

struct OffsetStartConfig : TrialConfig {
    /// Total sampling intensity of the Poisson times on [0, M]; fixed (not
    /// scaled with M) so Brownian rescaling is an exact distributional
    /// identity.
    double sampling_intensity = 200.0;
};

/// Probability that the origin is INTERIOR to the hull of a Brownian walk
/// started at distance L, observed at Poisson times on [0, M].
EstimateCI offset_start_probability(std::size_t n, double start_distance, double horizon,
                                    const OffsetStartConfig& cfg);

/// Extremality frequency for N i.i.d. standard Gaussian points (the
/// Monte Carlo side of the Wendel formula).
EstimateCI estimate_wendel_probability(std::size_t n, std::size_t N, const TrialConfig& cfg);

/// Per-trial extremality indicators at several intensities, coupled by
/// thinning one master marked Poisson process and one Brownian path, so
/// the indicator is non-increasing in alpha trial-by-trial, exactly.
/// alphas must be ascending. Returns verdicts[trial][alpha_index].
std::vector<std::vector<HullKind>> thinned_extremal_verdicts(std::size_t n,
                                                             const std::vector<double>& alphas,
                                                             const TrialConfig& cfg);

/// Per-trial lattice indicators at several lengths, coupled by truncating
/// one master walk (prefix coupling). Ns must be ascending.
std::vector<std::vector<HullKind>> prefix_discrete_verdicts(std::size_t n,
                                                            const std::vector<std::size_t>& Ns,
                                                            const TrialConfig& cfg);

/// Bisection bracket around the parameter value where the extremality
/// probability crosses 1/2. Endpoint estimates are separated from 1/2 at
/// the stated confidence when `converged`; otherwise the best partial
/// bracket is returned with a diagnostic.
struct ThresholdBracket {
    std::string param_name;
    double low = 0.0;
    double high = 0.0;
    EstimateCI low_evidence;
    EstimateCI high_evidence;
    std::int64_t trials_per_probe = 0;
    int probes = 0;
    bool converged = false;
    std::string diagnostic;
};

struct FindOptions : TrialConfig {
    int max_probes = 48;
};

/// Bisection on ln(alpha) for the intensity with p(n, alpha) = 1/2, using
/// thinning-coupled probes; stops when the bracket width is a factor <= 2.
ThresholdBracket find_alpha_half(std::size_t n, const FindOptions& cfg);

/// Bisection on N for the walk length with p(n, N) = 1/2 (prefix-coupled).
ThresholdBracket find_N_half(std::size_t n, const FindOptions& cfg);

}  // namespace walkhull

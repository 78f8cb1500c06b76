#include "walkhull/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "walkhull/parallel.hpp"
#include "walkhull/rng.hpp"
#include "walkhull/stochastic.hpp"

namespace walkhull {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

EstimateCI reduce_verdicts(const std::vector<HullKind>& verdicts, HullKind success_kind,
                           const TrialConfig& cfg) {
    std::int64_t successes = 0, ambiguous = 0;
    for (HullKind k : verdicts) {
        if (k == HullKind::Ambiguous)
            ++ambiguous;
        else if (k == success_kind)
            ++successes;
    }
    const std::int64_t trials = static_cast<std::int64_t>(verdicts.size());
    if (static_cast<double>(ambiguous) > cfg.max_ambiguous_rate * static_cast<double>(trials))
        throw std::runtime_error("ambiguous verdict rate exceeded " +
                                 std::to_string(cfg.max_ambiguous_rate) + " (" +
                                 std::to_string(ambiguous) + "/" + std::to_string(trials) + ")");
    EstimateCI e = wilson_interval(successes, trials - ambiguous, cfg.confidence);
    e.ambiguous_count = ambiguous;
    return e;
}

HullKind classify_kind(const PointList& points) {
    if (points.empty()) return HullKind::Extremal;  // the hull is {0}; trivially boundary
    return classify_origin(points).kind;
}

/// Brownian walk points at the given sorted times (excluding the anchor).
PointList brownian_points_at(std::size_t n, const std::vector<double>& times, Rng& rng) {
    PointList points(n);
    if (times.empty()) return points;
    std::vector<double> grid;
    grid.reserve(times.size() + 1);
    grid.push_back(0.0);
    grid.insert(grid.end(), times.begin(), times.end());
    const WalkPath path = sample_brownian(n, grid, rng);
    points.reserve(times.size());
    for (std::size_t i = 1; i < path.points.size(); ++i) points.push_back(path.points[i]);
    return points;
}

}  // namespace

EstimateCI estimate_extremal_probability(std::size_t n, double alpha, const TrialConfig& cfg) {
    require(n >= 1 && alpha > 0.0 && cfg.trials >= 1, "invalid estimate parameters");
    const auto verdicts =
        run_trials(static_cast<std::size_t>(cfg.trials), cfg.workers, [&](std::size_t idx) {
            Rng rng(cfg.seed, idx);
            const PoissonSample ps = sample_poisson_times(alpha, rng);
            return classify_kind(brownian_points_at(n, ps.event_times, rng));
        });
    return reduce_verdicts(verdicts, HullKind::Extremal, cfg);
}

EstimateCI estimate_discrete_probability(std::size_t n, std::size_t N, const TrialConfig& cfg) {
    require(n >= 1 && cfg.trials >= 1, "invalid estimate parameters");
    const auto verdicts =
        run_trials(static_cast<std::size_t>(cfg.trials), cfg.workers, [&](std::size_t idx) {
            Rng rng(cfg.seed, idx);
            const WalkPath walk = sample_lattice_walk(n, N, rng);
            PointList points(n);
            points.reserve(N);
            for (std::size_t i = 1; i <= N; ++i) points.push_back(walk.points[i]);
            return classify_kind(points);
        });
    return reduce_verdicts(verdicts, HullKind::Extremal, cfg);
}

EstimateCI intermediate_point_probability(std::size_t n, std::size_t N, std::size_t j,
                                          const TrialConfig& cfg) {
    require(j >= 1 && j < N, "intermediate index must satisfy 1 <= j < N");
    require(n >= 1 && cfg.trials >= 1, "invalid estimate parameters");
    const auto verdicts =
        run_trials(static_cast<std::size_t>(cfg.trials), cfg.workers, [&](std::size_t idx) {
            Rng rng(cfg.seed, idx);
            const WalkPath walk = sample_lattice_walk(n, N, rng);
            std::span<const double> center = walk.points[j];
            PointList points(n);
            points.reserve(N);
            Vec row(n);
            for (std::size_t i = 0; i <= N; ++i) {
                if (i == j) continue;
                std::span<const double> p = walk.points[i];
                for (std::size_t c = 0; c < n; ++c) row[c] = p[c] - center[c];
                points.push_back(row);
            }
            return classify_kind(points);
        });
    return reduce_verdicts(verdicts, HullKind::Extremal, cfg);
}

EstimateCI offset_start_probability(std::size_t n, double start_distance, double horizon,
                                    const OffsetStartConfig& cfg) {
    require(start_distance > 0.0, "start distance must be positive");
    require(horizon > 1.0, "horizon must exceed 1");
    require(n >= 1 && cfg.trials >= 1 && cfg.sampling_intensity > 0.0,
            "invalid estimate parameters");
    const auto verdicts =
        run_trials(static_cast<std::size_t>(cfg.trials), cfg.workers, [&](std::size_t idx) {
            Rng rng(cfg.seed, idx);
            PoissonSample ps = sample_poisson_times(cfg.sampling_intensity, rng);
            for (auto& t : ps.event_times) t *= horizon;

            std::vector<double> grid;
            grid.reserve(ps.event_times.size() + 1);
            grid.push_back(0.0);
            grid.insert(grid.end(), ps.event_times.begin(), ps.event_times.end());
            const WalkPath path = sample_brownian(n, grid, rng);

            // The walk starts at distance L; by rotation invariance the
            // direction is immaterial.
            PointList points(n);
            points.reserve(path.points.size());
            Vec row(n);
            for (std::size_t i = 0; i < path.points.size(); ++i) {
                std::span<const double> p = path.points[i];
                for (std::size_t c = 0; c < n; ++c) row[c] = p[c];
                row[0] += start_distance;
                points.push_back(row);
            }
            return classify_kind(points);
        });
    return reduce_verdicts(verdicts, HullKind::Interior, cfg);
}

EstimateCI estimate_wendel_probability(std::size_t n, std::size_t N, const TrialConfig& cfg) {
    require(n >= 1 && N >= 1 && cfg.trials >= 1, "invalid estimate parameters");
    const auto verdicts =
        run_trials(static_cast<std::size_t>(cfg.trials), cfg.workers, [&](std::size_t idx) {
            Rng rng(cfg.seed, idx);
            PointList points(n);
            points.reserve(N);
            for (std::size_t i = 0; i < N; ++i) points.push_back(gaussian_vector(n, rng));
            return classify_kind(points);
        });
    return reduce_verdicts(verdicts, HullKind::Extremal, cfg);
}

namespace {

/// One marked master process per trial: strip j of unit intensity carries
/// marks in (j, j+1], so the sub-process with marks <= alpha is
/// Poisson(alpha) and the level sets are nested in alpha.
struct MarkedProcess {
    std::vector<double> times;  // sorted
    std::vector<double> marks;  // aligned with times
};

MarkedProcess sample_marked_process(double cap, Rng& rng) {
    MarkedProcess mp;
    const int strips = static_cast<int>(std::ceil(cap));
    std::vector<std::pair<double, double>> events;
    for (int j = 0; j < strips; ++j) {
        const PoissonSample strip = sample_poisson_times(1.0, rng);
        for (double t : strip.event_times)
            events.emplace_back(t, static_cast<double>(j) + rng.uniform_open01());
    }
    std::sort(events.begin(), events.end());
    mp.times.reserve(events.size());
    mp.marks.reserve(events.size());
    for (const auto& [t, m] : events) {
        mp.times.push_back(t);
        mp.marks.push_back(m);
    }
    return mp;
}

std::vector<HullKind> thinned_trial(std::size_t n, const std::vector<double>& alphas, double cap,
                                    Rng& rng) {
    const MarkedProcess mp = sample_marked_process(cap, rng);
    const PointList master = brownian_points_at(n, mp.times, rng);
    std::vector<HullKind> verdicts;
    verdicts.reserve(alphas.size());
    PointList subset(n);
    for (double alpha : alphas) {
        subset.clear();
        for (std::size_t i = 0; i < master.size(); ++i)
            if (mp.marks[i] <= alpha) subset.push_back(master[i]);
        verdicts.push_back(classify_kind(subset));
    }
    return verdicts;
}

}  // namespace

std::vector<std::vector<HullKind>> thinned_extremal_verdicts(std::size_t n,
                                                             const std::vector<double>& alphas,
                                                             const TrialConfig& cfg) {
    require(!alphas.empty() && std::is_sorted(alphas.begin(), alphas.end()),
            "alphas must be ascending");
    require(alphas.front() > 0.0, "intensities must be positive");
    const double cap = alphas.back();
    return run_trials(static_cast<std::size_t>(cfg.trials), cfg.workers, [&](std::size_t idx) {
        Rng rng(cfg.seed, idx);
        return thinned_trial(n, alphas, cap, rng);
    });
}

std::vector<std::vector<HullKind>> prefix_discrete_verdicts(std::size_t n,
                                                            const std::vector<std::size_t>& Ns,
                                                            const TrialConfig& cfg) {
    require(!Ns.empty() && std::is_sorted(Ns.begin(), Ns.end()), "lengths must be ascending");
    const std::size_t cap = Ns.back();
    return run_trials(static_cast<std::size_t>(cfg.trials), cfg.workers, [&](std::size_t idx) {
        Rng rng(cfg.seed, idx);
        const WalkPath walk = sample_lattice_walk(n, cap, rng);
        std::vector<HullKind> verdicts;
        verdicts.reserve(Ns.size());
        PointList prefix(n);
        prefix.reserve(cap);
        std::size_t filled = 0;
        for (std::size_t N : Ns) {
            for (; filled < N; ++filled) prefix.push_back(walk.points[filled + 1]);
            verdicts.push_back(classify_kind(prefix));
        }
        return verdicts;
    });
}

namespace {

enum class Side { Above, Below, Unseparated };

Side separation(const EstimateCI& e) {
    if (e.ci_low > 0.5) return Side::Above;
    if (e.ci_high < 0.5) return Side::Below;
    return Side::Unseparated;
}

}  // namespace

ThresholdBracket find_alpha_half(std::size_t n, const FindOptions& cfg) {
    require(n >= 1 && cfg.trials >= 1, "invalid search parameters");

    ThresholdBracket bracket;
    bracket.param_name = "alpha";
    bracket.trials_per_probe = cfg.trials;

    auto probe = [&](double alpha) {
        ++bracket.probes;
        const auto verdicts = thinned_extremal_verdicts(n, {alpha}, cfg);
        std::vector<HullKind> flat;
        flat.reserve(verdicts.size());
        for (const auto& v : verdicts) flat.push_back(v[0]);
        return reduce_verdicts(flat, HullKind::Extremal, cfg);
    };

    // Expansion: walk a factor-4 ladder until both sides of 1/2 are pinned.
    double lo = 1.0, hi = 0.0;
    EstimateCI lo_ci, hi_ci;
    double alpha = 1.0;
    while (bracket.probes < cfg.max_probes) {
        const EstimateCI e = probe(alpha);
        const Side side = separation(e);
        if (side == Side::Above) {
            lo = alpha;
            lo_ci = e;
            alpha *= 4.0;
        } else if (side == Side::Below) {
            hi = alpha;
            hi_ci = e;
            if (lo < alpha && lo_ci.trials > 0) break;
            alpha *= 0.25;
            if (alpha < 1e-6) break;
        } else {
            // Near the threshold: nudge outward to pin the nearer endpoint.
            alpha *= (lo == 0.0 || alpha > lo) ? 4.0 : 0.25;
        }
        if (hi > 0.0 && lo > 0.0 && lo < hi) break;
    }
    if (!(lo > 0.0 && hi > lo)) {
        bracket.low = lo;
        bracket.high = hi > 0.0 ? hi : alpha;
        bracket.low_evidence = lo_ci;
        bracket.high_evidence = hi_ci;
        bracket.diagnostic = "probe budget exhausted before both endpoints were separated";
        return bracket;
    }

    // Bisection on ln(alpha) down to a factor-2 bracket.
    while (hi / lo > 2.0 && bracket.probes < cfg.max_probes) {
        const double mid = std::sqrt(lo * hi);
        const EstimateCI e = probe(mid);
        const Side side = separation(e);
        if (side == Side::Above) {
            lo = mid;
            lo_ci = e;
        } else if (side == Side::Below) {
            hi = mid;
            hi_ci = e;
        } else {
            bracket.diagnostic = "midpoint not separable from 1/2 at this trial count";
            break;
        }
    }

    bracket.low = lo;
    bracket.high = hi;
    bracket.low_evidence = lo_ci;
    bracket.high_evidence = hi_ci;
    bracket.converged = hi / lo <= 2.0 + 1e-12 && bracket.diagnostic.empty();
    if (!bracket.converged && bracket.diagnostic.empty())
        bracket.diagnostic = "probe budget exhausted";
    return bracket;
}

ThresholdBracket find_N_half(std::size_t n, const FindOptions& cfg) {
    require(n >= 1 && cfg.trials >= 1, "invalid search parameters");

    ThresholdBracket bracket;
    bracket.param_name = "N";
    bracket.trials_per_probe = cfg.trials;

    auto probe = [&](std::size_t N) {
        ++bracket.probes;
        const auto verdicts = prefix_discrete_verdicts(n, {N}, cfg);
        std::vector<HullKind> flat;
        flat.reserve(verdicts.size());
        for (const auto& v : verdicts) flat.push_back(v[0]);
        return reduce_verdicts(flat, HullKind::Extremal, cfg);
    };

    std::size_t lo = 0, hi = 0;
    EstimateCI lo_ci, hi_ci;
    std::size_t N = std::max<std::size_t>(n, 2);
    while (bracket.probes < cfg.max_probes) {
        const EstimateCI e = probe(N);
        const Side side = separation(e);
        if (side == Side::Above) {
            lo = N;
            lo_ci = e;
            N *= 4;
        } else if (side == Side::Below) {
            hi = N;
            hi_ci = e;
            if (lo > 0) break;
            N = std::max<std::size_t>(1, N / 4);
            if (N == 1) break;
        } else {
            N = (lo == 0 || N > lo) ? N * 4 : std::max<std::size_t>(1, N / 4);
        }
        if (lo > 0 && hi > lo) break;
    }
    if (!(lo > 0 && hi > lo)) {
        bracket.low = static_cast<double>(lo);
        bracket.high = static_cast<double>(hi > 0 ? hi : N);
        bracket.low_evidence = lo_ci;
        bracket.high_evidence = hi_ci;
        bracket.diagnostic = "probe budget exhausted before both endpoints were separated";
        return bracket;
    }

    while (hi > 2 * lo && hi - lo > 1 && bracket.probes < cfg.max_probes) {
        const std::size_t mid = std::max(
            lo + 1, static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(lo) *
                                                                    static_cast<double>(hi)))));
        if (mid >= hi) break;
        const EstimateCI e = probe(mid);
        const Side side = separation(e);
        if (side == Side::Above) {
            lo = mid;
            lo_ci = e;
        } else if (side == Side::Below) {
            hi = mid;
            hi_ci = e;
        } else {
            bracket.diagnostic = "midpoint not separable from 1/2 at this trial count";
            break;
        }
    }

    bracket.low = static_cast<double>(lo);
    bracket.high = static_cast<double>(hi);
    bracket.low_evidence = lo_ci;
    bracket.high_evidence = hi_ci;
    bracket.converged = (hi <= 2 * lo || hi - lo <= 1) && bracket.diagnostic.empty();
    if (!bracket.converged && bracket.diagnostic.empty())
        bracket.diagnostic = "probe budget exhausted";
    return bracket;
}

}  // namespace walkhull

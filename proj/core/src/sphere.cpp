#include "walkhull/sphere.hpp"

#include <cmath>
#include <stdexcept>

#include "walkhull/parallel.hpp"
#include "walkhull/stochastic.hpp"

namespace walkhull {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

/// Advances the Euclidean Brownian path on a geometric grid while
/// accumulating the spherical clock by trapezoid rule.
class TimeChangeStepper {
public:
    TimeChangeStepper(std::size_t n, const TimeChangeControl& control,
                      const std::vector<double>* rotation, Rng& rng)
        : n_(n), growth_(control.growth), rotation_(rotation), rng_(rng), b_(n), increment_(n) {
        require(n >= 3, "time change requires dimension >= 3");
        require(growth_ > 0.0, "grid growth must be positive");
        if (rotation_ != nullptr)
            require(rotation_->size() == n * n, "rotation matrix must be n x n");
        // The path is observed from Euclidean clock 1; B(1) is standard normal.
        draw_increment(1.0);
        b_ = increment_;
        const double bb = norm2(b_);
        require(bb > 1e-300, "initial radius underflow");
        integrand_ = 1.0 / bb;
    }

    double spherical_time() const { return spherical_; }
    double euclidean_time() const { return euclidean_; }
    const Vec& value() const { return b_; }

    Vec direction() const {
        Vec d = b_;
        const double nrm = std::sqrt(norm2(b_));
        for (auto& c : d) c /= nrm;
        return d;
    }

    void step() {
        const double du = euclidean_ * growth_;
        draw_increment(du);
        for (std::size_t j = 0; j < n_; ++j) b_[j] += increment_[j];
        const double bb = norm2(b_);
        if (bb <= 1e-300) throw std::runtime_error("radius underflow during time change");
        const double f = 1.0 / bb;
        spherical_ += 0.5 * (integrand_ + f) * du;
        integrand_ = f;
        euclidean_ += du;
    }

private:
    void draw_increment(double dt) {
        const double sd = std::sqrt(dt);
        if (rotation_ == nullptr) {
            for (std::size_t j = 0; j < n_; ++j) increment_[j] = sd * rng_.gaussian();
        } else {
            Vec raw(n_);
            for (std::size_t j = 0; j < n_; ++j) raw[j] = sd * rng_.gaussian();
            for (std::size_t i = 0; i < n_; ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j < n_; ++j) acc += (*rotation_)[i * n_ + j] * raw[j];
                increment_[i] = acc;
            }
        }
    }

    std::size_t n_;
    double growth_;
    const std::vector<double>* rotation_;
    Rng& rng_;
    Vec b_;
    Vec increment_;
    double euclidean_ = 1.0;
    double spherical_ = 0.0;
    double integrand_ = 0.0;
};

/// Shared covering detection: feed directions in spherical-time order; hull
/// checks fire at schedule times over everything sampled strictly before.
class CoveringDetector {
public:
    CoveringDetector(std::size_t n, const CheckSchedule& schedule, double s_max, double hull_tol)
        : n_(n), schedule_(schedule), s_max_(s_max), tol_(hull_tol), directions_(n) {
        require(schedule.first > 0.0 && schedule.factor > 1.0, "invalid check schedule");
        require(s_max >= 0.0, "censoring horizon must be nonnegative");
        next_check_ = schedule.first;
    }

    bool feed(double s, const Vec& direction) {
        while (!detected_ && next_check_ <= s_max_ && s >= next_check_) run_check();
        directions_.push_back(direction);
        times_.push_back(s);
        return detected_;
    }

    bool detected() const { return detected_; }

    CoveringOutcome finish() {
        while (!detected_ && next_check_ <= s_max_) run_check();
        CoveringOutcome out;
        out.hull_checks = checks_;
        out.ambiguous_checks = ambiguous_;
        out.final_point_count = directions_.size();
        if (detected_) {
            out.bracket_low = prev_check_;
            out.bracket_high = found_check_;
            out.tau1 = 0.5 * (prev_check_ + found_check_);
        } else {
            out.censored = true;
            out.tau1 = s_max_;
            out.bracket_low = s_max_;
            out.bracket_high = s_max_;
        }
        return out;
    }

private:
    void run_check() {
        if (directions_.size() >= n_ + 1) {  // fewer points can never surround 0
            ++checks_;
            ClassifyOptions opts;
            opts.tol = tol_;
            opts.assume_clean = true;
            opts.compute_depth = false;
            opts.warm = &warm_;
            const HullVerdict verdict = classify_origin(directions_, opts);
            if (verdict.kind == HullKind::Interior) {
                detected_ = true;
                found_check_ = next_check_;
                return;
            }
            if (verdict.kind == HullKind::Ambiguous) ++ambiguous_;
        }
        prev_check_ = next_check_;
        next_check_ *= schedule_.factor;
    }

    std::size_t n_;
    CheckSchedule schedule_;
    double s_max_;
    double tol_;
    PointList directions_;
    std::vector<double> times_;
    MinNormWarmStart warm_;
    double prev_check_ = 0.0;
    double next_check_ = 0.0;
    double found_check_ = 0.0;
    bool detected_ = false;
    int checks_ = 0;
    int ambiguous_ = 0;
};

double default_s_max(std::size_t n, double requested) {
    return requested > 0.0 ? requested : 100.0 * std::log(static_cast<double>(n));
}

}  // namespace

TimeChangedPath simulate_time_change(std::size_t n, double s_max, const TimeChangeControl& control,
                                     Rng& rng) {
    require(s_max >= 0.0, "spherical horizon must be nonnegative");
    TimeChangeStepper stepper(n, control, nullptr, rng);

    TimeChangedPath path;
    path.dim = n;
    path.directions = PointList(n);
    path.spherical_times.push_back(0.0);
    path.euclidean_times.push_back(1.0);
    path.directions.push_back(stepper.direction());

    while (stepper.spherical_time() < s_max) {
        stepper.step();
        path.spherical_times.push_back(stepper.spherical_time());
        path.euclidean_times.push_back(stepper.euclidean_time());
        path.directions.push_back(stepper.direction());
    }
    return path;
}

double euclidean_clock_at(const TimeChangedPath& path, double t) {
    require(t >= 0.0, "spherical time must be nonnegative");
    require(!path.spherical_times.empty() && path.spherical_times.back() >= t,
            "spherical time beyond the sampled horizon");
    if (t == 0.0) return path.euclidean_times.front();
    std::size_t k = 1;
    while (path.spherical_times[k] < t) ++k;
    const double s0 = path.spherical_times[k - 1], s1 = path.spherical_times[k];
    const double u0 = path.euclidean_times[k - 1], u1 = path.euclidean_times[k];
    const double w = (t - s0) / (s1 - s0);
    return u0 + w * (u1 - u0);
}

CoveringOutcome covering_time(std::size_t n, Rng& rng, const CoveringOptions& options) {
    const double s_max = default_s_max(n, options.s_max);
    TimeChangeStepper stepper(n, options.control, options.rotation, rng);
    CoveringDetector detector(n, options.schedule, s_max, options.hull_tol);

    detector.feed(0.0, stepper.direction());
    while (!detector.detected() && stepper.spherical_time() < s_max) {
        stepper.step();
        detector.feed(stepper.spherical_time(), stepper.direction());
    }
    return detector.finish();
}

CoveringOutcome covering_scan(const TimeChangedPath& path, const CheckSchedule& schedule,
                              double s_max, double hull_tol) {
    CoveringDetector detector(path.dim, schedule, s_max, hull_tol);
    Vec dir(path.dim);
    for (std::size_t k = 0; k < path.directions.size(); ++k) {
        std::span<const double> row = path.directions[k];
        dir.assign(row.begin(), row.end());
        if (detector.feed(path.spherical_times[k], dir)) break;
    }
    return detector.finish();
}

std::vector<CoveringOutcome> covering_samples(std::size_t n, std::int64_t trials,
                                              const CoveringOptions& options, std::uint64_t seed,
                                              int workers) {
    require(trials >= 1, "need at least one trial");
    return run_trials(static_cast<std::size_t>(trials), workers, [&](std::size_t idx) {
        Rng rng(seed, idx);
        return covering_time(n, rng, options);
    });
}

EstimateCI estimate_covering_mean(std::size_t n, std::int64_t trials, double s_max,
                                  std::uint64_t seed, int workers, double confidence) {
    CoveringOptions options;
    options.s_max = default_s_max(n, s_max);
    const auto outcomes = covering_samples(n, trials, options, seed, workers);

    double sum = 0.0, sum_sq = 0.0;
    std::int64_t uncensored = 0, ambiguous = 0;
    for (const auto& o : outcomes) {
        sum += o.tau1;
        sum_sq += o.tau1 * o.tau1;
        if (!o.censored) ++uncensored;
        ambiguous += o.ambiguous_checks;
    }
    if (uncensored == 0)
        throw std::runtime_error("estimate_covering_mean: every trial censored at s_max=" +
                                 std::to_string(options.s_max));

    EstimateCI e = mean_interval(sum, sum_sq, trials, confidence);
    e.successes = uncensored;
    e.ambiguous_count = ambiguous;
    return e;
}

}  // namespace walkhull

#include "walkhull/estimate.hpp"

#include <cmath>
#include <stdexcept>

namespace walkhull {

namespace {

// Acklam's rational approximation to the standard normal quantile,
// polished with one Halley step on erfc.
double inverse_normal_cdf(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // Halley refinement against the exact CDF.
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * 3.14159265358979323846) * std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

}  // namespace

double z_from_confidence(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("confidence must lie in (0,1)");
    return inverse_normal_cdf(0.5 * (1.0 + confidence));
}

EstimateCI wilson_interval(std::int64_t successes, std::int64_t trials, double confidence) {
    if (trials < 0 || successes < 0 || successes > trials)
        throw std::invalid_argument("invalid success/trial counts");

    EstimateCI e;
    e.trials = trials;
    e.successes = successes;
    e.confidence = confidence;
    if (trials == 0) {
        e.ci_low = 0.0;
        e.ci_high = 1.0;
        e.degenerate = true;
        return e;
    }
    const double z = z_from_confidence(confidence);
    const double nn = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    e.estimate = p;
    e.ci_low = std::max(0.0, center - half);
    e.ci_high = std::min(1.0, center + half);
    return e;
}

EstimateCI mean_interval(double sum, double sum_sq, std::int64_t count, double confidence) {
    if (count < 1) throw std::invalid_argument("mean interval needs at least one sample");

    EstimateCI e;
    e.trials = count;
    e.successes = count;
    e.confidence = confidence;
    const double nn = static_cast<double>(count);
    const double mean = sum / nn;
    e.estimate = mean;
    if (count == 1) {
        e.ci_low = e.ci_high = mean;
        e.degenerate = true;
        return e;
    }
    const double var = std::max(0.0, (sum_sq - nn * mean * mean) / (nn - 1.0));
    const double half = z_from_confidence(confidence) * std::sqrt(var / nn);
    e.ci_low = mean - half;
    e.ci_high = mean + half;
    return e;
}

}  // namespace walkhull

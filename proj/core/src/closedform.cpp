#include "walkhull/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace walkhull {

namespace mp = boost::multiprecision;

double Rational::to_double() const {
    return static_cast<double>(mp::cpp_rational(num, den));
}

std::string Rational::str() const { return num.str() + "/" + den.str(); }

Rational wendel(std::size_t n, std::size_t N) {
    if (n < 1 || N < 1) throw std::invalid_argument("wendel requires n >= 1 and N >= 1");
    mp::cpp_int sum = 0;
    mp::cpp_int binom = 1;  // C(N-1, 0)
    for (std::size_t k = 0; k < n && k <= N - 1; ++k) {
        sum += binom;
        binom = binom * (N - 1 - k) / (k + 1);
    }
    mp::cpp_int den = mp::cpp_int(1) << (N - 1);
    mp::cpp_int g = mp::gcd(sum, den);
    return Rational{sum / g, den / g};
}

void gauss_legendre(int k, std::vector<double>& nodes, std::vector<double>& weights) {
    if (k < 2) throw std::invalid_argument("gauss_legendre needs at least 2 nodes");
    nodes.resize(k);
    weights.resize(k);
    const int m = (k + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev initial guess, then Newton on P_k.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (k + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= k; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = k * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[k - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[k - 1 - i] = w;
    }
}

double stay_positive_probability(double alpha, const QuadratureSpec& spec) {
    if (alpha < 0.0) throw std::invalid_argument("intensity must be nonnegative");
    if (spec.node_count < 2) throw std::invalid_argument("node_count must be >= 2");

    std::vector<double> x, w;
    gauss_legendre(spec.node_count, x, w);

    if (!spec.endpoint_transform) {
        // Raw integrand with endpoint singularities; exposed for comparing
        // quadrature configurations, not used by default.
        double total = 0.0;
        for (int i = 0; i < spec.node_count; ++i) {
            const double t = 0.5 * (x[i] + 1.0);
            total += 0.5 * w[i] * std::exp(-alpha * t) / std::sqrt(t * (1.0 - t));
        }
        return total / std::numbers::pi;
    }

    // (2/pi) int_0^{pi/2} exp(-alpha sin^2 theta) dtheta, split into panels
    // sized to the sqrt(alpha)-wide feature at theta = 0.
    const int panels =
        std::clamp(static_cast<int>(std::ceil(std::sqrt(std::max(alpha, 1.0)))), 4, 4096);
    const double width = (std::numbers::pi / 2.0) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = p * width;
        double panel = 0.0;
        for (int i = 0; i < spec.node_count; ++i) {
            const double theta = lo + 0.5 * width * (x[i] + 1.0);
            const double s = std::sin(theta);
            panel += w[i] * std::exp(-alpha * s * s);
        }
        total += 0.5 * width * panel;
    }
    return total * 2.0 / std::numbers::pi;
}

double bridge_positive_probability(double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("intensity must be positive");
    // e^{-alpha} + sum_{k>=1} (1/k) e^{-alpha} alpha^k / k!, in log space so
    // large intensities neither underflow nor overflow.
    const double log_alpha = std::log(alpha);
    const std::size_t lo =
        alpha > 400.0 ? static_cast<std::size_t>(std::max(1.0, alpha - 12.0 * std::sqrt(alpha)))
                      : 1;
    const std::size_t hi = static_cast<std::size_t>(alpha + 12.0 * std::sqrt(alpha) + 40.0);
    double total = std::exp(-alpha);  // the vacuous N = 0 case
    for (std::size_t k = lo; k <= hi; ++k) {
        const double kd = static_cast<double>(k);
        const double log_term = kd * log_alpha - alpha - std::lgamma(kd + 1.0) - std::log(kd);
        const double term = std::exp(log_term);
        total += term;
        if (k > alpha && term < 1e-13 * total) break;
    }
    return total;
}

double bridge_max_density(double a, double b, double horizon, double y) {
    if (horizon <= 0.0) throw std::invalid_argument("horizon must be positive");
    const double lo = std::min(a, b), hi = std::max(a, b);
    if (y >= lo && y <= hi) return 0.0;
    return 4.0 * (y - 0.5 * (a + b)) / horizon * std::exp(-2.0 / horizon * (y - a) * (y - b));
}

double bridge_max_tail(double horizon, double u) {
    if (horizon <= 0.0) throw std::invalid_argument("horizon must be positive");
    if (u <= 0.0) throw std::invalid_argument("threshold must be positive");
    return std::exp(-2.0 * u * u / horizon);
}

double discrete_walk_bound(std::size_t n, std::size_t N) {
    if (N <= 2) throw std::invalid_argument("bound requires N > 2");
    return 10.0 * static_cast<double>(n) / std::sqrt(static_cast<double>(N));
}

double discrete_bridge_bound(std::size_t N) {
    if (N <= 2) throw std::invalid_argument("bound requires N > 2");
    return 2.0 * std::log(static_cast<double>(N)) / static_cast<double>(N);
}

double facet_density(const std::vector<double>& r, double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("intensity must be positive");
    if (r.empty()) throw std::invalid_argument("simplex point must be non-empty");
    double sum = 0.0;
    for (double c : r) {
        if (c <= 0.0) throw std::invalid_argument("simplex coordinates must be positive");
        sum += c;
    }
    const double last = 1.0 - sum;  // r_{n+1}
    if (last <= 0.0) throw std::invalid_argument("simplex point must satisfy sum r_j < 1");

    double value = 1.0 / (std::numbers::pi * std::sqrt(alpha * r.front() * alpha * last));
    for (std::size_t j = 1; j < r.size(); ++j) value /= alpha * r[j];
    return value;
}

}  // namespace walkhull

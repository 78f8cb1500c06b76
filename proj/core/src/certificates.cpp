#include "walkhull/certificates.hpp"

#include <cmath>
#include <stdexcept>

#include "walkhull/stochastic.hpp"

namespace walkhull {

int default_block_count(std::size_t n, double c_param) {
    if (n < 3) return 1;
    const double m = std::floor(c_param * static_cast<double>(n) / std::log(static_cast<double>(n)));
    return std::max(1, static_cast<int>(m));
}

std::vector<double> dyadic_witness_times(int block_count) {
    if (block_count < 1) throw std::invalid_argument("block count must be >= 1");
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(block_count) + 2);
    times.push_back(0.0);
    times.push_back(0.5);
    double t = 1.0;
    for (int i = 0; i < block_count; ++i) {
        times.push_back(t);
        t *= 2.0;
    }
    return times;
}

DyadicWitness build_dyadic_witness(const WalkPath& path, int block_count, double c_param) {
    if (block_count < 1) throw std::invalid_argument("block count must be >= 1");
    const std::size_t n = path.dim;

    DyadicWitness witness;
    witness.block_count = block_count;
    witness.c_param = c_param;
    witness.v.assign(n, 0.0);
    witness.blocks.reserve(static_cast<std::size_t>(block_count));

    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(block_count));
    double prev_time = 0.5;
    std::span<const double> prev = path_value_at(path, prev_time);
    for (int i = 0; i < block_count; ++i) {
        const double cur_time = prev_time * 2.0;
        std::span<const double> cur = path_value_at(path, cur_time);
        Vec block(n);
        for (std::size_t j = 0; j < n; ++j) block[j] = cur[j] - prev[j];
        // sqrt(E|v_i|^2) = sqrt(n) * sqrt(2)^{i-1}
        const double rms = std::sqrt(static_cast<double>(n)) * std::pow(std::sqrt(2.0), i - 1);
        for (std::size_t j = 0; j < n; ++j) witness.v[j] += inv_sqrt_m * block[j] / rms;
        witness.blocks.push_back(std::move(block));
        prev_time = cur_time;
        prev = cur;
    }
    return witness;
}

bool check_event_A(const WalkPath& path, const DyadicWitness& witness) {
    const int m = witness.block_count;
    const double ratio = std::sqrt(static_cast<double>(path.dim) / static_cast<double>(m));
    double t = 1.0;
    for (int k = 0; k < m; ++k) {
        std::span<const double> value = path_value_at(path, t);
        const double threshold = 0.5 * ratio * std::pow(std::sqrt(2.0), k - 1);
        if (!(dot(witness.v, value) > threshold)) return false;
        t *= 2.0;
    }
    return true;
}

BernsteinBound bernstein_tail(double variance_sum, double moment_scale, double deviation) {
    if (variance_sum <= 0.0) throw std::invalid_argument("variance sum must be positive");
    if (moment_scale <= 1.0) throw std::invalid_argument("moment scale L must exceed 1");
    if (deviation <= 0.0) throw std::invalid_argument("deviation must be positive");

    BernsteinBound b;
    b.variance_sum = variance_sum;
    b.moment_scale = moment_scale;
    b.deviation = deviation;
    b.bound = std::exp(-deviation * deviation);
    b.valid = deviation < std::sqrt(variance_sum) / (2.0 * moment_scale);
    return b;
}

std::optional<Vec> certify_extremal(const PointList& points, const DyadicWitness& witness) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(dot(witness.v, points[i]) > 0.0)) return std::nullopt;
    }
    return witness.v;
}

}  // namespace walkhull

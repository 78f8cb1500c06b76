#pragma once

#include <optional>
#include <vector>

#include "walkhull/path.hpp"

namespace walkhull {

/// Separating-direction candidate built from dyadic Brownian increments
/// v_i = B(2^i) - B(2^{i-1}), i = 0..m-1, each normalized by its root mean
/// square length sqrt(n) * sqrt(2)^{i-1}:
///   v = (1/sqrt(m)) * sum_i v_i / (sqrt(n) * sqrt(2)^{i-1}).
/// Under the Brownian law v is centered Gaussian with covariance Id/n.
struct DyadicWitness {
    int block_count = 0;  // m
    double c_param = 0.0;
    Vec v;
    std::vector<Vec> blocks;
};

/// m = max(1, floor(c * n / ln n)); the constant is an experiment knob.
int default_block_count(std::size_t n, double c_param = 0.1);

/// Times the construction needs: 0, 2^{-1}, 2^0, ..., 2^{m-1}.
std::vector<double> dyadic_witness_times(int block_count);

/// Builds the witness from a path containing every required dyadic time.
DyadicWitness build_dyadic_witness(const WalkPath& path, int block_count, double c_param = 0.0);

/// True iff <v, B(2^k)> > (1/2) sqrt(n/m) sqrt(2)^{k-1} for every
/// 0 <= k <= m-1.
bool check_event_A(const WalkPath& path, const DyadicWitness& witness);

struct BernsteinBound {
    double variance_sum = 0.0;
    double moment_scale = 0.0;  // L
    double deviation = 0.0;     // t
    double bound = 1.0;         // e^{-t^2}
    /// The inequality only applies for 0 < t < sqrt(variance_sum) / (2L).
    bool valid = false;
};

/// Tail bound e^{-t^2} for |sum (X_i - E X_i)| > 2 t sqrt(variance_sum)
/// under the moment-growth condition with scale L > 1.
BernsteinBound bernstein_tail(double variance_sum, double moment_scale, double deviation);

/// Returns v iff <v, x> is strictly positive for every sampled point
/// (exact comparison, zero tolerance); a returned vector is a sound
/// certificate that the origin is not interior to the hull.
std::optional<Vec> certify_extremal(const PointList& points, const DyadicWitness& witness);

}  // namespace walkhull

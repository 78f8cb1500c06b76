#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "walkhull/path.hpp"

namespace walkhull {

/// Nearest point of conv(points) to the origin, with the convex weights
/// that express it.
struct MinNormResult {
    Vec point;
    std::vector<double> coefficients;
    double norm = 0.0;
    double gap = 0.0;
    int iterations = 0;
};

/// Thrown when the duality gap fails to close within the iteration budget;
/// carries the best iterate reached.
class MinNormFailure : public std::runtime_error {
public:
    MinNormFailure(std::string what, MinNormResult best_so_far)
        : std::runtime_error(std::move(what)), best(std::move(best_so_far)) {}
    MinNormResult best;
};

/// Reusable Frank-Wolfe state, for warm-starting a sequence of solves over
/// a growing point list (indices must stay stable across calls).
struct MinNormWarmStart {
    std::vector<std::size_t> active;
    std::vector<double> weights;
};

/// Minimum-norm point of conv(points) by Frank-Wolfe with away steps and
/// exact line search. At exit the duality gap certificate is <= tol and
/// the reported norm is within tol (absolute) of the true minimum.
MinNormResult min_norm_point(const PointList& points, double tol, int max_iter,
                             MinNormWarmStart* warm = nullptr);

enum class HullKind { Interior, Extremal, Ambiguous };

/// Classification of the origin against conv({0} union points).
/// Extremal carries a separating witness v with <v, x_i> >= 0 for all
/// points (up to tolerance) and margin = min_i <v, x_i> / |v|; Interior
/// carries an estimated depth (distance from the origin to the hull
/// boundary along a probe ray). Ambiguous is surfaced, never coerced.
struct HullVerdict {
    HullKind kind = HullKind::Ambiguous;
    Vec witness;
    double margin = 0.0;
    double depth = 0.0;
    double tolerance = 0.0;
    std::string diagnostic;
};

struct ClassifyOptions {
    /// Absolute tolerance; <= 0 selects 1e-9 * (max point norm).
    double tol = 0.0;
    int max_iter = 200000;
    /// Skip dedup/zero-drop (callers guaranteeing clean input keep index
    /// stability for warm starts).
    bool assume_clean = false;
    bool compute_depth = false;
    MinNormWarmStart* warm = nullptr;
};

/// Decides whether the origin is interior to conv({0} union points) or
/// extremal (a witness direction exists with all points in its closed
/// half-space). Strict separation is decided by the min-norm point of the
/// spherical images; degenerate boundary cases reduce recursively to the
/// orthogonal complement of the witnessed zero-sum support.
HullVerdict classify_origin(const PointList& points, const ClassifyOptions& options = {});

/// Exact small-instance oracle (dim <= 4, at most 12 distinct nonzero
/// points): enumerates candidate witness directions orthogonal to
/// (dim-1)-subsets and checks signs exhaustively.
HullVerdict brute_force_classify(const PointList& points);

/// min_i <v, x_i> / |v|. Rejects v = 0; +infinity over an empty list.
double separating_margin(const PointList& points, std::span<const double> v);

}  // namespace walkhull

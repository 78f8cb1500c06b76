#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace walkhull {

using Vec = std::vector<double>;

/// Row-ordered list of points in R^dim, stored flat.
class PointList {
public:
    PointList() = default;
    explicit PointList(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
    bool empty() const { return data_.empty(); }

    std::span<const double> operator[](std::size_t i) const {
        return {data_.data() + i * dim_, dim_};
    }
    std::span<double> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }

    void push_back(std::span<const double> p) { data_.insert(data_.end(), p.begin(), p.end()); }
    void reserve(std::size_t count) { data_.reserve(count * dim_); }
    void clear() { data_.clear(); }

    const std::vector<double>& flat() const { return data_; }
    std::vector<double>& flat() { return data_; }

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

/// A sampled process path: values of an R^n process on a strictly
/// increasing time grid with times[0] = 0 and points[0] = 0 (the walk is
/// anchored at the origin).
struct WalkPath {
    std::size_t dim = 0;
    std::vector<double> times;
    PointList points;
};

/// Event times of a Poisson point process on [0,1], sorted ascending.
struct PoissonSample {
    double intensity = 0.0;
    std::vector<double> event_times;
};

/// A pinned path on [0, horizon]: first point equals start and last point
/// equals end exactly.
struct BridgePath {
    std::size_t dim = 0;
    double horizon = 0.0;
    Vec start;
    Vec end;
    std::vector<double> times;
    PointList points;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(std::span<const double> a) { return dot(a, a); }

}  // namespace walkhull

#include "walkhull/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace walkhull {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

void check_grid(std::span<const double> grid) {
    require(!grid.empty(), "time grid must be non-empty");
    require(grid[0] == 0.0, "time grid must start at 0");
    for (std::size_t i = 1; i < grid.size(); ++i)
        require(grid[i] > grid[i - 1], "time grid must increase strictly");
}

}  // namespace

Vec gaussian_vector(std::size_t n, Rng& rng) {
    require(n >= 1, "dimension must be >= 1");
    Vec v(n);
    for (auto& x : v) x = rng.gaussian();
    return v;
}

WalkPath sample_brownian(std::size_t n, std::span<const double> grid, Rng& rng) {
    require(n >= 1, "dimension must be >= 1");
    check_grid(grid);

    WalkPath path;
    path.dim = n;
    path.times.assign(grid.begin(), grid.end());
    path.points = PointList(n);
    path.points.reserve(grid.size());

    Vec cur(n, 0.0);
    path.points.push_back(cur);
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double sd = std::sqrt(grid[k] - grid[k - 1]);
        for (std::size_t j = 0; j < n; ++j) cur[j] += sd * rng.gaussian();
        path.points.push_back(cur);
    }
    return path;
}

PoissonSample sample_poisson_times(double alpha, Rng& rng) {
    require(alpha > 0.0, "intensity must be positive");

    PoissonSample sample;
    sample.intensity = alpha;

    if (alpha <= 30.0) {
        // CDF inversion for the count, then sorted uniforms.
        const double u = rng.uniform01();
        double pmf = std::exp(-alpha);
        double cdf = pmf;
        std::size_t count = 0;
        while (u > cdf) {
            ++count;
            pmf *= alpha / static_cast<double>(count);
            cdf += pmf;
            if (pmf < 1e-300 && u > cdf) break;  // u in the far tail; cdf has saturated
        }
        sample.event_times.resize(count);
        for (auto& t : sample.event_times) t = rng.uniform01();
        std::sort(sample.event_times.begin(), sample.event_times.end());
    } else {
        // Exponential inter-arrival gaps give the process directly.
        double t = rng.exponential(alpha);
        while (t <= 1.0) {
            sample.event_times.push_back(t);
            t += rng.exponential(alpha);
        }
    }
    return sample;
}

BridgePath sample_bridge(std::size_t n, double horizon, const Vec& a, const Vec& b,
                         std::span<const double> grid, Rng& rng) {
    require(n >= 1, "dimension must be >= 1");
    require(horizon > 0.0, "horizon must be positive");
    require(a.size() == n && b.size() == n, "endpoint dimension mismatch");
    require(!grid.empty(), "time grid must be non-empty");
    require(grid[0] == 0.0, "bridge grid must start at 0");
    for (std::size_t i = 1; i < grid.size(); ++i)
        require(grid[i] > grid[i - 1], "time grid must increase strictly");
    require(grid.back() == horizon, "bridge grid must end at the horizon");

    // W is a free Brownian motion on the grid; W(t) - (t/T) W(T) is a
    // standard bridge pinned to zero at 0 and T.
    WalkPath w = sample_brownian(n, grid, rng);
    std::span<const double> w_end = w.points[grid.size() - 1];

    BridgePath bridge;
    bridge.dim = n;
    bridge.horizon = horizon;
    bridge.start = a;
    bridge.end = b;
    bridge.times.assign(grid.begin(), grid.end());
    bridge.points = PointList(n);
    bridge.points.reserve(grid.size());

    Vec row(n);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double frac = grid[k] / horizon;
        std::span<const double> wk = w.points[k];
        for (std::size_t j = 0; j < n; ++j)
            row[j] = a[j] + (b[j] - a[j]) * frac + (wk[j] - frac * w_end[j]);
        bridge.points.push_back(row);
    }
    // Pin the endpoints exactly; the formula above is exact only up to
    // floating-point rounding.
    std::copy(a.begin(), a.end(), bridge.points.row(0).begin());
    std::copy(b.begin(), b.end(), bridge.points.row(grid.size() - 1).begin());
    return bridge;
}

WalkPath sample_lattice_walk(std::size_t n, std::size_t steps, Rng& rng) {
    require(n >= 1, "dimension must be >= 1");

    WalkPath path;
    path.dim = n;
    path.times.resize(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) path.times[k] = static_cast<double>(k);
    path.points = PointList(n);
    path.points.reserve(steps + 1);

    Vec cur(n, 0.0);
    path.points.push_back(cur);
    for (std::size_t k = 0; k < steps; ++k) {
        const std::uint64_t pick = rng.uniform_index(2 * n);
        cur[pick / 2] += (pick % 2 == 0) ? 1.0 : -1.0;
        path.points.push_back(cur);
    }
    return path;
}

WalkPath refine_brownian(const WalkPath& path, std::span<const double> new_times, Rng& rng) {
    if (new_times.empty()) return path;
    require(path.times.size() >= 2, "path has no interior to refine");

    std::vector<double> inserts(new_times.begin(), new_times.end());
    std::sort(inserts.begin(), inserts.end());
    for (std::size_t i = 0; i + 1 < inserts.size(); ++i)
        require(inserts[i] != inserts[i + 1], "duplicate refinement time");
    require(inserts.front() > path.times.front() && inserts.back() < path.times.back(),
            "refinement time outside the path's span");
    for (double t : inserts)
        require(!std::binary_search(path.times.begin(), path.times.end(), t),
                "refinement time duplicates an existing knot");

    const std::size_t n = path.dim;
    WalkPath out;
    out.dim = n;
    out.times.reserve(path.times.size() + inserts.size());
    out.points = PointList(n);
    out.points.reserve(path.times.size() + inserts.size());

    // Walk old knots and insertions in merged order; each inserted value is
    // conditioned on the bracketing knots of the path built so far, which
    // yields the correct joint conditional law.
    std::size_t next_insert = 0;
    Vec row(n);
    for (std::size_t k = 0; k < path.times.size(); ++k) {
        while (next_insert < inserts.size() && inserts[next_insert] < path.times[k]) {
            const double t = inserts[next_insert];
            const double tl = out.times.back();
            const double tr = path.times[k];
            std::span<const double> xl = out.points[out.times.size() - 1];
            std::span<const double> xr = path.points[k];
            const double w = (t - tl) / (tr - tl);
            const double sd = std::sqrt((t - tl) * (tr - t) / (tr - tl));
            for (std::size_t j = 0; j < n; ++j)
                row[j] = xl[j] + w * (xr[j] - xl[j]) + sd * rng.gaussian();
            out.times.push_back(t);
            out.points.push_back(row);
            ++next_insert;
        }
        out.times.push_back(path.times[k]);
        out.points.push_back(path.points[k]);
    }
    return out;
}

WalkPath rescaled(const WalkPath& path, double time_factor) {
    require(time_factor > 0.0, "time factor must be positive");
    WalkPath out = path;
    const double root = std::sqrt(time_factor);
    for (auto& t : out.times) t *= time_factor;
    for (auto& x : out.points.flat()) x *= root;
    return out;
}

std::span<const double> path_value_at(const WalkPath& path, double t) {
    auto it = std::lower_bound(path.times.begin(), path.times.end(), t);
    require(it != path.times.end() && *it == t, "time is not a knot of the path");
    return path.points[static_cast<std::size_t>(it - path.times.begin())];
}

}  // namespace walkhull

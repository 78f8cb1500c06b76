#include "walkhull/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace walkhull {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

double row_norm(std::span<const double> r) { return std::sqrt(norm2(r)); }

/// Gram-Schmidt over the given rows; returns an orthonormal basis of their
/// span (rows with residual below rel_tol * |row| are treated as dependent).
std::vector<Vec> orthonormal_span(const PointList& pts, const std::vector<std::size_t>& rows,
                                  double rel_tol) {
    std::vector<Vec> basis;
    for (std::size_t idx : rows) {
        std::span<const double> r = pts[idx];
        Vec res(r.begin(), r.end());
        const double original = row_norm(res);
        if (original == 0.0) continue;
        for (const Vec& b : basis) {
            const double c = dot(res, b);
            for (std::size_t j = 0; j < res.size(); ++j) res[j] -= c * b[j];
        }
        // Re-orthogonalize once; plain GS loses orthogonality for
        // near-dependent rows.
        for (const Vec& b : basis) {
            const double c = dot(res, b);
            for (std::size_t j = 0; j < res.size(); ++j) res[j] -= c * b[j];
        }
        const double rn = row_norm(res);
        if (rn > rel_tol * original) {
            for (auto& x : res) x /= rn;
            basis.push_back(std::move(res));
            if (basis.size() == pts.dim()) break;
        }
    }
    return basis;
}

/// Unit vectors completing `basis` to an orthonormal basis of R^d.
std::vector<Vec> orthonormal_complement(const std::vector<Vec>& basis, std::size_t d) {
    std::vector<Vec> all = basis;
    std::vector<Vec> complement;
    for (std::size_t j = 0; j < d && all.size() < d; ++j) {
        Vec res(d, 0.0);
        res[j] = 1.0;
        for (const Vec& b : all) {
            const double c = dot(res, b);
            for (std::size_t k = 0; k < d; ++k) res[k] -= c * b[k];
        }
        for (const Vec& b : all) {
            const double c = dot(res, b);
            for (std::size_t k = 0; k < d; ++k) res[k] -= c * b[k];
        }
        const double rn = row_norm(res);
        if (rn > 1e-8) {
            for (auto& x : res) x /= rn;
            all.push_back(res);
            complement.push_back(std::move(res));
        }
    }
    return complement;
}

struct CleanInput {
    PointList points;  // distinct nonzero rows
    double scale = 0.0;
};

CleanInput clean_points(const PointList& raw, bool assume_clean) {
    CleanInput out;
    out.points = PointList(raw.dim());
    const std::size_t count = raw.size();
    if (assume_clean) {
        out.points = raw;
        for (std::size_t i = 0; i < count; ++i)
            out.scale = std::max(out.scale, row_norm(raw[i]));
        return out;
    }
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    auto lex_less = [&](std::size_t a, std::size_t b) {
        std::span<const double> ra = raw[a], rb = raw[b];
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    };
    std::sort(order.begin(), order.end(), lex_less);
    std::vector<bool> keep(count, true);
    for (std::size_t k = 0; k + 1 < count; ++k) {
        std::span<const double> a = raw[order[k]], b = raw[order[k + 1]];
        if (std::equal(a.begin(), a.end(), b.begin())) keep[order[k + 1]] = false;
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (!keep[i]) continue;
        const double nrm = row_norm(raw[i]);
        if (nrm == 0.0) continue;  // the origin itself never constrains a witness
        out.points.push_back(raw[i]);
        out.scale = std::max(out.scale, nrm);
    }
    return out;
}

PointList normalized_rows(const PointList& pts) {
    PointList unit(pts.dim());
    unit.reserve(pts.size());
    Vec row(pts.dim());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::span<const double> r = pts[i];
        const double nrm = row_norm(r);
        for (std::size_t j = 0; j < r.size(); ++j) row[j] = r[j] / nrm;
        unit.push_back(row);
    }
    return unit;
}

constexpr double kGramSchmidtTol = 1e-10;

}  // namespace

MinNormResult min_norm_point(const PointList& points, double tol, int max_iter,
                             MinNormWarmStart* warm) {
    const std::size_t count = points.size();
    const std::size_t n = points.dim();
    require(count >= 1, "min_norm_point needs at least one point");
    require(tol > 0.0, "tolerance must be positive");
    require(max_iter >= 1, "iteration budget must be positive");

    std::vector<double> weights(count, 0.0);
    std::vector<std::size_t> active;
    Vec x(n, 0.0);

    auto rebuild_x = [&] {
        std::fill(x.begin(), x.end(), 0.0);
        for (std::size_t i : active) {
            std::span<const double> p = points[i];
            for (std::size_t j = 0; j < n; ++j) x[j] += weights[i] * p[j];
        }
    };

    bool seeded = false;
    if (warm != nullptr && !warm->active.empty() && warm->active.size() == warm->weights.size()) {
        double sum = 0.0;
        bool ok = true;
        for (std::size_t k = 0; k < warm->active.size(); ++k) {
            if (warm->active[k] >= count || warm->weights[k] < 0.0) ok = false;
            sum += warm->weights[k];
        }
        if (ok && sum > 0.0) {
            for (std::size_t k = 0; k < warm->active.size(); ++k) {
                weights[warm->active[k]] += warm->weights[k] / sum;
            }
            for (std::size_t i = 0; i < count; ++i)
                if (weights[i] > 0.0) active.push_back(i);
            rebuild_x();
            seeded = true;
        }
    }
    if (!seeded) {
        std::size_t best = 0;
        double best_norm = norm2(points[0]);
        for (std::size_t i = 1; i < count; ++i) {
            const double nn = norm2(points[i]);
            if (nn < best_norm) {
                best_norm = nn;
                best = i;
            }
        }
        weights[best] = 1.0;
        active.push_back(best);
        std::span<const double> p = points[best];
        std::copy(p.begin(), p.end(), x.begin());
    }

    auto prune_active = [&] {
        std::vector<std::size_t> next;
        double sum = 0.0;
        for (std::size_t i : active) {
            if (weights[i] > 1e-15) {
                next.push_back(i);
                sum += weights[i];
            } else {
                weights[i] = 0.0;
            }
        }
        if (sum > 0.0)
            for (std::size_t i : next) weights[i] /= sum;
        active = std::move(next);
        rebuild_x();
    };

    auto make_result = [&](double gap, int iters) {
        MinNormResult res;
        res.point = x;
        res.coefficients = weights;
        res.norm = row_norm(x);
        res.gap = gap;
        res.iterations = iters;
        return res;
    };

    auto save_warm = [&] {
        if (warm == nullptr) return;
        warm->active = active;
        warm->weights.clear();
        for (std::size_t i : active) warm->weights.push_back(weights[i]);
    };

    int iter = 0;
    double gap = std::numeric_limits<double>::infinity();
    for (; iter < max_iter; ++iter) {
        const double xx = norm2(x);
        const double norm_x = std::sqrt(xx);

        // Frank-Wolfe vertex: most-opposed point.
        std::size_t fw_idx = 0;
        double fw_dot = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < count; ++i) {
            const double d = dot(x, points[i]);
            if (d < fw_dot) {
                fw_dot = d;
                fw_idx = i;
            }
        }
        gap = xx - fw_dot;

        // Exit: either the origin is in the hull to within tol, or the gap
        // certificate bounds the norm error by tol.
        if (norm_x <= tol || gap <= 0.5 * tol * norm_x) {
            prune_active();
            save_warm();
            return make_result(gap, iter);
        }

        // Away vertex: most-aligned active point.
        std::size_t away_idx = active[0];
        double away_dot = -std::numeric_limits<double>::infinity();
        for (std::size_t i : active) {
            const double d = dot(x, points[i]);
            if (d > away_dot) {
                away_dot = d;
                away_idx = i;
            }
        }
        const double away_gap = away_dot - xx;

        Vec dir(n);
        double gamma_max;
        bool is_away;
        if (gap >= away_gap || active.size() == 1) {
            std::span<const double> p = points[fw_idx];
            for (std::size_t j = 0; j < n; ++j) dir[j] = p[j] - x[j];
            gamma_max = 1.0;
            is_away = false;
        } else {
            std::span<const double> p = points[away_idx];
            for (std::size_t j = 0; j < n; ++j) dir[j] = x[j] - p[j];
            const double wa = weights[away_idx];
            gamma_max = wa / (1.0 - wa);
            is_away = true;
        }

        const double dd = norm2(dir);
        if (dd <= 1e-300) break;  // no movable direction left
        double gamma = -dot(x, dir) / dd;
        gamma = std::clamp(gamma, 0.0, gamma_max);
        if (gamma == 0.0) break;

        if (is_away) {
            for (std::size_t i : active) weights[i] *= (1.0 + gamma);
            weights[away_idx] -= gamma;
            if (weights[away_idx] <= 1e-15) {
                weights[away_idx] = 0.0;
                active.erase(std::find(active.begin(), active.end(), away_idx));
            }
        } else if (gamma == 1.0) {
            for (std::size_t i : active) weights[i] = 0.0;
            active.assign(1, fw_idx);
            weights[fw_idx] = 1.0;
        } else {
            const bool was_active = weights[fw_idx] > 0.0;
            for (std::size_t i : active) weights[i] *= (1.0 - gamma);
            if (!was_active) active.push_back(fw_idx);
            weights[fw_idx] += gamma;
        }
        for (std::size_t j = 0; j < n; ++j) x[j] += gamma * dir[j];

        if ((iter & 127) == 127) prune_active();  // also rebuilds x against drift
    }

    prune_active();
    save_warm();
    MinNormResult best = make_result(gap, iter);
    throw MinNormFailure("min_norm_point: duality gap did not close within the iteration budget",
                         std::move(best));
}

double separating_margin(const PointList& points, std::span<const double> v) {
    const double vn = row_norm(v);
    require(vn > 0.0, "witness direction must be nonzero");
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i)
        margin = std::min(margin, dot(v, points[i]) / vn);
    return margin;
}

namespace {

/// Largest t with t*u inside conv(points), by bisection over min-norm
/// membership tests. `u` is a unit probe direction.
double ray_exit_distance(const PointList& points, const Vec& u, double scale, int max_iter) {
    const std::size_t n = points.dim();
    const double member_tol = 1e-7 * scale;
    PointList shifted(n);
    Vec row(n);
    auto inside = [&](double t) {
        shifted.clear();
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::span<const double> p = points[i];
            for (std::size_t j = 0; j < n; ++j) row[j] = p[j] - t * u[j];
            shifted.push_back(row);
        }
        try {
            return min_norm_point(shifted, member_tol, max_iter).norm <= member_tol;
        } catch (const MinNormFailure&) {
            return false;
        }
    };
    double lo = 0.0, hi = 1.0000001 * scale;  // beyond every point, hence outside
    for (int k = 0; k < 24; ++k) {
        const double mid = 0.5 * (lo + hi);
        (inside(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

HullVerdict extremal_verdict(const PointList& original, Vec witness, double tol_abs) {
    const double wn = row_norm(witness);
    for (auto& c : witness) c /= wn;
    HullVerdict v;
    v.kind = HullKind::Extremal;
    v.margin = separating_margin(original, witness);
    v.witness = std::move(witness);
    v.tolerance = tol_abs;
    return v;
}

}  // namespace

HullVerdict classify_origin(const PointList& points, const ClassifyOptions& options) {
    require(points.size() >= 1, "classify_origin needs at least one point");
    const std::size_t n = points.dim();

    CleanInput clean = clean_points(points, options.assume_clean);
    HullVerdict verdict;

    if (clean.points.empty() || clean.scale == 0.0) {
        // Every input point is the origin itself; the hull is {0} and any
        // direction weakly separates.
        Vec e1(n, 0.0);
        e1[0] = 1.0;
        verdict = extremal_verdict(points, std::move(e1), options.tol);
        return verdict;
    }

    const double tol_abs = options.tol > 0.0 ? options.tol : 1e-9 * clean.scale;
    const double tol_norm = std::min(tol_abs / clean.scale, 0.5);
    const double drop_tol = std::max(tol_norm, 1e-12);

    const PointList unit = normalized_rows(clean.points);
    const std::size_t count = unit.size();

    auto finish_extremal = [&](const Vec& w_full) -> HullVerdict {
        // Safety net: the witness must weakly separate every cleaned point.
        const double margin_unit = separating_margin(unit, w_full);
        if (margin_unit < -10.0 * drop_tol) {
            HullVerdict bad;
            bad.kind = HullKind::Ambiguous;
            bad.tolerance = tol_abs;
            bad.diagnostic = "candidate witness failed verification (margin " +
                             std::to_string(margin_unit) + ")";
            return bad;
        }
        return extremal_verdict(points, w_full, tol_abs);
    };

    // Subspace descent: a witness must be orthogonal to every point carrying
    // positive weight in a convex combination of zero, so the search space
    // shrinks by that span at each level.
    std::vector<Vec> q_basis;  // columns of the current subspace (empty = R^n)
    std::size_t d = n;
    std::vector<std::size_t> all_rows(count);
    std::iota(all_rows.begin(), all_rows.end(), 0);

    for (std::size_t level = 0; level <= n; ++level) {
        const bool top_level = q_basis.empty();

        // Project rows onto the current subspace and drop the vanishing ones.
        PointList projected(d);
        std::vector<double> proj_norm;
        bool gray_zone = false;
        {
            Vec y(d);
            for (std::size_t i = 0; i < count; ++i) {
                std::span<const double> r = unit[i];
                if (top_level) {
                    y.assign(r.begin(), r.end());
                } else {
                    for (std::size_t k = 0; k < d; ++k) y[k] = dot(r, q_basis[k]);
                }
                const double yn = row_norm(y);
                if (yn <= drop_tol) {
                    if (yn > 0.1 * drop_tol) gray_zone = true;
                    continue;
                }
                projected.push_back(y);
                proj_norm.push_back(yn);
            }
        }

        auto lift = [&](const Vec& w_sub) {
            if (top_level) return w_sub;
            Vec w(n, 0.0);
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t j = 0; j < n; ++j) w[j] += w_sub[k] * q_basis[k][j];
            return w;
        };

        if (projected.empty()) {
            Vec w_sub(d, 0.0);
            w_sub[0] = 1.0;
            return finish_extremal(lift(w_sub));
        }

        // Rank-deficient point set: any direction orthogonal to the span is
        // a (weak) witness.
        PointList proj_unit = normalized_rows(projected);
        std::vector<std::size_t> rows(proj_unit.size());
        std::iota(rows.begin(), rows.end(), 0);
        std::vector<Vec> span_basis = orthonormal_span(proj_unit, rows, kGramSchmidtTol);
        if (span_basis.size() < d) {
            std::vector<Vec> comp = orthonormal_complement(span_basis, d);
            if (comp.empty()) {
                verdict.kind = HullKind::Ambiguous;
                verdict.tolerance = tol_abs;
                verdict.diagnostic = "rank detection disagreed with complement extraction";
                return verdict;
            }
            return finish_extremal(lift(comp[0]));
        }

        MinNormResult mn;
        try {
            mn = min_norm_point(proj_unit, tol_norm, options.max_iter,
                                top_level ? options.warm : nullptr);
        } catch (const MinNormFailure& failure) {
            verdict.kind = HullKind::Ambiguous;
            verdict.tolerance = tol_abs;
            verdict.diagnostic = std::string("min-norm did not converge (gap ") +
                                 std::to_string(failure.best.gap) + ")";
            return verdict;
        }

        if (mn.norm > tol_norm) {
            return finish_extremal(lift(mn.point));
        }
        if (gray_zone) {
            verdict.kind = HullKind::Ambiguous;
            verdict.tolerance = tol_abs;
            verdict.diagnostic = "projection norms inside the tolerance gray zone";
            return verdict;
        }

        // The support of the zero combination pins the witness to its
        // orthogonal complement within the current subspace.
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < mn.coefficients.size(); ++i)
            if (mn.coefficients[i] > 1e-10) support.push_back(i);
        std::vector<Vec> support_basis = orthonormal_span(proj_unit, support, kGramSchmidtTol);
        if (support_basis.empty()) {
            verdict.kind = HullKind::Ambiguous;
            verdict.tolerance = tol_abs;
            verdict.diagnostic = "empty zero-combination support";
            return verdict;
        }
        if (support_basis.size() == d) {
            verdict.kind = HullKind::Interior;
            verdict.tolerance = tol_abs;
            if (options.compute_depth) {
                Vec mean(n, 0.0);
                for (std::size_t i = 0; i < count; ++i) {
                    std::span<const double> r = unit[i];
                    for (std::size_t j = 0; j < n; ++j) mean[j] += r[j];
                }
                double mn2 = row_norm(mean);
                if (mn2 < 1e-9) {
                    mean.assign(n, 0.0);
                    mean[0] = 1.0;
                    mn2 = 1.0;
                }
                for (auto& c : mean) c /= -mn2;
                verdict.depth =
                    ray_exit_distance(clean.points, mean, clean.scale, options.max_iter);
            }
            return verdict;
        }

        std::vector<Vec> comp = orthonormal_complement(support_basis, d);
        if (comp.empty()) {
            verdict.kind = HullKind::Ambiguous;
            verdict.tolerance = tol_abs;
            verdict.diagnostic = "support complement extraction failed";
            return verdict;
        }
        if (!top_level) {
            // Compose: new subspace columns expressed in ambient coordinates.
            std::vector<Vec> next;
            for (const Vec& c : comp) {
                Vec col(n, 0.0);
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t j = 0; j < n; ++j) col[j] += c[k] * q_basis[k][j];
                next.push_back(std::move(col));
            }
            q_basis = std::move(next);
        } else {
            q_basis = std::move(comp);
        }
        d = q_basis.size();
    }

    verdict.kind = HullKind::Ambiguous;
    verdict.tolerance = tol_abs;
    verdict.diagnostic = "subspace descent failed to terminate";
    return verdict;
}

namespace {

// Generalized cross product: the vector orthogonal to dim-1 rows, for
// dim <= 4, by cofactor expansion.
Vec orthogonal_direction(const PointList& pts, const std::vector<std::size_t>& subset,
                         std::size_t dim) {
    Vec v(dim, 0.0);
    if (dim == 1) {
        v[0] = 1.0;
    } else if (dim == 2) {
        std::span<const double> p = pts[subset[0]];
        v[0] = -p[1];
        v[1] = p[0];
    } else if (dim == 3) {
        std::span<const double> p = pts[subset[0]], q = pts[subset[1]];
        v[0] = p[1] * q[2] - p[2] * q[1];
        v[1] = p[2] * q[0] - p[0] * q[2];
        v[2] = p[0] * q[1] - p[1] * q[0];
    } else {
        std::span<const double> p = pts[subset[0]], q = pts[subset[1]], r = pts[subset[2]];
        auto det3 = [](double a0, double a1, double a2, double b0, double b1, double b2, double c0,
                       double c1, double c2) {
            return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
        };
        v[0] = -det3(p[1], p[2], p[3], q[1], q[2], q[3], r[1], r[2], r[3]);
        v[1] = det3(p[0], p[2], p[3], q[0], q[2], q[3], r[0], r[2], r[3]);
        v[2] = -det3(p[0], p[1], p[3], q[0], q[1], q[3], r[0], r[1], r[3]);
        v[3] = det3(p[0], p[1], p[2], q[0], q[1], q[2], r[0], r[1], r[2]);
    }
    return v;
}

}  // namespace

HullVerdict brute_force_classify(const PointList& points) {
    const std::size_t n = points.dim();
    require(points.size() >= 1, "brute_force_classify needs at least one point");
    require(n >= 1 && n <= 4 && points.size() <= 12,
            "brute_force_classify instance too large (dim <= 4, count <= 12)");

    CleanInput clean = clean_points(points, false);
    if (clean.points.empty()) {
        Vec e1(n, 0.0);
        e1[0] = 1.0;
        return extremal_verdict(points, std::move(e1), 0.0);
    }
    const PointList unit = normalized_rows(clean.points);
    const std::size_t count = unit.size();

    std::vector<std::size_t> rows(count);
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<Vec> span_basis = orthonormal_span(unit, rows, kGramSchmidtTol);
    if (span_basis.size() < n) {
        std::vector<Vec> comp = orthonormal_complement(span_basis, n);
        return extremal_verdict(points, comp[0], 0.0);
    }

    constexpr double kSignTol = 1e-12;
    auto one_sided = [&](const Vec& cand) -> int {
        // +1: all dots >= -tol, -1: all <= +tol, 0: mixed.
        bool pos = true, neg = true;
        for (std::size_t i = 0; i < count; ++i) {
            const double s = dot(cand, unit[i]);
            if (s < -kSignTol) pos = false;
            if (s > kSignTol) neg = false;
            if (!pos && !neg) return 0;
        }
        return pos ? 1 : -1;
    };

    // Every nontrivial witness cone has an extreme ray orthogonal to dim-1
    // linearly independent points (rank deficiency was handled above).
    const std::size_t k = n - 1;
    std::vector<std::size_t> subset(k);
    std::vector<std::size_t> counters(k);
    bool done = (k == 0);
    if (k == 0) {
        Vec cand(1, 1.0);
        const int side = one_sided(cand);
        if (side != 0) {
            if (side < 0) cand[0] = -cand[0];
            return extremal_verdict(points, std::move(cand), 0.0);
        }
    }
    for (std::size_t i = 0; i < k; ++i) counters[i] = i;
    while (!done && count >= k) {
        for (std::size_t i = 0; i < k; ++i) subset[i] = counters[i];
        Vec cand = orthogonal_direction(unit, subset, n);
        const double cn = row_norm(cand);
        if (cn > 1e-12) {
            for (auto& c : cand) c /= cn;
            const int side = one_sided(cand);
            if (side != 0) {
                if (side < 0)
                    for (auto& c : cand) c = -c;
                return extremal_verdict(points, std::move(cand), 0.0);
            }
        }
        // next combination
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (counters[pos] + (k - pos) < count) {
                ++counters[pos];
                for (std::size_t j = pos + 1; j < k; ++j) counters[j] = counters[j - 1] + 1;
                break;
            }
            if (pos == 0) done = true;
        }
        if (k == 0) done = true;
    }

    HullVerdict verdict;
    verdict.kind = HullKind::Interior;
    verdict.tolerance = 0.0;
    Vec probe(n, 0.0);
    probe[0] = -1.0;
    verdict.depth = ray_exit_distance(clean.points, probe, clean.scale, 100000);
    return verdict;
}

}  // namespace walkhull

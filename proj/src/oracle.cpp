#include "fgfp/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace fgfp {

namespace {

std::size_t checked_total(const CoupledMapPair& pair, const GridSpec& grid) {
    const std::size_t dims = pair.X.dim() + pair.Y.dim();
    std::size_t total = 1;
    for (std::size_t i = 0; i < dims; ++i) {
        if (total > std::numeric_limits<std::size_t>::max() / grid.points_per_axis)
            return std::numeric_limits<std::size_t>::max();
        total *= grid.points_per_axis;
    }
    return total;
}

std::vector<double> axis_values(const SpaceDescriptor& s, std::size_t axis,
                                const GridSpec& grid) {
    const double lo = s.clamped_lower(axis, grid.clamp_radius);
    const double hi = s.clamped_upper(axis, grid.clamp_radius);
    std::vector<double> vals(grid.points_per_axis);
    const std::size_t n = grid.points_per_axis;
    for (std::size_t i = 0; i < n; ++i)
        vals[i] = lo + (hi - lo) * double(i) / double(n - 1);
    return vals;
}

/// All grid points of a space in lexicographic order.
std::vector<Point> grid_points(const SpaceDescriptor& s, const GridSpec& grid) {
    std::vector<std::vector<double>> axes;
    for (std::size_t i = 0; i < s.dim(); ++i) axes.push_back(axis_values(s, i, grid));
    std::vector<Point> points;
    Point cur;
    cur.coords.assign(s.dim(), 0.0);
    std::vector<std::size_t> idx(s.dim(), 0);
    while (true) {
        for (std::size_t i = 0; i < s.dim(); ++i) cur[i] = axes[i][idx[i]];
        points.push_back(cur);
        std::size_t i = s.dim();
        while (i > 0) {
            --i;
            if (++idx[i] < axes[i].size()) break;
            idx[i] = 0;
            if (i == 0) return points;
        }
    }
}

}  // namespace

void GridSpec::validate(const CoupledMapPair& pair) const {
    if (points_per_axis < 2) throw config_error("grid: need at least 2 points per axis");
    if (checked_total(pair, *this) > max_total_points)
        throw config_error("grid ceiling exceeded: coarsen the grid or reduce dimensions");
}

GridMinimizer grid_residual_minimizer(const CoupledMapPair& pair,
                                      const GridSpec& grid) {
    grid.validate(pair);
    const auto xs = grid_points(pair.X, grid);
    const auto ys = grid_points(pair.Y, grid);

    GridMinimizer best;
    best.clamped = pair.X.has_unbounded_edge() || pair.Y.has_unbounded_edge();
    best.residual = std::numeric_limits<double>::infinity();
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            const ProductPoint p{x, y};
            const double r = residual(pair, p);
            if (r < best.residual) {
                best.residual = r;
                best.point = p;
            }
        }
    }
    return best;
}

ViolationReport condition_brute_force(const ContractionClass& cls,
                                      const CoupledMapPair& pair,
                                      const GridSpec& grid, double slack_tol) {
    cls.require_admissible();
    grid.validate(pair);
    const std::size_t total = checked_total(pair, grid);
    if (total > grid.max_total_points / total)
        throw config_error("grid ceiling exceeded for pairwise scan: "
                           "coarsen the grid");
    const auto xs = grid_points(pair.X, grid);
    const auto ys = grid_points(pair.Y, grid);

    ViolationReport report;
    for (const auto& xh : xs) {
        for (const auto& xl : xs) {
            if (!leq(pair.X, xl, xh)) continue;
            for (const auto& yh : ys) {
                for (const auto& yl : ys) {
                    if (!leq(pair.Y, yh, yl)) continue;
                    // hi = (xh, yh) >= lo = (xl, yl) in the product order
                    const ProductPoint hi{xh, yh}, lo{xl, yl};
                    const ConditionSlack s = condition_slack(cls, pair, hi, lo);
                    report.worst_slack =
                        std::max({report.worst_slack, s.slack_F, s.slack_G});
                    if (s.slack_F > slack_tol)
                        report.violations.push_back({hi, lo, 'F', s.slack_F, 0.0});
                    if (s.slack_G > slack_tol)
                        report.violations.push_back({hi, lo, 'G', s.slack_G, 0.0});
                    ++report.samples_checked;
                }
            }
        }
    }
    return report;
}

AuditReport audit_trace(const CoupledMapPair& pair, const IterationTrace& trace,
                        const std::optional<Certificate>& cert, double slack) {
    AuditReport audit;
    const std::size_t n = trace.iterates.size();
    if (n == 0 || trace.step_distances.size() != n - 1 || trace.residuals.size() != n)
        throw input_error("audit_trace: malformed trace (length mismatch)");

    auto fail = [&](bool& flag, std::string msg) {
        flag = false;
        audit.failures.push_back(std::move(msg));
    };

    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double step =
            product_metric(pair.X, pair.Y, trace.iterates[j], trace.iterates[j + 1]);
        if (step != trace.step_distances[j])
            fail(audit.steps_match, "step distance mismatch at index " + std::to_string(j));
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (residual(pair, trace.iterates[j]) != trace.residuals[j])
            fail(audit.residuals_match, "residual mismatch at index " + std::to_string(j));
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        if (!leq(pair.X, trace.iterates[j].x, trace.iterates[j + 1].x) ||
            !leq(pair.Y, trace.iterates[j + 1].y, trace.iterates[j].y))
            fail(audit.monotone_ok, "monotone trajectory fails at index " + std::to_string(j));
    }

    if (cert) {
        const ProductPoint& accepted = trace.iterates.back();
        for (std::size_t j = 0; j < n; ++j) {
            const Bounds b = apriori_bound(*cert, j);
            const double dx = metric(pair.X, trace.iterates[j].x, accepted.x);
            const double dy = metric(pair.Y, trace.iterates[j].y, accepted.y);
            if (dx > b.bound_X + slack || dy > b.bound_Y + slack)
                fail(audit.bounds_ok, "a priori bound violated at index " + std::to_string(j));
        }
        if (cert->cls.tag == ClassTag::banach) {
            const double delta = std::max(cert->delta1, cert->delta2);
            for (std::size_t j = 0; j + 1 < trace.step_distances.size(); ++j) {
                if (trace.step_distances[j + 1] >
                    delta * trace.step_distances[j] + 1e-12)
                    fail(audit.step_contraction_ok,
                         "step contraction fails at index " + std::to_string(j));
            }
        }
    }
    return audit;
}

}  // namespace fgfp

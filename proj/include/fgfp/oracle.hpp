#ifndef FGFP_ORACLE_HPP
#define FGFP_ORACLE_HPP

#include "fgfp/solver.hpp"

namespace fgfp {

/// Desk-scale exhaustive grid for independent checks. The total point
/// count (points_per_axis)^(dim_X+dim_Y) must stay under max_total_points.
struct GridSpec {
    std::size_t points_per_axis = 101;
    double clamp_radius = 10.0;
    std::size_t max_total_points = 1000000;

    void validate(const CoupledMapPair& pair) const;
};

struct GridMinimizer {
    ProductPoint point;
    double residual;
    bool clamped;  // an unbounded edge was clamped at clamp_radius
};

/// Exhaustive residual scan; ties resolve to the lexicographically
/// smallest coordinates (scan order).
GridMinimizer grid_residual_minimizer(const CoupledMapPair& pair,
                                      const GridSpec& grid);

/// condition_slack on every comparable grid pair; worst_slack is exact at
/// grid resolution.
ViolationReport condition_brute_force(const ContractionClass& cls,
                                      const CoupledMapPair& pair,
                                      const GridSpec& grid,
                                      double slack_tol = 1e-12);

struct AuditReport {
    bool steps_match = true;       // stored step distances = recomputed, bit-exact
    bool residuals_match = true;   // stored residuals = recomputed, bit-exact
    bool monotone_ok = true;       // x ascending, y descending along the trace
    bool bounds_ok = true;         // a priori bounds dominate distance-to-accepted
    bool step_contraction_ok = true;  // banach: step[j+1] <= delta*step[j] + 1e-12
    std::vector<std::string> failures;

    bool clean() const { return failures.empty(); }
};

/// Recomputes everything a trace claims from its iterates and re-checks
/// the solver invariants independently. The accepted point is the final
/// iterate; `slack` widens the bound-dominance comparison (pass the run's
/// tol_residual).
AuditReport audit_trace(const CoupledMapPair& pair, const IterationTrace& trace,
                        const std::optional<Certificate>& cert,
                        double slack = 1e-9);

}  // namespace fgfp

#endif

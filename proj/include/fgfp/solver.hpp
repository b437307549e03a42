#ifndef FGFP_SOLVER_HPP
#define FGFP_SOLVER_HPP

#include <optional>

#include "fgfp/contraction.hpp"
#include "fgfp/maps.hpp"

namespace fgfp {

enum class HypothesisMode { continuous, order_limit };

const char* to_string(HypothesisMode m);
HypothesisMode hypothesis_mode_from_string(const std::string& s);

struct SolveConfig {
    double tol_step = 1e-10;
    double tol_residual = 1e-9;
    std::size_t max_iter = 1000;
    HypothesisMode mode = HypothesisMode::continuous;

    void validate() const;
};

/// The iterate sequence with per-step product distances and residuals.
/// residuals[j] = d_X(F(x_j,y_j),x_j) + d_Y(G(y_j,x_j),y_j); for j < n it
/// coincides with step_distances[j] by construction of the iteration.
struct IterationTrace {
    std::vector<ProductPoint> iterates;       // n+1 entries
    std::vector<double> step_distances;       // n entries
    std::vector<double> residuals;            // n+1 entries
};

enum class BoundForm { joint_d1, split };

const char* to_string(BoundForm f);

struct RateFactors {
    double delta1;
    double delta2;
    BoundForm form;
};

/// Per-class geometric rate factors. joint_d1: one rate max(delta1,delta2)
/// applied to the summed initial displacement; split: per-coordinate rates
/// and displacements.
RateFactors rate_factors(const ContractionClass& cls);

struct Certificate {
    ContractionClass cls;
    double delta1;
    double delta2;
    BoundForm form;
    double d1_joint;  // d_X(x1,x0) + d_Y(y1,y0)
    double dx01;      // d_X(x0,x1)
    double dy01;      // d_Y(y0,y1)
};

Certificate make_certificate(const ContractionClass& cls, const CoupledMapPair& pair,
                             const ProductPoint& p0, const ProductPoint& p1);

struct Bounds {
    double bound_X;
    double bound_Y;
};

/// Geometric-tail distance bound from iterate j to the limit.
Bounds apriori_bound(const Certificate& cert, std::size_t j);

struct HypothesisReport {
    bool seed_ok = false;
    MonotoneReport monotone;
    std::optional<ViolationReport> condition;  // present when a class was given
    bool monotone_trajectory_ok = true;        // checked only when seed_ok && monotone clean
};

struct FixedPointResult {
    ProductPoint point;
    IterationTrace trace;
    std::optional<Certificate> certificate;
    bool converged = false;
    std::size_t iterations = 0;
    HypothesisReport hypotheses;
};

class divergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Picard iteration x_{j+1}=F(x_j,y_j), y_{j+1}=G(y_j,x_j) with
/// step-AND-residual stopping. Seed-check failure does not abort; the
/// result is flagged and the monotone-trajectory assertion is skipped.
/// Step distances beyond 1e12 raise divergence_error.
FixedPointResult solve(const CoupledMapPair& pair,
                       const std::optional<ContractionClass>& cls,
                       const ProductPoint& p0, const SolveConfig& config,
                       const SamplerConfig& sampler = {});

enum class UniquenessVerdict { identical, certified_unique, uncertified };

const char* to_string(UniquenessVerdict v);

/// Probes whether two numerical fixed points must coincide: requires a
/// comparability chain between them (direct or via a sampled witness) and
/// the doubled contraction factor 2*max(k+l, m+n) < 1 demanded by the
/// uniqueness argument. Distinct points closer than merge_tol are reported
/// as identical.
UniquenessVerdict uniqueness_probe(const CoupledMapPair& pair,
                                   const ContractionClass& cls,
                                   const ProductPoint& fp1, const ProductPoint& fp2,
                                   const SamplerConfig& sampler,
                                   double tol_residual = 1e-9,
                                   double merge_tol = 1e-13);

/// Residual d_X(F(x,y),x) + d_Y(G(y,x),y); zero exactly at a fixed point.
double residual(const CoupledMapPair& pair, const ProductPoint& p);

}  // namespace fgfp

#endif

#include "fgfp/solver.hpp"

#include <algorithm>
#include <cmath>

namespace fgfp {

const char* to_string(HypothesisMode m) {
    return m == HypothesisMode::continuous ? "continuous" : "order_limit";
}

HypothesisMode hypothesis_mode_from_string(const std::string& s) {
    if (s == "continuous") return HypothesisMode::continuous;
    if (s == "order_limit") return HypothesisMode::order_limit;
    throw config_error("unknown hypothesis mode '" + s + "'");
}

void SolveConfig::validate() const {
    if (!(tol_step > 0)) throw config_error("solve config: tol_step must be > 0");
    if (!(tol_residual > 0)) throw config_error("solve config: tol_residual must be > 0");
    if (max_iter < 1) throw config_error("solve config: max_iter must be >= 1");
}

const char* to_string(BoundForm f) {
    return f == BoundForm::joint_d1 ? "joint-D1" : "split";
}

RateFactors rate_factors(const ContractionClass& cls) {
    cls.require_admissible();
    switch (cls.tag) {
        case ClassTag::banach: {
            // one rate governs both coordinates via the two-case split
            const double d = std::max(cls.k + cls.l, cls.m + cls.n);
            return {d, d, BoundForm::joint_d1};
        }
        case ClassTag::kannan:
            return {cls.l / (1 - cls.k), cls.m / (1 - cls.n), BoundForm::split};
        case ClassTag::chatterjea:
            return {cls.l / (1 - cls.l), cls.m / (1 - cls.m), BoundForm::split};
        case ClassTag::reich:
            return {(cls.b + cls.c) / (1 - cls.a), (cls.a + cls.c) / (1 - cls.b),
                    BoundForm::split};
        case ClassTag::hybrid:
            return {(cls.b + cls.c) / (1 - cls.b), (cls.a + cls.c) / (1 - cls.a),
                    BoundForm::split};
        case ClassTag::quasi:
            return {cls.k / (1 - cls.k), cls.l / (1 - cls.l), BoundForm::split};
    }
    throw config_error("unknown class tag");
}

Certificate make_certificate(const ContractionClass& cls, const CoupledMapPair& pair,
                             const ProductPoint& p0, const ProductPoint& p1) {
    const RateFactors rf = rate_factors(cls);
    Certificate cert;
    cert.cls = cls;
    cert.delta1 = rf.delta1;
    cert.delta2 = rf.delta2;
    cert.form = rf.form;
    cert.dx01 = metric(pair.X, p0.x, p1.x);
    cert.dy01 = metric(pair.Y, p0.y, p1.y);
    cert.d1_joint = cert.dx01 + cert.dy01;
    return cert;
}

Bounds apriori_bound(const Certificate& cert, std::size_t j) {
    if (cert.form == BoundForm::joint_d1) {
        const double d = std::max(cert.delta1, cert.delta2);
        const double bound = std::pow(d, double(j)) / (1 - d) * cert.d1_joint;
        return {bound, bound};
    }
    return {std::pow(cert.delta1, double(j)) / (1 - cert.delta1) * cert.dx01,
            std::pow(cert.delta2, double(j)) / (1 - cert.delta2) * cert.dy01};
}

double residual(const CoupledMapPair& pair, const ProductPoint& p) {
    return metric(pair.X, eval_F(pair, p.x, p.y), p.x) +
           metric(pair.Y, eval_G(pair, p.y, p.x), p.y);
}

FixedPointResult solve(const CoupledMapPair& pair,
                       const std::optional<ContractionClass>& cls,
                       const ProductPoint& p0, const SolveConfig& config,
                       const SamplerConfig& sampler) {
    config.validate();
    if (cls) cls->require_admissible();

    FixedPointResult result;
    result.hypotheses.seed_ok = check_seed(pair, p0);
    result.hypotheses.monotone = check_mixed_monotone(pair, sampler);
    if (cls) result.hypotheses.condition = verify_condition(*cls, pair, sampler);

    IterationTrace& trace = result.trace;
    trace.iterates.push_back(p0);
    trace.residuals.push_back(residual(pair, p0));

    constexpr double kDivergenceCutoff = 1e12;
    bool converged = trace.residuals[0] <= config.tol_residual;

    while (!converged && trace.step_distances.size() < config.max_iter) {
        const ProductPoint next = iterate_step(pair, trace.iterates.back());
        const double step = product_metric(pair.X, pair.Y, trace.iterates.back(), next);
        if (step > kDivergenceCutoff)
            throw divergence_error("iteration diverged: step distance " +
                                   std::to_string(step));
        trace.iterates.push_back(next);
        trace.step_distances.push_back(step);
        trace.residuals.push_back(residual(pair, next));
        converged = step <= config.tol_step &&
                    trace.residuals.back() <= config.tol_residual;
    }

    result.converged = converged;
    result.iterations = trace.step_distances.size();
    result.point = trace.iterates.back();

    // monotone trajectory claim: x_j ascending, y_j descending
    if (result.hypotheses.seed_ok && result.hypotheses.monotone.clean()) {
        for (std::size_t j = 0; j + 1 < trace.iterates.size(); ++j) {
            if (!leq(pair.X, trace.iterates[j].x, trace.iterates[j + 1].x) ||
                !leq(pair.Y, trace.iterates[j + 1].y, trace.iterates[j].y)) {
                result.hypotheses.monotone_trajectory_ok = false;
                break;
            }
        }
    }

    if (cls && trace.iterates.size() >= 2)
        result.certificate =
            make_certificate(*cls, pair, trace.iterates[0], trace.iterates[1]);

    return result;
}

const char* to_string(UniquenessVerdict v) {
    switch (v) {
        case UniquenessVerdict::identical: return "identical";
        case UniquenessVerdict::certified_unique: return "certified-unique";
        case UniquenessVerdict::uncertified: return "uncertified";
    }
    return "?";
}

UniquenessVerdict uniqueness_probe(const CoupledMapPair& pair,
                                   const ContractionClass& cls,
                                   const ProductPoint& fp1, const ProductPoint& fp2,
                                   const SamplerConfig& sampler,
                                   double tol_residual, double merge_tol) {
    if (cls.tag != ClassTag::banach)
        throw input_error("uniqueness_probe: requires a banach-type class");
    cls.require_admissible();
    if (residual(pair, fp1) > tol_residual || residual(pair, fp2) > tol_residual)
        throw input_error("uniqueness_probe: inputs are not fixed points at tolerance");

    if (product_metric(pair.X, pair.Y, fp1, fp2) <= merge_tol)
        return UniquenessVerdict::identical;

    bool chain = comparable(pair.X, pair.Y, fp1, fp2);
    if (!chain) {
        std::mt19937_64 rng(sampler.seed);
        BoxSampler sx(pair.X, sampler.clamp_radius, rng);
        BoxSampler sy(pair.Y, sampler.clamp_radius, rng);
        for (std::size_t s = 0; s < sampler.samples && !chain; ++s) {
            const ProductPoint z{sx.draw(), sy.draw()};
            chain = comparable(pair.X, pair.Y, z, fp1) &&
                    comparable(pair.X, pair.Y, z, fp2);
        }
    }

    // the uniqueness argument contracts by 2^j * delta^j, so it only closes
    // when twice the rate stays below one
    const double delta = std::max(cls.k + cls.l, cls.m + cls.n);
    if (chain && 2.0 * delta < 1.0) return UniquenessVerdict::certified_unique;
    return UniquenessVerdict::uncertified;
}

}  // namespace fgfp

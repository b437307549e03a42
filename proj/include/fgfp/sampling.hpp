#ifndef FGFP_SAMPLING_HPP
#define FGFP_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "fgfp/space.hpp"

namespace fgfp {

/// Reproducible sampling setup shared by the monotonicity, condition and
/// uniqueness samplers. Unbounded box edges are clamped to
/// [-clamp_radius, clamp_radius] before drawing.
struct SamplerConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    double clamp_radius = 10.0;
    double slack_tol = 1e-12;  // slack above this counts as a violation
};

/// Uniform draws from a (clamped) box.
class BoxSampler {
public:
    BoxSampler(const SpaceDescriptor& space, double clamp_radius, std::mt19937_64& rng)
        : space_(&space), radius_(clamp_radius), rng_(&rng) {
        if (space.dim() == 0) throw input_error("sampler: empty space");
    }

    Point draw() {
        Point p;
        p.coords.resize(space_->dim());
        for (std::size_t i = 0; i < space_->dim(); ++i) {
            const double lo = space_->clamped_lower(i, radius_);
            const double hi = space_->clamped_upper(i, radius_);
            std::uniform_real_distribution<double> dist(lo, hi);
            p[i] = dist(*rng_);
        }
        return p;
    }

    /// A comparable pair lo <= hi built by coordinatewise min/max of two
    /// draws; avoids rejection sampling in any dimension.
    std::pair<Point, Point> draw_comparable() {
        Point a = draw(), b = draw();
        Point lo = a, hi = b;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            lo[i] = std::min(a[i], b[i]);
            hi[i] = std::max(a[i], b[i]);
        }
        return {lo, hi};
    }

private:
    const SpaceDescriptor* space_;
    double radius_;
    std::mt19937_64* rng_;
};

}  // namespace fgfp

#endif

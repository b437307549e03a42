#include "fgfp/space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fgfp {

SpaceDescriptor::SpaceDescriptor(std::vector<double> lo, std::vector<double> hi,
                                 bool degenerate_ok)
    : lower(std::move(lo)), upper(std::move(hi)), allow_degenerate(degenerate_ok) {
    if (lower.size() != upper.size() || lower.empty())
        throw input_error("space descriptor: lower/upper must be nonempty and equal length");
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (std::isnan(lower[i]) || std::isnan(upper[i]))
            throw input_error("space descriptor: NaN edge");
        if (allow_degenerate ? lower[i] > upper[i] : lower[i] >= upper[i])
            throw input_error("space descriptor: empty interior in coordinate " +
                              std::to_string(i));
    }
}

SpaceDescriptor SpaceDescriptor::unbounded(std::size_t d) {
    const double inf = std::numeric_limits<double>::infinity();
    return SpaceDescriptor(std::vector<double>(d, -inf), std::vector<double>(d, inf));
}

SpaceDescriptor SpaceDescriptor::box(std::vector<double> lo, std::vector<double> hi) {
    return SpaceDescriptor(std::move(lo), std::move(hi));
}

bool SpaceDescriptor::contains(const std::vector<double>& coords) const {
    if (coords.size() != dim()) return false;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!std::isfinite(coords[i])) return false;
        if (coords[i] < lower[i] || coords[i] > upper[i]) return false;
    }
    return true;
}

double SpaceDescriptor::clamped_lower(std::size_t i, double radius) const {
    return std::max(lower[i], -radius);
}

double SpaceDescriptor::clamped_upper(std::size_t i, double radius) const {
    return std::min(upper[i], radius);
}

bool SpaceDescriptor::has_unbounded_edge() const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (std::isinf(lower[i]) || std::isinf(upper[i])) return true;
    return false;
}

namespace {
void require_dim(const SpaceDescriptor& space, const Point& p, const char* what) {
    if (p.dim() != space.dim())
        throw input_error(std::string(what) + ": point dimension " +
                          std::to_string(p.dim()) + " != space dimension " +
                          std::to_string(space.dim()));
}
}  // namespace

double metric(const SpaceDescriptor& space, const Point& p, const Point& q) {
    require_dim(space, p, "metric");
    require_dim(space, q, "metric");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) sum += std::abs(p[i] - q[i]);
    return sum;
}

bool leq(const SpaceDescriptor& space, const Point& p, const Point& q) {
    require_dim(space, p, "leq");
    require_dim(space, q, "leq");
    for (std::size_t i = 0; i < p.dim(); ++i)
        if (p[i] > q[i]) return false;
    return true;
}

double product_metric(const SpaceDescriptor& X, const SpaceDescriptor& Y,
                      const ProductPoint& a, const ProductPoint& b) {
    return metric(X, a.x, b.x) + metric(Y, a.y, b.y);
}

bool product_leq(const SpaceDescriptor& X, const SpaceDescriptor& Y,
                 const ProductPoint& a, const ProductPoint& b) {
    return leq(X, a.x, b.x) && leq(Y, b.y, a.y);
}

bool comparable(const SpaceDescriptor& X, const SpaceDescriptor& Y,
                const ProductPoint& a, const ProductPoint& b) {
    return product_leq(X, Y, a, b) || product_leq(X, Y, b, a);
}

std::string format_point(const Point& p) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    return os.str();
}

}  // namespace fgfp

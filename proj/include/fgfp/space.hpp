#ifndef FGFP_SPACE_HPP
#define FGFP_SPACE_HPP

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fgfp {

/// Thrown when inputs violate an operation's preconditions (dimension
/// mismatches, points from the wrong space, malformed traces).
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown for bad configuration: inadmissible constants, unknown builtin
/// names, grid ceilings exceeded.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite-dimensional real box with componentwise partial order and the
/// L1 metric. Edges may be infinite; points are always finite.
struct SpaceDescriptor {
    std::vector<double> lower;  // -inf allowed
    std::vector<double> upper;  // +inf allowed
    bool allow_degenerate = false;

    SpaceDescriptor() = default;
    SpaceDescriptor(std::vector<double> lo, std::vector<double> hi,
                    bool degenerate_ok = false);

    std::size_t dim() const { return lower.size(); }

    /// Whole real line in each of `d` coordinates.
    static SpaceDescriptor unbounded(std::size_t d);
    /// The interval box [lo, hi] replicated implicitly by vectors.
    static SpaceDescriptor box(std::vector<double> lo, std::vector<double> hi);

    bool contains(const std::vector<double>& coords) const;

    /// Edge i clamped to [-radius, radius] where infinite; used by samplers
    /// and the grid oracle.
    double clamped_lower(std::size_t i, double radius) const;
    double clamped_upper(std::size_t i, double radius) const;
    bool has_unbounded_edge() const;
};

struct Point {
    std::vector<double> coords;

    Point() = default;
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}
    Point(std::initializer_list<double> c) : coords(c) {}

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }
    double& operator[](std::size_t i) { return coords[i]; }

    friend bool operator==(const Point& a, const Point& b) {
        return a.coords == b.coords;
    }
};

/// A point of X x Y.
struct ProductPoint {
    Point x;
    Point y;

    friend bool operator==(const ProductPoint& a, const ProductPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
};

/// L1 distance. Dimension mismatch is an input_error.
double metric(const SpaceDescriptor& space, const Point& p, const Point& q);

/// Componentwise order: p <= q iff p[i] <= q[i] for all i.
bool leq(const SpaceDescriptor& space, const Point& p, const Point& q);

/// Sum of the coordinate metrics on X x Y.
double product_metric(const SpaceDescriptor& X, const SpaceDescriptor& Y,
                      const ProductPoint& a, const ProductPoint& b);

/// Product order: a <= b iff a.x <= b.x in X and b.y <= a.y in Y.
/// The second coordinate reverses.
bool product_leq(const SpaceDescriptor& X, const SpaceDescriptor& Y,
                 const ProductPoint& a, const ProductPoint& b);

bool comparable(const SpaceDescriptor& X, const SpaceDescriptor& Y,
                const ProductPoint& a, const ProductPoint& b);

std::string format_point(const Point& p);

}  // namespace fgfp

#endif

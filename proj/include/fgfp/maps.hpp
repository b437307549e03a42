#ifndef FGFP_MAPS_HPP
#define FGFP_MAPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fgfp/sampling.hpp"
#include "fgfp/space.hpp"

namespace fgfp {

using Matrix = std::vector<std::vector<double>>;  // row-major

enum class MapKind { affine, builtin };

/// A map X x Y -> X (or Y x X -> Y): either an explicit affine form
/// A*first + B*second + offset, or a name from the builtin registry.
struct MapSpec {
    MapKind kind = MapKind::affine;
    Matrix A;                    // dim_out x dim_first
    Matrix B;                    // dim_out x dim_second
    std::vector<double> offset;  // dim_out
    std::string name;            // builtin only

    static MapSpec affine(Matrix a, Matrix b, std::vector<double> off);
    static MapSpec affine1(double a, double b, double off = 0.0);
    static MapSpec builtin(std::string name);

    /// Resolves builtins to their affine form; affine specs pass through.
    const MapSpec& resolved() const;
};

/// Registry of named maps shipped with the artifact (closed set; all
/// currently affine). Unknown names raise config_error.
const MapSpec& builtin_map(const std::string& name);
std::vector<std::string> builtin_map_names();

struct CoupledMapPair {
    SpaceDescriptor X;
    SpaceDescriptor Y;
    MapSpec F;  // X x Y -> X
    MapSpec G;  // Y x X -> Y
};

/// The two example pairs from the literature plus the 1/8-coefficient pair
/// used for uniqueness certification. Handy in tests and docs.
CoupledMapPair example_banach_pair();   // F=x/3-y/4 on (-inf,0], G=y/8-x/6 on [0,inf)
CoupledMapPair example_quasi_pair();    // F=x/3, G=y/4 on [-1,0]x[0,1]
CoupledMapPair example_unique_pair();   // F=x/8-y/8, G=y/8-x/8 on [-1,0]x[0,1]

Point eval_F(const CoupledMapPair& pair, const Point& x, const Point& y);
Point eval_G(const CoupledMapPair& pair, const Point& y, const Point& x);

/// One simultaneous update (F(x,y), G(y,x)); never staggered.
ProductPoint iterate_step(const CoupledMapPair& pair, const ProductPoint& p);

/// [p0, p1, ..., pn]; length n+1.
std::vector<ProductPoint> iterate_n(const CoupledMapPair& pair,
                                    const ProductPoint& p0, std::size_t n);

enum class MonotoneClause {
    F_nondecreasing_in_x,
    G_nonincreasing_in_x,
    F_nonincreasing_in_y,
    G_nondecreasing_in_y,
    closure_F,  // F left X's box
    closure_G,  // G left Y's box
};

const char* to_string(MonotoneClause c);

struct MonotoneViolation {
    MonotoneClause clause;
    ProductPoint witness_a;  // the two argument tuples that exposed it
    ProductPoint witness_b;
};

struct MonotoneReport {
    std::size_t samples_checked = 0;
    std::vector<MonotoneViolation> violations;
    bool clean() const { return violations.empty(); }
};

/// Sampled check of the four mixed-monotonicity clauses plus box closure of
/// F into X and G into Y. Purely falsifying: a clean report is evidence,
/// not proof.
MonotoneReport check_mixed_monotone(const CoupledMapPair& pair,
                                    const SamplerConfig& cfg);

/// Seed condition x0 <= F(x0,y0) and G(y0,x0) <= y0.
bool check_seed(const CoupledMapPair& pair, const ProductPoint& p0);

}  // namespace fgfp

#endif

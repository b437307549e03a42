#ifndef FGFP_LINPROG_HPP
#define FGFP_LINPROG_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace fgfp::lp {

inline constexpr int kMaxDim = 4;

/// One halfspace a.x <= b (only the first `dim` entries of `a` are used).
struct Constraint {
    std::array<double, kMaxDim> a{};
    double b = 0.0;
};

enum class Status { optimal, infeasible };

struct Result {
    Status status = Status::infeasible;
    std::array<double, kMaxDim> x{};
    double value = 0.0;
};

/// Minimizes c.x over { lo <= x <= hi, a_i.x <= b_i } by randomized
/// incremental insertion (Seidel). The box must be bounded. Deterministic
/// for a fixed shuffle_seed.
Result minimize(int dim, const std::vector<Constraint>& cons,
                const std::array<double, kMaxDim>& c,
                const std::array<double, kMaxDim>& lo,
                const std::array<double, kMaxDim>& hi,
                std::uint64_t shuffle_seed);

/// As minimize, then breaks ties among optima toward the lexicographically
/// smallest coordinate vector.
Result minimize_lexmin(int dim, const std::vector<Constraint>& cons,
                       const std::array<double, kMaxDim>& c,
                       const std::array<double, kMaxDim>& lo,
                       const std::array<double, kMaxDim>& hi,
                       std::uint64_t shuffle_seed);

}  // namespace fgfp::lp

#endif

#ifndef FGFP_PROBLEM_HPP
#define FGFP_PROBLEM_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "fgfp/solver.hpp"

namespace fgfp {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A fully validated problem description: spaces, maps, and optional
/// contraction class, seed point and solve settings.
struct ProblemFile {
    CoupledMapPair pair;
    std::optional<ContractionClass> cls;
    std::optional<ProductPoint> seed_point;
    SolveConfig solve;
    bool has_solve_block = false;
};

/// Line-oriented `section.key = value` format, UTF-8, '#' comments.
/// Numeric literals are decimals, 'inf'/'-inf', or exact rationals "p/q".
/// Vectors are comma-separated; matrix rows are separated by ';'.
/// Unknown sections or keys are rejected.
ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);

/// Canonical emission; parse(emit(p)) reproduces the structure.
std::string emit_problem(const ProblemFile& p);

/// "p/q", "inf", "-inf" or strtod-compatible decimal.
double parse_number(const std::string& token);

}  // namespace fgfp

#endif

#ifndef FGFP_CONTRACTION_HPP
#define FGFP_CONTRACTION_HPP

#include <string>
#include <vector>

#include "fgfp/maps.hpp"

namespace fgfp {

enum class ClassTag { banach, kannan, chatterjea, reich, hybrid, quasi };

const char* to_string(ClassTag tag);
ClassTag class_tag_from_string(const std::string& s);

/// One of the six contraction hypotheses with its constants. Four-constant
/// families use k,l,m,n; three-constant families use a,b,c; the quasi
/// family uses k (F side) and l (G side).
struct ContractionClass {
    ClassTag tag = ClassTag::banach;
    double k = 0, l = 0, m = 0, n = 0;
    double a = 0, b = 0, c = 0;

    static ContractionClass banach(double k, double l, double m, double n);
    static ContractionClass kannan(double k, double l, double m, double n);
    static ContractionClass chatterjea(double k, double l, double m, double n);
    static ContractionClass reich(double a, double b, double c);
    static ContractionClass hybrid(double a, double b, double c);
    static ContractionClass quasi(double k, double l);

    /// Empty string when admissible, otherwise the violated constraint.
    std::string admissibility_error() const;
    bool admissible() const { return admissibility_error().empty(); }
    void require_admissible() const;
};

/// Five-term max of X-distances bounding the quasi-contraction right-hand
/// side: max{ d(x,u), d(x,F(x,y)), d(x,F(u,v)), d(u,F(u,v)), d(u,F(x,y)) }.
double quasi_M(const CoupledMapPair& pair, const Point& x, const Point& y,
               const Point& u, const Point& v);

/// Mirror of quasi_M in Y with G.
double quasi_N(const CoupledMapPair& pair, const Point& y, const Point& x,
               const Point& v, const Point& u);

struct ConditionSlack {
    double slack_F;  // lhs - rhs of the F inequality; <= 0 means it holds
    double slack_G;
};

/// Evaluates both defining inequalities on a comparable pair hi >= lo in
/// the product order. The F side reads (x,y)=hi, (u,v)=lo; the G side
/// swaps roles per its own quantifier.
ConditionSlack condition_slack(const ContractionClass& cls,
                               const CoupledMapPair& pair,
                               const ProductPoint& hi, const ProductPoint& lo);

struct SlackViolation {
    ProductPoint hi, lo;
    char side;  // 'F' or 'G'
    double lhs, rhs;
};

struct ViolationReport {
    std::size_t samples_checked = 0;
    double worst_slack = -std::numeric_limits<double>::infinity();
    std::vector<SlackViolation> violations;
    bool clean() const { return violations.empty(); }
};

/// The deterministic pair battery every sampler-based check starts from:
/// all ordered min/max combinations of box corners, which include the
/// axis-aligned extremal pairs that pin affine constants.
std::vector<std::pair<ProductPoint, ProductPoint>> corner_pair_battery(
    const CoupledMapPair& pair, double clamp_radius);

/// Sampled quantifier check of the class's inequalities over comparable
/// pairs (corner battery first, then cfg.samples random pairs).
ViolationReport verify_condition(const ContractionClass& cls,
                                 const CoupledMapPair& pair,
                                 const SamplerConfig& cfg);

class estimation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fits the class's free constants from the same sampled pair set as
/// verify_condition: minimizes the admissibility functional subject to
/// slack <= 0 on every pair (a small LP; ties broken lexicographically).
/// Throws estimation_error when the maps are not certifiably in the class
/// at the sampled resolution.
ContractionClass estimate_constants(ClassTag tag, const CoupledMapPair& pair,
                                    const SamplerConfig& cfg);

/// Shared helper: evaluates all slacks on an explicit pair list.
ViolationReport check_condition_on_pairs(
    const ContractionClass& cls, const CoupledMapPair& pair,
    const std::vector<std::pair<ProductPoint, ProductPoint>>& pairs,
    double slack_tol);

/// The comparable-pair set (battery + samples) used by both
/// verify_condition and estimate_constants.
std::vector<std::pair<ProductPoint, ProductPoint>> sample_comparable_pairs(
    const CoupledMapPair& pair, const SamplerConfig& cfg);

}  // namespace fgfp

#endif

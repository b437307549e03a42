#include "fgfp/contraction.hpp"

#include <algorithm>
#include <cmath>

#include "fgfp/linprog.hpp"

namespace fgfp {

const char* to_string(ClassTag tag) {
    switch (tag) {
        case ClassTag::banach: return "banach";
        case ClassTag::kannan: return "kannan";
        case ClassTag::chatterjea: return "chatterjea";
        case ClassTag::reich: return "reich";
        case ClassTag::hybrid: return "hybrid";
        case ClassTag::quasi: return "quasi";
    }
    return "?";
}

ClassTag class_tag_from_string(const std::string& s) {
    if (s == "banach") return ClassTag::banach;
    if (s == "kannan") return ClassTag::kannan;
    if (s == "chatterjea") return ClassTag::chatterjea;
    if (s == "reich") return ClassTag::reich;
    if (s == "hybrid") return ClassTag::hybrid;
    if (s == "quasi") return ClassTag::quasi;
    throw config_error("unknown contraction class '" + s + "'");
}

ContractionClass ContractionClass::banach(double k, double l, double m, double n) {
    ContractionClass c;
    c.tag = ClassTag::banach;
    c.k = k; c.l = l; c.m = m; c.n = n;
    return c;
}
ContractionClass ContractionClass::kannan(double k, double l, double m, double n) {
    ContractionClass c = banach(k, l, m, n);
    c.tag = ClassTag::kannan;
    return c;
}
ContractionClass ContractionClass::chatterjea(double k, double l, double m, double n) {
    ContractionClass c = banach(k, l, m, n);
    c.tag = ClassTag::chatterjea;
    return c;
}
ContractionClass ContractionClass::reich(double a, double b, double c_) {
    ContractionClass c;
    c.tag = ClassTag::reich;
    c.a = a; c.b = b; c.c = c_;
    return c;
}
ContractionClass ContractionClass::hybrid(double a, double b, double c_) {
    ContractionClass c = reich(a, b, c_);
    c.tag = ClassTag::hybrid;
    return c;
}
ContractionClass ContractionClass::quasi(double k, double l) {
    ContractionClass c;
    c.tag = ClassTag::quasi;
    c.k = k; c.l = l;
    return c;
}

std::string ContractionClass::admissibility_error() const {
    auto in = [](double v, double hi) { return v >= 0.0 && v < hi; };
    switch (tag) {
        case ClassTag::banach:
            if (!in(k, 1) || !in(l, 1) || !in(m, 1) || !in(n, 1))
                return "k,l,m,n must lie in [0,1)";
            if (k + l >= 1) return "k+l<1 violated";
            if (m + n >= 1) return "m+n<1 violated";
            return "";
        case ClassTag::kannan:
        case ClassTag::chatterjea:
            if (!in(k, 0.5) || !in(l, 0.5) || !in(m, 0.5) || !in(n, 0.5))
                return "k,l,m,n must lie in [0,1/2)";
            return "";
        case ClassTag::reich:
            if (a < 0 || b < 0 || c < 0) return "a,b,c must be nonnegative";
            if (a + b + c >= 1) return "a+b+c<1 violated";
            return "";
        case ClassTag::hybrid:
            if (a < 0 || b < 0 || c < 0) return "a,b,c must be nonnegative";
            if (2 * b + c >= 1) return "2b+c<1 violated";
            if (2 * a + c >= 1) return "2a+c<1 violated";
            return "";
        case ClassTag::quasi:
            if (!in(k, 0.5) || !in(l, 0.5)) return "k,l must lie in [0,1/2)";
            return "";
    }
    return "unknown class";
}

void ContractionClass::require_admissible() const {
    const std::string err = admissibility_error();
    if (!err.empty())
        throw config_error(std::string(to_string(tag)) + " constants inadmissible: " + err);
}

double quasi_M(const CoupledMapPair& pair, const Point& x, const Point& y,
               const Point& u, const Point& v) {
    const Point fxy = eval_F(pair, x, y);
    const Point fuv = eval_F(pair, u, v);
    return std::max({metric(pair.X, x, u), metric(pair.X, x, fxy),
                     metric(pair.X, x, fuv), metric(pair.X, u, fuv),
                     metric(pair.X, u, fxy)});
}

double quasi_N(const CoupledMapPair& pair, const Point& y, const Point& x,
               const Point& v, const Point& u) {
    const Point gyx = eval_G(pair, y, x);
    const Point gvu = eval_G(pair, v, u);
    return std::max({metric(pair.Y, y, v), metric(pair.Y, y, gyx),
                     metric(pair.Y, y, gvu), metric(pair.Y, v, gvu),
                     metric(pair.Y, v, gyx)});
}

ConditionSlack condition_slack(const ContractionClass& cls,
                               const CoupledMapPair& pair,
                               const ProductPoint& hi, const ProductPoint& lo) {
    if (!product_leq(pair.X, pair.Y, lo, hi))
        throw input_error("condition_slack: pair is not comparable (need lo <= hi)");

    // F side: (x,y) = hi, (u,v) = lo, so x >= u and y <= v.
    const Point &x = hi.x, &y = hi.y, &u = lo.x, &v = lo.y;
    const Point fxy = eval_F(pair, x, y);
    const Point fuv = eval_F(pair, u, v);
    const double lhs_F = metric(pair.X, fxy, fuv);

    // G side quantifier wants x' <= u', y' >= v': take (x',y') = lo, (u',v') = hi.
    const Point &xs = lo.x, &ys = lo.y, &us = hi.x, &vs = hi.y;
    const Point gyx = eval_G(pair, ys, xs);
    const Point gvu = eval_G(pair, vs, us);
    const double lhs_G = metric(pair.Y, gyx, gvu);

    double rhs_F = 0, rhs_G = 0;
    switch (cls.tag) {
        case ClassTag::banach:
            rhs_F = cls.k * metric(pair.X, x, u) + cls.l * metric(pair.Y, y, v);
            rhs_G = cls.m * metric(pair.Y, ys, vs) + cls.n * metric(pair.X, xs, us);
            break;
        case ClassTag::kannan:
            rhs_F = cls.k * metric(pair.X, x, fxy) + cls.l * metric(pair.X, u, fuv);
            rhs_G = cls.m * metric(pair.Y, ys, gyx) + cls.n * metric(pair.Y, vs, gvu);
            break;
        case ClassTag::chatterjea:
            rhs_F = cls.k * metric(pair.X, x, fuv) + cls.l * metric(pair.X, u, fxy);
            rhs_G = cls.m * metric(pair.Y, ys, gvu) + cls.n * metric(pair.Y, vs, gyx);
            break;
        case ClassTag::reich:
            rhs_F = cls.a * metric(pair.X, x, fxy) + cls.b * metric(pair.X, u, fuv) +
                    cls.c * metric(pair.X, x, u);
            rhs_G = cls.a * metric(pair.Y, ys, gyx) + cls.b * metric(pair.Y, vs, gvu) +
                    cls.c * metric(pair.Y, ys, vs);
            break;
        case ClassTag::hybrid:
            rhs_F = cls.a * metric(pair.X, x, fuv) + cls.b * metric(pair.X, u, fxy) +
                    cls.c * metric(pair.X, x, u);
            rhs_G = cls.a * metric(pair.Y, ys, gvu) + cls.b * metric(pair.Y, vs, gyx) +
                    cls.c * metric(pair.Y, ys, vs);
            break;
        case ClassTag::quasi:
            rhs_F = cls.k * quasi_M(pair, x, y, u, v);
            rhs_G = cls.l * quasi_N(pair, ys, xs, vs, us);
            break;
    }
    return {lhs_F - rhs_F, lhs_G - rhs_G};
}

namespace {

std::vector<Point> box_corners(const SpaceDescriptor& s, double radius) {
    std::vector<Point> corners;
    const std::size_t d = s.dim();
    const std::size_t count = std::size_t{1} << d;
    corners.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        Point p;
        p.coords.resize(d);
        for (std::size_t i = 0; i < d; ++i)
            p[i] = (mask >> i) & 1 ? s.clamped_upper(i, radius)
                                   : s.clamped_lower(i, radius);
        corners.push_back(std::move(p));
    }
    return corners;
}

}  // namespace

std::vector<std::pair<ProductPoint, ProductPoint>> corner_pair_battery(
    const CoupledMapPair& pair, double clamp_radius) {
    const auto cx = box_corners(pair.X, clamp_radius);
    const auto cy = box_corners(pair.Y, clamp_radius);
    std::vector<ProductPoint> corners;
    for (const auto& x : cx)
        for (const auto& y : cy) corners.push_back({x, y});

    std::vector<std::pair<ProductPoint, ProductPoint>> battery;
    battery.reserve(corners.size() * corners.size());
    for (const auto& p : corners) {
        for (const auto& q : corners) {
            ProductPoint hi = p, lo = q;
            for (std::size_t i = 0; i < hi.x.dim(); ++i) {
                hi.x[i] = std::max(p.x[i], q.x[i]);
                lo.x[i] = std::min(p.x[i], q.x[i]);
            }
            for (std::size_t i = 0; i < hi.y.dim(); ++i) {
                hi.y[i] = std::min(p.y[i], q.y[i]);
                lo.y[i] = std::max(p.y[i], q.y[i]);
            }
            battery.emplace_back(std::move(hi), std::move(lo));
        }
    }
    return battery;
}

std::vector<std::pair<ProductPoint, ProductPoint>> sample_comparable_pairs(
    const CoupledMapPair& pair, const SamplerConfig& cfg) {
    auto pairs = corner_pair_battery(pair, cfg.clamp_radius);
    std::mt19937_64 rng(cfg.seed);
    BoxSampler sx(pair.X, cfg.clamp_radius, rng);
    BoxSampler sy(pair.Y, cfg.clamp_radius, rng);
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        auto [xlo, xhi] = sx.draw_comparable();
        auto [ylo, yhi] = sy.draw_comparable();
        // product order: hi has the larger x and the smaller y
        pairs.push_back({{xhi, ylo}, {xlo, yhi}});
    }
    return pairs;
}

ViolationReport check_condition_on_pairs(
    const ContractionClass& cls, const CoupledMapPair& pair,
    const std::vector<std::pair<ProductPoint, ProductPoint>>& pairs,
    double slack_tol) {
    ViolationReport report;
    for (const auto& [hi, lo] : pairs) {
        const ConditionSlack s = condition_slack(cls, pair, hi, lo);
        report.worst_slack = std::max({report.worst_slack, s.slack_F, s.slack_G});
        if (s.slack_F > slack_tol)
            report.violations.push_back({hi, lo, 'F', s.slack_F, 0.0});
        if (s.slack_G > slack_tol)
            report.violations.push_back({hi, lo, 'G', s.slack_G, 0.0});
        ++report.samples_checked;
    }
    return report;
}

ViolationReport verify_condition(const ContractionClass& cls,
                                 const CoupledMapPair& pair,
                                 const SamplerConfig& cfg) {
    cls.require_admissible();
    return check_condition_on_pairs(cls, pair, sample_comparable_pairs(pair, cfg),
                                    cfg.slack_tol);
}

namespace {

struct RowSet {
    std::vector<lp::Constraint> cons;  // -w.theta <= -lhs, i.e. w.theta >= lhs
    void add(std::initializer_list<double> w, double lhs) {
        lp::Constraint c;
        int i = 0;
        for (double v : w) c.a[i++] = -v;
        c.b = -lhs;
        cons.push_back(c);
    }
};

std::array<double, lp::kMaxDim> fill(double v, int dim) {
    std::array<double, lp::kMaxDim> a{};
    for (int i = 0; i < dim; ++i) a[i] = v;
    return a;
}

std::array<double, lp::kMaxDim> solve_cover(int dim, const RowSet& rows, double ub,
                                            std::uint64_t seed) {
    const auto r = lp::minimize_lexmin(dim, rows.cons, fill(1.0, dim),
                                       fill(0.0, dim), fill(ub, dim), seed);
    if (r.status != lp::Status::optimal)
        throw estimation_error("not certifiable from samples: constraint system "
                               "infeasible within the admissible box");
    return r.x;
}

}  // namespace

ContractionClass estimate_constants(ClassTag tag, const CoupledMapPair& pair,
                                    const SamplerConfig& cfg) {
    const auto pairs = sample_comparable_pairs(pair, cfg);

    RowSet rows_F, rows_G;
    for (const auto& [hi, lo] : pairs) {
        const Point &x = hi.x, &y = hi.y, &u = lo.x, &v = lo.y;
        const Point fxy = eval_F(pair, x, y);
        const Point fuv = eval_F(pair, u, v);
        const double lhs_F = metric(pair.X, fxy, fuv);

        const Point &xs = lo.x, &ys = lo.y, &us = hi.x, &vs = hi.y;
        const Point gyx = eval_G(pair, ys, xs);
        const Point gvu = eval_G(pair, vs, us);
        const double lhs_G = metric(pair.Y, gyx, gvu);

        switch (tag) {
            case ClassTag::banach:
                rows_F.add({metric(pair.X, x, u), metric(pair.Y, y, v)}, lhs_F);
                rows_G.add({metric(pair.Y, ys, vs), metric(pair.X, xs, us)}, lhs_G);
                break;
            case ClassTag::kannan:
                rows_F.add({metric(pair.X, x, fxy), metric(pair.X, u, fuv)}, lhs_F);
                rows_G.add({metric(pair.Y, ys, gyx), metric(pair.Y, vs, gvu)}, lhs_G);
                break;
            case ClassTag::chatterjea:
                rows_F.add({metric(pair.X, x, fuv), metric(pair.X, u, fxy)}, lhs_F);
                rows_G.add({metric(pair.Y, ys, gvu), metric(pair.Y, vs, gyx)}, lhs_G);
                break;
            case ClassTag::reich:
                rows_F.add({metric(pair.X, x, fxy), metric(pair.X, u, fuv),
                            metric(pair.X, x, u)},
                           lhs_F);
                rows_F.add({metric(pair.Y, ys, gyx), metric(pair.Y, vs, gvu),
                            metric(pair.Y, ys, vs)},
                           lhs_G);
                break;
            case ClassTag::hybrid:
                rows_F.add({metric(pair.X, x, fuv), metric(pair.X, u, fxy),
                            metric(pair.X, x, u)},
                           lhs_F);
                rows_F.add({metric(pair.Y, ys, gvu), metric(pair.Y, vs, gyx),
                            metric(pair.Y, ys, vs)},
                           lhs_G);
                break;
            case ClassTag::quasi:
                rows_F.add({quasi_M(pair, x, y, u, v)}, lhs_F);
                rows_G.add({quasi_N(pair, ys, xs, vs, us)}, lhs_G);
                break;
        }
    }

    ContractionClass fit;
    fit.tag = tag;
    switch (tag) {
        case ClassTag::banach: {
            const auto f = solve_cover(2, rows_F, 1.0, cfg.seed ^ 0x9e3779b9u);
            const auto g = solve_cover(2, rows_G, 1.0, cfg.seed ^ 0x7f4a7c15u);
            fit.k = f[0]; fit.l = f[1]; fit.m = g[0]; fit.n = g[1];
            break;
        }
        case ClassTag::kannan:
        case ClassTag::chatterjea: {
            const auto f = solve_cover(2, rows_F, 0.5, cfg.seed ^ 0x9e3779b9u);
            const auto g = solve_cover(2, rows_G, 0.5, cfg.seed ^ 0x7f4a7c15u);
            fit.k = f[0]; fit.l = f[1]; fit.m = g[0]; fit.n = g[1];
            break;
        }
        case ClassTag::reich:
        case ClassTag::hybrid: {
            const auto t = solve_cover(3, rows_F, 1.0, cfg.seed ^ 0x9e3779b9u);
            fit.a = t[0]; fit.b = t[1]; fit.c = t[2];
            break;
        }
        case ClassTag::quasi: {
            const auto f = solve_cover(1, rows_F, 0.5, cfg.seed ^ 0x9e3779b9u);
            const auto g = solve_cover(1, rows_G, 0.5, cfg.seed ^ 0x7f4a7c15u);
            fit.k = f[0]; fit.l = g[0];
            break;
        }
    }

    const std::string err = fit.admissibility_error();
    if (!err.empty())
        throw estimation_error("not certifiable from samples: fitted constants "
                               "are inadmissible (" + err + ")");
    return fit;
}

}  // namespace fgfp

#include "fgfp/maps.hpp"

#include <cmath>
#include <map>

namespace fgfp {

MapSpec MapSpec::affine(Matrix a, Matrix b, std::vector<double> off) {
    MapSpec s;
    s.kind = MapKind::affine;
    s.A = std::move(a);
    s.B = std::move(b);
    s.offset = std::move(off);
    return s;
}

MapSpec MapSpec::affine1(double a, double b, double off) {
    return affine({{a}}, {{b}}, {off});
}

MapSpec MapSpec::builtin(std::string name) {
    MapSpec s;
    s.kind = MapKind::builtin;
    s.name = std::move(name);
    return s;
}

const MapSpec& MapSpec::resolved() const {
    if (kind == MapKind::affine) return *this;
    return builtin_map(name);
}

namespace {

const std::map<std::string, MapSpec>& registry() {
    static const std::map<std::string, MapSpec> reg = {
        // first worked example: F(x,y)=x/3-y/4, G(y,x)=y/8-x/6
        {"example1_f", MapSpec::affine1(1.0 / 3.0, -1.0 / 4.0)},
        {"example1_g", MapSpec::affine1(1.0 / 8.0, -1.0 / 6.0)},
        // quasi-contraction example: F(x,y)=x/3, G(y,x)=y/4
        {"example2_f", MapSpec::affine1(1.0 / 3.0, 0.0)},
        {"example2_g", MapSpec::affine1(1.0 / 4.0, 0.0)},
        // symmetric 1/8 pair whose contraction factor certifies uniqueness
        {"unique_f", MapSpec::affine1(1.0 / 8.0, -1.0 / 8.0)},
        {"unique_g", MapSpec::affine1(1.0 / 8.0, -1.0 / 8.0)},
    };
    return reg;
}

void check_shapes(const MapSpec& m, std::size_t dim_out, std::size_t dim_first,
                  std::size_t dim_second, const char* what) {
    if (m.A.size() != dim_out || m.B.size() != dim_out || m.offset.size() != dim_out)
        throw input_error(std::string(what) + ": output dimension mismatch");
    for (const auto& row : m.A)
        if (row.size() != dim_first)
            throw input_error(std::string(what) + ": A column count mismatch");
    for (const auto& row : m.B)
        if (row.size() != dim_second)
            throw input_error(std::string(what) + ": B column count mismatch");
}

Point eval_affine(const MapSpec& m, const Point& first, const Point& second) {
    Point out;
    out.coords.resize(m.offset.size());
    for (std::size_t i = 0; i < out.dim(); ++i) {
        double v = m.offset[i];
        for (std::size_t j = 0; j < first.dim(); ++j) v += m.A[i][j] * first[j];
        for (std::size_t j = 0; j < second.dim(); ++j) v += m.B[i][j] * second[j];
        out[i] = v;
    }
    return out;
}

}  // namespace

const MapSpec& builtin_map(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw config_error("unknown builtin map '" + name + "'");
    return it->second;
}

std::vector<std::string> builtin_map_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : registry()) names.push_back(k);
    return names;
}

CoupledMapPair example_banach_pair() {
    const double inf = std::numeric_limits<double>::infinity();
    return {SpaceDescriptor::box({-inf}, {0.0}), SpaceDescriptor::box({0.0}, {inf}),
            MapSpec::builtin("example1_f"), MapSpec::builtin("example1_g")};
}

CoupledMapPair example_quasi_pair() {
    return {SpaceDescriptor::box({-1.0}, {0.0}), SpaceDescriptor::box({0.0}, {1.0}),
            MapSpec::builtin("example2_f"), MapSpec::builtin("example2_g")};
}

CoupledMapPair example_unique_pair() {
    return {SpaceDescriptor::box({-1.0}, {0.0}), SpaceDescriptor::box({0.0}, {1.0}),
            MapSpec::builtin("unique_f"), MapSpec::builtin("unique_g")};
}

Point eval_F(const CoupledMapPair& pair, const Point& x, const Point& y) {
    const MapSpec& m = pair.F.resolved();
    check_shapes(m, pair.X.dim(), pair.X.dim(), pair.Y.dim(), "eval_F");
    if (x.dim() != pair.X.dim() || y.dim() != pair.Y.dim())
        throw input_error("eval_F: argument dimension mismatch");
    return eval_affine(m, x, y);
}

Point eval_G(const CoupledMapPair& pair, const Point& y, const Point& x) {
    const MapSpec& m = pair.G.resolved();
    check_shapes(m, pair.Y.dim(), pair.Y.dim(), pair.X.dim(), "eval_G");
    if (x.dim() != pair.X.dim() || y.dim() != pair.Y.dim())
        throw input_error("eval_G: argument dimension mismatch");
    return eval_affine(m, y, x);
}

ProductPoint iterate_step(const CoupledMapPair& pair, const ProductPoint& p) {
    return {eval_F(pair, p.x, p.y), eval_G(pair, p.y, p.x)};
}

std::vector<ProductPoint> iterate_n(const CoupledMapPair& pair,
                                    const ProductPoint& p0, std::size_t n) {
    std::vector<ProductPoint> out;
    out.reserve(n + 1);
    out.push_back(p0);
    for (std::size_t j = 0; j < n; ++j) out.push_back(iterate_step(pair, out.back()));
    return out;
}

const char* to_string(MonotoneClause c) {
    switch (c) {
        case MonotoneClause::F_nondecreasing_in_x: return "F_nondecreasing_in_x";
        case MonotoneClause::G_nonincreasing_in_x: return "G_nonincreasing_in_x";
        case MonotoneClause::F_nonincreasing_in_y: return "F_nonincreasing_in_y";
        case MonotoneClause::G_nondecreasing_in_y: return "G_nondecreasing_in_y";
        case MonotoneClause::closure_F: return "closure_F";
        case MonotoneClause::closure_G: return "closure_G";
    }
    return "?";
}

MonotoneReport check_mixed_monotone(const CoupledMapPair& pair,
                                    const SamplerConfig& cfg) {
    MonotoneReport report;
    std::mt19937_64 rng(cfg.seed);
    BoxSampler sx(pair.X, cfg.clamp_radius, rng);
    BoxSampler sy(pair.Y, cfg.clamp_radius, rng);

    auto note = [&](MonotoneClause clause, ProductPoint a, ProductPoint b) {
        report.violations.push_back({clause, std::move(a), std::move(b)});
    };
    auto check_closure = [&](const Point& x, const Point& y) {
        Point fx = eval_F(pair, x, y);
        if (!pair.X.contains(fx.coords))
            note(MonotoneClause::closure_F, {x, y}, {fx, y});
        Point gy = eval_G(pair, y, x);
        if (!pair.Y.contains(gy.coords))
            note(MonotoneClause::closure_G, {x, y}, {x, gy});
    };

    for (std::size_t s = 0; s < cfg.samples; ++s) {
        // comparable x-pair, fixed y
        auto [x1, x2] = sx.draw_comparable();
        Point y = sy.draw();
        if (!leq(pair.X, eval_F(pair, x1, y), eval_F(pair, x2, y)))
            note(MonotoneClause::F_nondecreasing_in_x, {x1, y}, {x2, y});
        if (!leq(pair.Y, eval_G(pair, y, x2), eval_G(pair, y, x1)))
            note(MonotoneClause::G_nonincreasing_in_x, {x1, y}, {x2, y});

        // comparable y-pair, fixed x
        auto [y1, y2] = sy.draw_comparable();
        Point x = sx.draw();
        if (!leq(pair.X, eval_F(pair, x, y2), eval_F(pair, x, y1)))
            note(MonotoneClause::F_nonincreasing_in_y, {x, y1}, {x, y2});
        if (!leq(pair.Y, eval_G(pair, y1, x), eval_G(pair, y2, x)))
            note(MonotoneClause::G_nondecreasing_in_y, {x, y1}, {x, y2});

        check_closure(x1, y);
        check_closure(x, y1);
        ++report.samples_checked;
    }
    return report;
}

bool check_seed(const CoupledMapPair& pair, const ProductPoint& p0) {
    return leq(pair.X, p0.x, eval_F(pair, p0.x, p0.y)) &&
           leq(pair.Y, eval_G(pair, p0.y, p0.x), p0.y);
}

}  // namespace fgfp

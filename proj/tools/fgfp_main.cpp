// Command-line surface: solve / verify / estimate / certify / oracle over
// line-oriented problem files. Exit status: 0 success, 2 hypothesis
// violation or non-convergence, 1 usage or parse errors.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fgfp/oracle.hpp"
#include "fgfp/problem.hpp"

namespace {

using namespace fgfp;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print_kv(const std::string& key, const std::string& value) {
    std::cout << key << " = " << value << "\n";
}

void print_hypotheses(const HypothesisReport& h) {
    print_kv("seed_check", h.seed_ok ? "pass" : "fail");
    print_kv("monotone_samples", std::to_string(h.monotone.samples_checked));
    print_kv("monotone_violations", std::to_string(h.monotone.violations.size()));
    for (const auto& v : h.monotone.violations)
        print_kv("monotone_violation", to_string(v.clause));
    if (h.condition) {
        print_kv("condition_samples", std::to_string(h.condition->samples_checked));
        print_kv("condition_violations", std::to_string(h.condition->violations.size()));
        print_kv("condition_worst_slack", num(h.condition->worst_slack));
    }
    print_kv("monotone_trajectory", h.monotone_trajectory_ok ? "pass" : "fail");
}

void print_class(const ContractionClass& c) {
    print_kv("class", to_string(c.tag));
    switch (c.tag) {
        case ClassTag::banach:
        case ClassTag::kannan:
        case ClassTag::chatterjea:
            print_kv("class.k", num(c.k));
            print_kv("class.l", num(c.l));
            print_kv("class.m", num(c.m));
            print_kv("class.n", num(c.n));
            break;
        case ClassTag::reich:
        case ClassTag::hybrid:
            print_kv("class.a", num(c.a));
            print_kv("class.b", num(c.b));
            print_kv("class.c", num(c.c));
            break;
        case ClassTag::quasi:
            print_kv("class.k", num(c.k));
            print_kv("class.l", num(c.l));
            break;
    }
}

void print_trace_table(const IterationTrace& trace,
                       const std::optional<Certificate>& cert) {
    std::printf("%6s  %-24s  %-24s  %-24s  %-24s  %-24s  %-24s\n", "j", "x", "y",
                "step", "residual", "bound_X", "bound_Y");
    for (std::size_t j = 0; j < trace.iterates.size(); ++j) {
        const std::string x = format_point(trace.iterates[j].x);
        const std::string y = format_point(trace.iterates[j].y);
        const std::string step = j == 0 ? "-" : num(trace.step_distances[j - 1]);
        std::string bx = "-", by = "-";
        if (cert) {
            const Bounds b = apriori_bound(*cert, j);
            bx = num(b.bound_X);
            by = num(b.bound_Y);
        }
        std::printf("%6zu  %-24s  %-24s  %-24s  %-24s  %-24s  %-24s\n", j, x.c_str(),
                    y.c_str(), step.c_str(), num(trace.residuals[j]).c_str(),
                    bx.c_str(), by.c_str());
    }
}

ProductPoint require_seed(const ProblemFile& p) {
    if (!p.seed_point)
        throw config_error("problem file has no seed_point block");
    return *p.seed_point;
}

ContractionClass require_class(const ProblemFile& p) {
    if (!p.cls) throw config_error("problem file has no class block");
    return *p.cls;
}

int cmd_solve(const std::string& path, std::optional<double> tol,
              std::optional<std::size_t> max_iter, std::uint64_t seed,
              std::size_t samples) {
    ProblemFile p = load_problem(path);
    SolveConfig cfg = p.solve;
    if (tol) {
        cfg.tol_step = *tol;
        cfg.tol_residual = *tol;
    }
    if (max_iter) cfg.max_iter = *max_iter;
    SamplerConfig sampler;
    sampler.seed = seed;
    sampler.samples = samples;

    const FixedPointResult r = solve(p.pair, p.cls, require_seed(p), cfg, sampler);

    print_kv("problem", path);
    print_kv("subcommand", "solve");
    print_kv("hypothesis_mode", to_string(cfg.mode));
    if (p.cls) print_class(*p.cls);
    if (r.certificate) {
        print_kv("delta1", num(r.certificate->delta1));
        print_kv("delta2", num(r.certificate->delta2));
        print_kv("bound_form", to_string(r.certificate->form));
        print_kv("D1", num(r.certificate->d1_joint));
    }
    print_hypotheses(r.hypotheses);
    print_kv("converged", r.converged ? "true" : "false");
    print_kv("iterations", std::to_string(r.iterations));
    print_kv("final_x", format_point(r.point.x));
    print_kv("final_y", format_point(r.point.y));
    print_kv("final_residual", num(r.trace.residuals.back()));
    print_trace_table(r.trace, r.certificate);

    const bool hypotheses_ok =
        r.hypotheses.seed_ok && r.hypotheses.monotone.clean() &&
        (!r.hypotheses.condition || r.hypotheses.condition->clean()) &&
        r.hypotheses.monotone_trajectory_ok;
    return (r.converged && hypotheses_ok) ? 0 : 2;
}

int cmd_verify(const std::string& path, std::uint64_t seed, std::size_t samples) {
    ProblemFile p = load_problem(path);
    const ContractionClass cls = require_class(p);
    SamplerConfig sampler;
    sampler.seed = seed;
    sampler.samples = samples;

    const ViolationReport cond = verify_condition(cls, p.pair, sampler);
    const MonotoneReport mono = check_mixed_monotone(p.pair, sampler);

    print_kv("problem", path);
    print_kv("subcommand", "verify");
    print_class(cls);
    print_kv("condition_samples", std::to_string(cond.samples_checked));
    print_kv("condition_violations", std::to_string(cond.violations.size()));
    print_kv("condition_worst_slack", num(cond.worst_slack));
    print_kv("monotone_samples", std::to_string(mono.samples_checked));
    print_kv("monotone_violations", std::to_string(mono.violations.size()));
    bool seed_ok = true;
    if (p.seed_point) {
        seed_ok = check_seed(p.pair, *p.seed_point);
        print_kv("seed_check", seed_ok ? "pass" : "fail");
    }
    return (cond.clean() && mono.clean() && seed_ok) ? 0 : 2;
}

int cmd_estimate(const std::string& path, const std::string& class_name,
                 std::uint64_t seed, std::size_t samples) {
    ProblemFile p = load_problem(path);
    ClassTag tag;
    if (!class_name.empty())
        tag = class_tag_from_string(class_name);
    else
        tag = require_class(p).tag;
    SamplerConfig sampler;
    sampler.seed = seed;
    sampler.samples = samples;

    print_kv("problem", path);
    print_kv("subcommand", "estimate");
    try {
        const ContractionClass fit = estimate_constants(tag, p.pair, sampler);
        print_class(fit);
        const RateFactors rf = rate_factors(fit);
        print_kv("delta1", num(rf.delta1));
        print_kv("delta2", num(rf.delta2));
    } catch (const estimation_error& ex) {
        print_kv("estimation", "failed");
        print_kv("reason", ex.what());
        return 2;
    }
    return 0;
}

int cmd_certify(const std::string& path, std::size_t steps) {
    ProblemFile p = load_problem(path);
    const ContractionClass cls = require_class(p);
    const ProductPoint p0 = require_seed(p);
    const ProductPoint p1 = iterate_step(p.pair, p0);
    const Certificate cert = make_certificate(cls, p.pair, p0, p1);

    print_kv("problem", path);
    print_kv("subcommand", "certify");
    print_class(cls);
    print_kv("delta1", num(cert.delta1));
    print_kv("delta2", num(cert.delta2));
    print_kv("bound_form", to_string(cert.form));
    print_kv("D1", num(cert.d1_joint));
    std::printf("%6s  %-24s  %-24s\n", "j", "bound_X", "bound_Y");
    for (std::size_t j = 0; j <= steps; ++j) {
        const Bounds b = apriori_bound(cert, j);
        std::printf("%6zu  %-24s  %-24s\n", j, num(b.bound_X).c_str(),
                    num(b.bound_Y).c_str());
    }
    return 0;
}

int cmd_oracle(const std::string& path, std::size_t grid_n, std::size_t pair_grid_n) {
    ProblemFile p = load_problem(path);
    GridSpec grid;
    grid.points_per_axis = grid_n;

    print_kv("problem", path);
    print_kv("subcommand", "oracle");
    const GridMinimizer min = grid_residual_minimizer(p.pair, grid);
    print_kv("grid_points_per_axis", std::to_string(grid_n));
    print_kv("grid_clamped", min.clamped ? "true" : "false");
    print_kv("minimizer_x", format_point(min.point.x));
    print_kv("minimizer_y", format_point(min.point.y));
    print_kv("min_residual", num(min.residual));

    bool ok = true;
    if (p.cls) {
        GridSpec pair_grid;
        pair_grid.points_per_axis = pair_grid_n;
        const ViolationReport rep = condition_brute_force(*p.cls, p.pair, pair_grid);
        print_kv("pair_grid_points_per_axis", std::to_string(pair_grid_n));
        print_kv("pairs_checked", std::to_string(rep.samples_checked));
        print_kv("condition_violations", std::to_string(rep.violations.size()));
        print_kv("condition_worst_slack", num(rep.worst_slack));
        ok = rep.clean();
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FG-coupled fixed point solver and verification toolkit"};
    app.require_subcommand(1);

    std::string path;
    std::optional<double> tol;
    std::optional<std::size_t> max_iter;
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    std::string class_name;
    std::size_t steps = 20;
    std::size_t grid_n = 101;
    std::size_t pair_grid_n = 21;

    auto add_common = [&](CLI::App* sub, bool seed_required) {
        sub->add_option("problem", path, "problem file")->required();
        auto* opt =
            sub->add_option("--seed", seed, "RNG seed for sampling (reproducibility)");
        if (seed_required) opt->required();
        sub->add_option("--samples", samples, "sample count for randomized checks");
        return sub;
    };

    auto* s_solve = add_common(app.add_subcommand("solve", "run the coupled iteration"),
                               false);
    s_solve->add_option("--tol", tol, "sets both step and residual tolerances");
    s_solve->add_option("--max-iter", max_iter, "iteration cap");

    add_common(app.add_subcommand("verify", "check class condition and monotonicity"),
               true);

    auto* s_est =
        add_common(app.add_subcommand("estimate", "fit contraction constants"), true);
    s_est->add_option("--class", class_name, "contraction class tag to fit");

    auto* s_cert = app.add_subcommand("certify", "print the a priori bound table");
    s_cert->add_option("problem", path, "problem file")->required();
    s_cert->add_option("--steps", steps, "table rows j = 0..N");

    auto* s_oracle = app.add_subcommand("oracle", "brute-force grid checks");
    s_oracle->add_option("problem", path, "problem file")->required();
    s_oracle->add_option("--grid", grid_n, "points per axis for the residual scan");
    s_oracle->add_option("--pair-grid", pair_grid_n,
                         "points per axis for the pairwise condition scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand("solve"))
            return cmd_solve(path, tol, max_iter, seed, samples);
        if (app.got_subcommand("verify")) return cmd_verify(path, seed, samples);
        if (app.got_subcommand("estimate"))
            return cmd_estimate(path, class_name, seed, samples);
        if (app.got_subcommand("certify")) return cmd_certify(path, steps);
        if (app.got_subcommand("oracle")) return cmd_oracle(path, grid_n, pair_grid_n);
    } catch (const parse_error& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}

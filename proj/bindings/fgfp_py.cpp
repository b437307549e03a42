#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fgfp/oracle.hpp"
#include "fgfp/problem.hpp"

namespace py = pybind11;
using namespace fgfp;

PYBIND11_MODULE(_fgfp, m) {
    m.doc() = "FG-coupled fixed point solver and verification toolkit";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<parse_error>(m, "ProblemParseError", PyExc_ValueError);
    py::register_exception<estimation_error>(m, "EstimationError", PyExc_RuntimeError);
    py::register_exception<divergence_error>(m, "DivergenceError", PyExc_RuntimeError);

    py::class_<SpaceDescriptor>(m, "SpaceDescriptor")
        .def(py::init<std::vector<double>, std::vector<double>, bool>(),
             py::arg("lower"), py::arg("upper"), py::arg("allow_degenerate") = false)
        .def_readonly("lower", &SpaceDescriptor::lower)
        .def_readonly("upper", &SpaceDescriptor::upper)
        .def("dim", &SpaceDescriptor::dim)
        .def("contains", &SpaceDescriptor::contains);

    py::class_<Point>(m, "Point")
        .def(py::init<std::vector<double>>(), py::arg("coords"))
        .def_readwrite("coords", &Point::coords)
        .def("__repr__", [](const Point& p) { return "Point(" + format_point(p) + ")"; });
    py::implicitly_convertible<std::vector<double>, Point>();

    py::class_<ProductPoint>(m, "ProductPoint")
        .def(py::init([](Point x, Point y) {
                 return ProductPoint{std::move(x), std::move(y)};
             }),
             py::arg("x"), py::arg("y"))
        .def_readwrite("x", &ProductPoint::x)
        .def_readwrite("y", &ProductPoint::y);

    m.def("metric", &metric);
    m.def("leq", &leq);
    m.def("product_metric", &product_metric);
    m.def("product_leq", &product_leq);
    m.def("comparable", &comparable);

    py::class_<MapSpec>(m, "MapSpec")
        .def_static("affine", &MapSpec::affine, py::arg("A"), py::arg("B"),
                    py::arg("offset"))
        .def_static("builtin", &MapSpec::builtin, py::arg("name"));
    m.def("builtin_map_names", &builtin_map_names);

    py::class_<CoupledMapPair>(m, "CoupledMapPair")
        .def(py::init([](SpaceDescriptor X, SpaceDescriptor Y, MapSpec F, MapSpec G) {
                 return CoupledMapPair{std::move(X), std::move(Y), std::move(F),
                                       std::move(G)};
             }),
             py::arg("X"), py::arg("Y"), py::arg("F"), py::arg("G"))
        .def_readonly("X", &CoupledMapPair::X)
        .def_readonly("Y", &CoupledMapPair::Y);
    m.def("example_banach_pair", &example_banach_pair);
    m.def("example_quasi_pair", &example_quasi_pair);
    m.def("example_unique_pair", &example_unique_pair);

    m.def("eval_F", &eval_F);
    m.def("eval_G", &eval_G);
    m.def("iterate_step", &iterate_step);
    m.def("iterate_n", &iterate_n);
    m.def("check_seed", &check_seed);
    m.def("residual", &residual);

    py::class_<SamplerConfig>(m, "SamplerConfig")
        .def(py::init<>())
        .def_readwrite("seed", &SamplerConfig::seed)
        .def_readwrite("samples", &SamplerConfig::samples)
        .def_readwrite("clamp_radius", &SamplerConfig::clamp_radius)
        .def_readwrite("slack_tol", &SamplerConfig::slack_tol);

    py::class_<MonotoneReport>(m, "MonotoneReport")
        .def_readonly("samples_checked", &MonotoneReport::samples_checked)
        .def("clean", &MonotoneReport::clean)
        .def("violation_clauses", [](const MonotoneReport& r) {
            std::vector<std::string> out;
            for (const auto& v : r.violations) out.push_back(to_string(v.clause));
            return out;
        });
    m.def("check_mixed_monotone", &check_mixed_monotone);

    py::enum_<ClassTag>(m, "ClassTag")
        .value("banach", ClassTag::banach)
        .value("kannan", ClassTag::kannan)
        .value("chatterjea", ClassTag::chatterjea)
        .value("reich", ClassTag::reich)
        .value("hybrid", ClassTag::hybrid)
        .value("quasi", ClassTag::quasi);

    py::class_<ContractionClass>(m, "ContractionClass")
        .def_static("banach", &ContractionClass::banach)
        .def_static("kannan", &ContractionClass::kannan)
        .def_static("chatterjea", &ContractionClass::chatterjea)
        .def_static("reich", &ContractionClass::reich)
        .def_static("hybrid", &ContractionClass::hybrid)
        .def_static("quasi", &ContractionClass::quasi)
        .def_readonly("tag", &ContractionClass::tag)
        .def_readonly("k", &ContractionClass::k)
        .def_readonly("l", &ContractionClass::l)
        .def_readonly("m", &ContractionClass::m)
        .def_readonly("n", &ContractionClass::n)
        .def_readonly("a", &ContractionClass::a)
        .def_readonly("b", &ContractionClass::b)
        .def_readonly("c", &ContractionClass::c)
        .def("admissible", &ContractionClass::admissible)
        .def("admissibility_error", &ContractionClass::admissibility_error);

    m.def("quasi_M", &quasi_M);
    m.def("quasi_N", &quasi_N);
    m.def("condition_slack", [](const ContractionClass& cls, const CoupledMapPair& pair,
                                const ProductPoint& hi, const ProductPoint& lo) {
        const ConditionSlack s = condition_slack(cls, pair, hi, lo);
        return std::make_pair(s.slack_F, s.slack_G);
    });

    py::class_<ViolationReport>(m, "ViolationReport")
        .def_readonly("samples_checked", &ViolationReport::samples_checked)
        .def_readonly("worst_slack", &ViolationReport::worst_slack)
        .def("clean", &ViolationReport::clean)
        .def("violation_count",
             [](const ViolationReport& r) { return r.violations.size(); });
    m.def("verify_condition", &verify_condition);
    m.def("estimate_constants", &estimate_constants);

    py::enum_<HypothesisMode>(m, "HypothesisMode")
        .value("continuous", HypothesisMode::continuous)
        .value("order_limit", HypothesisMode::order_limit);

    py::class_<SolveConfig>(m, "SolveConfig")
        .def(py::init<>())
        .def_readwrite("tol_step", &SolveConfig::tol_step)
        .def_readwrite("tol_residual", &SolveConfig::tol_residual)
        .def_readwrite("max_iter", &SolveConfig::max_iter)
        .def_readwrite("mode", &SolveConfig::mode);

    py::class_<RateFactors>(m, "RateFactors")
        .def_readonly("delta1", &RateFactors::delta1)
        .def_readonly("delta2", &RateFactors::delta2);
    m.def("rate_factors", &rate_factors);

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("delta1", &Certificate::delta1)
        .def_readonly("delta2", &Certificate::delta2)
        .def_readonly("d1_joint", &Certificate::d1_joint)
        .def_readonly("dx01", &Certificate::dx01)
        .def_readonly("dy01", &Certificate::dy01);
    m.def("apriori_bound", [](const Certificate& cert, std::size_t j) {
        const Bounds b = apriori_bound(cert, j);
        return std::make_pair(b.bound_X, b.bound_Y);
    });

    py::class_<IterationTrace>(m, "IterationTrace")
        .def_readonly("iterates", &IterationTrace::iterates)
        .def_readonly("step_distances", &IterationTrace::step_distances)
        .def_readonly("residuals", &IterationTrace::residuals);

    py::class_<HypothesisReport>(m, "HypothesisReport")
        .def_readonly("seed_ok", &HypothesisReport::seed_ok)
        .def_readonly("monotone", &HypothesisReport::monotone)
        .def_readonly("condition", &HypothesisReport::condition)
        .def_readonly("monotone_trajectory_ok",
                      &HypothesisReport::monotone_trajectory_ok);

    py::class_<FixedPointResult>(m, "FixedPointResult")
        .def_readonly("point", &FixedPointResult::point)
        .def_readonly("trace", &FixedPointResult::trace)
        .def_readonly("certificate", &FixedPointResult::certificate)
        .def_readonly("converged", &FixedPointResult::converged)
        .def_readonly("iterations", &FixedPointResult::iterations)
        .def_readonly("hypotheses", &FixedPointResult::hypotheses);

    m.def("solve", &solve, py::arg("pair"), py::arg("cls"), py::arg("p0"),
          py::arg("config") = SolveConfig{}, py::arg("sampler") = SamplerConfig{});
    m.def(
        "uniqueness_probe",
        [](const CoupledMapPair& pair, const ContractionClass& cls,
           const ProductPoint& fp1, const ProductPoint& fp2,
           const SamplerConfig& sampler, double tol_residual, double merge_tol) {
            return std::string(
                to_string(uniqueness_probe(pair, cls, fp1, fp2, sampler, tol_residual,
                                           merge_tol)));
        },
        py::arg("pair"), py::arg("cls"), py::arg("fp1"), py::arg("fp2"),
        py::arg("sampler") = SamplerConfig{}, py::arg("tol_residual") = 1e-9,
        py::arg("merge_tol") = 1e-13);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def_readwrite("points_per_axis", &GridSpec::points_per_axis)
        .def_readwrite("clamp_radius", &GridSpec::clamp_radius)
        .def_readwrite("max_total_points", &GridSpec::max_total_points);

    py::class_<GridMinimizer>(m, "GridMinimizer")
        .def_readonly("point", &GridMinimizer::point)
        .def_readonly("residual", &GridMinimizer::residual)
        .def_readonly("clamped", &GridMinimizer::clamped);
    m.def("grid_residual_minimizer", &grid_residual_minimizer);
    m.def("condition_brute_force", &condition_brute_force, py::arg("cls"),
          py::arg("pair"), py::arg("grid"), py::arg("slack_tol") = 1e-12);

    py::class_<AuditReport>(m, "AuditReport")
        .def_readonly("failures", &AuditReport::failures)
        .def("clean", &AuditReport::clean);
    m.def("audit_trace", &audit_trace, py::arg("pair"), py::arg("trace"),
          py::arg("cert"), py::arg("slack") = 1e-9);

    py::class_<ProblemFile>(m, "ProblemFile")
        .def_readonly("pair", &ProblemFile::pair)
        .def_readonly("cls", &ProblemFile::cls)
        .def_readonly("seed_point", &ProblemFile::seed_point)
        .def_readonly("solve", &ProblemFile::solve);
    m.def("parse_problem", &parse_problem);
    m.def("load_problem", &load_problem);
    m.def("emit_problem", &emit_problem);
}

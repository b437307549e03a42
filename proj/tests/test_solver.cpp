#include <doctest.h>

#include <cmath>

#include "fgfp/solver.hpp"

using namespace fgfp;

TEST_CASE("rate factors for all six families") {
    const auto banach = rate_factors(
        ContractionClass::banach(1.0 / 3, 1.0 / 4, 1.0 / 8, 1.0 / 6));
    CHECK(banach.form == BoundForm::joint_d1);
    CHECK(banach.delta1 == doctest::Approx(7.0 / 12).epsilon(1e-15));
    CHECK(banach.delta2 == doctest::Approx(7.0 / 12).epsilon(1e-15));

    const auto kannan = rate_factors(ContractionClass::kannan(0.2, 0.3, 0.25, 0.1));
    CHECK(kannan.form == BoundForm::split);
    CHECK(kannan.delta1 == doctest::Approx(0.3 / 0.8).epsilon(1e-15));
    CHECK(kannan.delta2 == doctest::Approx(0.25 / 0.9).epsilon(1e-15));

    const auto chat = rate_factors(ContractionClass::chatterjea(0.2, 0.3, 0.25, 0.1));
    CHECK(chat.delta1 == doctest::Approx(0.3 / 0.7).epsilon(1e-15));
    CHECK(chat.delta2 == doctest::Approx(0.25 / 0.75).epsilon(1e-15));

    const auto reich = rate_factors(ContractionClass::reich(0.2, 0.3, 0.1));
    CHECK(reich.delta1 == doctest::Approx(0.4 / 0.8).epsilon(1e-15));
    CHECK(reich.delta2 == doctest::Approx(0.3 / 0.7).epsilon(1e-15));

    const auto hybrid = rate_factors(ContractionClass::hybrid(0.2, 0.3, 0.1));
    CHECK(hybrid.delta1 == doctest::Approx(0.4 / 0.7).epsilon(1e-15));
    CHECK(hybrid.delta2 == doctest::Approx(0.3 / 0.8).epsilon(1e-15));

    const auto quasi = rate_factors(ContractionClass::quasi(1.0 / 3, 1.0 / 4));
    CHECK(quasi.delta1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(quasi.delta2 == doctest::Approx(1.0 / 3).epsilon(1e-15));

    CHECK_THROWS_AS(rate_factors(ContractionClass::banach(0.6, 0.6, 0.1, 0.1)),
                    config_error);
}

TEST_CASE("certificate of the first pair from seed (-1, 1)") {
    const auto pair = example_banach_pair();
    const auto cls = ContractionClass::banach(1.0 / 3, 1.0 / 4, 1.0 / 8, 1.0 / 6);
    const ProductPoint p0{Point{-1.0}, Point{1.0}};
    const ProductPoint p1 = iterate_step(pair, p0);
    const Certificate cert = make_certificate(cls, pair, p0, p1);
    CHECK(cert.dx01 == doctest::Approx(5.0 / 12).epsilon(1e-15));
    CHECK(cert.dy01 == doctest::Approx(17.0 / 24).epsilon(1e-15));
    CHECK(cert.d1_joint == doctest::Approx(9.0 / 8).epsilon(1e-15));

    // closed form of the tail bound: 2.7 * (7/12)^j in both coordinates
    for (std::size_t j = 0; j <= 20; ++j) {
        const Bounds b = apriori_bound(cert, j);
        const double expect = 2.7 * std::pow(7.0 / 12.0, double(j));
        CHECK(b.bound_X == doctest::Approx(expect).epsilon(1e-12));
        CHECK(b.bound_Y == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("split-form bounds decay per coordinate") {
    const auto pair = example_quasi_pair();
    const auto cls = ContractionClass::quasi(1.0 / 3, 1.0 / 4);
    const ProductPoint p0{Point{-1.0}, Point{1.0}};
    const Certificate cert = make_certificate(cls, pair, p0, iterate_step(pair, p0));
    // dx01 = 2/3 with rate 1/2; dy01 = 3/4 with rate 1/3
    for (std::size_t j = 0; j <= 10; ++j) {
        const Bounds b = apriori_bound(cert, j);
        CHECK(b.bound_X ==
              doctest::Approx((4.0 / 3.0) * std::pow(0.5, double(j))).epsilon(1e-12));
        CHECK(b.bound_Y ==
              doctest::Approx((9.0 / 8.0) * std::pow(1.0 / 3.0, double(j)))
                  .epsilon(1e-12));
    }
}

TEST_CASE("solve converges on the first pair within the advertised budget") {
    const auto pair = example_banach_pair();
    const auto cls = ContractionClass::banach(1.0 / 3, 1.0 / 4, 1.0 / 8, 1.0 / 6);
    SolveConfig cfg;
    SamplerConfig sampler;
    sampler.seed = 4;
    const auto r = solve(pair, cls, {Point{-1.0}, Point{1.0}}, cfg, sampler);

    CHECK(r.converged);
    CHECK(r.iterations <= 60);
    CHECK(std::abs(r.point.x[0]) <= 1e-9);
    CHECK(std::abs(r.point.y[0]) <= 1e-9);
    CHECK(r.hypotheses.seed_ok);
    CHECK(r.hypotheses.monotone.clean());
    REQUIRE(r.hypotheses.condition.has_value());
    CHECK(r.hypotheses.condition->clean());
    CHECK(r.hypotheses.monotone_trajectory_ok);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->delta1 == doctest::Approx(7.0 / 12).epsilon(1e-15));

    // trace shape invariants
    REQUIRE(r.trace.iterates.size() == r.iterations + 1);
    CHECK(r.trace.step_distances.size() == r.iterations);
    CHECK(r.trace.residuals.size() == r.iterations + 1);
    // residual at j equals the step leaving j, bit-exact
    for (std::size_t j = 0; j < r.iterations; ++j)
        CHECK(r.trace.residuals[j] == r.trace.step_distances[j]);
}

TEST_CASE("solving without a class yields no condition report or certificate") {
    const auto r = solve(example_quasi_pair(), std::nullopt,
                         {Point{-1.0}, Point{1.0}}, SolveConfig{});
    CHECK(r.converged);
    CHECK_FALSE(r.hypotheses.condition.has_value());
    CHECK_FALSE(r.certificate.has_value());
}

TEST_CASE("a fixed point converges in zero iterations") {
    const auto r = solve(example_banach_pair(), std::nullopt,
                         {Point{0.0}, Point{0.0}}, SolveConfig{});
    CHECK(r.converged);
    CHECK(r.iterations == 0);
    CHECK(r.trace.iterates.size() == 1);
}

TEST_CASE("seed failure is flagged but iteration proceeds") {
    // F(0, 1) = -1/4 < 0 breaks the seed inequality; the orbit still contracts
    const auto r = solve(example_banach_pair(), std::nullopt,
                         {Point{0.0}, Point{1.0}}, SolveConfig{});
    CHECK_FALSE(r.hypotheses.seed_ok);
    CHECK(r.converged);
    CHECK(r.hypotheses.monotone_trajectory_ok);  // not asserted without the seed
}

TEST_CASE("max_iter caps the trace and clears the converged flag") {
    SolveConfig cfg;
    cfg.tol_step = 1e-300;
    cfg.tol_residual = 1e-300;
    cfg.max_iter = 3;
    const auto r =
        solve(example_banach_pair(), std::nullopt, {Point{-1.0}, Point{1.0}}, cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 3);
}

TEST_CASE("expanding maps raise divergence_error") {
    CoupledMapPair pair{SpaceDescriptor::unbounded(1), SpaceDescriptor::unbounded(1),
                        MapSpec::affine1(3.0, 0.0), MapSpec::affine1(0.25, 0.0)};
    SolveConfig cfg;
    SamplerConfig sampler;
    sampler.samples = 10;
    CHECK_THROWS_AS(
        solve(pair, std::nullopt, {Point{1000.0}, Point{0.0}}, cfg, sampler),
        divergence_error);
}

TEST_CASE("solve config validation") {
    SolveConfig cfg;
    cfg.tol_step = 0.0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg = SolveConfig{};
    cfg.max_iter = 0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg = SolveConfig{};
    cfg.tol_residual = -1.0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
}

TEST_CASE("uniqueness probe verdicts") {
    const auto unique_pair = example_unique_pair();
    const auto cls = ContractionClass::banach(1.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8);
    SamplerConfig sampler;

    // coincident inputs
    CHECK(uniqueness_probe(unique_pair, cls, {Point{0.0}, Point{0.0}},
                           {Point{0.0}, Point{0.0}},
                           sampler) == UniquenessVerdict::identical);

    // distinct near-fixed points, comparable, doubled rate 1/2 < 1
    const ProductPoint fp1{Point{-1e-10}, Point{1e-10}};
    const ProductPoint fp2{Point{-2e-10}, Point{2e-10}};
    CHECK(uniqueness_probe(unique_pair, cls, fp1, fp2, sampler) ==
          UniquenessVerdict::certified_unique);

    // the first pair's doubled rate is 7/6 >= 1: never certifiable
    const auto cls1 = ContractionClass::banach(1.0 / 3, 1.0 / 4, 1.0 / 8, 1.0 / 6);
    CHECK(uniqueness_probe(example_banach_pair(), cls1, fp1, fp2, sampler) ==
          UniquenessVerdict::uncertified);
}

TEST_CASE("uniqueness probe input guards") {
    const auto pair = example_unique_pair();
    SamplerConfig sampler;
    // non-banach family
    CHECK_THROWS_AS(uniqueness_probe(pair, ContractionClass::quasi(0.2, 0.2),
                                     {Point{0.0}, Point{0.0}},
                                     {Point{0.0}, Point{0.0}}, sampler),
                    input_error);
    // not a fixed point at tolerance
    const auto cls = ContractionClass::banach(1.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8);
    CHECK_THROWS_AS(uniqueness_probe(pair, cls, {Point{-0.5}, Point{0.5}},
                                     {Point{0.0}, Point{0.0}}, sampler),
                    input_error);
}

TEST_CASE("residual vanishes exactly at the fixed point") {
    const auto pair = example_banach_pair();
    CHECK(residual(pair, {Point{0.0}, Point{0.0}}) == 0.0);
    CHECK(residual(pair, {Point{-1.0}, Point{1.0}}) ==
          doctest::Approx(5.0 / 12 + 17.0 / 24).epsilon(1e-15));
}

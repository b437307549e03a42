#include <doctest.h>

#include "fgfp/contraction.hpp"

using namespace fgfp;

TEST_CASE("class tags round-trip through strings") {
    for (auto tag : {ClassTag::banach, ClassTag::kannan, ClassTag::chatterjea,
                     ClassTag::reich, ClassTag::hybrid, ClassTag::quasi})
        CHECK(class_tag_from_string(to_string(tag)) == tag);
    CHECK_THROWS_AS(class_tag_from_string("unknown"), config_error);
}

TEST_CASE("admissibility ranges") {
    CHECK(ContractionClass::banach(1.0 / 3, 1.0 / 4, 1.0 / 8, 1.0 / 6).admissible());
    CHECK_FALSE(ContractionClass::banach(0.5, 0.5, 0.1, 0.1).admissible());  // k+l=1
    CHECK_FALSE(ContractionClass::banach(-0.1, 0.1, 0.1, 0.1).admissible());
    CHECK_FALSE(ContractionClass::banach(1.0, 0.0, 0.0, 0.0).admissible());

    CHECK(ContractionClass::kannan(0.49, 0.49, 0.49, 0.49).admissible());
    CHECK_FALSE(ContractionClass::kannan(0.5, 0.1, 0.1, 0.1).admissible());
    CHECK_FALSE(ContractionClass::chatterjea(0.1, 0.1, 0.1, 0.5).admissible());

    CHECK(ContractionClass::reich(0.3, 0.3, 0.3).admissible());
    CHECK_FALSE(ContractionClass::reich(0.4, 0.4, 0.2).admissible());  // sum = 1
    CHECK_FALSE(ContractionClass::reich(-0.1, 0.1, 0.1).admissible());

    CHECK(ContractionClass::hybrid(0.4, 0.2, 0.1).admissible());
    CHECK_FALSE(ContractionClass::hybrid(0.5, 0.1, 0.0).admissible());  // 2a+c = 1
    CHECK_FALSE(ContractionClass::hybrid(0.1, 0.45, 0.1).admissible());  // 2b+c = 1

    CHECK(ContractionClass::quasi(1.0 / 3, 1.0 / 4).admissible());
    CHECK_FALSE(ContractionClass::quasi(0.5, 0.1).admissible());

    CHECK_THROWS_AS(ContractionClass::quasi(0.5, 0.1).require_admissible(),
                    config_error);
}

TEST_CASE("quasi max terms on the second worked pair") {
    const auto pair = example_quasi_pair();  // F = x/3, G = y/4
    // x = 0, u = -1: terms are {1, 0, 1/3, 2/3, 1}
    CHECK(quasi_M(pair, Point{0.0}, Point{0.5}, Point{-1.0}, Point{0.5}) ==
          doctest::Approx(1.0).epsilon(1e-15));
    // y = 1, v = 0: terms are {1, 3/4, 1, 0, 1/4}
    CHECK(quasi_N(pair, Point{1.0}, Point{-0.5}, Point{0.0}, Point{-0.5}) ==
          doctest::Approx(1.0).epsilon(1e-15));
    // M dominates d(x, u) by construction
    CHECK(quasi_M(pair, Point{-0.2}, Point{0.3}, Point{-0.9}, Point{0.7}) >= 0.7);
}

TEST_CASE("slack is exactly zero at the tight constants of the first pair") {
    const auto pair = example_banach_pair();
    const auto cls = ContractionClass::banach(1.0 / 3, 1.0 / 4, 1.0 / 8, 1.0 / 6);
    // hi = (-1, 2) >= lo = (-3, 5): dx = 2, dy = 3 and both sides are tight
    const ProductPoint hi{Point{-1.0}, Point{2.0}};
    const ProductPoint lo{Point{-3.0}, Point{5.0}};
    const ConditionSlack s = condition_slack(cls, pair, hi, lo);
    CHECK(std::abs(s.slack_F) <= 1e-15);
    CHECK(std::abs(s.slack_G) <= 1e-15);
}

TEST_CASE("slack evaluation rejects incomparable pairs") {
    const auto pair = example_banach_pair();
    const auto cls = ContractionClass::banach(1.0 / 3, 1.0 / 4, 1.0 / 8, 1.0 / 6);
    const ProductPoint a{Point{-1.0}, Point{2.0}};
    const ProductPoint b{Point{-3.0}, Point{1.0}};
    CHECK_THROWS_AS(condition_slack(cls, pair, a, b), input_error);
}

TEST_CASE("corner battery contains the axis-aligned extremal pairs") {
    const auto battery = corner_pair_battery(example_quasi_pair(), 10.0);
    CHECK(battery.size() == 16);  // (2 x 2 corners)^2 ordered combinations
    bool x_axis = false, y_axis = false;
    for (const auto& [hi, lo] : battery) {
        if (hi.x[0] == 0.0 && lo.x[0] == -1.0 && hi.y[0] == lo.y[0]) x_axis = true;
        if (hi.x[0] == lo.x[0] && hi.y[0] == 0.0 && lo.y[0] == 1.0) y_axis = true;
    }
    CHECK(x_axis);
    CHECK(y_axis);
}

TEST_CASE("verification accepts the known-good constants") {
    SamplerConfig cfg;
    cfg.seed = 2;
    cfg.samples = 10000;

    const auto r1 = verify_condition(
        ContractionClass::banach(1.0 / 3, 1.0 / 4, 1.0 / 8, 1.0 / 6),
        example_banach_pair(), cfg);
    CHECK(r1.clean());
    CHECK(r1.samples_checked == 10000 + 16);
    CHECK(r1.worst_slack <= cfg.slack_tol);

    const auto r2 = verify_condition(ContractionClass::quasi(1.0 / 3, 1.0 / 4),
                                     example_quasi_pair(), cfg);
    CHECK(r2.clean());

    const auto r3 = verify_condition(
        ContractionClass::banach(1.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8),
        example_unique_pair(), cfg);
    CHECK(r3.clean());
}

TEST_CASE("verification refutes too-small constants") {
    SamplerConfig cfg;
    cfg.seed = 2;
    cfg.samples = 1000;

    const auto r1 = verify_condition(ContractionClass::banach(0.1, 0.1, 0.1, 0.1),
                                     example_banach_pair(), cfg);
    CHECK_FALSE(r1.clean());
    CHECK(r1.worst_slack > 0.0);

    const auto r2 = verify_condition(ContractionClass::quasi(0.3, 1.0 / 4),
                                     example_quasi_pair(), cfg);
    CHECK_FALSE(r2.clean());
    bool f_side = false;
    for (const auto& v : r2.violations) f_side |= v.side == 'F';
    CHECK(f_side);
}

TEST_CASE("verification rejects inadmissible constants up front") {
    SamplerConfig cfg;
    CHECK_THROWS_AS(verify_condition(ContractionClass::banach(0.6, 0.6, 0.1, 0.1),
                                     example_banach_pair(), cfg),
                    config_error);
}

TEST_CASE("verification is deterministic in the seed") {
    SamplerConfig cfg;
    cfg.seed = 31;
    cfg.samples = 500;
    const auto cls = ContractionClass::banach(0.2, 0.2, 0.1, 0.1);
    const auto a = verify_condition(cls, example_banach_pair(), cfg);
    const auto b = verify_condition(cls, example_banach_pair(), cfg);
    CHECK(a.worst_slack == b.worst_slack);  // bit-exact
    CHECK(a.violations.size() == b.violations.size());
}

TEST_CASE("estimation recovers the affine constants of the first pair") {
    SamplerConfig cfg;
    cfg.seed = 5;
    cfg.samples = 2000;
    const auto fit =
        estimate_constants(ClassTag::banach, example_banach_pair(), cfg);
    CHECK(fit.k == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK(fit.l == doctest::Approx(1.0 / 4).epsilon(1e-9));
    CHECK(fit.m == doctest::Approx(1.0 / 8).epsilon(1e-9));
    CHECK(fit.n == doctest::Approx(1.0 / 6).epsilon(1e-9));
}

TEST_CASE("estimation recovers the quasi constants of the second pair") {
    SamplerConfig cfg;
    cfg.seed = 5;
    cfg.samples = 2000;
    const auto fit = estimate_constants(ClassTag::quasi, example_quasi_pair(), cfg);
    CHECK(fit.k == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK(fit.l == doctest::Approx(1.0 / 4).epsilon(1e-9));
}

TEST_CASE("estimation drops vanished coefficients to zero") {
    SamplerConfig cfg;
    cfg.seed = 9;
    cfg.samples = 1000;
    // F = x/3, G = y/4: the cross terms are absent, lexmin should report 0
    const auto fit = estimate_constants(ClassTag::banach, example_quasi_pair(), cfg);
    CHECK(fit.k == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK(fit.l == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(fit.m == doctest::Approx(1.0 / 4).epsilon(1e-9));
    CHECK(fit.n == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("estimation fails when the class cannot cover the samples") {
    SamplerConfig cfg;
    cfg.seed = 5;
    cfg.samples = 500;
    // the first pair needs l >= 1 on the pure-y corner pairs under this family
    CHECK_THROWS_AS(
        estimate_constants(ClassTag::kannan, example_banach_pair(), cfg),
        estimation_error);
}

TEST_CASE("a successful fit verifies cleanly on the same samples") {
    SamplerConfig cfg;
    cfg.seed = 13;
    cfg.samples = 1000;
    const ClassTag tags[] = {ClassTag::banach,     ClassTag::kannan,
                             ClassTag::chatterjea, ClassTag::reich,
                             ClassTag::hybrid,     ClassTag::quasi};
    const CoupledMapPair pairs[] = {example_banach_pair(), example_quasi_pair(),
                                    example_unique_pair()};
    for (const auto& pair : pairs) {
        for (ClassTag tag : tags) {
            ContractionClass fit;
            try {
                fit = estimate_constants(tag, pair, cfg);
            } catch (const estimation_error&) {
                continue;  // not certifiable in this family; nothing to check
            }
            CHECK(fit.admissible());
            const auto sampled = sample_comparable_pairs(pair, cfg);
            // LP feasibility slack can sit at the solver tolerance, just above
            // the default 1e-12 reporting threshold
            const auto rep = check_condition_on_pairs(fit, pair, sampled, 1e-9);
            CHECK(rep.clean());
        }
    }
}

TEST_CASE("estimation is deterministic in the seed") {
    SamplerConfig cfg;
    cfg.seed = 21;
    cfg.samples = 500;
    const auto a = estimate_constants(ClassTag::banach, example_banach_pair(), cfg);
    const auto b = estimate_constants(ClassTag::banach, example_banach_pair(), cfg);
    CHECK(a.k == b.k);
    CHECK(a.l == b.l);
    CHECK(a.m == b.m);
    CHECK(a.n == b.n);
}

TEST_CASE("constant maps fit with zero constants") {
    CoupledMapPair pair{SpaceDescriptor::box({-1.0}, {1.0}),
                        SpaceDescriptor::box({-1.0}, {1.0}),
                        MapSpec::affine1(0.0, 0.0, 0.5),
                        MapSpec::affine1(0.0, 0.0, -0.5)};
    SamplerConfig cfg;
    cfg.seed = 1;
    cfg.samples = 200;
    const auto fit = estimate_constants(ClassTag::banach, pair, cfg);
    CHECK(fit.k == doctest::Approx(0.0));
    CHECK(fit.l == doctest::Approx(0.0));
    CHECK(fit.m == doctest::Approx(0.0));
    CHECK(fit.n == doctest::Approx(0.0));
}

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include "metaopt/boundary.hpp"
#include "metaopt/problems.hpp"
#include "metaopt/rng.hpp"

using namespace metaopt;
using namespace metaopt::problems;

namespace {

// Straight transcriptions of the textbook definitions.
double ref_sphere(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double ref_rastrigin(const std::vector<double>& x) {
    double s = 10.0 * x.size();
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
    return s;
}

double ref_rosenbrock(const std::vector<double>& x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        s += 100.0 * std::pow(x[i + 1] - x[i] * x[i], 2) + std::pow(1.0 - x[i], 2);
    }
    return s;
}

double ref_ackley(const std::vector<double>& x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * std::numbers::pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::exp(1.0);
}

}  // namespace

TEST(Suite, FrozenValues) {
    auto r = rastrigin(2);
    EXPECT_NEAR(r.evaluate(std::vector<double>{0.5, 0.5}), 40.5, 1e-12);
    auto s = sphere(3);
    EXPECT_DOUBLE_EQ(s.evaluate(std::vector<double>{1.0, 2.0, 3.0}), 14.0);
    auto rb = rosenbrock(2);
    EXPECT_DOUBLE_EQ(rb.evaluate(std::vector<double>{0.0, 0.0}), 1.0);
    EXPECT_DOUBLE_EQ(rb.evaluate(std::vector<double>{-1.0, 1.0}), 4.0);
}

TEST(Suite, MatchesReferenceDefinitions) {
    Rng rng(2024);
    for (std::size_t d : {2u, 5u}) {
        auto s = sphere(d);
        auto r = rastrigin(d);
        auto rb = rosenbrock(d);
        auto a = ackley(d);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<double> x(d);
            for (auto& v : x) v = rng.uniform(-5.0, 5.0);
            EXPECT_NEAR(s.evaluate(x), ref_sphere(x), 1e-12);
            EXPECT_NEAR(r.evaluate(x), ref_rastrigin(x), 1e-10);
            EXPECT_NEAR(rb.evaluate(x), ref_rosenbrock(x), 1e-8 * (1.0 + ref_rosenbrock(x)));
            EXPECT_NEAR(a.evaluate(x), ref_ackley(x), 1e-12);
        }
    }
}

TEST(Suite, KnownOptimaEvaluateToOptimumValue) {
    for (auto& p : builtin_suite(4)) {
        ASSERT_TRUE(p.known_optimum().has_value()) << p.name();
        const auto& opt = *p.known_optimum();
        EXPECT_NEAR(p.evaluate(opt.location), opt.value, 1e-12) << p.name();
    }
}

TEST(Suite, BoundsAndNames) {
    const auto names = builtin_names();
    EXPECT_EQ(names, (std::vector<std::string>{"sphere", "rosenbrock", "ackley", "rastrigin"}));
    EXPECT_EQ(sphere(2).bounds()[0].lo, -5.12);
    EXPECT_EQ(ackley(2).bounds()[1].hi, 32.768);
    EXPECT_EQ(rosenbrock(2).bounds()[0].lo, -5.0);
    EXPECT_EQ(rosenbrock(2).bounds()[0].hi, 10.0);
    EXPECT_EQ(make_problem("rastrigin", 3).dimension(), 3u);
    EXPECT_THROW(make_problem("nope", 2), std::invalid_argument);
    EXPECT_THROW(make_problem("sphere", 0), std::invalid_argument);
    EXPECT_THROW(make_problem("rosenbrock", 1), std::invalid_argument);
}

TEST(ProblemTest, EvaluationCounterAndDimensionCheck) {
    auto p = sphere(2);
    EXPECT_EQ(p.eval_count(), 0u);
    p.evaluate(std::vector<double>{1.0, 1.0});
    p.evaluate(std::vector<double>{1.0, 1.0});
    EXPECT_EQ(p.eval_count(), 2u);
    EXPECT_THROW(p.evaluate(std::vector<double>{1.0}), std::invalid_argument);
    EXPECT_EQ(p.eval_count(), 2u);
    auto copy = p;
    copy.evaluate(std::vector<double>{0.0, 0.0});
    EXPECT_EQ(p.eval_count(), 2u);
    EXPECT_EQ(copy.eval_count(), 3u);
    p.reset_eval_count();
    EXPECT_EQ(p.eval_count(), 0u);
}

TEST(ProblemTest, EvaluatesOutsideBounds) {
    auto p = sphere(1);
    EXPECT_DOUBLE_EQ(p.evaluate(std::vector<double>{100.0}), 1e4);
}

TEST(ProblemTest, RejectsEmptyIntervals) {
    EXPECT_THROW(Problem("bad", Bounds{{1.0, 1.0}}, [](std::span<const double>) { return 0.0; }),
                 std::invalid_argument);
}

TEST(OptimalSetTest, Membership) {
    auto p = sphere(2);
    OptimalSet set(p, 0.01);
    EXPECT_DOUBLE_EQ(set.threshold(), 0.01);
    EXPECT_TRUE(in_optimal_set(p, set, std::vector<double>{0.05, 0.05}));
    EXPECT_FALSE(in_optimal_set(p, set, std::vector<double>{0.1, 0.1}));
    EXPECT_EQ(p.eval_count(), 2u);
    EXPECT_THROW(OptimalSet(p, 0.0), std::invalid_argument);
    Problem unknown("u", Bounds{{0.0, 1.0}}, [](std::span<const double>) { return 0.0; });
    EXPECT_THROW(OptimalSet(unknown, 0.1), std::invalid_argument);
}

TEST(Boundary, Clamp) {
    const Bounds b{{-1.0, 1.0}, {0.0, 2.0}};
    std::vector<double> x{3.0, -0.5};
    apply_boundary(BoundaryPolicy::clamp, b, x);
    EXPECT_EQ(x, (std::vector<double>{1.0, 0.0}));
}

TEST(Boundary, ReflectFoldsRepeatedly) {
    const Bounds b{{0.0, 1.0}};
    const std::vector<std::pair<double, double>> cases{
        {1.25, 0.75}, {-0.25, 0.25}, {2.25, 0.25}, {3.75, 0.25}, {-1.5, 0.5}, {0.4, 0.4}};
    for (auto [in, out] : cases) {
        std::vector<double> x{in};
        apply_boundary(BoundaryPolicy::reflect, b, x);
        EXPECT_NEAR(x[0], out, 1e-12) << in;
    }
}

TEST(Boundary, ReflectAlwaysLandsInside) {
    const Bounds b{{-5.12, 5.12}};
    Rng rng(8);
    for (int i = 0; i < 10000; ++i) {
        std::vector<double> x{rng.uniform(-1e3, 1e3)};
        apply_boundary(BoundaryPolicy::reflect, b, x);
        ASSERT_GE(x[0], -5.12);
        ASSERT_LE(x[0], 5.12);
    }
}

TEST(Boundary, Parse) {
    EXPECT_EQ(parse_boundary_policy("reflect"), BoundaryPolicy::reflect);
    EXPECT_EQ(to_string(BoundaryPolicy::clamp), "clamp");
    EXPECT_THROW(parse_boundary_policy("wrap"), std::invalid_argument);
}

TEST(Suite, EvaluationIsDeterministic) {
    Rng rng(6);
    for (auto& p : builtin_suite(3)) {
        for (int i = 0; i < 50; ++i) {
            std::vector<double> x(3);
            for (auto& v : x) v = rng.uniform(-4.0, 4.0);
            const double a = p.evaluate(x);
            const double b = p.evaluate(x);
            ASSERT_EQ(std::memcmp(&a, &b, sizeof a), 0) << p.name();
        }
    }
}

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "metaopt/diagnostics.hpp"
#include "metaopt/stochastic.hpp"
#include "oracles.hpp"

using namespace metaopt;
using namespace metaopt::stochastic;

namespace {

std::vector<double> draw(const StepDistribution& dist, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> out(n);
    for (auto& x : out) x = sample_step(dist, rng);
    return out;
}

double empirical_cf(const std::vector<double>& xs, double k) {
    double s = 0.0;
    for (double x : xs) s += std::cos(k * x);
    return s / static_cast<double>(xs.size());
}

}  // namespace

TEST(StepDistribution, FactoriesRejectBadParameters) {
    EXPECT_THROW(StepDistribution::uniform(1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(StepDistribution::uniform(0.0, INFINITY), std::invalid_argument);
    EXPECT_THROW(StepDistribution::gaussian(0.0, 0.0), std::invalid_argument);
    EXPECT_THROW(StepDistribution::gaussian(NAN, 1.0), std::invalid_argument);
    EXPECT_THROW(StepDistribution::cauchy(0.0, -1.0), std::invalid_argument);
    EXPECT_THROW(StepDistribution::levy_stable(1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(StepDistribution::levy_stable(1.0, 2.5), std::invalid_argument);
    EXPECT_THROW(StepDistribution::levy_stable(0.0, 1.5), std::invalid_argument);
    EXPECT_NO_THROW(StepDistribution::levy_stable(1.0, 2.0));
}

TEST(StepDistribution, Describe) {
    EXPECT_EQ(StepDistribution::gaussian(0.0, 0.5).describe(), "gaussian(mu=0,sigma=0.5)");
    EXPECT_EQ(StepDistribution::levy_stable(1.0, 1.5).describe(), "levy(scale=1,index=1.5)");
    EXPECT_EQ(StepDistribution::uniform(-1, 1), StepDistribution::uniform(-1, 1));
    EXPECT_FALSE(StepDistribution::uniform(-1, 1) == StepDistribution::uniform(-1, 2));
}

TEST(SampleStep, UniformStaysInRange) {
    const auto xs = draw(StepDistribution::uniform(-2.0, 3.0), 50000, 1);
    for (double x : xs) {
        ASSERT_GE(x, -2.0);
        ASSERT_LT(x, 3.0);
    }
    const auto ks = diagnostics::ks_test(xs, [](double x) { return (x + 2.0) / 5.0; });
    EXPECT_TRUE(ks.pass) << ks.statistic;
}

TEST(SampleStep, GaussianMatchesNormalCdf) {
    const auto xs = draw(StepDistribution::gaussian(1.5, 0.3), 50000, 2);
    const auto ks = diagnostics::ks_test(xs, [](double x) { return oracle::normal_cdf(x, 1.5, 0.3); });
    EXPECT_TRUE(ks.pass) << ks.statistic << " vs " << ks.critical;
}

TEST(SampleStep, CauchyMatchesArctanCdf) {
    const auto xs = draw(StepDistribution::cauchy(-1.0, 2.0), 50000, 3);
    const auto ks = diagnostics::ks_test(
        xs, [](double x) { return 0.5 + std::atan((x + 1.0) / 2.0) / std::numbers::pi; });
    EXPECT_TRUE(ks.pass) << ks.statistic;
}

TEST(SampleStep, StableIndexTwoIsGaussianWithVarianceTwoScale) {
    const double scale = 0.7;
    const auto xs = draw(StepDistribution::levy_stable(scale, 2.0), 50000, 4);
    const double sigma = std::sqrt(2.0 * scale);
    const auto ks = diagnostics::ks_test(xs, [&](double x) { return oracle::normal_cdf(x, 0.0, sigma); });
    EXPECT_TRUE(ks.pass) << ks.statistic;
}

TEST(SampleStep, StableIndexOneIsCauchy) {
    const double scale = 1.3;
    const auto xs = draw(StepDistribution::levy_stable(scale, 1.0), 50000, 5);
    const auto ks = diagnostics::ks_test(
        xs, [&](double x) { return 0.5 + std::atan(x / scale) / std::numbers::pi; });
    EXPECT_TRUE(ks.pass) << ks.statistic;
}

// The characteristic function exp(-scale |k|^index) is the defining
// property; check it empirically for a non-closed-form index.
TEST(SampleStep, StableCharacteristicFunction) {
    for (double index : {0.8, 1.5, 1.9}) {
        const double scale = 2.0;
        const auto xs = draw(StepDistribution::levy_stable(scale, index), 200000, 6);
        for (double k : {0.25, 0.5, 1.0}) {
            EXPECT_NEAR(empirical_cf(xs, k), levy_characteristic(k, scale, index), 0.01)
                << "index " << index << " k " << k;
        }
    }
}

TEST(SampleStep, StableIsSymmetric) {
    const auto xs = draw(StepDistribution::levy_stable(1.0, 1.5), 100000, 7);
    std::size_t positive = 0;
    for (double x : xs) positive += x > 0.0;
    EXPECT_NEAR(static_cast<double>(positive) / xs.size(), 0.5, 0.01);
}

TEST(LevyCharacteristic, Values) {
    EXPECT_DOUBLE_EQ(levy_characteristic(0.0, 1.0, 1.5), 1.0);
    EXPECT_DOUBLE_EQ(levy_characteristic(2.0, 0.5, 2.0), std::exp(-2.0));
    EXPECT_DOUBLE_EQ(levy_characteristic(-2.0, 0.5, 2.0), std::exp(-2.0));
    EXPECT_DOUBLE_EQ(levy_characteristic(3.0, 1.0, 1.0), std::exp(-3.0));
}

TEST(LevyTailDensity, MatchesInverseFourierIntegralInTheTail) {
    const double numeric = oracle::stable_density(100.0, 1.0, 1.5);
    const double asym = levy_tail_density(100.0, 1.0, 1.5);
    EXPECT_NEAR(asym / numeric, 1.0, 0.01);
    EXPECT_DOUBLE_EQ(levy_tail_density(-100.0, 1.0, 1.5), asym);
}

TEST(LevyTailDensity, CauchyCase) {
    const double a = 1.0, s = 100.0;
    const double exact = a / (std::numbers::pi * (a * a + s * s));
    EXPECT_NEAR(levy_tail_density(s, a, 1.0) / exact, 1.0, 1e-3);
}

TEST(LevyTailDensity, QuadratureOracleReproducesClosedForms) {
    EXPECT_NEAR(oracle::stable_density(0.7, 1.0, 1.0), 1.0 / (std::numbers::pi * 1.49), 1e-9);
    const double sigma = 1.0;  // scale 0.5 at index 2
    EXPECT_NEAR(oracle::stable_density(0.7, 0.5, 2.0),
                std::exp(-0.245) / std::sqrt(2.0 * std::numbers::pi * sigma), 1e-9);
}

TEST(LevyTailDensity, ThrowsAtZero) {
    EXPECT_THROW(levy_tail_density(0.0, 1.0, 1.5), std::domain_error);
}

TEST(Superdiffusion, GrowthLaw) {
    EXPECT_DOUBLE_EQ(levy_superdiffusion_variance(10.0, 2.0), 10.0);
    EXPECT_DOUBLE_EQ(levy_superdiffusion_variance(10.0, 1.0), 100.0);
    EXPECT_NEAR(levy_superdiffusion_variance(4.0, 1.5), 8.0, 1e-12);
    EXPECT_THROW(levy_superdiffusion_variance(1.0, 0.5), std::domain_error);
    EXPECT_THROW(levy_superdiffusion_variance(1.0, 2.5), std::domain_error);
}

TEST(Walk, PositionsAccumulateSteps) {
    WalkConfig cfg;
    cfg.steps = 200;
    cfg.origin = {1.0, -2.0, 0.5};
    cfg.drift = 0.1;
    cfg.scalings = {0.3};
    Rng rng(9);
    const Walk w = simulate_walk(cfg, rng);
    ASSERT_EQ(w.positions.size(), 201u);
    ASSERT_EQ(w.steps.size(), 200u);
    EXPECT_EQ(w.positions.front(), cfg.origin);
    Vector x = cfg.origin;
    for (std::size_t k = 0; k < cfg.steps; ++k) {
        for (std::size_t j = 0; j < 3; ++j) x[j] = x[j] + 0.1 + 0.3 * w.steps[k][j];
        ASSERT_EQ(x, w.positions[k + 1]);
    }
}

TEST(Walk, PerStepScalings) {
    WalkConfig cfg;
    cfg.steps = 3;
    cfg.scalings = {0.0, 2.0, 0.0};
    Rng rng(1);
    const Walk w = simulate_walk(cfg, rng);
    EXPECT_EQ(w.positions[1][0], 0.0);
    EXPECT_EQ(w.positions[2][0], 2.0 * w.steps[1][0]);
    EXPECT_EQ(w.positions[3][0], w.positions[2][0]);
}

TEST(Walk, ZeroStepsIsOrigin) {
    WalkConfig cfg;
    cfg.steps = 0;
    cfg.origin = {4.0};
    Rng rng(1);
    const Walk w = simulate_walk(cfg, rng);
    ASSERT_EQ(w.positions.size(), 1u);
    EXPECT_EQ(w.positions[0][0], 4.0);
}

TEST(Walk, NoiseOffDriftIsBallistic) {
    WalkConfig cfg;
    cfg.steps = 50;
    cfg.scalings = {0.0};
    cfg.drift = 1.0;
    Rng rng(1);
    const Walk w = simulate_walk(cfg, rng);
    for (std::size_t k = 0; k <= 50; ++k) EXPECT_EQ(w.positions[k][0], static_cast<double>(k));
}

TEST(Walk, ValidationErrors) {
    WalkConfig cfg;
    cfg.steps = 4;
    cfg.scalings = {1.0, 1.0};
    Rng rng(1);
    EXPECT_THROW(simulate_walk(cfg, rng), std::invalid_argument);
    cfg.scalings = {-1.0};
    EXPECT_THROW(simulate_walk(cfg, rng), std::invalid_argument);
    cfg.scalings = {1.0};
    cfg.origin = {};
    EXPECT_THROW(simulate_walk(cfg, rng), std::invalid_argument);
}

TEST(WalkEnsemble, MatchesIndividuallySeededWalks) {
    WalkConfig cfg;
    cfg.steps = 100;
    cfg.step_dist = StepDistribution::levy_stable(1.0, 1.5);
    const auto paths = walk_ensemble_1d(cfg, 20, 1234);
    ASSERT_EQ(paths.size(), 20u);
    for (std::size_t i = 0; i < paths.size(); ++i) {
        Rng rng(derive_seed(1234, i));
        const Walk w = simulate_walk(cfg, rng);
        for (std::size_t k = 0; k <= cfg.steps; ++k) ASSERT_EQ(paths[i][k], w.positions[k][0]);
    }
    EXPECT_EQ(paths, walk_ensemble_1d(cfg, 20, 1234));
}

TEST(WalkEnsemble, RequiresOneDimension) {
    WalkConfig cfg;
    cfg.origin = {0.0, 0.0};
    EXPECT_THROW(walk_ensemble_1d(cfg, 3, 1), std::invalid_argument);
}

TEST(CombineGaussians, LawOfTotalVariance) {
    const std::vector<GaussianComponent> comps{{0.2, -1.0, 0.5}, {0.5, 2.0, 1.0}, {0.3, 0.5, 2.0}};
    const auto c = combine_gaussians(comps);
    double mu = 0.0, second = 0.0;
    for (const auto& k : comps) {
        mu += k.alpha * k.mu;
        second += k.alpha * (k.sigma * k.sigma + k.mu * k.mu);
    }
    EXPECT_NEAR(c.mu_star, mu, 1e-14);
    EXPECT_NEAR(c.sigma_star_sq, second - mu * mu, 1e-12);
}

TEST(CombineGaussians, SingleComponent) {
    const std::vector<GaussianComponent> one{{1.0, 3.0, 0.4}};
    const auto c = combine_gaussians(one);
    EXPECT_DOUBLE_EQ(c.mu_star, 3.0);
    EXPECT_DOUBLE_EQ(c.sigma_star_sq, 0.16);
    EXPECT_THROW(combine_gaussians(std::span<const GaussianComponent>{}), std::invalid_argument);
}

TEST(DiffusionModel, CoefficientAndVariance) {
    const DiffusionModel m(0.0, 2, 0.5, 0.25);
    EXPECT_DOUBLE_EQ(m.diffusion_coefficient(), 0.5);
    EXPECT_DOUBLE_EQ(brownian_variance(m, 3.0), 6.0);
    const DiffusionModel drift(2.0, 1, 1.0, 0.5);
    EXPECT_DOUBLE_EQ(brownian_variance(drift, 2.0), 16.0 + 4.0);
    EXPECT_DOUBLE_EQ(brownian_variance(drift, 0.0), 0.0);
    EXPECT_THROW(brownian_variance(drift, -1.0), std::domain_error);
    EXPECT_THROW(DiffusionModel(0.0, 0, 1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(DiffusionModel(0.0, 1, 0.0, 1.0), std::invalid_argument);
}

TEST(DiffusionModel, WalkVarianceMatchesLinearLaw) {
    // Gaussian steps of sigma s per jump: Var x_N = s^2 N = 2 D N tau.
    WalkConfig cfg;
    cfg.steps = 400;
    cfg.step_dist = StepDistribution::gaussian(0.0, 0.5);
    const auto paths = walk_ensemble_1d(cfg, 4000, 77);
    std::vector<double> end(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) end[i] = paths[i].back();
    const DiffusionModel m(0.0, 1, 0.5, 1.0);
    const double expected = brownian_variance(m, 400.0) / 1.0;
    EXPECT_NEAR(oracle::sample_variance(end) / expected, 1.0, 0.07);
}

TEST(SampleStep, StableIndexTwoMatchesGaussianTwoSample) {
    const auto stable = draw(StepDistribution::levy_stable(1.0, 2.0), 100000, 40);
    const auto gauss = draw(StepDistribution::gaussian(0.0, std::sqrt(2.0)), 100000, 41);
    const auto ks = diagnostics::ks_two_sample(stable, gauss);
    EXPECT_TRUE(ks.pass) << ks.statistic << " vs " << ks.critical;
}

TEST(LevyTailDensity, ExactPowerLawScaling) {
    for (double index : {0.5, 1.0, 1.5, 2.0}) {
        for (double c : {0.1, 2.0, 37.0}) {
            const double s = 3.3;
            const double ratio = levy_tail_density(c * s, 0.8, index) /
                                 (std::pow(c, -(1.0 + index)) * levy_tail_density(s, 0.8, index));
            EXPECT_NEAR(ratio, 1.0, 1e-13) << index << " " << c;
        }
    }
}

TEST(CombineGaussians, VarianceNeverNegative) {
    Rng rng(90);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto k = 1 + static_cast<std::size_t>(rng.uniform() * 6);
        std::vector<GaussianComponent> comps(k);
        for (auto& c : comps) c = {rng.uniform(1e-6, 1.0), rng.uniform(-1e3, 1e3), rng.uniform(0.0, 5.0)};
        ASSERT_GE(combine_gaussians(comps).sigma_star_sq, 0.0);
    }
}

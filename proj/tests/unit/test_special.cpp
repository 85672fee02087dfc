#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "metaopt/special.hpp"
#include "oracles.hpp"

using metaopt::beta_density;
using metaopt::gamma_function;

TEST(Gamma, IntegerFactorials) {
    double fact = 1.0;
    for (int n = 1; n <= 20; ++n) {
        EXPECT_NEAR(gamma_function(n) / fact, 1.0, 1e-13) << n;
        fact *= n;
    }
    EXPECT_EQ(gamma_function(5.0), 24.0);
}

TEST(Gamma, HalfIntegers) {
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    EXPECT_NEAR(gamma_function(0.5) / sqrt_pi, 1.0, 1e-13);
    EXPECT_NEAR(gamma_function(1.5) / (0.5 * sqrt_pi), 1.0, 1e-13);
    EXPECT_NEAR(gamma_function(2.5) / (0.75 * sqrt_pi), 1.0, 1e-13);
}

TEST(Gamma, AgreesWithStdTgamma) {
    for (double z = 0.01; z < 20.0; z += 0.137) {
        EXPECT_NEAR(gamma_function(z) / std::tgamma(z), 1.0, 1e-12) << z;
    }
}

TEST(Gamma, Recurrence) {
    for (double z : {0.1, 0.3, 0.77, 1.5, 3.3, 7.9}) {
        EXPECT_NEAR(gamma_function(z + 1.0) / (z * gamma_function(z)), 1.0, 1e-13) << z;
    }
}

TEST(Gamma, DomainErrors) {
    EXPECT_THROW(gamma_function(0.0), std::domain_error);
    EXPECT_THROW(gamma_function(-1.5), std::domain_error);
    EXPECT_THROW(gamma_function(NAN), std::domain_error);
    EXPECT_THROW(gamma_function(INFINITY), std::domain_error);
}

TEST(BetaDensity, HalfHalfClosedForm) {
    for (double u : {0.01, 0.2, 0.5, 0.9}) {
        EXPECT_NEAR(beta_density(u, 0.5, 0.5),
                    1.0 / (std::numbers::pi * std::sqrt(u * (1.0 - u))), 1e-12);
    }
}

// Substituting u = sin^2(theta) removes the endpoint singularities.
TEST(BetaDensity, IntegratesToOne) {
    for (auto [p, q] : {std::pair{0.5, 0.5}, {2.0, 3.0}, {0.7, 1.4}, {1.0, 1.0}}) {
        const double mass = oracle::integrate(
            [&](double th) {
                const double s = std::sin(th), c = std::cos(th);
                return beta_density(s * s, p, q) * 2.0 * s * c;
            },
            1e-12, std::numbers::pi / 2.0 - 1e-12, 400, 10);
        EXPECT_NEAR(mass, 1.0, 1e-6) << p << "," << q;
    }
}

TEST(BetaDensity, OutsideUnitIntervalThrows) {
    EXPECT_THROW(beta_density(0.0, 0.5, 0.5), std::domain_error);
    EXPECT_THROW(beta_density(1.0, 0.5, 0.5), std::domain_error);
    EXPECT_THROW(beta_density(-0.2, 2.0, 2.0), std::domain_error);
}

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "metaopt/swarm.hpp"
#include "oracles.hpp"

using namespace metaopt;
using namespace metaopt::swarm;

TEST(Reduced, MatrixShape) {
    const auto s = reduced_matrix(2.5);
    EXPECT_EQ(s.matrix[0][0], 1.0);
    EXPECT_EQ(s.matrix[0][1], 2.5);
    EXPECT_EQ(s.matrix[1][0], -1.0);
    EXPECT_EQ(s.matrix[1][1], -1.5);
    EXPECT_THROW(reduced_matrix(0.0), std::domain_error);
}

TEST(Reduced, EigenvaluesMatchCharacteristicPolynomial) {
    for (int k = 1; k < 160; ++k) {
        const double g = 0.05 * k;
        const auto [a, b] = eigenvalues(g);
        const auto [c, d] = oracle::eigen_2x2(reduced_matrix(g).matrix);
        const bool same = std::abs(a - c) < 1e-12 && std::abs(b - d) < 1e-12;
        const bool swapped = std::abs(a - d) < 1e-12 && std::abs(b - c) < 1e-12;
        EXPECT_TRUE(same || swapped) << g;
        // det A = 1 for every gamma
        EXPECT_NEAR(std::abs(a * b), 1.0, 1e-12) << g;
    }
}

TEST(Reduced, BifurcationPoint) {
    const auto [a, b] = eigenvalues(4.0);
    EXPECT_EQ(a, std::complex<double>(-1.0, 0.0));
    EXPECT_EQ(b, std::complex<double>(-1.0, 0.0));
}

TEST(Reduced, UnitModulusBelowFour) {
    for (double g : {0.5, 1.0, 2.0, 3.0, 3.9}) {
        const auto [a, b] = eigenvalues(g);
        EXPECT_NEAR(std::abs(a), 1.0, 1e-12) << g;
        EXPECT_NEAR(std::abs(b), 1.0, 1e-12) << g;
    }
}

TEST(Reduced, RealAboveFour) {
    const auto [a, b] = eigenvalues(5.0);
    EXPECT_EQ(a.imag(), 0.0);
    EXPECT_EQ(b.imag(), 0.0);
    EXPECT_GT(std::max(std::abs(a), std::abs(b)), 1.0);
}

TEST(Reduced, Regimes) {
    EXPECT_EQ(classify_regime(2.0), Regime::cyclic);
    EXPECT_EQ(classify_regime(4.0), Regime::bifurcation);
    EXPECT_EQ(classify_regime(4.0 + 1e-13), Regime::bifurcation);
    EXPECT_EQ(classify_regime(4.1), Regime::divergent);
    EXPECT_EQ(to_string(Regime::divergent), "divergent");
    EXPECT_THROW(classify_regime(-1.0), std::domain_error);
}

TEST(Reduced, IterationIsMatrixPower) {
    const auto sys = reduced_matrix(1.7);
    const auto orbit = iterate_reduced(sys, {0.3, -0.8}, 40);
    ASSERT_EQ(orbit.states.size(), 41u);
    std::array<double, 2> y{0.3, -0.8};
    for (std::size_t t = 0; t <= 40; ++t) {
        EXPECT_NEAR(orbit.states[t][0], y[0], 1e-12);
        EXPECT_NEAR(orbit.states[t][1], y[1], 1e-12);
        EXPECT_NEAR(orbit.norms[t], std::sqrt(y[0] * y[0] + y[1] * y[1]), 1e-12);
        y = {y[0] + 1.7 * y[1], -y[0] + (1.0 - 1.7) * y[1]};
    }
}

TEST(Reduced, CyclicOrbitStaysBounded) {
    const auto orbit = iterate_reduced(reduced_matrix(2.0), {1.0, 1.0}, 10000);
    for (double n : orbit.norms) ASSERT_LT(n, 10.0);
}

TEST(Reduced, DivergentOrbitGrows) {
    const auto orbit = iterate_reduced(reduced_matrix(5.0), {1.0, 1.0}, 60);
    for (std::size_t t = 6; t < orbit.norms.size(); ++t) {
        ASSERT_GT(orbit.norms[t], orbit.norms[t - 1]) << t;
    }
}

TEST(Inertia, Schedules) {
    EXPECT_EQ(constant_inertia(0.7)(123), 0.7);
    const auto lin = linear_inertia(0.9, 0.4, 11);
    EXPECT_DOUBLE_EQ(lin(1), 0.9);
    EXPECT_DOUBLE_EQ(lin(6), 0.65);
    EXPECT_DOUBLE_EQ(lin(11), 0.4);
    EXPECT_DOUBLE_EQ(lin(50), 0.4);
}

// With frozen randomness, one particle, unit inertia and a pinned best,
// (v_t, p - x_t) follows the reduced linear system.
TEST(FrozenPso, ReproducesReducedSystem) {
    for (double gamma : {0.5, 2.0, 3.0, 3.9}) {
        const double p = 0.25;
        problems::Problem prob("flat", Bounds{{-1e9, 1e9}},
                               [](std::span<const double> x) { return x[0] * x[0]; });
        PsoParams params;
        params.alpha = gamma / 2.0;
        params.beta = gamma / 2.0;
        params.swarm_size = 1;
        params.max_iters = 100;
        params.initial_positions = {{1.0}};
        params.initial_velocities = {{0.5}};
        params.frozen = FrozenDynamics{1.0, {p}};
        params.record_rows = true;
        const auto r = pso_optimize(prob, params, 0);
        const auto orbit = iterate_reduced(reduced_matrix(gamma), {0.5, p - 1.0}, 100);
        ASSERT_EQ(r.rows.size(), 101u);
        for (std::size_t t = 0; t <= 100; ++t) {
            EXPECT_NEAR(r.rows[t].v[0], orbit.states[t][0], 1e-12) << gamma << " t=" << t;
            EXPECT_NEAR(p - r.rows[t].x[0], orbit.states[t][1], 1e-12) << gamma << " t=" << t;
        }
    }
}

TEST(Pso, InvariantsOnRastrigin) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto prob = problems::rastrigin(3);
        PsoParams params;
        params.max_iters = 200;
        params.record_rows = true;
        const auto r = pso_optimize(prob, params, seed);
        ASSERT_EQ(r.run.best_history.size(), 201u);
        for (std::size_t t = 1; t < r.run.best_history.size(); ++t) {
            ASSERT_LE(r.run.best_history[t], r.run.best_history[t - 1]);
        }
        EXPECT_EQ(r.run.evaluations, 20u * 201u);
        EXPECT_EQ(r.rows.size(), 20u * 201u);
        for (const auto& row : r.rows) {
            ASSERT_LE(row.f_pbest, row.f);
            ASSERT_LE(row.f_gbest, row.f_pbest);
            for (double x : row.x) {
                ASSERT_GE(x, -5.12);
                ASSERT_LE(x, 5.12);
            }
        }
        EXPECT_EQ(r.run.best_f, r.final_state.g_best_f);
        EXPECT_EQ(prob.eval_count(), r.run.evaluations);
    }
}

TEST(Pso, Deterministic) {
    auto p1 = problems::sphere(2);
    auto p2 = problems::sphere(2);
    PsoParams params;
    params.max_iters = 100;
    params.record_rows = true;
    const auto a = pso_optimize(p1, params, 17);
    const auto b = pso_optimize(p2, params, 17);
    EXPECT_EQ(a.rows, b.rows);
    EXPECT_EQ(a.run.trajectory, b.run.trajectory);
}

TEST(Pso, VelocityClamp) {
    auto prob = problems::ackley(2);
    PsoParams params;
    params.max_iters = 50;
    params.v_max = 0.1;
    params.record_rows = true;
    const auto r = pso_optimize(prob, params, 3);
    for (const auto& row : r.rows) {
        for (double v : row.v) ASSERT_LE(std::abs(v), 0.1);
    }
}

TEST(Pso, ConvergesOnSphereWithDampedInertia) {
    auto prob = problems::sphere(2);
    PsoParams params;
    params.inertia = linear_inertia(0.9, 0.4, 500);
    params.max_iters = 500;
    const auto r = pso_optimize(prob, params, 11);
    EXPECT_LT(r.run.best_f, 1e-6);
}

TEST(Pso, RejectsInvalidParameters) {
    auto prob = problems::sphere(2);
    PsoParams params;
    params.max_iters = 5;
    params.inertia = constant_inertia(1.5);
    EXPECT_THROW(pso_optimize(prob, params, 1), std::invalid_argument);
    params.inertia = constant_inertia(0.5);
    params.swarm_size = 0;
    EXPECT_THROW(pso_optimize(prob, params, 1), std::invalid_argument);
    params.swarm_size = 2;
    params.initial_positions = {{0.0, 0.0}};
    EXPECT_THROW(pso_optimize(prob, params, 1), std::invalid_argument);
    params.initial_positions.clear();
    params.alpha = -1.0;
    EXPECT_THROW(pso_optimize(prob, params, 1), std::invalid_argument);
}

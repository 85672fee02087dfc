#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "metaopt/boundary.hpp"
#include "metaopt/problems.hpp"
#include "metaopt/trajectory.hpp"

namespace metaopt::swarm {

using InertiaSchedule = std::function<double(std::size_t)>;

InertiaSchedule constant_inertia(double theta);
// Linear ramp from `start` at t = 1 to `end` at t = max_iters.
InertiaSchedule linear_inertia(double start, double end, std::size_t max_iters);

// Test hook: replaces both uniform vectors by a constant and pins the
// attractor (global and personal best) to a fixed point for the update,
// turning the velocity rule into the deterministic reduced system. Bests
// are still tracked and reported as usual.
struct FrozenDynamics {
    double epsilon = 1.0;
    Vector pinned_best;
};

struct PsoParams {
    double alpha = 2.0;  // pull toward the global best
    double beta = 2.0;   // pull toward the personal best
    // theta(t) multiplies the previous velocity; must stay in [0, 1].
    InertiaSchedule inertia = constant_inertia(1.0);
    std::size_t swarm_size = 20;
    std::size_t max_iters = 1000;
    BoundaryPolicy boundary = BoundaryPolicy::clamp;
    // Per-coordinate speed limit; none by default.
    std::optional<double> v_max;
    // Explicit initial state; random positions in the bounds and zero
    // velocities when empty.
    std::vector<Vector> initial_positions;
    std::vector<Vector> initial_velocities;
    std::optional<FrozenDynamics> frozen;
    // Record one PsoRow per particle per iteration.
    bool record_rows = false;

    void validate(const problems::Problem& problem) const;
};

struct Particle {
    Vector x;
    Vector v;
    Vector best_x;
    double best_f = 0.0;
    double f = 0.0;
};

struct SwarmState {
    std::vector<Particle> particles;
    Vector g_best;
    double g_best_f = 0.0;
    std::size_t t = 0;
};

// CSV row: t, particle id, x..., v..., f, f_pbest, f_gbest.
struct PsoRow {
    std::size_t t = 0;
    std::size_t particle = 0;
    Vector x;
    Vector v;
    double f = 0.0;
    double f_pbest = 0.0;
    double f_gbest = 0.0;

    friend bool operator==(const PsoRow&, const PsoRow&) = default;
};

struct PsoResult {
    RunResult run;
    SwarmState final_state;
    std::vector<PsoRow> rows;
};

// v <- theta v + alpha e1 o (g* - x) + beta e2 o (x* - x); x <- x + v,
// with e1, e2 fresh uniform[0, 1] per particle, iteration and coordinate.
// The global best is refreshed once per sweep; ties keep the lowest index.
PsoResult pso_optimize(problems::Problem& problem, const PsoParams& params, std::uint64_t seed);

// Reduced single-particle system Y_{t+1} = A Y_t, Y = (v, u),
// A = [[1, gamma], [-1, 1 - gamma]], gamma = alpha + beta.
struct ReducedPsoSystem {
    double gamma;
    std::array<std::array<double, 2>, 2> matrix;
};

// Throws std::domain_error for gamma <= 0.
ReducedPsoSystem reduced_matrix(double gamma);

// 1 - gamma/2 +- sqrt(gamma^2 - 4 gamma) / 2, the "+" root first.
std::pair<std::complex<double>, std::complex<double>> eigenvalues(double gamma);

enum class Regime { cyclic, bifurcation, divergent };

std::string_view to_string(Regime regime);

// cyclic for 0 < gamma < 4, bifurcation at gamma = 4 (to within 1e-12),
// divergent above. Throws std::domain_error for gamma <= 0.
Regime classify_regime(double gamma);

struct ReducedOrbit {
    std::vector<std::array<double, 2>> states;  // (v_t, u_t), t = 0..steps
    std::vector<double> norms;                  // ||Y_t||_2
};

ReducedOrbit iterate_reduced(const ReducedPsoSystem& system, std::array<double, 2> y0,
                             std::size_t steps);

}  // namespace metaopt::swarm

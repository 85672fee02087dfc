#include "metaopt/swarm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "metaopt/rng.hpp"

namespace metaopt::swarm {

InertiaSchedule constant_inertia(double theta) {
    return [theta](std::size_t) { return theta; };
}

InertiaSchedule linear_inertia(double start, double end, std::size_t max_iters) {
    return [=](std::size_t t) {
        if (max_iters <= 1) return start;
        const double frac =
            static_cast<double>(std::min(t, max_iters) - 1) / static_cast<double>(max_iters - 1);
        return start + (end - start) * frac;
    };
}

void PsoParams::validate(const problems::Problem& problem) const {
    if (!(alpha >= 0.0) || !(beta >= 0.0)) {
        throw std::invalid_argument("pso: learning parameters must be >= 0");
    }
    if (!inertia) {
        throw std::invalid_argument("pso: inertia schedule is empty");
    }
    if (swarm_size < 1) {
        throw std::invalid_argument("pso: swarm size must be >= 1");
    }
    if (max_iters < 1) {
        throw std::invalid_argument("pso: max_iters must be >= 1");
    }
    if (v_max && !(*v_max > 0.0)) {
        throw std::invalid_argument("pso: v_max must be > 0");
    }
    const std::size_t d = problem.dimension();
    auto check_init = [&](const std::vector<Vector>& init, const char* what) {
        if (init.empty()) return;
        if (init.size() != swarm_size) {
            throw std::invalid_argument(std::string("pso: ") + what + " needs one entry per particle");
        }
        for (const auto& x : init) {
            if (x.size() != d) {
                throw std::invalid_argument(std::string("pso: ") + what + " has wrong dimension");
            }
        }
    };
    check_init(initial_positions, "initial positions");
    check_init(initial_velocities, "initial velocities");
    if (frozen && frozen->pinned_best.size() != d) {
        throw std::invalid_argument("pso: pinned best has wrong dimension");
    }
}

namespace {

void refresh_global_best(SwarmState& state) {
    for (const auto& p : state.particles) {
        if (p.best_f < state.g_best_f) {
            state.g_best_f = p.best_f;
            state.g_best = p.best_x;
        }
    }
}

std::size_t current_leader(const SwarmState& state) {
    std::size_t leader = 0;
    for (std::size_t i = 1; i < state.particles.size(); ++i) {
        if (state.particles[i].f < state.particles[leader].f) leader = i;
    }
    return leader;
}

void record(const SwarmState& state, RunResult& run, std::vector<PsoRow>* rows) {
    run.best_history.push_back(state.g_best_f);
    const auto& lead = state.particles[current_leader(state)];
    run.trajectory.checkpoints.push_back({state.t, lead.x, lead.f, state.g_best_f});
    if (rows) {
        for (std::size_t i = 0; i < state.particles.size(); ++i) {
            const auto& p = state.particles[i];
            rows->push_back({state.t, i, p.x, p.v, p.f, p.best_f, state.g_best_f});
        }
    }
}

}  // namespace

PsoResult pso_optimize(problems::Problem& problem, const PsoParams& params, std::uint64_t seed) {
    params.validate(problem);
    const std::uint64_t evals_before = problem.eval_count();
    const std::size_t d = problem.dimension();
    const auto& bounds = problem.bounds();
    Rng rng(seed);

    PsoResult result;
    SwarmState& state = result.final_state;
    state.particles.resize(params.swarm_size);
    for (std::size_t i = 0; i < params.swarm_size; ++i) {
        auto& p = state.particles[i];
        if (!params.initial_positions.empty()) {
            p.x = params.initial_positions[i];
        } else {
            p.x.resize(d);
            for (std::size_t j = 0; j < d; ++j) p.x[j] = rng.uniform(bounds[j].lo, bounds[j].hi);
        }
        p.v = params.initial_velocities.empty() ? Vector(d, 0.0) : params.initial_velocities[i];
        p.f = problem.evaluate(p.x);
        p.best_x = p.x;
        p.best_f = p.f;
    }
    state.g_best = state.particles.front().best_x;
    state.g_best_f = state.particles.front().best_f;
    refresh_global_best(state);

    auto& run = result.run;
    run.seed = seed;
    run.trajectory.seed = seed;
    std::vector<PsoRow>* rows = params.record_rows ? &result.rows : nullptr;
    record(state, run, rows);

    for (std::size_t t = 1; t <= params.max_iters; ++t) {
        const double theta = params.inertia(t);
        if (!(theta >= 0.0 && theta <= 1.0)) {
            throw std::invalid_argument("pso: inertia theta(" + std::to_string(t) +
                                        ") outside [0, 1]");
        }
        for (auto& p : state.particles) {
            const Vector& g = params.frozen ? params.frozen->pinned_best : state.g_best;
            const Vector& own = params.frozen ? params.frozen->pinned_best : p.best_x;
            for (std::size_t j = 0; j < d; ++j) {
                const double e1 = params.frozen ? params.frozen->epsilon : rng.uniform();
                const double e2 = params.frozen ? params.frozen->epsilon : rng.uniform();
                double v = theta * p.v[j] + params.alpha * e1 * (g[j] - p.x[j]) +
                           params.beta * e2 * (own[j] - p.x[j]);
                if (params.v_max) v = std::clamp(v, -*params.v_max, *params.v_max);
                p.v[j] = v;
                p.x[j] += v;
            }
            apply_boundary(params.boundary, bounds, p.x);
        }
        for (auto& p : state.particles) {
            p.f = problem.evaluate(p.x);
            if (p.f < p.best_f) {
                p.best_f = p.f;
                p.best_x = p.x;
            }
        }
        refresh_global_best(state);
        state.t = t;
        record(state, run, rows);
    }

    run.best_x = state.g_best;
    run.best_f = state.g_best_f;
    run.evaluations = problem.eval_count() - evals_before;
    run.trajectory.evaluations = run.evaluations;
    return result;
}

ReducedPsoSystem reduced_matrix(double gamma) {
    if (!(gamma > 0.0)) {
        throw std::domain_error("reduced_matrix: gamma must be > 0");
    }
    return ReducedPsoSystem{gamma, {{{1.0, gamma}, {-1.0, 1.0 - gamma}}}};
}

std::pair<std::complex<double>, std::complex<double>> eigenvalues(double gamma) {
    const std::complex<double> root = std::sqrt(std::complex<double>(gamma * gamma - 4.0 * gamma, 0.0));
    const double centre = 1.0 - gamma / 2.0;
    return {centre + root / 2.0, centre - root / 2.0};
}

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::cyclic: return "cyclic";
        case Regime::bifurcation: return "bifurcation";
        case Regime::divergent: return "divergent";
    }
    return "unknown";
}

Regime classify_regime(double gamma) {
    if (!(gamma > 0.0)) {
        throw std::domain_error("classify_regime: gamma must be > 0");
    }
    if (std::abs(gamma - 4.0) <= 1e-12) return Regime::bifurcation;
    return gamma < 4.0 ? Regime::cyclic : Regime::divergent;
}

ReducedOrbit iterate_reduced(const ReducedPsoSystem& system, std::array<double, 2> y0,
                             std::size_t steps) {
    const auto& a = system.matrix;
    ReducedOrbit orbit;
    orbit.states.reserve(steps + 1);
    orbit.norms.reserve(steps + 1);
    auto y = y0;
    for (std::size_t t = 0;; ++t) {
        orbit.states.push_back(y);
        orbit.norms.push_back(std::hypot(y[0], y[1]));
        if (t == steps) break;
        y = {a[0][0] * y[0] + a[0][1] * y[1], a[1][0] * y[0] + a[1][1] * y[1]};
    }
    return orbit;
}

}  // namespace metaopt::swarm

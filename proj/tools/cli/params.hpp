#pragma once

// Translation from CLI parameter blocks to library parameter objects.

#include "cli.hpp"
#include "metaopt/annealing.hpp"
#include "metaopt/firefly.hpp"
#include "metaopt/problems.hpp"
#include "metaopt/stochastic.hpp"
#include "metaopt/swarm.hpp"

namespace metaopt::cli {

inline problems::Problem make_problem(const ProblemSpec& spec) {
    return problems::make_problem(spec.name, spec.dimension);
}

inline annealing::AnnealingParams anneal_params(const AnnealConfig& a) {
    annealing::AnnealingParams p;
    if (a.schedule == "logarithmic") {
        p.schedule = annealing::Logarithmic{a.d, a.t_offset};
    } else {
        p.schedule = annealing::Geometric{a.t0, a.ratio};
    }
    p.k_b = a.k_b;
    p.proposal = stochastic::StepDistribution::gaussian(0.0, a.sigma);
    p.step_scale = a.step_scale;
    p.max_iters = a.max_iters;
    p.boundary = parse_boundary_policy(a.boundary);
    return p;
}

inline swarm::PsoParams pso_params(const PsoConfig& c) {
    swarm::PsoParams p;
    p.alpha = c.alpha;
    p.beta = c.beta;
    p.inertia = c.inertia == "linear" ? swarm::linear_inertia(c.theta, c.theta_end, c.max_iters)
                                      : swarm::constant_inertia(c.theta);
    p.swarm_size = c.swarm_size;
    p.max_iters = c.max_iters;
    if (c.v_max > 0.0) p.v_max = c.v_max;
    p.boundary = parse_boundary_policy(c.boundary);
    return p;
}

inline firefly::FireflyParams firefly_params(const FireflyConfig& c) {
    firefly::FireflyParams p;
    p.beta0 = c.beta0;
    p.gamma = c.gamma;
    p.alpha = c.alpha;
    p.alpha_decay = c.alpha_decay;
    p.beta0_decay = c.beta0_decay;
    p.strategy = firefly::parse_move_strategy(c.strategy);
    p.population = c.population;
    p.max_iters = c.max_iters;
    p.boundary = parse_boundary_policy(c.boundary);
    return p;
}

inline stochastic::StepDistribution walk_distribution(const WalkConfig& w) {
    using stochastic::StepDistribution;
    if (w.dist == "cauchy") return StepDistribution::cauchy(0.0, w.scale);
    if (w.dist == "levy") return StepDistribution::levy_stable(w.scale, w.index);
    if (w.dist == "uniform") return StepDistribution::uniform(-w.scale, w.scale);
    return StepDistribution::gaussian(0.0, w.scale);
}

inline stochastic::WalkConfig walk_config(const WalkConfig& w) {
    stochastic::WalkConfig c;
    c.steps = w.steps;
    c.step_dist = walk_distribution(w);
    c.scalings = {w.scaling};
    c.origin = {0.0};
    c.drift = w.drift;
    return c;
}

}  // namespace metaopt::cli

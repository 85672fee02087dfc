#include "metaopt/annealing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace metaopt::annealing {

void validate(const CoolingSchedule& schedule) {
    if (const auto* log = std::get_if<Logarithmic>(&schedule)) {
        if (!(log->d > 0.0) || !std::isfinite(log->d)) {
            throw std::invalid_argument("logarithmic schedule: d must be > 0");
        }
        if (log->t_offset < 2) {
            throw std::invalid_argument("logarithmic schedule: t_offset must be >= 2");
        }
    } else {
        const auto& geo = std::get<Geometric>(schedule);
        if (!(geo.t0 > 0.0) || !std::isfinite(geo.t0)) {
            throw std::invalid_argument("geometric schedule: T0 must be > 0");
        }
        if (!(geo.ratio > 0.0 && geo.ratio < 1.0)) {
            throw std::invalid_argument("geometric schedule: ratio must lie in (0, 1)");
        }
    }
}

double temperature(const CoolingSchedule& schedule, std::size_t t) {
    if (const auto* log = std::get_if<Logarithmic>(&schedule)) {
        const double arg = static_cast<double>(t) + static_cast<double>(log->t_offset) - 1.0;
        return log->d / std::log(arg);
    }
    const auto& geo = std::get<Geometric>(schedule);
    const double temp = geo.t0 * std::pow(geo.ratio, static_cast<double>(t));
    return std::max(temp, std::numeric_limits<double>::min());
}

double acceptance_probability(double delta_e, double temperature, double k_b) {
    if (!(temperature > 0.0)) {
        throw std::domain_error("acceptance_probability: temperature must be > 0");
    }
    if (!(k_b > 0.0)) {
        throw std::domain_error("acceptance_probability: k_B must be > 0");
    }
    if (delta_e <= 0.0) return 1.0;
    return std::exp(-delta_e / (k_b * temperature));
}

void AnnealingParams::validate(const problems::Problem& problem) const {
    annealing::validate(schedule);
    if (!(k_b > 0.0)) {
        throw std::invalid_argument("annealing: k_B must be > 0");
    }
    if (!(step_scale >= 0.0) || !std::isfinite(step_scale)) {
        throw std::invalid_argument("annealing: step scale must be >= 0");
    }
    if (max_iters < 1) {
        throw std::invalid_argument("annealing: max_iters must be >= 1");
    }
    if (x0 && x0->size() != problem.dimension()) {
        throw std::invalid_argument("annealing: initial guess has wrong dimension");
    }
}

AnnealChain::AnnealChain(problems::Problem& problem, const AnnealingParams& params,
                         std::uint64_t seed)
    : params_(params), rng_(seed) {
    params_.validate(problem);
    if (params_.x0) {
        x_ = *params_.x0;
    } else {
        x_.resize(problem.dimension());
        for (std::size_t j = 0; j < x_.size(); ++j) {
            x_[j] = rng_.uniform(problem.bounds()[j].lo, problem.bounds()[j].hi);
        }
    }
    f_ = problem.evaluate(x_);
    best_x_ = x_;
    best_f_ = f_;
    proposal_.resize(x_.size());
}

AnnealStep AnnealChain::step(problems::Problem& problem) {
    ++t_;
    const double temp = temperature(params_.schedule, t_);
    for (std::size_t j = 0; j < x_.size(); ++j) {
        proposal_[j] = x_[j] + params_.step_scale * stochastic::sample_step(params_.proposal, rng_);
    }
    apply_boundary(params_.boundary, problem.bounds(), proposal_);
    const double f_new = problem.evaluate(proposal_);
    const double p = acceptance_probability(f_new - f_, temp, params_.k_b);
    // One uniform per iteration regardless of outcome keeps the stream
    // position a function of t alone.
    const bool accepted = rng_.uniform() < p;
    if (accepted) {
        x_.swap(proposal_);
        f_ = f_new;
        if (f_ < best_f_) {
            best_f_ = f_;
            best_x_ = x_;
        }
    }
    return AnnealStep{t_, temp, x_, f_, best_f_, accepted};
}

AnnealResult anneal(problems::Problem& problem, const AnnealingParams& params,
                    std::uint64_t seed) {
    const std::uint64_t evals_before = problem.eval_count();
    AnnealChain chain(problem, params, seed);

    AnnealResult result;
    auto& run = result.run;
    run.seed = seed;
    run.best_history.reserve(params.max_iters + 1);
    run.best_history.push_back(chain.best_f());
    run.trajectory.seed = seed;
    run.trajectory.checkpoints.reserve(params.max_iters + 1);
    run.trajectory.checkpoints.push_back({0, chain.x(), chain.f(), chain.best_f()});
    if (params.record_steps) {
        result.steps.reserve(params.max_iters + 1);
        result.steps.push_back(AnnealStep{0, temperature(params.schedule, 1), chain.x(), chain.f(),
                                          chain.best_f(), true});
    }

    for (std::size_t t = 1; t <= params.max_iters; ++t) {
        AnnealStep s = chain.step(problem);
        run.best_history.push_back(s.f_best);
        run.trajectory.checkpoints.push_back({s.t, s.x, s.f, s.f_best});
        if (params.record_steps) result.steps.push_back(std::move(s));
    }

    run.best_x = chain.best_x();
    run.best_f = chain.best_f();
    run.evaluations = problem.eval_count() - evals_before;
    run.trajectory.evaluations = run.evaluations;
    return result;
}

ConvergenceBoundFit estimate_hitting_probability(const problems::Problem& problem,
                                                 const AnnealingParams& params,
                                                 const problems::OptimalSet& optimal_set,
                                                 std::size_t n_runs,
                                                 const std::vector<std::size_t>& checkpoints,
                                                 std::uint64_t seed) {
    if (n_runs < 30) {
        throw std::invalid_argument("estimate_hitting_probability: n_runs must be >= 30");
    }
    if (checkpoints.empty()) {
        throw std::invalid_argument("estimate_hitting_probability: no checkpoints");
    }
    for (std::size_t t : checkpoints) {
        if (t > params.max_iters) {
            throw std::invalid_argument(
                "estimate_hitting_probability: checkpoint beyond max_iters");
        }
    }
    if (!problem.known_optimum()) {
        throw std::invalid_argument("estimate_hitting_probability: no known optimum");
    }

    std::vector<std::size_t> sorted = checkpoints;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const std::size_t horizon = sorted.back();

    std::vector<std::size_t> hits(sorted.size(), 0);
    for (std::size_t r = 0; r < n_runs; ++r) {
        problems::Problem local = problem;
        AnnealChain chain(local, params, derive_seed(seed, r));
        std::size_t next = 0;
        for (std::size_t t = 0; t <= horizon; ++t) {
            if (t > 0) chain.step(local);
            while (next < sorted.size() && sorted[next] == t) {
                if (optimal_set.contains_value(chain.f())) ++hits[next];
                ++next;
            }
        }
    }

    ConvergenceBoundFit out;
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double p = static_cast<double>(hits[i]) / static_cast<double>(n_runs);
        out.curve.emplace_back(sorted[i], p);
        if (p > 0.0 && sorted[i] > 0) {
            xs.push_back(std::log(static_cast<double>(sorted[i])));
            ys.push_back(std::log(p));
        }
    }
    if (xs.size() == 1) {
        out.fit = PowerLawFit{std::exp(ys.front()), 0.0};
    } else if (xs.size() >= 2) {
        const double n = static_cast<double>(xs.size());
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= n;
        my /= n;
        double sxx = 0.0, sxy = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
        }
        const double slope = sxy / sxx;
        out.fit = PowerLawFit{std::exp(my - slope * mx), -slope};
    }
    return out;
}

}  // namespace metaopt::annealing

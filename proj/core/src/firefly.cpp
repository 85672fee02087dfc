#include "metaopt/firefly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "metaopt/rng.hpp"

namespace metaopt::firefly {

double attractiveness(double beta0, double gamma, double r) {
    return beta0 * std::exp(-gamma * r * r);
}

std::string_view to_string(MoveStrategy strategy) {
    return strategy == MoveStrategy::full_loop ? "full-loop" : "brightest-only";
}

MoveStrategy parse_move_strategy(std::string_view name) {
    if (name == "full-loop") return MoveStrategy::full_loop;
    if (name == "brightest-only") return MoveStrategy::brightest_only;
    throw std::invalid_argument("unknown move strategy '" + std::string(name) +
                                "' (expected full-loop or brightest-only)");
}

double FireflyParams::alpha_at(std::size_t t) const {
    if (alpha_schedule) return alpha_schedule(t);
    return alpha * std::pow(alpha_decay, static_cast<double>(t));
}

double FireflyParams::beta0_at(std::size_t t) const {
    return beta0 * std::pow(beta0_decay, static_cast<double>(t));
}

void FireflyParams::validate(const problems::Problem& problem) const {
    if (!(beta0 >= 0.0) || !std::isfinite(beta0)) {
        throw std::invalid_argument("firefly: beta0 must be >= 0");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("firefly: gamma must be > 0");
    }
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("firefly: alpha must be >= 0");
    }
    if (!(alpha_decay > 0.0 && alpha_decay <= 1.0)) {
        throw std::invalid_argument("firefly: alpha decay must lie in (0, 1]");
    }
    if (!(beta0_decay > 0.0 && beta0_decay <= 1.0)) {
        throw std::invalid_argument("firefly: beta0 decay must lie in (0, 1]");
    }
    if (population < 1) {
        throw std::invalid_argument("firefly: population must be >= 1");
    }
    if (max_iters < 1) {
        throw std::invalid_argument("firefly: max_iters must be >= 1");
    }
    if (!initial_positions.empty()) {
        if (initial_positions.size() != population) {
            throw std::invalid_argument("firefly: initial positions need one entry per firefly");
        }
        for (const auto& x : initial_positions) {
            if (x.size() != problem.dimension()) {
                throw std::invalid_argument("firefly: initial position has wrong dimension");
            }
        }
    }
}

namespace {

double squared_distance(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        s += d * d;
    }
    return s;
}

void move_toward(Vector& xi, const Vector& xj, double beta0, double gamma) {
    const double r = std::sqrt(squared_distance(xi, xj));
    const double pull = attractiveness(beta0, gamma, r);
    for (std::size_t k = 0; k < xi.size(); ++k) {
        xi[k] += pull * (xj[k] - xi[k]);
    }
}

}  // namespace

FireflyResult firefly_optimize(problems::Problem& problem, const FireflyParams& params,
                               std::uint64_t seed) {
    params.validate(problem);
    const std::uint64_t evals_before = problem.eval_count();
    const std::size_t n = params.population;
    const std::size_t d = problem.dimension();
    const auto& bounds = problem.bounds();
    Rng rng(seed);

    std::vector<Vector> x(n);
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!params.initial_positions.empty()) {
            x[i] = params.initial_positions[i];
        } else {
            x[i].resize(d);
            for (std::size_t k = 0; k < d; ++k) x[i][k] = rng.uniform(bounds[k].lo, bounds[k].hi);
        }
        f[i] = problem.evaluate(x[i]);
    }

    FireflyResult result;
    RunResult& run = result.run;
    run.seed = seed;
    run.trajectory.seed = seed;
    run.best_x = x[0];
    run.best_f = f[0];

    auto record = [&](std::size_t t) {
        std::size_t leader = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (f[i] < run.best_f) {
                run.best_f = f[i];
                run.best_x = x[i];
            }
            if (f[i] < f[leader]) leader = i;
        }
        run.best_history.push_back(run.best_f);
        run.trajectory.checkpoints.push_back({t, x[leader], f[leader], run.best_f});
        if (params.record_rows) {
            for (std::size_t i = 0; i < n; ++i) {
                result.rows.push_back({t, i, x[i], f[i], run.best_f});
            }
        }
    };
    record(0);

    std::vector<std::size_t> order(n);
    std::vector<Vector> sorted_x(n);
    std::vector<double> sorted_f(n);
    for (std::size_t t = 1; t <= params.max_iters; ++t) {
        const double alpha_t = params.alpha_at(t);
        const double beta_t = params.beta0_at(t);

        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
        for (std::size_t i = 0; i < n; ++i) {
            sorted_x[i] = std::move(x[order[i]]);
            sorted_f[i] = f[order[i]];
        }
        x.swap(sorted_x);
        f.swap(sorted_f);

        // f holds start-of-generation brightness; positions move in place.
        for (std::size_t i = 0; i < n; ++i) {
            if (params.strategy == MoveStrategy::full_loop) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (f[j] < f[i]) move_toward(x[i], x[j], beta_t, params.gamma);
                }
            } else if (i != 0 && f[0] < f[i]) {
                move_toward(x[i], x[0], beta_t, params.gamma);
            }
            for (std::size_t k = 0; k < d; ++k) {
                x[i][k] += alpha_t * stochastic::sample_step(params.noise, rng);
            }
            apply_boundary(params.boundary, bounds, x[i]);
        }
        for (std::size_t i = 0; i < n; ++i) f[i] = problem.evaluate(x[i]);
        record(t);
    }

    result.final_positions = std::move(x);
    run.evaluations = problem.eval_count() - evals_before;
    run.trajectory.evaluations = run.evaluations;
    return result;
}

double reduced_map_step(double beta0, double u) {
    return u * (1.0 - beta0 * std::exp(-u * u));
}

double logistic_step(double lambda, double u) {
    return lambda * u * (1.0 - u);
}

ScalarMap ScalarMap::firefly_reduced(double beta0) {
    if (!std::isfinite(beta0)) throw std::invalid_argument("firefly map: beta0 must be finite");
    return ScalarMap(Kind::firefly_reduced, beta0);
}

ScalarMap ScalarMap::logistic(double lambda) {
    if (!std::isfinite(lambda)) throw std::invalid_argument("logistic map: lambda must be finite");
    return ScalarMap(Kind::logistic, lambda);
}

std::string ScalarMap::name() const {
    return kind_ == Kind::firefly_reduced ? "firefly" : "logistic";
}

double ScalarMap::value(double u) const {
    return kind_ == Kind::firefly_reduced ? reduced_map_step(parameter_, u)
                                          : logistic_step(parameter_, u);
}

double ScalarMap::derivative(double u) const {
    if (kind_ == Kind::firefly_reduced) {
        return 1.0 - parameter_ * std::exp(-u * u) * (1.0 - 2.0 * u * u);
    }
    return parameter_ * (1.0 - 2.0 * u);
}

}  // namespace metaopt::firefly

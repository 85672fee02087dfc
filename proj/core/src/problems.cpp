#include "metaopt/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace metaopt::problems {

Problem::Problem(std::string name, Bounds bounds, Objective objective,
                 std::optional<KnownOptimum> optimum)
    : name_(std::move(name)),
      bounds_(std::move(bounds)),
      objective_(std::move(objective)),
      optimum_(std::move(optimum)) {
    if (bounds_.empty()) {
        throw std::invalid_argument("problem '" + name_ + "': dimension must be >= 1");
    }
    for (const auto& b : bounds_) {
        if (!(b.lo < b.hi)) {
            throw std::invalid_argument("problem '" + name_ + "': bounds need lo < hi");
        }
    }
    if (optimum_ && optimum_->location.size() != bounds_.size()) {
        throw std::invalid_argument("problem '" + name_ + "': optimum has wrong dimension");
    }
}

double Problem::evaluate(std::span<const double> x) {
    if (x.size() != dimension()) {
        throw std::invalid_argument("problem '" + name_ + "': expected dimension " +
                                    std::to_string(dimension()) + ", got " +
                                    std::to_string(x.size()));
    }
    ++eval_count_;
    return objective_(x);
}

namespace {

Bounds uniform_bounds(std::size_t d, double lo, double hi) {
    return Bounds(d, Interval{lo, hi});
}

void require_dimension(std::size_t d, std::size_t min, const char* name) {
    if (d < min) {
        throw std::invalid_argument(std::string(name) + ": dimension must be >= " +
                                    std::to_string(min));
    }
}

}  // namespace

Problem sphere(std::size_t d) {
    require_dimension(d, 1, "sphere");
    return Problem(
        "sphere", uniform_bounds(d, -5.12, 5.12),
        [](std::span<const double> x) {
            double s = 0.0;
            for (double xi : x) s += xi * xi;
            return s;
        },
        KnownOptimum{Vector(d, 0.0), 0.0});
}

Problem rosenbrock(std::size_t d) {
    require_dimension(d, 2, "rosenbrock");
    return Problem(
        "rosenbrock", uniform_bounds(d, -5.0, 10.0),
        [](std::span<const double> x) {
            double s = 0.0;
            for (std::size_t i = 0; i + 1 < x.size(); ++i) {
                const double a = x[i + 1] - x[i] * x[i];
                const double b = 1.0 - x[i];
                s += 100.0 * a * a + b * b;
            }
            return s;
        },
        KnownOptimum{Vector(d, 1.0), 0.0});
}

Problem ackley(std::size_t d) {
    require_dimension(d, 1, "ackley");
    return Problem(
        "ackley", uniform_bounds(d, -32.768, 32.768),
        [](std::span<const double> x) {
            const double n = static_cast<double>(x.size());
            double sq = 0.0;
            double cs = 0.0;
            for (double xi : x) {
                sq += xi * xi;
                cs += std::cos(2.0 * std::numbers::pi * xi);
            }
            return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 +
                   std::numbers::e;
        },
        KnownOptimum{Vector(d, 0.0), 0.0});
}

Problem rastrigin(std::size_t d) {
    require_dimension(d, 1, "rastrigin");
    return Problem(
        "rastrigin", uniform_bounds(d, -5.12, 5.12),
        [](std::span<const double> x) {
            double s = 10.0 * static_cast<double>(x.size());
            for (double xi : x) {
                s += xi * xi - 10.0 * std::cos(2.0 * std::numbers::pi * xi);
            }
            return s;
        },
        KnownOptimum{Vector(d, 0.0), 0.0});
}

std::vector<std::string> builtin_names() {
    return {"sphere", "rosenbrock", "ackley", "rastrigin"};
}

Problem make_problem(const std::string& name, std::size_t dimension) {
    if (name == "sphere") return sphere(dimension);
    if (name == "rosenbrock") return rosenbrock(dimension);
    if (name == "ackley") return ackley(dimension);
    if (name == "rastrigin") return rastrigin(dimension);
    throw std::invalid_argument("unknown problem '" + name +
                                "' (expected sphere, rosenbrock, ackley or rastrigin)");
}

std::vector<Problem> builtin_suite(std::size_t dimension) {
    std::vector<Problem> suite;
    for (const auto& name : builtin_names()) {
        suite.push_back(make_problem(name, dimension));
    }
    return suite;
}

OptimalSet::OptimalSet(const Problem& problem, double epsilon) : epsilon_(epsilon) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("optimal set: epsilon must be > 0");
    }
    if (!problem.known_optimum()) {
        throw std::invalid_argument("optimal set: problem '" + problem.name() +
                                    "' has no known optimum");
    }
    threshold_ = problem.known_optimum()->value + epsilon;
}

bool in_optimal_set(Problem& problem, const OptimalSet& set, std::span<const double> x) {
    return set.contains_value(problem.evaluate(x));
}

}  // namespace metaopt::problems

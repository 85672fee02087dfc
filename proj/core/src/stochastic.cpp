#include "metaopt/stochastic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "metaopt/special.hpp"

namespace metaopt::stochastic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool finite(double x) { return std::isfinite(x); }

// Standard symmetric stable variate with characteristic function
// exp(-|k|^index).
double standard_stable(double index, Rng& rng) {
    const double v = std::numbers::pi * (rng.uniform_open() - 0.5);
    const double w = rng.exponential();
    if (index == 2.0) {
        return 2.0 * std::sin(v) * std::sqrt(w);
    }
    if (index == 1.0) {
        return std::tan(v);
    }
    const double a = index;
    const double lead = std::sin(a * v) / std::pow(std::cos(v), 1.0 / a);
    const double tail = std::pow(std::cos((1.0 - a) * v) / w, (1.0 - a) / a);
    return lead * tail;
}

}  // namespace

StepDistribution StepDistribution::uniform(double lo, double hi) {
    if (!finite(lo) || !finite(hi) || !(lo < hi)) {
        throw std::invalid_argument("uniform step: require finite lo < hi");
    }
    return StepDistribution(Uniform{lo, hi});
}

StepDistribution StepDistribution::gaussian(double mu, double sigma) {
    if (!finite(mu) || !finite(sigma) || !(sigma > 0.0)) {
        throw std::invalid_argument("gaussian step: require finite mu and sigma > 0");
    }
    return StepDistribution(Gaussian{mu, sigma});
}

StepDistribution StepDistribution::cauchy(double loc, double scale) {
    if (!finite(loc) || !finite(scale) || !(scale > 0.0)) {
        throw std::invalid_argument("cauchy step: require finite loc and scale > 0");
    }
    return StepDistribution(Cauchy{loc, scale});
}

StepDistribution StepDistribution::levy_stable(double scale, double index) {
    if (!finite(scale) || !(scale > 0.0)) {
        throw std::invalid_argument("levy step: require scale > 0");
    }
    if (!(index > 0.0 && index <= 2.0)) {
        throw std::invalid_argument("levy step: require index in (0, 2]");
    }
    return StepDistribution(LevyStable{scale, index});
}

std::string StepDistribution::describe() const {
    std::ostringstream out;
    out.precision(17);
    std::visit(overloaded{
                   [&](const Uniform& d) { out << "uniform(lo=" << d.lo << ",hi=" << d.hi << ")"; },
                   [&](const Gaussian& d) {
                       out << "gaussian(mu=" << d.mu << ",sigma=" << d.sigma << ")";
                   },
                   [&](const Cauchy& d) {
                       out << "cauchy(loc=" << d.loc << ",scale=" << d.scale << ")";
                   },
                   [&](const LevyStable& d) {
                       out << "levy(scale=" << d.scale << ",index=" << d.index << ")";
                   },
               },
               kind_);
    return out.str();
}

double sample_step(const StepDistribution& dist, Rng& rng) {
    return std::visit(
        overloaded{
            [&](const Uniform& d) { return d.lo + (d.hi - d.lo) * rng.uniform(); },
            [&](const Gaussian& d) { return d.mu + d.sigma * rng.normal(); },
            [&](const Cauchy& d) {
                return d.loc + d.scale * std::tan(std::numbers::pi * (rng.uniform_open() - 0.5));
            },
            [&](const LevyStable& d) {
                return std::pow(d.scale, 1.0 / d.index) * standard_stable(d.index, rng);
            },
        },
        dist.kind());
}

double WalkConfig::scaling(std::size_t step_index) const {
    return scalings.size() == 1 ? scalings.front() : scalings.at(step_index);
}

void WalkConfig::validate() const {
    if (origin.empty()) {
        throw std::invalid_argument("walk: origin must have dimension >= 1");
    }
    if (scalings.empty() || (scalings.size() != 1 && scalings.size() != steps)) {
        throw std::invalid_argument("walk: scalings must hold 1 or `steps` values");
    }
    for (double a : scalings) {
        if (!finite(a) || a < 0.0) {
            throw std::invalid_argument("walk: scalings must be finite and >= 0");
        }
    }
    if (!finite(drift)) {
        throw std::invalid_argument("walk: drift must be finite");
    }
}

Walk simulate_walk(const WalkConfig& config, Rng& rng) {
    config.validate();
    const std::size_t d = config.dimension();
    Walk walk;
    walk.positions.reserve(config.steps + 1);
    walk.steps.reserve(config.steps);
    walk.positions.push_back(config.origin);
    Vector x = config.origin;
    Vector s(d);
    for (std::size_t k = 0; k < config.steps; ++k) {
        const double alpha = config.scaling(k);
        for (std::size_t j = 0; j < d; ++j) {
            s[j] = sample_step(config.step_dist, rng);
            x[j] = x[j] + config.drift + alpha * s[j];
        }
        walk.steps.push_back(s);
        walk.positions.push_back(x);
    }
    return walk;
}

std::vector<std::vector<double>> walk_ensemble_1d(const WalkConfig& config,
                                                  std::size_t walks,
                                                  std::uint64_t seed) {
    config.validate();
    if (config.dimension() != 1) {
        throw std::invalid_argument("walk_ensemble_1d: origin must be 1-D");
    }
    std::vector<std::vector<double>> out(walks);
    for (std::size_t i = 0; i < walks; ++i) {
        Rng rng(derive_seed(seed, i));
        auto& path = out[i];
        path.resize(config.steps + 1);
        double x = config.origin.front();
        path[0] = x;
        for (std::size_t k = 0; k < config.steps; ++k) {
            x = x + config.drift + config.scaling(k) * sample_step(config.step_dist, rng);
            path[k + 1] = x;
        }
    }
    return out;
}

GaussianCombination combine_gaussians(std::span<const GaussianComponent> components) {
    if (components.empty()) {
        throw std::invalid_argument("combine_gaussians: no components");
    }
    double mu_star = 0.0;
    for (const auto& c : components) {
        if (!(c.alpha > 0.0) || !(c.sigma >= 0.0) || !finite(c.mu) || !finite(c.alpha) ||
            !finite(c.sigma)) {
            throw std::invalid_argument("combine_gaussians: require alpha > 0, sigma >= 0");
        }
        mu_star += c.alpha * c.mu;
    }
    double var = 0.0;
    for (const auto& c : components) {
        const double dm = mu_star - c.mu;
        var += c.alpha * (c.sigma * c.sigma + dm * dm);
    }
    return {mu_star, var};
}

DiffusionModel::DiffusionModel(double drift_speed, std::size_t dimension, double step_length,
                               double jump_interval)
    : drift_speed_(drift_speed),
      dimension_(dimension),
      step_length_(step_length),
      jump_interval_(jump_interval),
      diffusion_(step_length * step_length / (2.0 * jump_interval)) {
    if (!(drift_speed >= 0.0) || !finite(drift_speed)) {
        throw std::invalid_argument("diffusion model: drift speed must be >= 0");
    }
    if (dimension == 0) {
        throw std::invalid_argument("diffusion model: dimension must be >= 1");
    }
    if (!(step_length > 0.0) || !(jump_interval > 0.0) || !finite(step_length) ||
        !finite(jump_interval)) {
        throw std::invalid_argument("diffusion model: step length and interval must be > 0");
    }
}

double brownian_variance(const DiffusionModel& model, double t) {
    if (!(t >= 0.0)) {
        throw std::domain_error("brownian_variance: t must be >= 0");
    }
    const double v0 = model.drift_speed();
    return v0 * v0 * t * t +
           2.0 * static_cast<double>(model.dimension()) * model.diffusion_coefficient() * t;
}

double levy_characteristic(double k, double scale, double index) {
    return std::exp(-scale * std::pow(std::abs(k), index));
}

double levy_tail_density(double s, double scale, double index) {
    if (s == 0.0) {
        throw std::domain_error("levy_tail_density: asymptote undefined at s = 0");
    }
    const double numer =
        scale * index * gamma_function(index) * std::sin(std::numbers::pi * index / 2.0);
    return numer / (std::numbers::pi * std::pow(std::abs(s), 1.0 + index));
}

double levy_superdiffusion_variance(double t, double index) {
    if (!(index >= 1.0 && index <= 2.0)) {
        throw std::domain_error("levy_superdiffusion_variance: index must be in [1, 2]");
    }
    if (!(t >= 0.0)) {
        throw std::domain_error("levy_superdiffusion_variance: t must be >= 0");
    }
    return std::pow(t, 3.0 - index);
}

}  // namespace metaopt::stochastic

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "metaopt/rng.hpp"
#include "metaopt/types.hpp"

namespace metaopt::stochastic {

struct Uniform {
    double lo;
    double hi;

    friend bool operator==(const Uniform&, const Uniform&) = default;
};

struct Gaussian {
    double mu;
    double sigma;

    friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

struct Cauchy {
    double loc;
    double scale;

    friend bool operator==(const Cauchy&, const Cauchy&) = default;
};

// Symmetric alpha-stable law with characteristic function
//   F(k) = exp(-scale * |k|^index),  0 < index <= 2.
//
// Scale convention: `scale` multiplies |k|^index directly, so
// LevyStable{scale, 2} is Gaussian with sigma = sqrt(2 * scale) and
// LevyStable{scale, 1} is Cauchy with scale parameter `scale`. Other
// libraries often use scale^index instead; convert before comparing.
struct LevyStable {
    double scale;
    double index;

    friend bool operator==(const LevyStable&, const LevyStable&) = default;
};

// A random step-length law. Construct through the named factories, which
// reject invalid parameters with std::invalid_argument.
class StepDistribution {
public:
    using Kind = std::variant<Uniform, Gaussian, Cauchy, LevyStable>;

    static StepDistribution uniform(double lo, double hi);
    static StepDistribution gaussian(double mu, double sigma);
    static StepDistribution cauchy(double loc, double scale);
    static StepDistribution levy_stable(double scale, double index);

    const Kind& kind() const { return kind_; }
    std::string describe() const;

    friend bool operator==(const StepDistribution&, const StepDistribution&) = default;

private:
    explicit StepDistribution(Kind kind) : kind_(kind) {}
    Kind kind_;
};

// One draw. LevyStable uses the Chambers-Mallows-Stuck transform; index 2
// and index 1 take closed-form branches that are exactly Gaussian and
// Cauchy respectively.
double sample_step(const StepDistribution& dist, Rng& rng);

// Random walk x_k = x_{k-1} + drift + alpha_k * s_k, one independent step
// per coordinate. `scalings` holds either one value (used for every step)
// or exactly `steps` values.
struct WalkConfig {
    std::size_t steps = 1;
    StepDistribution step_dist = StepDistribution::gaussian(0.0, 1.0);
    std::vector<double> scalings{1.0};
    Vector origin{0.0};
    // Deterministic displacement added every step (the v0 of a drifting
    // walk). Zero for a pure random walk.
    double drift = 0.0;

    std::size_t dimension() const { return origin.size(); }
    double scaling(std::size_t step_index) const;
    void validate() const;
};

struct Walk {
    std::vector<Vector> positions;  // x_0 .. x_N
    std::vector<Vector> steps;      // raw draws s_1 .. s_N
};

Walk simulate_walk(const WalkConfig& config, Rng& rng);

// Ensemble of independent 1-D walks; walk i draws from
// Rng(derive_seed(seed, i)). Returns the position sequence of each walk.
std::vector<std::vector<double>> walk_ensemble_1d(const WalkConfig& config,
                                                  std::size_t walks,
                                                  std::uint64_t seed);

struct GaussianComponent {
    double alpha;
    double mu;
    double sigma;
};

struct GaussianCombination {
    double mu_star;
    double sigma_star_sq;
};

// mu* = sum alpha_i mu_i, sigma*^2 = sum alpha_i [sigma_i^2 + (mu* - mu_i)^2].
GaussianCombination combine_gaussians(std::span<const GaussianComponent> components);

class DiffusionModel {
public:
    // D is derived as step_length^2 / (2 * jump_interval).
    DiffusionModel(double drift_speed, std::size_t dimension, double step_length,
                   double jump_interval);

    double drift_speed() const { return drift_speed_; }
    std::size_t dimension() const { return dimension_; }
    double step_length() const { return step_length_; }
    double jump_interval() const { return jump_interval_; }
    double diffusion_coefficient() const { return diffusion_; }

private:
    double drift_speed_;
    std::size_t dimension_;
    double step_length_;
    double jump_interval_;
    double diffusion_;
};

// |v0|^2 t^2 + 2 d D t.
double brownian_variance(const DiffusionModel& model, double t);

// exp(-scale * |k|^index).
double levy_characteristic(double k, double scale, double index);

// Large-|s| asymptote of the stable density,
//   scale * index * Gamma(index) * sin(pi index / 2) / (pi |s|^(1 + index)).
// Only meaningful in the tail; throws std::domain_error at s = 0.
double levy_tail_density(double s, double scale, double index);

// Superdiffusive scaling law t^(3 - index) for 1 <= index <= 2. Unit
// prefactor: this is a growth law, not an absolute variance.
double levy_superdiffusion_variance(double t, double index);

}  // namespace metaopt::stochastic

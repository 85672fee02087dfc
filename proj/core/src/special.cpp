#include "metaopt/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace metaopt {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_gamma(double z) {
    if (z < 0.5) {
        // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
        return std::numbers::pi / (std::sin(std::numbers::pi * z) * lanczos_gamma(1.0 - z));
    }
    z -= 1.0;
    double sum = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        sum += kLanczos[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

}  // namespace

double gamma_function(double z) {
    if (!std::isfinite(z) || z <= 0.0) {
        throw std::domain_error("gamma_function: z must be a finite positive real");
    }
    // Integers are exact factorials up to 23! in double precision.
    if (z == std::floor(z) && z <= 23.0) {
        double f = 1.0;
        for (int k = 2; k < static_cast<int>(z); ++k) {
            f *= k;
        }
        return f;
    }
    return lanczos_gamma(z);
}

double beta_density(double u, double p, double q) {
    if (!(u > 0.0 && u < 1.0)) {
        throw std::domain_error("beta_density: u must lie in (0, 1)");
    }
    if (!(p > 0.0) || !(q > 0.0)) {
        throw std::domain_error("beta_density: p and q must be positive");
    }
    const double norm = gamma_function(p + q) / (gamma_function(p) * gamma_function(q));
    return norm * std::pow(u, p - 1.0) * std::pow(1.0 - u, q - 1.0);
}

}  // namespace metaopt

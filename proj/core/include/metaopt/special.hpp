#pragma once

namespace metaopt {

// Gamma function for z > 0 (Lanczos, g = 7, nine coefficients, with the
// reflection formula below 1/2). Relative error is below 1e-13 on (0, 20].
// Throws std::domain_error for z <= 0 or non-finite z.
double gamma_function(double z);

// Beta(p, q) density Gamma(p+q) / (Gamma(p) Gamma(q)) u^(p-1) (1-u)^(q-1)
// on the open unit interval. Throws std::domain_error outside (0, 1).
double beta_density(double u, double p, double q);

}  // namespace metaopt

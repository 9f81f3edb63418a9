#pragma once

namespace steinbench {

double normal_pdf(double x);
double normal_cdf(double x);
// 1 - Phi(x) without cancellation for large x.
double normal_sf(double x);
double normal_quantile(double u);

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
// Series for x < a + 1, Lentz continued fraction otherwise. Throws
// NonConvergence if the relative tolerance is not reached.
double gamma_q(double a, double x, double rel_tol = 1e-10);

}  // namespace steinbench

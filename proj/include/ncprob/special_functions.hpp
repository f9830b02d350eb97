#pragma once

// Log-gamma (Lanczos), the Beta-function value of the moment-constant
// integral, and a deterministic adaptive Simpson quadrature used to
// cross-check closed forms.

#include <functional>

#include "ncprob/errors.hpp"

namespace ncprob {

// ln Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 coefficients);
// values below 0.5 are lifted through the recursion ln Gamma(x) =
// ln Gamma(x+1) - ln x.
double log_gamma(double x);

// B(p/r, gamma - p/r) = Gamma(p/r) Gamma(gamma - p/r) / Gamma(gamma),
// the closed form of integral_0^inf beta^{(p-r)/r} (1+beta)^{-gamma} dbeta.
// Requires gamma > p/r > 0.
double beta_integral(double p, double r, double gamma);

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  long evaluations = 0;
};

// Adaptive Simpson on [a, b] to absolute tolerance tol. Deterministic
// subdivision order; at most max_evals integrand evaluations, after which a
// ConvergenceError carrying the partial value is thrown.
QuadResult adaptive_quad(const std::function<double(double)>& f, double a, double b, double tol,
                         long max_evals = 1000000);

struct TailQuadResult {
  double value = 0.0;           // integral over [0, cutoff]
  double tail_bound = 0.0;      // analytic bound on the discarded [cutoff, inf)
  double error_estimate = 0.0;  // quadrature error over [0, cutoff]
  double cutoff = 0.0;
  long evaluations = 0;
};

// Quadrature cross-check of beta_integral: integrates the integrand over
// doubling segments until the integrand is below 1e-16 of the accumulated
// value, then bounds the remaining tail analytically.
TailQuadResult beta_integral_quad(double p, double r, double gamma);

}  // namespace ncprob

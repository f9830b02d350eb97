#pragma once

// Concentration bounds for sums of successively independent self-adjoint
// site operators, their MGF building blocks, and verifiers that compare
// exact spectral tails and moments against the closed-form bounds.

#include <optional>
#include <span>
#include <vector>

#include "ncprob/prob_space.hpp"
#include "ncprob/spectral.hpp"
#include "ncprob/special_functions.hpp"
#include "ncprob/verification.hpp"

namespace ncprob {

// ---- scalar building blocks ------------------------------------------------

enum class PhiVariant { Full, Weak };

// Full: (1+a)ln(1+a) - a.  Weak: a ln(1+a) - a (smaller; used by the moment
// inequality route). Requires a >= 0.
double bennett_phi(double a, PhiVariant variant);

// h(alpha; gamma) = -gamma*alpha + ln(1 - gamma + gamma e^alpha) for
// gamma in [0, 1]; the exponent in the two-point MGF bound. Satisfies
// h(0) = h'(0) = 0, h'' <= 1/4, h(alpha) <= alpha^2/8.
double hoeffding_mgf_exponent(double alpha, double gamma);

// ---- Bennett / Bernstein / Prohorov -----------------------------------------

struct BennettParams {
  double r = 2.0;       // moment order, in [1, 2]
  double m_bound = 1.0; // uniform norm bound M > 0
  std::vector<double> site_moment_bounds;  // b_j > 0; tau|x_j|^r <= b_j^r
  double t = 0.0;       // tail level, >= 0

  double moment_total() const;  // b = sum b_j^r
  void validate() const;
  static BennettParams from_total(double r, double m_bound, double b_total, double t);
};

struct BennettBound {
  double rhs = 1.0;
  double lambda_star = 0.0;  // argmin of the Chernoff objective
};

// exp(-(b/M^r) * Phi(t M^{r-1} / b)) with the full Phi.
BennettBound bennett_bound(const BennettParams& params);

// The Chernoff objective exp(-lambda t + (b/M^r)(e^{lambda M} - 1 - lambda M));
// bennett_bound is its value at lambda_star.
double chernoff_objective(const BennettParams& params, double lambda);

enum class RefinedBound { Bernstein, Prohorov };

// Weaker closed forms obtained from lower bounds on Phi:
//   Bernstein: exp(-t^2 M^{r-2} / (2b + (2/3) t M^{r-1}))
//   Prohorov:  exp(-(t/2M) asinh(t M^{r-1} / (2b)))
double bernstein_prohorov_bound(const BennettParams& params, RefinedBound kind);

// ---- spectral-identity checks ----------------------------------------------

enum class MarkovKind { Markov, ExpChebyshev };

// Markov: for positive x and t > 0, tau(chi_[t,inf)(x)) <= tau(x)/t.
// ExpChebyshev: for self-adjoint x, tau(chi_[t,inf)(x)) <= e^{-t} tau(e^x).
VerificationReport markov_chebyshev_check(const TracialSpace& space,
                                          const SelfAdjointOperator& x, double t,
                                          MarkovKind kind, const ToleranceConfig& cfg = {});

// tau(e^{z1+z2}) <= tau(e^{z1} e^{z2})
VerificationReport golden_thompson_check(const TracialSpace& space,
                                         const SelfAdjointOperator& z1,
                                         const SelfAdjointOperator& z2,
                                         double slack_tol = 1e-10);

// ---- MGF steps ---------------------------------------------------------------

// E(e^{lambda x}) <= exp((b_site^r / M^r)(e^{lambda M} - 1 - lambda M)) * 1
// for a site operator with E(x) <= 0, E|x|^r <= b_site^r, ||x|| <= M.
// Violated hypotheses raise HypothesisError naming the failing condition.
VerificationReport bennett_mgf_step_check(const TracialSpace& space, const SiteOperator& x,
                                          double lambda, double r, double m_bound,
                                          double site_moment_bound,
                                          const ToleranceConfig& cfg = {});

// E(e^{s(x - mu)}) <= exp(s^2 (b - a)^2 / 8) * 1 for a site operator with
// a*1 <= x <= b*1 and E(x) = mu * 1.
VerificationReport hoeffding_mgf_check(const TracialSpace& space, const SiteOperator& x,
                                       double s, double a, double b, double mu,
                                       const ToleranceConfig& cfg = {});

// ---- tail verifiers -----------------------------------------------------------

// Tightest scalar b with E(|x|^r) <= b^r * 1, i.e. the top eigenvalue of the
// conditional r-th moment, raised to 1/r. For a scalar conditioned-on factor
// this is the local trace moment.
double site_moment_bound(const TracialSpace& space, const SiteOperator& x, double r,
                         const ToleranceConfig& cfg = {});

// One report per grid point: tau(chi_[t,inf)(sum x_j)) <= bennett rhs + slack.
std::vector<VerificationReport> bennett_verify_points(const TracialSpace& space,
                                                      const std::vector<SiteOperator>& xs,
                                                      const BennettParams& params,
                                                      std::span<const double> t_grid,
                                                      const ToleranceConfig& cfg = {});
VerificationReport bennett_verify(const TracialSpace& space, const std::vector<SiteOperator>& xs,
                                  const BennettParams& params, std::span<const double> t_grid,
                                  const ToleranceConfig& cfg = {});

struct HoeffdingParams {
  std::vector<double> lower;  // a_j
  std::vector<double> upper;  // b_j
  double mu = 0.0;            // common site mean, >= 0 under the stated hypotheses
  double t = 0.0;
  bool allow_negative_mu = false;  // outside the stated hypotheses; flagged in reports

  double spread_squared() const;  // D = sum (b_j - a_j)^2
  void validate() const;
};

struct HoeffdingBoundValue {
  double rhs = 2.0;
  double lambda_star = 0.0;
};

// 2 exp(-2 t^2 / D)
HoeffdingBoundValue hoeffding_bound(const HoeffdingParams& params);

// Two-sided tail of sum x_j - n mu against the Hoeffding bound, one report
// per grid point. The left side is the exact sum of the two one-sided tails;
// its agreement with the modulus route is recorded in the witness.
std::vector<VerificationReport> hoeffding_verify_points(const TracialSpace& space,
                                                        const std::vector<SiteOperator>& xs,
                                                        const HoeffdingParams& params,
                                                        std::span<const double> t_grid,
                                                        const ToleranceConfig& cfg = {});
VerificationReport hoeffding_verify(const TracialSpace& space,
                                    const std::vector<SiteOperator>& xs,
                                    const HoeffdingParams& params,
                                    std::span<const double> t_grid,
                                    const ToleranceConfig& cfg = {});

// Bounded-difference bound vs Bernstein form in the normalization b = n,
// M = 1, r = 2: exp(-t^2/2n) <= exp(-t^2/(2n + 2t/3)), strict for t > 0.
VerificationReport comparison_check(int n, std::span<const double> t_grid, double tol = 1e-12);

// ---- truncation route to the moment inequality --------------------------------

// exp(-(t/L)(ln(1 + t L^{r-1} / B) - 1))
double truncated_tail_factor(double t, double L, double B, double r);

// factor + sum of site tails at level s
double truncated_tail_bound(double t, double s, double L, double B, double r,
                            std::span<const double> site_tails);

// Grid check that the factor is nonincreasing in L.
VerificationReport check_tail_factor_decreasing(double t, double B, double r,
                                                std::span<const double> L_grid,
                                                double tol = 1e-12);

struct RosenthalConstant {
  double value = 0.0;
  double gamma_used = 0.0;
  double diagonal_term = 0.0;  // gamma^p
  double moment_term = 0.0;    // (2p/r) gamma^{p(r-1)/r} e^gamma B(p/r, gamma - p/r)
};

// C(p, r) = max(gamma^p, (2p/r) gamma^{p(r-1)/r} e^gamma B(p/r, gamma-p/r))
// for any admissible gamma > p/r; defaults to gamma = p/r + 1.
RosenthalConstant rosenthal_constant(double p, double r, std::optional<double> gamma = {});

// ||sum x_j||_p^p <= C(p,r) (sum ||x_j||_p^p + (sum ||x_j||^r)^{p/r})
// for centered successively independent self-adjoint sites.
VerificationReport rosenthal_verify(const TracialSpace& space,
                                    const std::vector<SiteOperator>& xs, double p, double r,
                                    std::optional<double> gamma = {},
                                    const ToleranceConfig& cfg = {});

// ---- classical scalar corollaries ----------------------------------------------

// 2 exp(-n eps^2 / (2 + 2 eps / 3)): deviation of a +-1 average.
double classical_bernstein_bound(int n, double eps);

// 2 exp(-2 n t^2 / (b - a)^2): deviation of a bounded-sample average.
double classical_hoeffding_bound(int n, double a, double b, double t);

// sqrt(ln(2/eps) / (2n)): accuracy achievable at confidence 1 - eps for
// [0, 1]-valued samples; inverts classical_hoeffding_bound.
double sample_complexity_bound(int n, double eps);

struct MinimizedConstant {
  double value = 0.0;
  double gamma_star = 0.0;
  double residual = 0.0;  // final bracket width of the golden-section search
};

// Minimizes rosenthal_constant over gamma by golden-section search on
// ln gamma in [ln(p/r) + 1e-3, ln(p/r) + 8].
MinimizedConstant commutative_rosenthal_constant(double p, double r);

// ---- scalar Bernoulli oracles ---------------------------------------------------

// Exact P(sum of n independent +-1 >= thr) by binomial enumeration.
double bernoulli_tail_exact_one_sided(int n, double thr);
// Exact P(|sum| >= thr).
double bernoulli_tail_exact_two_sided(int n, double thr);
// Monte Carlo P(|sum| >= thr) with the library's deterministic generator.
double bernoulli_tail_mc_two_sided(int n, double thr, long samples, uint64_t seed);
// Monte Carlo P(sum >= thr).
double bernoulli_tail_mc_one_sided(int n, double thr, long samples, uint64_t seed);

}  // namespace ncprob

#include "ncprob/inequalities.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "ncprob/ensembles.hpp"

namespace ncprob {

namespace {

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double lambda_min(const SpectralDecomposition& dec) { return dec.eigenvalues.front(); }
double lambda_max(const SpectralDecomposition& dec) { return dec.eigenvalues.back(); }

double mean_of(const std::vector<double>& v, const std::function<double(double)>& f) {
  double s = 0.0;
  for (double x : v) s += f(x);
  return s / static_cast<double>(v.size());
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw ParamError(std::string(name) + " must be finite");
}

void check_sites(const TracialSpace& space, const std::vector<SiteOperator>& xs) {
  if (xs.empty()) throw ParamError("need at least one site operator");
  std::vector<int> seen;
  for (const auto& x : xs) {
    if (x.site < 1 || x.site > space.num_sites())
      throw SiteError("site index " + std::to_string(x.site) + " out of range");
    if (std::find(seen.begin(), seen.end(), x.site) != seen.end())
      throw SiteError("site " + std::to_string(x.site) + " appears twice in the sum");
    seen.push_back(x.site);
  }
}

// Largest eigenvalue of the d0 x d0 conditional expectation of a site-local
// hermitian operator. The conditional expectation of a hermitian input is
// hermitian up to rounding, and for centered sites the result is the
// near-zero matrix, where a defect check relative to the entry scale is
// meaningless; symmetrize instead of validating.
double ce_lambda_max(const TracialSpace& space, int site, const Operator& local) {
  Operator ce = conditional_expectation_site(space, SiteOperator{site, local});
  Operator sym = 0.5 * (ce + ce.adjoint());
  return lambda_max(eig_hermitian(selfadjoint_unchecked(std::move(sym))));
}

}  // namespace

// ---- scalar building blocks ------------------------------------------------

double bennett_phi(double a, PhiVariant variant) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw ParamError("phi requires a >= 0");
  double l = std::log1p(a);
  return variant == PhiVariant::Full ? (1.0 + a) * l - a : a * l - a;
}

double hoeffding_mgf_exponent(double alpha, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ParamError("mgf exponent requires gamma in [0,1]");
  require_finite(alpha, "alpha");
  if (alpha > 0.0) {
    // ln(1 - g + g e^a) = a + ln(g + (1-g) e^{-a}), stable for large a
    return (1.0 - gamma) * alpha + std::log(gamma + (1.0 - gamma) * std::exp(-alpha));
  }
  return -gamma * alpha + std::log1p(gamma * std::expm1(alpha));
}

// ---- Bennett / Bernstein / Prohorov -----------------------------------------

double BennettParams::moment_total() const {
  double b = 0.0;
  for (double bj : site_moment_bounds) b += std::pow(bj, r);
  return b;
}

void BennettParams::validate() const {
  if (!(r >= 1.0 && r <= 2.0)) throw ParamError("moment order r must lie in [1, 2]");
  if (!(m_bound > 0.0) || !std::isfinite(m_bound)) throw ParamError("m_bound must be > 0");
  if (site_moment_bounds.empty()) throw ParamError("need at least one site moment bound");
  for (double bj : site_moment_bounds)
    if (!(bj > 0.0) || !std::isfinite(bj)) throw ParamError("site moment bounds must be > 0");
  if (!(t >= 0.0) || !std::isfinite(t)) throw ParamError("tail level t must be >= 0");
}

BennettParams BennettParams::from_total(double r, double m_bound, double b_total, double t) {
  if (!(b_total > 0.0)) throw ParamError("total moment must be > 0");
  BennettParams p;
  p.r = r;
  p.m_bound = m_bound;
  p.site_moment_bounds = {std::pow(b_total, 1.0 / r)};
  p.t = t;
  p.validate();
  return p;
}

BennettBound bennett_bound(const BennettParams& params) {
  params.validate();
  if (params.t == 0.0) return {1.0, 0.0};
  double b = params.moment_total();
  double m = params.m_bound;
  double alpha = params.t * std::pow(m, params.r - 1.0) / b;
  BennettBound out;
  out.rhs = std::exp(-(b / std::pow(m, params.r)) * bennett_phi(alpha, PhiVariant::Full));
  out.lambda_star = std::log1p(alpha) / m;
  return out;
}

double chernoff_objective(const BennettParams& params, double lambda) {
  params.validate();
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw ParamError("lambda must be >= 0");
  double b = params.moment_total();
  double m = params.m_bound;
  double e = std::expm1(lambda * m) - lambda * m;
  return std::exp(-lambda * params.t + (b / std::pow(m, params.r)) * e);
}

double bernstein_prohorov_bound(const BennettParams& params, RefinedBound kind) {
  params.validate();
  if (params.t == 0.0) return 1.0;
  double b = params.moment_total();
  double m = params.m_bound;
  double alpha = params.t * std::pow(m, params.r - 1.0) / b;
  double scale = b / std::pow(m, params.r);
  double exponent = kind == RefinedBound::Bernstein
                        ? scale * alpha * alpha / (2.0 + 2.0 * alpha / 3.0)
                        : scale * (alpha / 2.0) * std::asinh(alpha / 2.0);
  return std::exp(-exponent);
}

// ---- spectral-identity checks ----------------------------------------------

VerificationReport markov_chebyshev_check(const TracialSpace& space,
                                          const SelfAdjointOperator& x, double t,
                                          MarkovKind kind, const ToleranceConfig& cfg) {
  if (x.dim() != space.total_dim()) throw DimensionError("operator does not live on the space");
  auto dec = eig_hermitian(x);
  double lhs = tail_from_eigenvalues(dec.eigenvalues, t, cfg.eig_tol);
  double rhs;
  std::map<std::string, double> witness;
  std::string suite;
  if (kind == MarkovKind::Markov) {
    if (!(t > 0.0)) throw ParamError("plain tail bound needs t > 0");
    if (lambda_min(dec) < -cfg.psd_tol)
      throw PositivityError("plain tail bound needs a positive operator; min eigenvalue " +
                            fmt_g(lambda_min(dec)));
    double mean = mean_of(dec.eigenvalues, [](double v) { return v; });
    rhs = mean / t;
    witness["trace"] = mean;
    suite = "markov";
  } else {
    require_finite(t, "t");
    double mgf = mean_of(dec.eigenvalues, [](double v) { return std::exp(v); });
    rhs = std::exp(-t) * mgf;
    witness["exp_moment"] = mgf;
    suite = "exp_chebyshev";
  }
  return VerificationReport::make(suite, lhs, rhs, cfg.slack_tol,
                                  {{"t", t}, {"dim", static_cast<double>(x.dim())}},
                                  std::move(witness));
}

VerificationReport golden_thompson_check(const TracialSpace& space,
                                         const SelfAdjointOperator& z1,
                                         const SelfAdjointOperator& z2, double slack_tol) {
  if (z1.dim() != space.total_dim() || z2.dim() != space.total_dim())
    throw DimensionError("operators do not live on the space");
  Operator both = matrix_exp(z1 + z2);
  Operator prod = matrix_exp(z1) * matrix_exp(z2);
  Complex rhs = space.trace(prod);
  double lhs = space.trace_re(both);
  return VerificationReport::make(
      "golden_thompson", lhs, rhs.real(), slack_tol,
      {{"dim", static_cast<double>(z1.dim())}},
      {{"rhs_imag", rhs.imag()}, {"lhs_trace", lhs}});
}

// ---- MGF steps ---------------------------------------------------------------

VerificationReport bennett_mgf_step_check(const TracialSpace& space, const SiteOperator& x,
                                          double lambda, double r, double m_bound,
                                          double site_moment_bound,
                                          const ToleranceConfig& cfg) {
  if (!(r >= 1.0 && r <= 2.0)) throw ParamError("moment order r must lie in [1, 2]");
  if (!(m_bound > 0.0)) throw ParamError("m_bound must be > 0");
  if (!(site_moment_bound > 0.0)) throw ParamError("site moment bound must be > 0");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw ParamError("lambda must be >= 0");

  SelfAdjointOperator local(x.local, cfg.sym_tol);
  auto dec = eig_hermitian(local);

  double norm = std::max(std::abs(lambda_min(dec)), std::abs(lambda_max(dec)));
  if (norm > m_bound + cfg.eig_tol)
    throw HypothesisError("||x|| = " + fmt_g(norm) + " exceeds the uniform bound " +
                          fmt_g(m_bound));

  double mean_top = ce_lambda_max(space, x.site, x.local);
  if (mean_top > cfg.psd_tol)
    throw HypothesisError("conditional mean has positive part " + fmt_g(mean_top) +
                          "; requires E(x) <= 0");

  Operator mom = dec.apply([r](double v) { return std::pow(std::abs(v), r); });
  double mom_top = ce_lambda_max(space, x.site, mom);
  double br = std::pow(site_moment_bound, r);
  if (mom_top > br + cfg.psd_tol)
    throw HypothesisError("conditional r-th moment " + fmt_g(mom_top) +
                          " exceeds the stated bound " + fmt_g(br));

  Operator mgf = dec.apply([lambda](double v) { return std::exp(lambda * v); });
  double lhs = ce_lambda_max(space, x.site, mgf);
  double step = std::expm1(lambda * m_bound) - lambda * m_bound;
  double rhs = std::exp(br / std::pow(m_bound, r) * step);
  return VerificationReport::make(
      "bennett.mgf_step", lhs, rhs, cfg.slack_tol,
      {{"lambda", lambda}, {"r", r}, {"m_bound", m_bound}, {"b_site", site_moment_bound},
       {"site", static_cast<double>(x.site)}},
      {{"mean_top", mean_top}, {"moment_top", mom_top}, {"norm", norm}});
}

VerificationReport hoeffding_mgf_check(const TracialSpace& space, const SiteOperator& x,
                                       double s, double a, double b, double mu,
                                       const ToleranceConfig& cfg) {
  if (!(b > a)) throw ParamError("needs a < b");
  require_finite(s, "s");
  require_finite(mu, "mu");

  SelfAdjointOperator local(x.local, cfg.sym_tol);
  auto dec = eig_hermitian(local);
  if (lambda_min(dec) < a - cfg.eig_tol || lambda_max(dec) > b + cfg.eig_tol)
    throw HypothesisError("spectrum [" + fmt_g(lambda_min(dec)) + ", " + fmt_g(lambda_max(dec)) +
                          "] leaves the stated interval [" + fmt_g(a) + ", " + fmt_g(b) + "]");

  Operator ce = conditional_expectation_site(space, x);
  double mean_gap = max_entry_distance(ce, mu * Operator::identity(ce.dim()));
  if (mean_gap > cfg.eig_tol)
    throw HypothesisError("conditional mean is not mu*1; max entry gap " + fmt_g(mean_gap));

  Operator mgf = dec.apply([s, mu](double v) { return std::exp(s * (v - mu)); });
  double lhs = ce_lambda_max(space, x.site, mgf);
  double rhs = std::exp(s * s * (b - a) * (b - a) / 8.0);
  return VerificationReport::make(
      "hoeffding.mgf_step", lhs, rhs, cfg.slack_tol,
      {{"s", s}, {"a", a}, {"b", b}, {"mu", mu}, {"site", static_cast<double>(x.site)}},
      {{"mean_gap", mean_gap}});
}

// ---- tail verifiers -----------------------------------------------------------

double site_moment_bound(const TracialSpace& space, const SiteOperator& x, double r,
                         const ToleranceConfig& cfg) {
  if (!(r >= 1.0 && r <= 2.0)) throw ParamError("moment order r must lie in [1, 2]");
  SelfAdjointOperator local(x.local, cfg.sym_tol);
  auto dec = eig_hermitian(local);
  Operator mom = dec.apply([r](double v) { return std::pow(std::abs(v), r); });
  double top = std::max(ce_lambda_max(space, x.site, mom), 0.0);
  return std::pow(top, 1.0 / r);
}

std::vector<VerificationReport> bennett_verify_points(const TracialSpace& space,
                                                      const std::vector<SiteOperator>& xs,
                                                      const BennettParams& params,
                                                      std::span<const double> t_grid,
                                                      const ToleranceConfig& cfg) {
  params.validate();
  check_sites(space, xs);
  if (xs.size() != params.site_moment_bounds.size())
    throw ParamError("one moment bound per site operator required");
  if (t_grid.empty()) throw ParamError("empty t grid");

  for (size_t j = 0; j < xs.size(); ++j) {
    SelfAdjointOperator local(xs[j].local, cfg.sym_tol);
    auto dec = eig_hermitian(local);
    double norm = std::max(std::abs(lambda_min(dec)), std::abs(lambda_max(dec)));
    if (norm > params.m_bound + cfg.eig_tol)
      throw HypothesisError("site " + std::to_string(xs[j].site) + ": ||x|| = " + fmt_g(norm) +
                            " exceeds the uniform bound " + fmt_g(params.m_bound));
    double mean_top = ce_lambda_max(space, xs[j].site, xs[j].local);
    if (mean_top > cfg.psd_tol)
      throw HypothesisError("site " + std::to_string(xs[j].site) +
                            ": conditional mean has positive part " + fmt_g(mean_top));
    double r = params.r;
    Operator mom = dec.apply([r](double v) { return std::pow(std::abs(v), r); });
    double mom_top = ce_lambda_max(space, xs[j].site, mom);
    double br = std::pow(params.site_moment_bounds[j], params.r);
    if (mom_top > br + cfg.psd_tol)
      throw HypothesisError("site " + std::to_string(xs[j].site) + ": conditional r-th moment " +
                            fmt_g(mom_top) + " exceeds " + fmt_g(br));
  }

  SelfAdjointOperator sum(embed_sum(space, xs), cfg.sym_tol);
  auto dec = eig_hermitian(sum);
  double b_total = params.moment_total();

  std::vector<VerificationReport> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!(t >= 0.0)) throw ParamError("tail levels must be >= 0");
    double t_eff = nudge_off_spectrum(t, dec.eigenvalues, cfg.eig_tol);
    BennettParams pt = params;
    pt.t = t_eff;
    BennettBound bound = bennett_bound(pt);
    double lhs = tail_from_eigenvalues(dec.eigenvalues, t_eff, cfg.eig_tol);
    out.push_back(VerificationReport::make(
        "bennett.tail", lhs, bound.rhs, cfg.slack_tol,
        {{"t", t_eff}, {"r", params.r}, {"m_bound", params.m_bound}, {"b_total", b_total},
         {"n_sites", static_cast<double>(xs.size())}, {"lambda_star", bound.lambda_star}},
        {{"t_input", t}}));
  }
  return out;
}

VerificationReport bennett_verify(const TracialSpace& space, const std::vector<SiteOperator>& xs,
                                  const BennettParams& params, std::span<const double> t_grid,
                                  const ToleranceConfig& cfg) {
  return worst_of("bennett", bennett_verify_points(space, xs, params, t_grid, cfg));
}

double HoeffdingParams::spread_squared() const {
  double d = 0.0;
  for (size_t j = 0; j < lower.size(); ++j) {
    double w = upper[j] - lower[j];
    d += w * w;
  }
  return d;
}

void HoeffdingParams::validate() const {
  if (lower.empty() || lower.size() != upper.size())
    throw ParamError("lower/upper bounds must be nonempty and paired");
  for (size_t j = 0; j < lower.size(); ++j) {
    require_finite(lower[j], "lower bound");
    require_finite(upper[j], "upper bound");
    if (!(lower[j] <= upper[j])) throw ParamError("needs lower <= upper at every site");
  }
  if (!(spread_squared() > 0.0)) throw ParamError("total spread must be positive");
  if (!(t >= 0.0) || !std::isfinite(t)) throw ParamError("tail level t must be >= 0");
  require_finite(mu, "mu");
}

HoeffdingBoundValue hoeffding_bound(const HoeffdingParams& params) {
  params.validate();
  double d = params.spread_squared();
  HoeffdingBoundValue out;
  out.rhs = 2.0 * std::exp(-2.0 * params.t * params.t / d);
  out.lambda_star = 4.0 * params.t / d;
  return out;
}

std::vector<VerificationReport> hoeffding_verify_points(const TracialSpace& space,
                                                        const std::vector<SiteOperator>& xs,
                                                        const HoeffdingParams& params,
                                                        std::span<const double> t_grid,
                                                        const ToleranceConfig& cfg) {
  params.validate();
  check_sites(space, xs);
  if (xs.size() != params.lower.size())
    throw ParamError("one bound pair per site operator required");
  if (t_grid.empty()) throw ParamError("empty t grid");
  if (params.mu < 0.0 && !params.allow_negative_mu)
    throw HypothesisError("stated hypotheses need mu >= 0; set allow_negative_mu to override");

  for (size_t j = 0; j < xs.size(); ++j) {
    SelfAdjointOperator local(xs[j].local, cfg.sym_tol);
    auto dec = eig_hermitian(local);
    if (lambda_min(dec) < params.lower[j] - cfg.eig_tol ||
        lambda_max(dec) > params.upper[j] + cfg.eig_tol)
      throw HypothesisError("site " + std::to_string(xs[j].site) + ": spectrum [" +
                            fmt_g(lambda_min(dec)) + ", " + fmt_g(lambda_max(dec)) +
                            "] leaves [" + fmt_g(params.lower[j]) + ", " +
                            fmt_g(params.upper[j]) + "]");
    Operator ce = conditional_expectation_site(space, xs[j]);
    double gap = max_entry_distance(ce, params.mu * Operator::identity(ce.dim()));
    if (gap > cfg.eig_tol)
      throw HypothesisError("site " + std::to_string(xs[j].site) +
                            ": conditional mean is not mu*1; max entry gap " + fmt_g(gap));
  }

  double n = static_cast<double>(xs.size());
  Operator centered = embed_sum(space, xs) - Complex(n * params.mu, 0.0) * space.identity();
  SelfAdjointOperator z(centered, cfg.sym_tol);
  auto dec = eig_hermitian(z);
  std::vector<double> abs_eigs(dec.eigenvalues.size());
  for (size_t k = 0; k < abs_eigs.size(); ++k) abs_eigs[k] = std::abs(dec.eigenvalues[k]);
  std::sort(abs_eigs.begin(), abs_eigs.end());
  double d_total = params.spread_squared();

  std::vector<VerificationReport> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!(t > 0.0)) throw ParamError("two-sided tail levels must be > 0");
    double t_eff = nudge_off_spectrum(t, abs_eigs, cfg.eig_tol);
    double up = tail_from_eigenvalues(dec.eigenvalues, t_eff, cfg.eig_tol);
    double down = 0.0;
    for (double v : dec.eigenvalues)
      if (v <= -t_eff + cfg.eig_tol) down += 1.0;
    down /= static_cast<double>(dec.eigenvalues.size());
    double lhs = up + down;
    double modulus_tail = tail_from_eigenvalues(abs_eigs, t_eff, cfg.eig_tol);
    HoeffdingParams pt = params;
    pt.t = t_eff;
    HoeffdingBoundValue bound = hoeffding_bound(pt);
    std::map<std::string, double> ps = {{"t", t_eff},
                                        {"n_sites", n},
                                        {"mu", params.mu},
                                        {"spread_sq", d_total},
                                        {"lambda_star", bound.lambda_star}};
    if (params.mu < 0.0) ps["outside_hypotheses"] = 1.0;
    out.push_back(VerificationReport::make(
        "hoeffding.tail", lhs, bound.rhs, cfg.slack_tol, std::move(ps),
        {{"t_input", t}, {"tail_up", up}, {"tail_down", down},
         {"modulus_gap", std::abs(lhs - modulus_tail)}}));
  }
  return out;
}

VerificationReport hoeffding_verify(const TracialSpace& space,
                                    const std::vector<SiteOperator>& xs,
                                    const HoeffdingParams& params,
                                    std::span<const double> t_grid,
                                    const ToleranceConfig& cfg) {
  return worst_of("hoeffding", hoeffding_verify_points(space, xs, params, t_grid, cfg));
}

VerificationReport comparison_check(int n, std::span<const double> t_grid, double tol) {
  if (n < 1) throw ParamError("n must be >= 1");
  if (t_grid.empty()) throw ParamError("empty t grid");
  double worst = -std::numeric_limits<double>::infinity();
  double min_strict = std::numeric_limits<double>::infinity();
  double worst_t = 0.0;
  for (double t : t_grid) {
    if (!(t >= 0.0)) throw ParamError("tail levels must be >= 0");
    double nn = static_cast<double>(n);
    double sharp = std::exp(-t * t / (2.0 * nn));
    double moment_route = std::exp(-t * t / (2.0 * nn + 2.0 * t / 3.0));
    double diff = sharp - moment_route;
    if (diff > worst) {
      worst = diff;
      worst_t = t;
    }
    if (t > 0.0) min_strict = std::min(min_strict, moment_route - sharp);
  }
  return VerificationReport::make(
      "comparison", worst, 0.0, tol,
      {{"n", static_cast<double>(n)}, {"grid_points", static_cast<double>(t_grid.size())}},
      {{"worst_t", worst_t}, {"min_strict_margin", min_strict}});
}

// ---- truncation route ---------------------------------------------------------

double truncated_tail_factor(double t, double L, double B, double r) {
  if (!(t > 0.0) || !(L > 0.0) || !(B > 0.0)) throw ParamError("t, L, B must be > 0");
  if (!(r >= 1.0 && r <= 2.0)) throw ParamError("moment order r must lie in [1, 2]");
  double u = t * std::pow(L, r - 1.0) / B;
  return std::exp(-(t / L) * (std::log1p(u) - 1.0));
}

double truncated_tail_bound(double t, double s, double L, double B, double r,
                            std::span<const double> site_tails) {
  if (!(s > 0.0)) throw ParamError("truncation level s must be > 0");
  double tails = 0.0;
  for (double p : site_tails) {
    if (!(p >= 0.0)) throw ParamError("site tail probabilities must be >= 0");
    tails += p;
  }
  return truncated_tail_factor(t, L, B, r) + tails;
}

VerificationReport check_tail_factor_decreasing(double t, double B, double r,
                                                std::span<const double> L_grid, double tol) {
  if (L_grid.size() < 2) throw ParamError("need at least two grid points");
  for (size_t k = 1; k < L_grid.size(); ++k)
    if (!(L_grid[k] > L_grid[k - 1])) throw ParamError("L grid must be strictly increasing");
  double worst = -std::numeric_limits<double>::infinity();
  double best_drop = std::numeric_limits<double>::infinity();
  double prev = truncated_tail_factor(t, L_grid[0], B, r);
  for (size_t k = 1; k < L_grid.size(); ++k) {
    double cur = truncated_tail_factor(t, L_grid[k], B, r);
    worst = std::max(worst, cur - prev);
    best_drop = std::min(best_drop, prev - cur);
    prev = cur;
  }
  return VerificationReport::make(
      "truncation.monotone", worst, 0.0, tol,
      {{"t", t}, {"B", B}, {"r", r}, {"grid_points", static_cast<double>(L_grid.size())}},
      {{"L_min", L_grid.front()}, {"L_max", L_grid.back()}, {"min_drop", best_drop}});
}

RosenthalConstant rosenthal_constant(double p, double r, std::optional<double> gamma) {
  if (!(p >= 2.0) || !std::isfinite(p)) throw ParamError("p must be >= 2");
  if (!(r >= 1.0 && r <= 2.0)) throw ParamError("moment order r must lie in [1, 2]");
  double g = gamma.value_or(p / r + 1.0);
  if (!(g > p / r)) throw ParamError("gamma must exceed p/r");
  RosenthalConstant out;
  out.gamma_used = g;
  out.diagonal_term = std::pow(g, p);
  out.moment_term = (2.0 * p / r) * std::pow(g, p * (r - 1.0) / r) * std::exp(g) *
                    beta_integral(p, r, g);
  out.value = std::max(out.diagonal_term, out.moment_term);
  return out;
}

VerificationReport rosenthal_verify(const TracialSpace& space,
                                    const std::vector<SiteOperator>& xs, double p, double r,
                                    std::optional<double> gamma, const ToleranceConfig& cfg) {
  check_sites(space, xs);
  RosenthalConstant c = rosenthal_constant(p, r, gamma);

  double sum_pp = 0.0;    // sum of tau|x_j|^p
  double sum_norm = 0.0;  // sum of ||x_j||^r
  for (const auto& x : xs) {
    SelfAdjointOperator local(x.local, cfg.sym_tol);
    auto dec = eig_hermitian(local);
    double mean_gap = max_entry_distance(conditional_expectation_site(space, x),
                                         Operator(space.subalgebra_dim()));
    if (mean_gap > cfg.eig_tol)
      throw HypothesisError("site " + std::to_string(x.site) +
                            ": conditional mean is not zero; max entry " + fmt_g(mean_gap));
    sum_pp += mean_of(dec.eigenvalues, [p](double v) { return std::pow(std::abs(v), p); });
    double norm = std::max(std::abs(lambda_min(dec)), std::abs(lambda_max(dec)));
    sum_norm += std::pow(norm, r);
  }

  SelfAdjointOperator sum(embed_sum(space, xs), cfg.sym_tol);
  auto dec = eig_hermitian(sum);
  double lhs = mean_of(dec.eigenvalues, [p](double v) { return std::pow(std::abs(v), p); });
  double rhs = c.value * (sum_pp + std::pow(sum_norm, p / r));
  return VerificationReport::make(
      "rosenthal.moment", lhs, rhs, cfg.slack_tol * std::abs(rhs),
      {{"p", p}, {"r", r}, {"gamma", c.gamma_used}, {"constant", c.value},
       {"n_sites", static_cast<double>(xs.size())}},
      {{"sum_schatten_pp", sum_pp}, {"sum_norm_r", sum_norm}});
}

// ---- classical scalar corollaries ----------------------------------------------

double classical_bernstein_bound(int n, double eps) {
  if (n < 1) throw ParamError("n must be >= 1");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ParamError("eps must be > 0");
  double nn = static_cast<double>(n);
  return 2.0 * std::exp(-nn * eps * eps / (2.0 + 2.0 * eps / 3.0));
}

double classical_hoeffding_bound(int n, double a, double b, double t) {
  if (n < 1) throw ParamError("n must be >= 1");
  if (!(b > a)) throw ParamError("needs a < b");
  if (!(t >= 0.0) || !std::isfinite(t)) throw ParamError("t must be >= 0");
  double nn = static_cast<double>(n);
  return 2.0 * std::exp(-2.0 * nn * t * t / ((b - a) * (b - a)));
}

double sample_complexity_bound(int n, double eps) {
  if (n < 1) throw ParamError("n must be >= 1");
  if (!(eps > 0.0 && eps < 2.0)) throw ParamError("eps must lie in (0, 2)");
  return std::sqrt(std::log(2.0 / eps) / (2.0 * static_cast<double>(n)));
}

MinimizedConstant commutative_rosenthal_constant(double p, double r) {
  if (!(p >= 2.0) || !std::isfinite(p)) throw ParamError("p must be >= 2");
  if (!(r >= 1.0 && r <= 2.0)) throw ParamError("moment order r must lie in [1, 2]");
  auto value_at = [p, r](double u) { return rosenthal_constant(p, r, std::exp(u)).value; };
  double a = std::log(p / r) + 1e-3;
  double b = std::log(p / r) + 8.0;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = value_at(x1);
  double f2 = value_at(x2);
  while (b - a > 1e-8) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = value_at(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = value_at(x2);
    }
  }
  MinimizedConstant out;
  out.gamma_star = std::exp(0.5 * (a + b));
  out.value = rosenthal_constant(p, r, out.gamma_star).value;
  out.residual = b - a;
  return out;
}

// ---- scalar Bernoulli oracles ---------------------------------------------------

namespace {

double binomial_mass(int n, int m) {
  // C(n, m) / 2^n through log-gamma, exact to ~1e-15 relative
  double lg = std::lgamma(n + 1.0) - std::lgamma(m + 1.0) - std::lgamma(n - m + 1.0);
  return std::exp(lg - n * std::numbers::ln2);
}

double bernoulli_tail_exact(int n, double thr, bool two_sided) {
  if (n < 1) throw ParamError("n must be >= 1");
  double total = 0.0;
  for (int m = 0; m <= n; ++m) {
    double s = 2.0 * m - n;
    bool in = two_sided ? std::abs(s) >= thr : s >= thr;
    if (in) total += binomial_mass(n, m);
  }
  return std::min(total, 1.0);
}

double bernoulli_tail_mc(int n, double thr, long samples, uint64_t seed, bool two_sided) {
  if (n < 1 || n > 128) throw ParamError("n must lie in [1, 128]");
  if (samples < 1) throw ParamError("samples must be >= 1");
  RngStream rng(seed);
  int full_words = n / 64;
  int rest = n % 64;
  uint64_t rest_mask = rest == 0 ? 0 : (~uint64_t{0} >> (64 - rest));
  long hits = 0;
  for (long i = 0; i < samples; ++i) {
    int ones = 0;
    for (int w = 0; w < full_words; ++w) ones += std::popcount(rng.next_u64());
    if (rest > 0) ones += std::popcount(rng.next_u64() & rest_mask);
    double s = 2.0 * ones - n;
    bool in = two_sided ? std::abs(s) >= thr : s >= thr;
    if (in) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace

double bernoulli_tail_exact_one_sided(int n, double thr) {
  return bernoulli_tail_exact(n, thr, false);
}

double bernoulli_tail_exact_two_sided(int n, double thr) {
  return bernoulli_tail_exact(n, thr, true);
}

double bernoulli_tail_mc_two_sided(int n, double thr, long samples, uint64_t seed) {
  return bernoulli_tail_mc(n, thr, samples, seed, true);
}

double bernoulli_tail_mc_one_sided(int n, double thr, long samples, uint64_t seed) {
  return bernoulli_tail_mc(n, thr, samples, seed, false);
}

}  // namespace ncprob

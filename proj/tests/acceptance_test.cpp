// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Tolerances are pinned here, not read from anywhere else.

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "ncprob/ensembles.hpp"
#include "ncprob/inequalities.hpp"
#include "ncprob/projections.hpp"
#include "ncprob/prob_space.hpp"
#include "ncprob/spectral.hpp"
#include "ncprob/special_functions.hpp"
#include "ncprob/suites.hpp"

using namespace ncprob;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int k = 0; k < n; ++k) g[k] = lo + (hi - lo) * k / (n - 1);
  return g;
}

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> g(n);
  double a = std::log(lo), b = std::log(hi);
  for (int k = 0; k < n; ++k) g[k] = std::exp(a + (b - a) * k / (n - 1));
  return g;
}

// 1. conditional expectation: positivity, contraction, module property,
//    trace preservation, idempotence, traciality
Outcome criterion_ce_axioms() {
  double worst = 0.0;
  for (const auto& dims : {std::vector<int>{1, 2, 2, 2}, std::vector<int>{2, 2, 3}}) {
    TracialSpace space(dims);
    auto rep = check_ce_axioms(space, 100, 20260816, 1e-10);
    if (!rep.pass) return {false, "axiom violation " + fmt("%.3g", rep.lhs)};
    worst = std::max(worst, rep.lhs);
  }
  return {true, "2 spaces, 100 samples each, max violation " + fmt("%.2e", worst) + " <= 1e-10"};
}

// 2. the site algebras are successively independent under the conditional
//    expectation, across every adjacent split
Outcome criterion_independence() {
  double worst = 0.0;
  int splits = 0;
  for (const auto& dims : {std::vector<int>{1, 2, 2, 2}, std::vector<int>{2, 2, 3}}) {
    TracialSpace space(dims);
    for (int split = 1; split < space.num_sites(); ++split) {
      auto rep = check_successive_independence(space, split, 200, 777 + split, 1e-9);
      if (!rep.pass) return {false, "split " + std::to_string(split) + " of " +
                                        std::to_string(dims.size() - 1) + " sites: gap " +
                                        fmt("%.3g", rep.lhs)};
      worst = std::max(worst, rep.lhs);
      ++splits;
    }
  }
  return {true, std::to_string(splits) + " splits, 200 samples each, max gap " +
                    fmt("%.2e", worst) + " <= 1e-9"};
}

// 3. spectral calculus: reconstruction, modulus, and the layer-cake form of
//    the p-th Schatten power on positive operators
Outcome criterion_spectral() {
  TracialSpace space({1, 6});
  RngStream rng(31);
  double worst = 0.0;
  const double ps[] = {1.0, 2.0, 2.5, 4.0};
  for (int trial = 0; trial < 200; ++trial) {
    RngStream tr = rng.split(trial);
    SelfAdjointOperator x = random_bounded_selfadjoint(6, -2.0, 2.0, tr);
    auto dec = eig_hermitian(x);
    double rec = max_entry_distance(dec.reconstruct(), x.op());
    double mod = max_entry_distance(modulus(x.op()).op(),
                                    dec.apply([](double v) { return std::fabs(v); }));
    worst = std::max({worst, rec, mod});
    if (rec > 1e-9 || mod > 1e-9)
      return {false, "spectral identity defect " + fmt("%.3g", std::max(rec, mod))};

    SelfAdjointOperator pos = random_bounded_selfadjoint(6, 0.0, 3.0, tr);
    for (double p : ps) {
      double snp = std::pow(schatten_norm(space, pos.op(), p), p);
      double lc = layer_cake_norm_pth_power(space, pos, p);
      double gap = std::fabs(lc - snp) / std::max(1.0, snp);
      worst = std::max(worst, gap);
      if (gap > 1e-9)
        return {false, "layer cake vs direct moment at p=" + fmt("%.3g", p) + ": gap " +
                           fmt("%.3g", gap)};
    }
  }
  return {true, "200 trials, dim 6, p in {1,2,2.5,4}, max defect " + fmt("%.2e", worst) +
                    " <= 1e-9"};
}

// 4. trace exponential product inequality, with equality on commuting pairs
Outcome criterion_golden_thompson() {
  TracialSpace space({1, 6});
  RngStream rng(47);
  double worst_slack = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 500; ++trial) {
    RngStream tr = rng.split(trial);
    SelfAdjointOperator z1 = random_bounded_selfadjoint(6, -1.5, 1.5, tr);
    SelfAdjointOperator z2 = random_bounded_selfadjoint(6, -1.5, 1.5, tr);
    auto rep = golden_thompson_check(space, z1, z2, 1e-10);
    worst_slack = std::min(worst_slack, rep.slack);
    if (!rep.pass) return {false, "violated by " + fmt("%.3g", -rep.slack)};
  }
  double worst_eq = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    RngStream tr = rng.split(1000 + trial);
    auto dec = eig_hermitian(random_bounded_selfadjoint(6, -1.0, 1.0, tr));
    SelfAdjointOperator c1(dec.apply([](double v) { return std::sin(v); }));
    SelfAdjointOperator c2(dec.apply([](double v) { return 0.5 * std::cos(v); }));
    auto rep = golden_thompson_check(space, c1, c2, 1e-10);
    double gap = std::fabs(rep.rhs - rep.lhs) / std::max(1.0, std::fabs(rep.lhs));
    worst_eq = std::max(worst_eq, gap);
    if (gap > 1e-12)
      return {false, "commuting pair not tight: gap " + fmt("%.3g", gap)};
  }
  return {true, "500 random pairs hold (min slack " + fmt("%.2e", worst_slack) +
                    "), 50 commuting pairs tight to " + fmt("%.2e", worst_eq)};
}

// 5. projection lattice: trace form of equivalence, subequivalence rank
//    consequence, subadditivity of the join, De Morgan consistency
Outcome criterion_lattice() {
  TracialSpace space({1, 8});
  RngStream rng(53);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    RngStream tr = rng.split(trial);
    Projection p = random_projection(8, 1 + trial % 7, tr);
    Projection q = random_projection(8, 1 + (trial / 7) % 7, tr);
    Projection f3 = random_projection(8, 2, tr);
    auto rep = lemma_lattice_suite(space, p, q, {p, q, f3}, 1e-10);
    if (!rep.pass) return {false, "lattice lemma violated by " + fmt("%.3g", rep.lhs)};
    worst = std::max(worst, rep.lhs);
  }
  return {true, "100 pairs and families, dim 8, max violation " + fmt("%.2e", worst) +
                    " <= 1e-10"};
}

// 6. sum tail bound: exact spectral tails stay under the closed form on a
//    20-point grid, the per-site mgf step holds, and the closed form agrees
//    with the minimized Chernoff objective at its stationary point
Outcome criterion_bennett() {
  const std::vector<std::vector<int>> dims_cycle = {
      {1, 4, 4}, {1, 2, 3}, {1, 2, 2, 2}, {1, 3, 2, 4}, {1, 4, 4, 4}, {1, 2, 2, 2, 2, 2}};
  const double rs[] = {1.0, 1.5, 2.0};
  const double lambdas[] = {0.1, 0.5, 1.0, 2.0};
  RngStream rng(61);
  double worst_slack = std::numeric_limits<double>::infinity();
  int reports = 0;
  for (int inst = 0; inst < 50; ++inst) {
    TracialSpace space(dims_cycle[inst % dims_cycle.size()]);
    double r = rs[inst % 3];
    RngStream ir = rng.split(inst);
    std::vector<SiteOperator> xs;
    BennettParams params;
    params.r = r;
    params.m_bound = 1.0;
    double spread = 0.0;
    for (int j = 1; j <= space.num_sites(); ++j) {
      double mj = ir.next_uniform(0.5, 1.0);
      xs.push_back(random_centered_site(space, j, mj, ir));
      params.site_moment_bounds.push_back(site_moment_bound(space, xs.back(), r));
      spread += mj;
    }
    auto grid = linspace(0.05 * spread, 1.1 * spread, 20);
    auto reps = bennett_verify_points(space, xs, params, grid);
    for (const auto& rep : reps) {
      worst_slack = std::min(worst_slack, rep.slack);
      ++reports;
      if (!rep.pass)
        return {false, "tail exceeds bound at t=" + fmt("%.3g", rep.params.at("t")) +
                           " by " + fmt("%.3g", -rep.slack)};
    }
    for (double lam : lambdas) {
      auto step = bennett_mgf_step_check(space, xs[0], lam, r, params.m_bound,
                                         params.site_moment_bounds[0]);
      if (!step.pass)
        return {false, "mgf step violated at lambda=" + fmt("%.3g", lam) + " by " +
                           fmt("%.3g", -step.slack)};
    }
    params.t = 0.4 * spread;
    BennettBound bd = bennett_bound(params);
    double at_star = chernoff_objective(params, bd.lambda_star);
    if (std::fabs(at_star - bd.rhs) > 1e-12 * bd.rhs)
      return {false, "closed form disagrees with the Chernoff objective: " +
                         fmt("%.3g", std::fabs(at_star - bd.rhs))};
    if (chernoff_objective(params, bd.lambda_star * 1.1) < at_star - 1e-15 ||
        chernoff_objective(params, bd.lambda_star * 0.9) < at_star - 1e-15)
      return {false, "Chernoff objective not locally minimal at lambda_star"};
  }
  return {true, "50 instances, r in {1,1.5,2}, " + std::to_string(reports) +
                    " grid reports, min slack " + fmt("%.2e", worst_slack)};
}

// 7. the tail exponent dominates its weak variant and both closed-form
//    relaxations, so the bound ordering holds at every parameter choice
Outcome criterion_phi_domination() {
  double worst = std::numeric_limits<double>::infinity();
  for (double a : logspace(1e-6, 1e3, 200)) {
    double full = bennett_phi(a, PhiVariant::Full);
    double weak = bennett_phi(a, PhiVariant::Weak);
    double bern = 3.0 * a * a / (6.0 + 2.0 * a);
    double proh = 0.5 * a * std::asinh(0.5 * a);
    double margin = std::min({full - weak, full - bern, full - proh});
    worst = std::min(worst, margin / std::max(1.0, full));
    if (margin < -1e-12 * std::max(1.0, full))
      return {false, "domination fails at alpha=" + fmt("%.3g", a)};
  }
  for (double r : {1.0, 1.5, 2.0})
    for (double m : {0.5, 1.0, 2.0})
      for (double b : {0.5, 1.0, 4.0})
        for (double t : {0.1, 1.0, 5.0}) {
          BennettParams p = BennettParams::from_total(r, m, b, t);
          double ben = bennett_bound(p).rhs;
          if (ben > bernstein_prohorov_bound(p, RefinedBound::Bernstein) + 1e-12 ||
              ben > bernstein_prohorov_bound(p, RefinedBound::Prohorov) + 1e-12)
            return {false, "bound ordering fails at r=" + fmt("%.3g", r) +
                               " t=" + fmt("%.3g", t)};
        }
  return {true, "200-point exponent grid and 81 bound triples ordered, min margin " +
                    fmt("%.2e", worst)};
}

// 8. bounded-difference tails: random instances stay under the bound, the
//    exact coin-sum law matches the verifier to 1e-12, the two-point mgf
//    exponent stays under the quadratic, and the sharper route wins
Outcome criterion_hoeffding() {
  const std::vector<std::vector<int>> dims_cycle = {{1, 2, 2, 2}, {1, 3, 3}, {1, 2, 4}};
  RngStream rng(71);
  double worst_slack = std::numeric_limits<double>::infinity();
  for (int inst = 0; inst < 50; ++inst) {
    TracialSpace space(dims_cycle[inst % dims_cycle.size()]);
    RngStream ir = rng.split(inst);
    HoeffdingParams params;
    params.mu = 0.25;
    std::vector<SiteOperator> xs;
    double dev = 0.0;
    for (int j = 1; j <= space.num_sites(); ++j) {
      double w = ir.next_uniform(0.5, 1.5);
      double a = params.mu - 0.8 * w, b = params.mu + 1.2 * w;
      xs.push_back({j, random_bounded_mean(space.factor_dim(j), a, b, params.mu, ir).op()});
      params.lower.push_back(a);
      params.upper.push_back(b);
      dev += std::max(b - params.mu, params.mu - a);
    }
    auto reps = hoeffding_verify_points(space, xs, params, linspace(0.05 * dev, 1.05 * dev, 20));
    for (const auto& rep : reps) {
      worst_slack = std::min(worst_slack, rep.slack);
      if (!rep.pass)
        return {false, "tail exceeds bound at t=" + fmt("%.3g", rep.params.at("t")) + " by " +
                           fmt("%.3g", -rep.slack)};
    }
    auto mgf = hoeffding_mgf_check(space, xs[0], 2.0, params.lower[0], params.upper[0],
                                   params.mu);
    if (!mgf.pass) return {false, "site mgf bound violated by " + fmt("%.3g", -mgf.slack)};
  }

  const int ns[] = {1, 2, 3, 8};
  const std::vector<std::vector<double>> grids = {{0.5}, {1.5}, {0.5, 2.5}, {1.5, 3.5, 7.5}};
  double worst_exact = 0.0;
  for (size_t k = 0; k < 4; ++k) {
    int n = ns[k];
    std::vector<int> coin_dims(n + 1, 2);
    coin_dims[0] = 1;
    TracialSpace space(coin_dims);
    auto xs = bernoulli_diagonal(n);
    HoeffdingParams params;
    params.lower.assign(n, -1.0);
    params.upper.assign(n, 1.0);
    auto reps = hoeffding_verify_points(space, xs, params, grids[k]);
    for (size_t i = 0; i < reps.size(); ++i) {
      double exact = bernoulli_tail_exact_two_sided(n, grids[k][i]);
      double gap = std::fabs(reps[i].lhs - exact);
      worst_exact = std::max(worst_exact, gap);
      if (gap > 1e-12 || !reps[i].pass)
        return {false, "coin sum n=" + std::to_string(n) + " t=" + fmt("%.3g", grids[k][i]) +
                           ": verifier " + fmt("%.6g", reps[i].lhs) + " vs law " +
                           fmt("%.6g", exact)};
    }
  }

  for (double gamma : {0.0, 0.25, 0.5, 0.75, 1.0})
    for (double a : linspace(-6.0, 6.0, 49))
      if (hoeffding_mgf_exponent(a, gamma) > a * a / 8.0 + 1e-12)
        return {false, "mgf exponent exceeds the quadratic at alpha=" + fmt("%.3g", a)};

  auto cmp = comparison_check(10, linspace(0.5, 5.0, 10));
  if (!cmp.pass || cmp.witness.at("min_strict_margin") <= 0.0)
    return {false, "sharper route not strictly below the moment route"};

  return {true, "50 instances and 4 exact coin laws (max law gap " + fmt("%.2e", worst_exact) +
                    "), min slack " + fmt("%.2e", worst_slack)};
}

// 9. moment inequality route: constant vs quadrature, the moment bound on
//    random instances, tail domination through truncation, and the
//    monotone truncation factor on its pinned grid
Outcome criterion_rosenthal() {
  double worst_quad = 0.0;
  int triples = 0;
  for (double p : {2.0, 2.5, 3.0, 4.0, 5.0})
    for (double r : {1.0, 1.5, 2.0})
      for (double delta : {0.75, 1.0, 2.0, 4.0}) {
        double gamma = p / r + delta;
        double closed = beta_integral(p, r, gamma);
        TailQuadResult q = beta_integral_quad(p, r, gamma);
        double gap = std::fabs(q.value - closed);
        double budget = 1e-8 * closed + q.tail_bound + q.error_estimate;
        worst_quad = std::max(worst_quad, gap / budget);
        ++triples;
        if (gap > budget)
          return {false, "quadrature disagrees at p=" + fmt("%.3g", p) + " r=" +
                             fmt("%.3g", r) + " gamma=" + fmt("%.3g", gamma)};
      }

  const std::vector<std::vector<int>> dims_cycle = {{1, 2, 2}, {1, 2, 3}, {1, 2, 2, 2}};
  const double ps[] = {2.0, 3.0, 4.0};
  const double rs[] = {1.0, 1.5, 2.0};
  RngStream rng(83);
  double worst_slack = std::numeric_limits<double>::infinity();
  for (int inst = 0; inst < 50; ++inst) {
    TracialSpace space(dims_cycle[inst % dims_cycle.size()]);
    RngStream ir = rng.split(inst);
    std::vector<SiteOperator> xs;
    for (int j = 1; j <= space.num_sites(); ++j)
      xs.push_back(random_centered_site(space, j, ir.next_uniform(0.5, 1.0), ir));
    auto rep = rosenthal_verify(space, xs, ps[inst % 3], rs[(inst / 3) % 3]);
    worst_slack = std::min(worst_slack, rep.slack / std::max(1.0, rep.rhs));
    if (!rep.pass)
      return {false, "moment bound violated at p=" + fmt("%.3g", ps[inst % 3]) + " by " +
                         fmt("%.3g", -rep.slack)};
  }

  RngStream drng(89);
  for (int inst = 0; inst < 50; ++inst) {
    TracialSpace space(dims_cycle[inst % dims_cycle.size()]);
    RngStream ir = drng.split(inst);
    std::vector<SelfAdjointOperator> embedded;
    std::vector<double> site_eigs, sum_eigs;
    Operator sum(space.total_dim());
    for (int j = 1; j <= space.num_sites(); ++j) {
      SiteOperator x = random_centered_site(space, j, 1.0, ir);
      Operator full = embed(space, x);
      embedded.push_back(SelfAdjointOperator(full));
      auto dec = eig_hermitian(embedded.back());
      site_eigs.insert(site_eigs.end(), dec.eigenvalues.begin(), dec.eigenvalues.end());
      sum += full;
    }
    auto sum_dec = eig_hermitian(SelfAdjointOperator(sum));
    double s = nudge_off_spectrum(0.6, site_eigs);
    double t = nudge_off_spectrum(1.1, sum_dec.eigenvalues);
    auto rep = rosenthal_domination_check(space, embedded, s, t, 1e-10);
    if (!rep.pass)
      return {false, "truncation domination fails at s=" + fmt("%.3g", s) + " t=" +
                         fmt("%.3g", t) + " by " + fmt("%.3g", -rep.slack)};
  }

  for (double r : {1.0, 1.5, 2.0}) {
    auto mono = check_tail_factor_decreasing(1.0, 2.0, r, logspace(0.1, 10.0, 24));
    if (!mono.pass)
      return {false, "truncation factor not monotone on the pinned grid at r=" + fmt("%.3g", r)};
  }

  return {true, std::to_string(triples) + " quadrature triples (max budget use " +
                    fmt("%.2f", worst_quad) + "), 50 moment and 50 domination instances, " +
                    "min relative slack " + fmt("%.2e", worst_slack)};
}

// 10. classical corollaries: exact coin law under the closed bounds, Monte
//     Carlo agreement, exact inversion of the accuracy form, and the
//     minimized moment constant
Outcome criterion_classical() {
  double worst_mc = 0.0;
  for (int n : {10, 50, 100})
    for (double eps : {0.1, 0.3, 0.5}) {
      double thr = n * eps;
      double exact = bernoulli_tail_exact_two_sided(n, thr);
      double bound = classical_bernstein_bound(n, eps);
      if (exact > bound + 1e-15)
        return {false, "exact law exceeds the bound at n=" + std::to_string(n) +
                           " eps=" + fmt("%.3g", eps)};
      double mc = bernoulli_tail_mc_two_sided(n, thr, 100000, 20260816 + n);
      double sigma = std::sqrt(exact * (1.0 - exact) / 100000.0) + 1.0 / 100000.0;
      worst_mc = std::max(worst_mc, std::fabs(mc - exact) / (5.0 * sigma));
      if (std::fabs(mc - exact) > 5.0 * sigma)
        return {false, "Monte Carlo off by " + fmt("%.3g", std::fabs(mc - exact)) +
                           " at n=" + std::to_string(n) + " eps=" + fmt("%.3g", eps)};
    }

  for (int n : {10, 100, 1000})
    for (double eps : {0.05, 0.3, 0.9}) {
      double acc = sample_complexity_bound(n, eps);
      double back = classical_hoeffding_bound(n, 0.0, 1.0, acc);
      if (std::fabs(back - eps) > 1e-12)
        return {false, "accuracy inversion off by " + fmt("%.3g", std::fabs(back - eps))};
    }

  const double prs[][2] = {{2.0, 2.0}, {3.0, 1.5}, {4.0, 1.0}};
  for (const auto& pr : prs) {
    MinimizedConstant m = commutative_rosenthal_constant(pr[0], pr[1]);
    if (!(m.gamma_star > pr[0] / pr[1]) || m.residual > 1e-6)
      return {false, "minimizer invalid at p=" + fmt("%.3g", pr[0])};
    if (m.value > rosenthal_constant(pr[0], pr[1], m.gamma_star * 1.02).value + 1e-9 ||
        m.value > rosenthal_constant(pr[0], pr[1], m.gamma_star * 0.98).value + 1e-9)
      return {false, "minimizer not locally optimal at p=" + fmt("%.3g", pr[0])};
  }
  return {true, "9 law/bound/MC cells (max 5-sigma use " + fmt("%.2f", worst_mc) +
                    "), 9 exact inversions, 3 minimized constants"};
}

// 11. the scaled mgf remainder (e^{ls} - 1 - ls)/s^r is nondecreasing in s,
//     which is what lets per-site moments enter the mgf step
Outcome criterion_mgf_monotone() {
  auto grid = logspace(1e-3, 10.0, 60);
  double worst = std::numeric_limits<double>::infinity();
  for (double lam : {0.1, 1.0, 5.0})
    for (double r : {1.0, 1.5, 2.0}) {
      double prev = std::numeric_limits<double>::quiet_NaN();
      for (double s : grid) {
        double g = (std::expm1(lam * s) - lam * s) / std::pow(s, r);
        if (!std::isnan(prev)) {
          double margin = (g - prev) / std::max(1.0, std::fabs(prev));
          worst = std::min(worst, margin);
          if (g < prev - 1e-10 * std::max(1.0, std::fabs(prev)))
            return {false, "remainder decreases at s=" + fmt("%.3g", s) + " (lambda=" +
                               fmt("%.3g", lam) + ", r=" + fmt("%.3g", r) + ")"};
        }
        prev = g;
      }
    }
  return {true, "60-point grids for 9 (lambda, r) pairs, min forward step " +
                    fmt("%.2e", worst)};
}

// 12. reports are byte-identical across job counts and reruns
Outcome criterion_determinism() {
  SuiteConfig cfg;
  cfg.suite = "bennett";
  cfg.trials = 4;
  cfg.factor_dims = {1, 2, 2};
  cfg.t_grid = TGridSpec{0.5, 2.0, 4, false};
  cfg.seed = 12;
  cfg.jobs = 1;
  auto b1 = run_suite(cfg);
  cfg.jobs = 4;
  auto b4 = run_suite(cfg);
  if (serialize_records(b1.records, "json") != serialize_records(b4.records, "json") ||
      serialize_records(b1.records, "csv") != serialize_records(b4.records, "csv"))
    return {false, "records differ across job counts"};
  cfg.jobs = 1;
  auto again = run_suite(cfg);
  if (serialize_records(b1.records, "json") != serialize_records(again.records, "json"))
    return {false, "records differ across reruns"};
  if (!b1.summary.pass()) return {false, "verification suite itself failed"};

  SuiteConfig ax;
  ax.suite = "axioms";
  ax.trials = 2;
  ax.factor_dims = {1, 2, 2};
  ax.seed = 5;
  ax.jobs = 1;
  auto a1 = run_suite(ax);
  ax.jobs = 3;
  auto a3 = run_suite(ax);
  if (serialize_records(a1.records, "json") != serialize_records(a3.records, "json"))
    return {false, "axiom records differ across job counts"};
  return {true, std::to_string(b1.records.size() + a1.records.size()) +
                    " records byte-identical for jobs in {1,3,4} and across reruns"};
}

}  // namespace

int main() {
  struct Row {
    const char* name;
    Outcome (*run)();
  };
  const Row rows[] = {
      {"conditional expectation axioms", criterion_ce_axioms},
      {"successive independence of site algebras", criterion_independence},
      {"spectral calculus and layer-cake norms", criterion_spectral},
      {"trace exponential product inequality", criterion_golden_thompson},
      {"projection lattice lemmas", criterion_lattice},
      {"sum tail bound with matching mgf steps", criterion_bennett},
      {"exponent domination and bound ordering", criterion_phi_domination},
      {"bounded-difference tail bounds", criterion_hoeffding},
      {"moment inequality route", criterion_rosenthal},
      {"classical scalar corollaries", criterion_classical},
      {"mgf remainder monotonicity", criterion_mgf_monotone},
      {"deterministic parallel reports", criterion_determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& row : rows) {
    ++index;
    Outcome out;
    try {
      out = row.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%s)\n", out.pass ? "PASS" : "FAIL", index, row.name,
                out.detail.c_str());
  }
  std::printf("acceptance: %d/12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}

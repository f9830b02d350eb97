#include "ncprob/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ncprob/ensembles.hpp"
#include "ncprob/inequalities.hpp"
#include "ncprob/projections.hpp"
#include "ncprob/spectral.hpp"
#include "ncprob/special_functions.hpp"

namespace ncprob {

namespace {

const std::vector<std::string> kSuites = {
    "axioms",    "lattice",   "bennett",          "bernstein-prohorov", "hoeffding",
    "rosenthal", "classical", "golden-thompson",  "layercake"};

const std::vector<std::string> kAxes = {"t", "n", "gamma", "r"};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int rank_draw(int dim, RngStream& rng) {
  int r = static_cast<int>(rng.next_uniform() * (dim + 1));
  return std::clamp(r, 0, dim);
}

// Site operator of the form 1 (x) y with y drawn bounded with pinned mean, so
// the conditional expectation is exactly mu * 1.
SiteOperator bounded_mean_site(const TracialSpace& space, int site, double a, double b,
                               double mu, RngStream& rng) {
  Operator y = random_bounded_mean(space.factor_dim(site), a, b, mu, rng).op();
  return SiteOperator{site, kron(Operator::identity(space.subalgebra_dim()), y)};
}

// ---- per-trial suite bodies --------------------------------------------------

std::vector<VerificationReport> trial_axioms(const SuiteConfig& cfg, uint64_t tseed) {
  TracialSpace space(cfg.factor_dims);
  std::vector<VerificationReport> out;
  out.push_back(check_ce_axioms(space, 8, tseed));
  for (int split = 1; split < space.num_sites(); ++split) {
    uint64_t s = RngStream(tseed).split(split).next_u64();
    out.push_back(check_successive_independence(space, split, 6, s));
  }
  return out;
}

std::vector<VerificationReport> trial_lattice(const SuiteConfig& cfg, uint64_t tseed) {
  TracialSpace space(cfg.factor_dims);
  const int dim = space.total_dim();
  RngStream rng(tseed);
  Projection p = random_projection(dim, rank_draw(dim, rng), rng);
  Projection q = random_projection(dim, rank_draw(dim, rng), rng);
  std::vector<Projection> family;
  for (int k = 0; k < 3; ++k) family.push_back(random_projection(dim, rank_draw(dim, rng), rng));
  return {lemma_lattice_suite(space, p, q, family)};
}

struct BennettInstance {
  std::vector<SiteOperator> xs;
  BennettParams params;
};

BennettInstance make_bennett_instance(const TracialSpace& space, const SuiteConfig& cfg,
                                      RngStream& rng) {
  BennettInstance inst;
  inst.params.r = cfg.r;
  inst.params.m_bound = cfg.m_bound;
  for (int site = 1; site <= space.num_sites(); ++site) {
    double scale = cfg.m_bound * rng.next_uniform(0.5, 1.0);
    SiteOperator x = random_centered_site(space, site, scale, rng);
    inst.params.site_moment_bounds.push_back(
        site_moment_bound(space, x, cfg.r, cfg.tolerances));
    inst.xs.push_back(std::move(x));
  }
  return inst;
}

std::vector<VerificationReport> trial_bennett(const SuiteConfig& cfg, uint64_t tseed) {
  TracialSpace space(cfg.factor_dims);
  RngStream rng(tseed);
  BennettInstance inst = make_bennett_instance(space, cfg, rng);
  return bennett_verify_points(space, inst.xs, inst.params, cfg.t_grid.make(),
                               cfg.tolerances);
}

std::vector<VerificationReport> trial_refined(const SuiteConfig& cfg, uint64_t tseed) {
  TracialSpace space(cfg.factor_dims);
  RngStream rng(tseed);
  BennettInstance inst = make_bennett_instance(space, cfg, rng);
  SelfAdjointOperator sum(embed_sum(space, inst.xs), cfg.tolerances.sym_tol);
  auto dec = eig_hermitian(sum);

  std::vector<VerificationReport> out;
  for (double t : cfg.t_grid.make()) {
    double t_eff = nudge_off_spectrum(t, dec.eigenvalues, cfg.tolerances.eig_tol);
    BennettParams pt = inst.params;
    pt.t = t_eff;
    double lhs = tail_from_eigenvalues(dec.eigenvalues, t_eff, cfg.tolerances.eig_tol);
    double ben = bennett_bound(pt).rhs;
    double bern = bernstein_prohorov_bound(pt, RefinedBound::Bernstein);
    double proh = bernstein_prohorov_bound(pt, RefinedBound::Prohorov);
    out.push_back(VerificationReport::make(
        "bernstein.tail", lhs, bern, cfg.tolerances.slack_tol, {{"t", t_eff}, {"r", cfg.r}},
        {{"bennett", ben}, {"prohorov", proh}}));
    out.push_back(VerificationReport::make(
        "prohorov.tail", lhs, proh, cfg.tolerances.slack_tol, {{"t", t_eff}, {"r", cfg.r}},
        {{"bennett", ben}, {"bernstein", bern}}));
    out.push_back(VerificationReport::make(
        "refined.order", ben, std::min(bern, proh), 1e-12, {{"t", t_eff}, {"r", cfg.r}},
        {{"bennett", ben}, {"bernstein", bern}, {"prohorov", proh}}));
  }
  return out;
}

std::vector<VerificationReport> trial_hoeffding(const SuiteConfig& cfg, uint64_t tseed) {
  TracialSpace space(cfg.factor_dims);
  RngStream rng(tseed);
  const double mu = 0.25;
  HoeffdingParams params;
  params.mu = mu;
  std::vector<SiteOperator> xs;
  for (int site = 1; site <= space.num_sites(); ++site) {
    double w = cfg.m_bound * rng.next_uniform(0.5, 1.5);
    params.lower.push_back(mu - w);
    params.upper.push_back(mu + w);
    xs.push_back(bounded_mean_site(space, site, mu - w, mu + w, mu, rng));
  }
  return hoeffding_verify_points(space, xs, params, cfg.t_grid.make(), cfg.tolerances);
}

std::vector<VerificationReport> trial_rosenthal(const SuiteConfig& cfg, uint64_t tseed) {
  TracialSpace space(cfg.factor_dims);
  RngStream rng(tseed);
  std::vector<VerificationReport> out;

  double g = cfg.gamma.value_or(cfg.p / cfg.r + 1.0);
  double closed = beta_integral(cfg.p, cfg.r, g);
  TailQuadResult quad = beta_integral_quad(cfg.p, cfg.r, g);
  double allowance = 1e-8 * closed + quad.tail_bound + quad.error_estimate;
  out.push_back(VerificationReport::make(
      "rosenthal.constant", std::abs(closed - quad.value), allowance, 0.0,
      {{"p", cfg.p}, {"r", cfg.r}, {"gamma", g}},
      {{"closed_form", closed}, {"quadrature", quad.value}, {"cutoff", quad.cutoff},
       {"evaluations", static_cast<double>(quad.evaluations)}}));

  BennettInstance inst = make_bennett_instance(space, cfg, rng);
  out.push_back(rosenthal_verify(space, inst.xs, cfg.p, cfg.r, g, cfg.tolerances));

  std::vector<SelfAdjointOperator> embedded;
  std::vector<double> all_site_eigs;
  for (const auto& x : inst.xs) {
    embedded.push_back(SelfAdjointOperator(embed(space, x), cfg.tolerances.sym_tol));
    auto d = eig_hermitian(embedded.back());
    all_site_eigs.insert(all_site_eigs.end(), d.eigenvalues.begin(), d.eigenvalues.end());
  }
  std::sort(all_site_eigs.begin(), all_site_eigs.end());
  SelfAdjointOperator sum(embed_sum(space, inst.xs), cfg.tolerances.sym_tol);
  auto dec = eig_hermitian(sum);
  double s = nudge_off_spectrum(0.6 * cfg.m_bound, all_site_eigs, cfg.tolerances.eig_tol);
  double t = nudge_off_spectrum(1.1 * cfg.m_bound, dec.eigenvalues, cfg.tolerances.eig_tol);
  out.push_back(rosenthal_domination_check(space, embedded, s, t));

  std::vector<double> l_grid = TGridSpec{0.1, 10.0, 16, true}.make();
  out.push_back(check_tail_factor_decreasing(1.0, 2.0, cfg.r, l_grid));
  return out;
}

std::vector<VerificationReport> trial_classical(const SuiteConfig& cfg, uint64_t tseed,
                                                int trial) {
  const int ns[] = {10, 50, 100};
  const double epss[] = {0.1, 0.3, 0.5};
  int n = ns[(trial / 3) % 3];
  double eps = epss[trial % 3];
  const long samples = 20000;

  std::vector<VerificationReport> out;
  double exact = bernoulli_tail_exact_two_sided(n, eps * n);
  double bern = classical_bernstein_bound(n, eps);
  out.push_back(VerificationReport::make(
      "classical.bernstein", exact, bern, 1e-12,
      {{"n", static_cast<double>(n)}, {"eps", eps}}, {}));

  double mc = bernoulli_tail_mc_two_sided(n, eps * n, samples, tseed);
  double margin = 5.0 * std::sqrt(std::min(exact, 1.0) / samples) + 5.0 / samples;
  out.push_back(VerificationReport::make(
      "classical.mc_exact", std::abs(mc - exact), margin, 0.0,
      {{"n", static_cast<double>(n)}, {"eps", eps},
       {"samples", static_cast<double>(samples)}},
      {{"mc", mc}, {"exact", exact}}));

  double hoef = classical_hoeffding_bound(n, -1.0, 1.0, eps);
  out.push_back(VerificationReport::make(
      "classical.hoeffding", exact, hoef, 1e-12,
      {{"n", static_cast<double>(n)}, {"eps", eps}}, {}));

  double acc = sample_complexity_bound(n, eps);
  double invert = classical_hoeffding_bound(n, 0.0, 1.0, acc);
  out.push_back(VerificationReport::make(
      "classical.inversion", std::abs(invert - eps), 0.0, 1e-12,
      {{"n", static_cast<double>(n)}, {"eps", eps}}, {{"accuracy", acc}}));

  MinimizedConstant min_c = commutative_rosenthal_constant(cfg.p, cfg.r);
  out.push_back(VerificationReport::make(
      "classical.min_constant", min_c.residual, 1e-6, 0.0, {{"p", cfg.p}, {"r", cfg.r}},
      {{"gamma_star", min_c.gamma_star}, {"value", min_c.value}}));
  return out;
}

std::vector<VerificationReport> trial_golden_thompson(const SuiteConfig& cfg, uint64_t tseed) {
  TracialSpace space(cfg.factor_dims);
  const int dim = space.total_dim();
  RngStream rng(tseed);
  std::vector<VerificationReport> out;
  SelfAdjointOperator z1 = random_bounded_selfadjoint(dim, -1.0, 1.0, rng);
  SelfAdjointOperator z2 = random_bounded_selfadjoint(dim, -1.0, 1.0, rng);
  out.push_back(golden_thompson_check(space, z1, z2));

  // commuting pair: two functions of one operator, where equality holds
  SelfAdjointOperator w = random_bounded_selfadjoint(dim, -1.0, 1.0, rng);
  auto dec = eig_hermitian(w);
  SelfAdjointOperator c1(dec.apply([](double v) { return std::sin(v); }));
  SelfAdjointOperator c2(dec.apply([](double v) { return 0.5 * std::cos(v); }));
  VerificationReport gc = golden_thompson_check(space, c1, c2);
  out.push_back(VerificationReport::make(
      "golden_thompson.commuting", std::abs(gc.slack), 0.0, 1e-12,
      {{"dim", static_cast<double>(dim)}}, {{"lhs_trace", gc.lhs}}));
  return out;
}

std::vector<VerificationReport> trial_layercake(const SuiteConfig& cfg, uint64_t tseed) {
  TracialSpace space(cfg.factor_dims);
  RngStream rng(tseed);
  SelfAdjointOperator x = random_bounded_selfadjoint(space.total_dim(), 0.0, 2.0, rng);
  std::vector<VerificationReport> out;
  for (double p : {1.0, 2.0, 2.5, 4.0}) {
    double lc = layer_cake_norm_pth_power(space, x, p);
    double snp = std::pow(schatten_norm(space, x.op(), p), p);
    out.push_back(VerificationReport::make(
        "layercake", std::abs(lc - snp), cfg.tolerances.quad_tol * std::max(1.0, snp), 0.0,
        {{"p", p}}, {{"layer_cake", lc}, {"schatten_pp", snp}}));
  }
  return out;
}

std::vector<VerificationReport> run_trial(const SuiteConfig& cfg, int trial) {
  uint64_t tseed = RngStream(cfg.seed).split(static_cast<uint64_t>(trial)).next_u64();
  std::vector<VerificationReport> out;
  if (cfg.suite == "axioms") out = trial_axioms(cfg, tseed);
  else if (cfg.suite == "lattice") out = trial_lattice(cfg, tseed);
  else if (cfg.suite == "bennett") out = trial_bennett(cfg, tseed);
  else if (cfg.suite == "bernstein-prohorov") out = trial_refined(cfg, tseed);
  else if (cfg.suite == "hoeffding") out = trial_hoeffding(cfg, tseed);
  else if (cfg.suite == "rosenthal") out = trial_rosenthal(cfg, tseed);
  else if (cfg.suite == "classical") out = trial_classical(cfg, tseed, trial);
  else if (cfg.suite == "golden-thompson") out = trial_golden_thompson(cfg, tseed);
  else if (cfg.suite == "layercake") out = trial_layercake(cfg, tseed);
  else throw ParamError("unknown suite: " + cfg.suite);
  for (auto& r : out) r.params["trial"] = static_cast<double>(trial);
  return out;
}

RunSummary summarize(const std::vector<VerificationReport>& records, double wall_seconds) {
  RunSummary s;
  s.total = static_cast<int>(records.size());
  s.worst_slack = records.empty() ? 0.0 : records.front().slack;
  for (const auto& r : records) {
    if (r.pass) ++s.pass_count;
    s.worst_slack = std::min(s.worst_slack, r.slack);
  }
  s.wall_seconds = wall_seconds;
  return s;
}

}  // namespace

// ---- grids and config ----------------------------------------------------------

std::vector<double> TGridSpec::make() const {
  validate();
  std::vector<double> g(points);
  if (points == 1) {
    g[0] = min;
    return g;
  }
  if (log_scale) {
    double lmin = std::log(min), lmax = std::log(max);
    for (int k = 0; k < points; ++k)
      g[k] = std::exp(lmin + (lmax - lmin) * k / (points - 1));
  } else {
    for (int k = 0; k < points; ++k) g[k] = min + (max - min) * k / (points - 1);
  }
  return g;
}

TGridSpec TGridSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3 && parts.size() != 4)
    throw ParamError("grid spec must be min:max:points[:log|linear]");
  TGridSpec g;
  try {
    g.min = std::stod(parts[0]);
    g.max = std::stod(parts[1]);
    g.points = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw ParamError("could not parse grid spec: " + text);
  }
  if (parts.size() == 4) {
    if (parts[3] == "log") g.log_scale = true;
    else if (parts[3] == "linear") g.log_scale = false;
    else throw ParamError("grid scale must be log or linear");
  }
  g.validate();
  return g;
}

void TGridSpec::validate() const {
  if (points < 1) throw ParamError("grid needs at least one point");
  if (!std::isfinite(min) || !std::isfinite(max)) throw ParamError("grid bounds must be finite");
  if (points > 1 && !(min < max)) throw ParamError("grid needs min < max");
  if (log_scale && !(min > 0.0)) throw ParamError("log grid needs min > 0");
}

void SuiteConfig::validate() const {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw ParamError("unknown suite: " + suite);
  if (trials < 1) throw ParamError("trials must be >= 1");
  if (jobs < 1 || jobs > 64) throw ParamError("jobs must lie in [1, 64]");
  if (format != "json" && format != "csv") throw ParamError("format must be json or csv");
  if (factor_dims.size() < 2) throw ParamError("need at least one site factor");
  long prod = 1;
  for (int d : factor_dims) {
    if (d < 1) throw ParamError("factor dimensions must be >= 1");
    prod *= d;
    if (prod > kMaxDim) throw ParamError("factor dimension product exceeds the cap");
  }
  if (!(r >= 1.0 && r <= 2.0)) throw ParamError("moment order r must lie in [1, 2]");
  if (!(p >= 1.0)) throw ParamError("p must be >= 1");
  if (!(m_bound > 0.0)) throw ParamError("m_bound must be > 0");
  t_grid.validate();
  tolerances.validate();
}

const std::vector<std::string>& suite_names() { return kSuites; }
const std::vector<std::string>& sweep_axes() { return kAxes; }

// ---- runners ---------------------------------------------------------------------

SuiteResult run_suite(const SuiteConfig& config) {
  config.validate();
  auto start = std::chrono::steady_clock::now();

  std::vector<std::vector<VerificationReport>> per_trial(config.trials);
  int workers = std::min(config.jobs, config.trials);
  if (workers <= 1) {
    for (int i = 0; i < config.trials; ++i) per_trial[i] = run_trial(config, i);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= config.trials) return;
        try {
          per_trial[i] = run_trial(config, i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  SuiteResult result;
  result.config = config;
  for (auto& batch : per_trial)
    for (auto& r : batch) result.records.push_back(std::move(r));
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.summary = summarize(result.records, wall);
  return result;
}

SuiteResult run_sweep(const std::string& axis, const SuiteConfig& config) {
  if (std::find(kAxes.begin(), kAxes.end(), axis) == kAxes.end())
    throw ParamError("unknown sweep axis: " + axis);
  auto start = std::chrono::steady_clock::now();
  std::vector<double> grid = config.t_grid.make();
  int n_sites = static_cast<int>(config.factor_dims.size()) - 1;
  if (n_sites < 1) throw ParamError("need at least one site factor");

  std::vector<VerificationReport> records;
  auto bound_row = [&](const BennettParams& pt, std::map<std::string, double> params) {
    double ben = bennett_bound(pt).rhs;
    double bern = bernstein_prohorov_bound(pt, RefinedBound::Bernstein);
    double proh = bernstein_prohorov_bound(pt, RefinedBound::Prohorov);
    // sites valued in [-M, M], one unit of r-th moment each: D = 4 n M^2
    double spread_sq = 4.0 * pt.m_bound * pt.m_bound * pt.moment_total();
    double hoef = std::exp(-2.0 * pt.t * pt.t / spread_sq);
    records.push_back(VerificationReport::make(
        "sweep." + axis, ben, std::min(bern, proh), 1e-12, std::move(params),
        {{"bennett", ben}, {"bernstein", bern}, {"prohorov", proh},
         {"hoeffding_one_sided", hoef}}));
  };

  if (axis == "t") {
    for (double t : grid) {
      BennettParams pt = BennettParams::from_total(config.r, config.m_bound,
                                                   static_cast<double>(n_sites), t);
      bound_row(pt, {{"t", t}, {"n", static_cast<double>(n_sites)}, {"r", config.r}});
    }
  } else if (axis == "n") {
    for (double v : grid) {
      int n = std::max(1, static_cast<int>(std::llround(v)));
      double t = 0.5 * n;
      BennettParams pt =
          BennettParams::from_total(config.r, config.m_bound, static_cast<double>(n), t);
      bound_row(pt, {{"n", static_cast<double>(n)}, {"t", t}, {"r", config.r}});
    }
  } else if (axis == "r") {
    for (double rv : grid) {
      if (!(rv >= 1.0 && rv <= 2.0)) throw ParamError("r sweep grid must stay in [1, 2]");
      double t = 0.8 * n_sites;
      BennettParams pt =
          BennettParams::from_total(rv, config.m_bound, static_cast<double>(n_sites), t);
      bound_row(pt, {{"r", rv}, {"t", t}, {"n", static_cast<double>(n_sites)}});
    }
  } else {  // gamma
    MinimizedConstant best = commutative_rosenthal_constant(config.p, config.r);
    for (double g : grid) {
      RosenthalConstant c = rosenthal_constant(config.p, config.r, g);
      records.push_back(VerificationReport::make(
          "sweep.gamma", best.value, c.value, 1e-12,
          {{"gamma", g}, {"p", config.p}, {"r", config.r}},
          {{"diagonal_term", c.diagonal_term}, {"moment_term", c.moment_term},
           {"gamma_star", best.gamma_star}}));
    }
  }

  SuiteResult result;
  result.config = config;
  result.config.suite = "sweep." + axis;
  result.records = std::move(records);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.summary = summarize(result.records, wall);
  return result;
}

// ---- serialization -----------------------------------------------------------------

std::string serialize_records(const std::vector<VerificationReport>& records,
                              const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    for (const auto& r : records) {
      nlohmann::json j{{"type", "record"}, {"suite", r.suite}, {"lhs", r.lhs},
                       {"rhs", r.rhs},    {"slack", r.slack},  {"pass", r.pass}};
      j["params"] = r.params;
      j["witness"] = r.witness;
      os << j.dump() << "\n";
    }
    return os.str();
  }
  if (format != "csv") throw ParamError("format must be json or csv");

  std::set<std::string> pkeys, wkeys;
  for (const auto& r : records) {
    for (const auto& [k, v] : r.params) pkeys.insert(k);
    for (const auto& [k, v] : r.witness) wkeys.insert(k);
  }
  os << "suite,pass,lhs,rhs,slack";
  for (const auto& k : pkeys) os << ",param:" << k;
  for (const auto& k : wkeys) os << ",witness:" << k;
  os << "\n";
  for (const auto& r : records) {
    os << r.suite << "," << (r.pass ? 1 : 0) << "," << fmt17(r.lhs) << "," << fmt17(r.rhs)
       << "," << fmt17(r.slack);
    for (const auto& k : pkeys) {
      auto it = r.params.find(k);
      os << "," << (it == r.params.end() ? std::string() : fmt17(it->second));
    }
    for (const auto& k : wkeys) {
      auto it = r.witness.find(k);
      os << "," << (it == r.witness.end() ? std::string() : fmt17(it->second));
    }
    os << "\n";
  }
  return os.str();
}

void write_report(const SuiteResult& result, std::ostream& os) {
  const SuiteConfig& cfg = result.config;
  const RunSummary& s = result.summary;
  if (cfg.format == "json") {
    nlohmann::json h{{"type", "header"},   {"suite", cfg.suite}, {"seed", cfg.seed},
                     {"trials", cfg.trials}, {"dims", cfg.factor_dims}, {"r", cfg.r},
                     {"p", cfg.p},          {"m_bound", cfg.m_bound}};
    if (cfg.gamma) h["gamma"] = *cfg.gamma;
    os << h.dump() << "\n";
    os << serialize_records(result.records, "json");
    nlohmann::json j{{"type", "summary"},         {"pass_count", s.pass_count},
                     {"total", s.total},          {"worst_slack", s.worst_slack},
                     {"wall_seconds", s.wall_seconds}, {"pass", s.pass()}};
    os << j.dump() << "\n";
    return;
  }
  os << "# suite=" << cfg.suite << " seed=" << cfg.seed << " trials=" << cfg.trials
     << " dims=";
  for (size_t i = 0; i < cfg.factor_dims.size(); ++i)
    os << (i ? "," : "") << cfg.factor_dims[i];
  os << "\n";
  os << serialize_records(result.records, "csv");
  os << "# summary pass_count=" << s.pass_count << " total=" << s.total
     << " worst_slack=" << fmt17(s.worst_slack) << " wall_seconds=" << fmt17(s.wall_seconds)
     << " pass=" << (s.pass() ? 1 : 0) << "\n";
}

int exit_code(const SuiteResult& result) { return result.summary.pass() ? 0 : 1; }

}  // namespace ncprob

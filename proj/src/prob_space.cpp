#include "ncprob/prob_space.hpp"

#include <algorithm>
#include <cmath>

#include "ncprob/ensembles.hpp"
#include "ncprob/spectral.hpp"

namespace ncprob {

TracialSpace::TracialSpace(std::vector<int> factor_dims) : dims_(std::move(factor_dims)) {
  if (dims_.size() < 2)
    throw SizeError("need the subalgebra factor and at least one site factor");
  long long prod = 1;
  for (int d : dims_) {
    if (d < 1) throw SizeError("factor dimensions must be >= 1");
    prod *= d;
    if (prod > kMaxDim)
      throw SizeError("total dimension exceeds cap " + std::to_string(kMaxDim));
  }
  total_dim_ = static_cast<int>(prod);
  strides_.assign(dims_.size(), 1);
  for (int k = static_cast<int>(dims_.size()) - 2; k >= 0; --k)
    strides_[k] = strides_[k + 1] * dims_[k + 1];
}

int TracialSpace::factor_dim(int k) const {
  if (k < 0 || k >= static_cast<int>(dims_.size())) throw SiteError("no such factor");
  return dims_[k];
}

int TracialSpace::site_local_dim(int site) const {
  if (site < 1 || site > num_sites()) throw SiteError("no such site");
  return dims_[0] * dims_[site];
}

Complex TracialSpace::trace(const Operator& x) const {
  if (x.dim() != total_dim_) throw DimensionError("operator does not live on this space");
  return x.trace_raw() / static_cast<double>(total_dim_);
}

Operator embed(const TracialSpace& space, const SiteOperator& x) {
  const int site = x.site;
  if (site < 1 || site > space.num_sites()) throw SiteError("no such site");
  const int d0 = space.subalgebra_dim();
  const int ds = space.factor_dim(site);
  if (x.local.dim() != d0 * ds)
    throw DimensionError("site operator local dim must be " + std::to_string(d0 * ds));

  // offsets contributed by the factors the operator does not touch
  std::vector<int> rest;
  for (int k = 1; k <= space.num_sites(); ++k)
    if (k != site) rest.push_back(k);
  int d_rest = 1;
  for (int k : rest) d_rest *= space.factor_dim(k);
  std::vector<int> offsets(d_rest, 0);
  {
    int repeat = d_rest;
    for (int k : rest) {
      const int dk = space.factor_dim(k);
      repeat /= dk;
      // digit for factor k cycles with period `repeat`
      for (int m = 0; m < d_rest; ++m)
        offsets[m] += ((m / repeat) % dk) * space.stride(k);
    }
  }

  const int s0 = space.stride(0);
  const int ss = space.stride(site);
  Operator r(space.total_dim());
  for (int i0 = 0; i0 < d0; ++i0)
    for (int is = 0; is < ds; ++is)
      for (int j0 = 0; j0 < d0; ++j0)
        for (int js = 0; js < ds; ++js) {
          const Complex val = x.local.at(i0 * ds + is, j0 * ds + js);
          if (val == Complex(0.0, 0.0)) continue;
          const int row_base = i0 * s0 + is * ss;
          const int col_base = j0 * s0 + js * ss;
          for (int off : offsets) r.at(row_base + off, col_base + off) = val;
        }
  return r;
}

Operator embed_sum(const TracialSpace& space, const std::vector<SiteOperator>& xs) {
  Operator s(space.total_dim());
  for (const SiteOperator& x : xs) s += embed(space, x);
  return s;
}

Operator conditional_expectation(const TracialSpace& space, const Operator& x) {
  if (x.dim() != space.total_dim()) throw DimensionError("operator does not live on this space");
  const int d0 = space.subalgebra_dim();
  const int d_rest = space.total_dim() / d0;
  Operator y(d0);
  for (int i0 = 0; i0 < d0; ++i0)
    for (int j0 = 0; j0 < d0; ++j0) {
      Complex s(0.0, 0.0);
      for (int m = 0; m < d_rest; ++m) s += x.at(i0 * d_rest + m, j0 * d_rest + m);
      y.at(i0, j0) = s / static_cast<double>(d_rest);
    }
  return kron(y, Operator::identity(d_rest));
}

Operator conditional_expectation_site(const TracialSpace& space, const SiteOperator& x) {
  const int site = x.site;
  if (site < 1 || site > space.num_sites()) throw SiteError("no such site");
  const int d0 = space.subalgebra_dim();
  const int ds = space.factor_dim(site);
  if (x.local.dim() != d0 * ds)
    throw DimensionError("site operator local dim must be " + std::to_string(d0 * ds));
  Operator y(d0);
  for (int i0 = 0; i0 < d0; ++i0)
    for (int j0 = 0; j0 < d0; ++j0) {
      Complex s(0.0, 0.0);
      for (int k = 0; k < ds; ++k) s += x.local.at(i0 * ds + k, j0 * ds + k);
      y.at(i0, j0) = s / static_cast<double>(ds);
    }
  return y;
}

Complex site_trace(const TracialSpace& space, const SiteOperator& x) {
  const int d = space.site_local_dim(x.site);
  if (x.local.dim() != d) throw DimensionError("site operator local dim must be " + std::to_string(d));
  return x.local.trace_raw() / static_cast<double>(d);
}

namespace {

// random element of the factor-0 subalgebra
Operator random_subalgebra_element(const TracialSpace& space, RngStream& rng) {
  Operator a0 = random_operator(space.subalgebra_dim(), rng);
  return kron(a0, Operator::identity(space.total_dim() / space.subalgebra_dim()));
}

}  // namespace

VerificationReport check_ce_axioms(const TracialSpace& space, int samples, uint64_t seed,
                                   double tol) {
  if (samples < 1) throw ParamError("need at least one sample");
  RngStream root(seed);
  double v_state = std::fabs(space.trace_re(space.identity()) - 1.0);
  double v_tracial = 0.0, v_positive = 0.0, v_contract = 0.0, v_module = 0.0;
  double v_trace = 0.0, v_idem = 0.0, v_fix = 0.0;

  for (int i = 0; i < samples; ++i) {
    RngStream rng = root.split(i);
    const int dim = space.total_dim();
    Operator g = random_operator(dim, rng);
    Operator h = random_operator(dim, rng);

    v_tracial = std::max(v_tracial, std::abs(space.trace(g * h) - space.trace(h * g)));

    Operator pos = g.adjoint() * g;
    Operator ce_pos = conditional_expectation(space, pos);
    OrderWitness w = operator_leq(SelfAdjointOperator::zero(dim),
                                  SelfAdjointOperator(ce_pos), tol);
    v_positive = std::max(v_positive, std::max(0.0, -w.min_eigenvalue));

    Operator ce_g = conditional_expectation(space, g);
    v_contract = std::max(v_contract, std::max(0.0, operator_norm(ce_g) - operator_norm(g)));

    Operator a = random_subalgebra_element(space, rng);
    Operator b = random_subalgebra_element(space, rng);
    v_module = std::max(v_module,
                         max_entry_distance(conditional_expectation(space, a * g * b),
                                            a * ce_g * b));
    v_fix = std::max(v_fix, max_entry_distance(conditional_expectation(space, a), a));

    v_trace = std::max(v_trace, std::abs(space.trace(ce_g) - space.trace(g)));
    v_idem = std::max(v_idem, max_entry_distance(conditional_expectation(space, ce_g), ce_g));
  }

  const double worst = std::max({v_state, v_tracial, v_positive, v_contract, v_module,
                                 v_trace, v_idem, v_fix});
  return VerificationReport::make(
      "ce-axioms", worst, tol, 0.0,
      {{"samples", static_cast<double>(samples)},
       {"dim", static_cast<double>(space.total_dim())},
       {"seed", static_cast<double>(seed)}},
      {{"state_normalized", v_state},
       {"tracial", v_tracial},
       {"positivity", v_positive},
       {"contraction", v_contract},
       {"bimodule", v_module},
       {"fixes_subalgebra", v_fix},
       {"trace_preserving", v_trace},
       {"idempotent", v_idem}});
}

VerificationReport check_successive_independence(const TracialSpace& space, int split,
                                                 int samples, uint64_t seed, double tol) {
  if (split < 1 || split >= space.num_sites())
    throw SiteError("split must leave at least one site on each side");
  if (samples < 1) throw ParamError("need at least one sample");
  RngStream root(seed);
  double worst = 0.0;

  for (int i = 0; i < samples; ++i) {
    RngStream rng = root.split(i);
    // x: product of a few embedded operators at sites <= split
    const int len = 1 + static_cast<int>(rng.next_u64() % 3);
    Operator x = Operator::identity(space.total_dim());
    for (int l = 0; l < len; ++l) {
      const int site = 1 + static_cast<int>(rng.next_u64() % split);
      Operator loc = random_operator(space.site_local_dim(site), rng);
      loc *= Complex(1.0 / std::max(loc.frobenius_norm() /
                                        std::sqrt(static_cast<double>(loc.dim())),
                                    1e-12),
                     0.0);
      x = x * embed(space, {site, loc});
    }
    const int right = split + 1;
    Operator y = embed(space, {right, random_operator(space.site_local_dim(right), rng)});

    Operator lhs = conditional_expectation(space, x * y);
    Operator rhs = conditional_expectation(space, x) * conditional_expectation(space, y);
    worst = std::max(worst, max_entry_distance(lhs, rhs));
  }

  return VerificationReport::make(
      "independence", worst, tol, 0.0,
      {{"samples", static_cast<double>(samples)},
       {"split", static_cast<double>(split)},
       {"dim", static_cast<double>(space.total_dim())},
       {"seed", static_cast<double>(seed)}},
      {{"max_violation", worst}});
}

}  // namespace ncprob

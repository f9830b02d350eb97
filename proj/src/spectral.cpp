#include "ncprob/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ncprob {

namespace {

double offdiag_frobenius(const Operator& a) {
  const int n = a.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += 2.0 * std::norm(a.at(i, j));
  return std::sqrt(s);
}

}  // namespace

SpectralDecomposition eig_hermitian(const SelfAdjointOperator& x, int max_sweeps) {
  const int n = x.dim();
  Operator a = x.op();
  Operator v = Operator::identity(n);

  const double target = 1e-14 * a.frobenius_norm();
  bool converged = offdiag_frobenius(a) <= target;

  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a.at(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const Complex u = apq / r;
        const double kappa = (app - aqq) / (2.0 * r);
        double t;
        if (kappa == 0.0) {
          t = 1.0;
        } else {
          t = (kappa > 0.0 ? 1.0 : -1.0) / (std::abs(kappa) + std::sqrt(kappa * kappa + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex su = s * u;
        const Complex suc = s * std::conj(u);

        // rows p and q of U* A
        for (int k = 0; k < n; ++k) {
          const Complex t1 = a.at(p, k);
          const Complex t2 = a.at(q, k);
          a.at(p, k) = c * t1 + su * t2;
          a.at(q, k) = -suc * t1 + c * t2;
        }
        // columns p and q of (U* A) U
        for (int k = 0; k < n; ++k) {
          const Complex t1 = a.at(k, p);
          const Complex t2 = a.at(k, q);
          a.at(k, p) = c * t1 + suc * t2;
          a.at(k, q) = -su * t1 + c * t2;
        }
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        a.at(p, p) = a.at(p, p).real();
        a.at(q, q) = a.at(q, q).real();

        // accumulate V <- V U
        for (int k = 0; k < n; ++k) {
          const Complex t1 = v.at(k, p);
          const Complex t2 = v.at(k, q);
          v.at(k, p) = c * t1 + suc * t2;
          v.at(k, q) = -su * t1 + c * t2;
        }
      }
    }
    converged = offdiag_frobenius(a) <= target;
  }
  if (!converged)
    throw ConvergenceError("jacobi eigensolver did not converge in " +
                           std::to_string(max_sweeps) + " sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a.at(i, i).real() < a.at(j, j).real(); });

  SpectralDecomposition dec{std::vector<double>(n), Operator(n)};
  for (int col = 0; col < n; ++col) {
    const int src = order[col];
    dec.eigenvalues[col] = a.at(src, src).real();
    // phase convention: first component of magnitude > 1e-12 made real positive
    Complex phase(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
      const Complex vk = v.at(k, src);
      if (std::abs(vk) > 1e-12) {
        phase = std::conj(vk) / std::abs(vk);
        break;
      }
    }
    for (int k = 0; k < n; ++k) dec.eigenvectors.at(k, col) = v.at(k, src) * phase;
  }
  return dec;
}

Operator SpectralDecomposition::apply(const std::function<double(double)>& f) const {
  const int n = eigenvectors.dim();
  std::vector<double> fv(n);
  for (int k = 0; k < n; ++k) {
    fv[k] = f(eigenvalues[k]);
    if (!std::isfinite(fv[k]))
      throw DomainError("functional calculus produced a non-finite value at eigenvalue " +
                        std::to_string(eigenvalues[k]));
  }
  // W = U diag(f), result = W U*
  Operator w = eigenvectors;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) w.at(i, k) *= fv[k];
  return w * eigenvectors.adjoint();
}

Operator SpectralDecomposition::reconstruct() const {
  return apply([](double l) { return l; });
}

bool Interval::contains(double lambda, double eig_tol) const {
  if (std::isfinite(lo.value)) {
    if (lo.closed) {
      if (!(lambda >= lo.value - eig_tol)) return false;
    } else {
      if (!(lambda > lo.value + eig_tol)) return false;
    }
  }
  if (std::isfinite(hi.value)) {
    if (hi.closed) {
      if (!(lambda <= hi.value + eig_tol)) return false;
    } else {
      if (!(lambda < hi.value - eig_tol)) return false;
    }
  }
  return true;
}

IntervalSet::IntervalSet(std::initializer_list<Interval> intervals)
    : IntervalSet(std::vector<Interval>(intervals)) {}

IntervalSet::IntervalSet(std::vector<Interval> intervals) : v_(std::move(intervals)) {
  for (const Interval& iv : v_) {
    if (std::isnan(iv.lo.value) || std::isnan(iv.hi.value))
      throw ParamError("interval endpoints must not be NaN");
    if (iv.lo.value > iv.hi.value) throw ParamError("interval endpoints out of order");
    if (iv.lo.value == iv.hi.value && !(iv.lo.closed && iv.hi.closed))
      throw ParamError("degenerate interval must be closed on both sides");
  }
  std::stable_sort(v_.begin(), v_.end(),
                   [](const Interval& a, const Interval& b) { return a.lo.value < b.lo.value; });
  for (size_t k = 0; k + 1 < v_.size(); ++k) {
    if (v_[k].hi.value > v_[k + 1].lo.value ||
        (v_[k].hi.value == v_[k + 1].lo.value && v_[k].hi.closed && v_[k + 1].lo.closed))
      throw ParamError("intervals must be disjoint");
  }
}

IntervalSet IntervalSet::ray_from(double t, bool closed) {
  return IntervalSet{
      Interval{{t, closed}, {std::numeric_limits<double>::infinity(), false}}};
}

IntervalSet IntervalSet::ray_below(double t, bool closed) {
  return IntervalSet{
      Interval{{-std::numeric_limits<double>::infinity(), false}, {t, closed}}};
}

IntervalSet IntervalSet::segment(double a, bool a_closed, double b, bool b_closed) {
  return IntervalSet{Interval{{a, a_closed}, {b, b_closed}}};
}

IntervalSet IntervalSet::whole_line() {
  return IntervalSet{Interval{{-std::numeric_limits<double>::infinity(), false},
                              {std::numeric_limits<double>::infinity(), false}}};
}

bool IntervalSet::contains(double lambda, double eig_tol) const {
  for (const Interval& iv : v_)
    if (iv.contains(lambda, eig_tol)) return true;
  return false;
}

double ScalarMeasure::total_mass() const {
  double s = 0.0;
  for (const Atom& a : atoms) s += a.mass;
  return s;
}

double ScalarMeasure::integrate(const std::function<double(double)>& f) const {
  double s = 0.0;
  for (const Atom& a : atoms) {
    const double fv = f(a.value);
    if (!std::isfinite(fv))
      throw DomainError("measure integrand non-finite at " + std::to_string(a.value));
    s += fv * a.mass;
  }
  return s;
}

Operator functional_calculus(const SelfAdjointOperator& x,
                             const std::function<double(double)>& f) {
  return eig_hermitian(x).apply(f);
}

Operator matrix_exp(const SelfAdjointOperator& x) {
  return functional_calculus(x, [](double l) { return std::exp(l); });
}

Projection spectral_projection(const SelfAdjointOperator& x, const IntervalSet& B,
                               double eig_tol) {
  SpectralDecomposition dec = eig_hermitian(x);
  Operator p = dec.apply([&B, eig_tol](double l) { return B.contains(l, eig_tol) ? 1.0 : 0.0; });
  return Projection(SelfAdjointOperator(p));
}

SelfAdjointOperator modulus(const Operator& x, double psd_tol) {
  const double eps = 1e-12 * x.dim() * std::max(x.max_abs(), 1e-300);
  if (x.is_hermitian(eps)) {
    // fast path: |x| = U |Lambda| U*
    SpectralDecomposition dec = eig_hermitian(SelfAdjointOperator(x));
    return SelfAdjointOperator(dec.apply([](double l) { return std::fabs(l); }));
  }
  SpectralDecomposition dec = eig_hermitian(selfadjoint_unchecked(x.adjoint() * x));
  return SelfAdjointOperator(dec.apply([psd_tol](double l) {
    if (l < -psd_tol)
      throw PositivityError("x*x eigenvalue " + std::to_string(l) + " below -psd_tol");
    return std::sqrt(std::max(l, 0.0));
  }));
}

double operator_norm(const SelfAdjointOperator& x) {
  SpectralDecomposition dec = eig_hermitian(x);
  return std::max(std::fabs(dec.eigenvalues.front()), std::fabs(dec.eigenvalues.back()));
}

double operator_norm(const Operator& x) {
  const double eps = 1e-12 * x.dim() * std::max(x.max_abs(), 1e-300);
  if (x.is_hermitian(eps)) return operator_norm(SelfAdjointOperator(x));
  SpectralDecomposition dec = eig_hermitian(selfadjoint_unchecked(x.adjoint() * x));
  return std::sqrt(std::max(dec.eigenvalues.back(), 0.0));
}

double tail_from_eigenvalues(const std::vector<double>& eigenvalues, double t, double eig_tol) {
  if (eigenvalues.empty()) throw ParamError("empty eigenvalue list");
  size_t count = 0;
  for (double l : eigenvalues)
    if (l >= t - eig_tol) ++count;
  return static_cast<double>(count) / static_cast<double>(eigenvalues.size());
}

double tail_prob(const TracialSpace& space, const SelfAdjointOperator& x, double t,
                 double eig_tol) {
  if (x.dim() != space.total_dim())
    throw DimensionError("operator does not live on the given space");
  SpectralDecomposition dec = eig_hermitian(x);
  return tail_from_eigenvalues(dec.eigenvalues, t, eig_tol);
}

ScalarMeasure scalar_spectral_measure(const TracialSpace& space, const SelfAdjointOperator& x,
                                      double eig_tol) {
  if (x.dim() != space.total_dim())
    throw DimensionError("operator does not live on the given space");
  SpectralDecomposition dec = eig_hermitian(x);
  const double scale =
      1.0 + std::max(std::fabs(dec.eigenvalues.front()), std::fabs(dec.eigenvalues.back()));
  const double gap = eig_tol * scale;
  const double unit = 1.0 / static_cast<double>(x.dim());

  ScalarMeasure m;
  size_t i = 0;
  while (i < dec.eigenvalues.size()) {
    size_t j = i + 1;
    double sum = dec.eigenvalues[i];
    while (j < dec.eigenvalues.size() && dec.eigenvalues[j] - dec.eigenvalues[j - 1] <= gap) {
      sum += dec.eigenvalues[j];
      ++j;
    }
    m.atoms.push_back({sum / static_cast<double>(j - i), unit * static_cast<double>(j - i)});
    i = j;
  }
  return m;
}

double schatten_norm(const TracialSpace& space, const Operator& x, double p) {
  if (!(p >= 1.0)) throw ParamError("schatten norm requires p >= 1");
  if (x.dim() != space.total_dim())
    throw DimensionError("operator does not live on the given space");
  const double eps = 1e-12 * x.dim() * std::max(x.max_abs(), 1e-300);
  std::vector<double> sv;
  if (x.is_hermitian(eps)) {
    SpectralDecomposition dec = eig_hermitian(SelfAdjointOperator(x));
    sv.reserve(dec.eigenvalues.size());
    for (double l : dec.eigenvalues) sv.push_back(std::fabs(l));
  } else {
    SpectralDecomposition dec = eig_hermitian(selfadjoint_unchecked(x.adjoint() * x));
    sv.reserve(dec.eigenvalues.size());
    for (double l : dec.eigenvalues) sv.push_back(std::sqrt(std::max(l, 0.0)));
  }
  double s = 0.0;
  for (double v : sv) s += std::pow(v, p);
  return std::pow(s / static_cast<double>(x.dim()), 1.0 / p);
}

double layer_cake_norm_pth_power(const TracialSpace& space, const SelfAdjointOperator& x,
                                 double p, double psd_tol) {
  if (!(p >= 1.0)) throw ParamError("layer-cake norm requires p >= 1");
  if (x.dim() != space.total_dim())
    throw DimensionError("operator does not live on the given space");
  SpectralDecomposition dec = eig_hermitian(x);
  std::vector<double> ev = dec.eigenvalues;
  if (ev.front() < -psd_tol)
    throw PositivityError("layer-cake norm needs a positive operator; min eigenvalue " +
                          std::to_string(ev.front()));
  for (double& l : ev) l = std::max(l, 0.0);

  // tau(chi_[t,inf)) is constant between consecutive eigenvalues, so each
  // segment contributes (count/D) * (hi^p - lo^p) exactly.
  const int n = static_cast<int>(ev.size());
  double total = 0.0;
  double prev = 0.0;
  for (int k = 0; k < n; ++k) {
    const double hi = ev[k];
    if (hi > prev) {
      const double frac = static_cast<double>(n - k) / static_cast<double>(n);
      total += frac * (std::pow(hi, p) - std::pow(prev, p));
      prev = hi;
    }
  }
  return total;
}

SelfAdjointOperator truncate(const SelfAdjointOperator& x, double s, double eig_tol) {
  SpectralDecomposition dec = eig_hermitian(x);
  return SelfAdjointOperator(
      dec.apply([s, eig_tol](double l) { return l <= s + eig_tol ? l : 0.0; }));
}

double nudge_off_spectrum(double t, const std::vector<double>& eigenvalues, double eig_tol) {
  auto near = [&](double v) {
    for (double l : eigenvalues)
      if (std::fabs(v - l) <= eig_tol) return true;
    return false;
  };
  int guard = 0;
  while (near(t) && guard++ < 64) t += 1e-6;
  return t;
}

OrderWitness operator_leq(const SelfAdjointOperator& x, const SelfAdjointOperator& y,
                          double tol) {
  SpectralDecomposition dec = eig_hermitian(y - x);
  OrderWitness w;
  w.min_eigenvalue = dec.eigenvalues.front();
  w.holds = w.min_eigenvalue >= -tol;
  return w;
}

}  // namespace ncprob

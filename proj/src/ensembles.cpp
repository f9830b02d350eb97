#include "ncprob/ensembles.hpp"

#include <cmath>
#include <numbers>

#include "ncprob/spectral.hpp"

namespace ncprob {

namespace {

// splitmix64 finalizer
uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

constexpr uint64_t kWeyl = 0x9E3779B97F4A7C15ull;  // golden-ratio increment

}  // namespace

RngStream RngStream::split(uint64_t index) const {
  return RngStream(mix64(state_ + kWeyl * (index + 1) + 0x632BE59BD9B4E019ull));
}

uint64_t RngStream::next_u64() {
  state_ += kWeyl;
  return mix64(state_);
}

double RngStream::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_uniform(double a, double b) {
  if (!(a < b)) throw ParamError("uniform range requires a < b");
  return a + (b - a) * next_uniform();
}

double RngStream::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u kept away from 0
  const double u = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  const double v = next_uniform();
  const double rad = std::sqrt(-2.0 * std::log(u));
  const double ang = 2.0 * std::numbers::pi * v;
  spare_ = rad * std::sin(ang);
  have_spare_ = true;
  return rad * std::cos(ang);
}

Complex RngStream::next_gaussian_complex() {
  const double re = next_gaussian();
  const double im = next_gaussian();
  return Complex(re, im) * std::sqrt(0.5);
}

Operator random_operator(int dim, RngStream& rng) {
  Operator x(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) x.at(i, j) = rng.next_gaussian_complex();
  return x;
}

Operator random_unitary(int dim, RngStream& rng) {
  Operator g = random_operator(dim, rng);
  // modified Gram-Schmidt; diagonal of R positive so the result is unique
  for (int col = 0; col < dim; ++col) {
    for (int prev = 0; prev < col; ++prev) {
      Complex proj(0.0, 0.0);
      for (int k = 0; k < dim; ++k) proj += std::conj(g.at(k, prev)) * g.at(k, col);
      for (int k = 0; k < dim; ++k) g.at(k, col) -= proj * g.at(k, prev);
    }
    double nrm = 0.0;
    for (int k = 0; k < dim; ++k) nrm += std::norm(g.at(k, col));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12) throw ConvergenceError("gram-schmidt hit a degenerate column");
    for (int k = 0; k < dim; ++k) g.at(k, col) *= (1.0 / nrm);
  }
  return g;
}

namespace {

SelfAdjointOperator conjugate_diagonal(const std::vector<double>& lambda, RngStream& rng) {
  const int dim = static_cast<int>(lambda.size());
  Operator u = random_unitary(dim, rng);
  Operator w = u;
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < dim; ++i) w.at(i, k) *= lambda[k];
  return selfadjoint_unchecked(w * u.adjoint());
}

// Shifts values toward mean mu without leaving [a, b]: subtracts the excess
// mean weighted by each value's headroom, which keeps bounds exact and makes
// the mean exactly mu up to one rounding.
void pin_mean(std::vector<double>& v, double a, double b, double mu) {
  const int n = static_cast<int>(v.size());
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= n;
  const double excess = mean - mu;
  if (excess == 0.0) return;
  double head = 0.0;
  if (excess > 0.0) {
    for (double x : v) head += x - a;
    if (head <= 0.0) throw ParamError("mean target below reachable range");
    for (double& x : v) x -= excess * n * (x - a) / head;
  } else {
    for (double x : v) head += b - x;
    if (head <= 0.0) throw ParamError("mean target above reachable range");
    for (double& x : v) x += (-excess) * n * (b - x) / head;
  }
}

}  // namespace

SelfAdjointOperator random_bounded_selfadjoint(int dim, double a, double b, RngStream& rng) {
  if (!(a < b)) throw ParamError("bounds require a < b");
  std::vector<double> lambda(dim);
  for (double& l : lambda) l = rng.next_uniform(a, b);
  return conjugate_diagonal(lambda, rng);
}

SelfAdjointOperator random_bounded_mean(int dim, double a, double b, double mu, RngStream& rng) {
  if (!(a < b)) throw ParamError("bounds require a < b");
  if (!(a <= mu && mu <= b)) throw ParamError("mean must lie inside [a, b]");
  std::vector<double> lambda(dim);
  for (double& l : lambda) l = rng.next_uniform(a, b);
  pin_mean(lambda, a, b, mu);
  return conjugate_diagonal(lambda, rng);
}

CenteredSample random_centered(int dim, double m_bound, double r, RngStream& rng) {
  if (!(m_bound > 0.0)) throw ParamError("norm bound must be positive");
  if (!(r >= 1.0 && r <= 2.0)) throw ParamError("moment order must lie in [1, 2]");
  std::vector<double> lambda(dim);
  for (double& l : lambda) l = rng.next_uniform(-m_bound, m_bound);
  pin_mean(lambda, -m_bound, m_bound, 0.0);
  double moment = 0.0;
  for (double l : lambda) moment += std::pow(std::fabs(l), r);
  moment /= dim;
  CenteredSample out{conjugate_diagonal(lambda, rng), std::pow(moment, 1.0 / r)};
  return out;
}

SiteOperator random_centered_site(const TracialSpace& space, int site, double m_bound,
                                  RngStream& rng) {
  if (!(m_bound > 0.0)) throw ParamError("norm bound must be positive");
  if (site < 1 || site > space.num_sites()) throw SiteError("site index out of range");
  const int d0 = space.subalgebra_dim();
  const int dj = space.factor_dim(site);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Operator w = random_bounded_selfadjoint(d0 * dj, -1.0, 1.0, rng).op();
    Operator y(d0);
    for (int i0 = 0; i0 < d0; ++i0)
      for (int j0 = 0; j0 < d0; ++j0) {
        Complex s(0.0, 0.0);
        for (int m = 0; m < dj; ++m) s += w.at(i0 * dj + m, j0 * dj + m);
        y.at(i0, j0) = s / static_cast<double>(dj);
      }
    Operator x = w - kron(y, Operator::identity(dj));
    if (x.frobenius_norm() < 1e-12) continue;
    double norm = operator_norm(SelfAdjointOperator(x));
    return SiteOperator{site, (m_bound / norm) * x};
  }
  throw ConvergenceError("centered site draw degenerated repeatedly");
}

std::vector<SiteOperator> bernoulli_diagonal(int n) {
  if (n < 1) throw ParamError("need at least one site");
  const std::vector<double> sign{1.0, -1.0};
  std::vector<SiteOperator> xs;
  xs.reserve(n);
  for (int j = 1; j <= n; ++j) xs.push_back({j, Operator::diagonal(sign)});
  return xs;
}

Projection random_projection(int dim, int rank, RngStream& rng) {
  if (rank < 0 || rank > dim) throw ParamError("rank out of range");
  Operator u = random_unitary(dim, rng);
  Operator w = u;
  for (int k = 0; k < dim; ++k) {
    const double d = k < rank ? 1.0 : 0.0;
    for (int i = 0; i < dim; ++i) w.at(i, k) *= d;
  }
  return Projection(SelfAdjointOperator(w * u.adjoint()));
}

}  // namespace ncprob

#include "ncprob/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ncprob {

void ToleranceConfig::validate() const {
  auto bad = [](double v) { return !(v > 0.0) || !std::isfinite(v); };
  if (bad(eig_tol) || bad(sym_tol) || bad(psd_tol) || bad(quad_tol) || bad(slack_tol))
    throw ParamError("tolerances must be finite and strictly positive");
}

static void check_dim(int dim) {
  if (dim < 1) throw SizeError("operator dimension must be >= 1");
  if (dim > kMaxDim) throw SizeError("operator dimension exceeds cap " + std::to_string(kMaxDim));
}

Operator::Operator(int dim) : dim_(dim) {
  check_dim(dim);
  a_.assign(static_cast<size_t>(dim) * dim, Complex(0.0, 0.0));
}

Operator::Operator(int dim, std::vector<Complex> entries) : dim_(dim), a_(std::move(entries)) {
  check_dim(dim);
  if (a_.size() != static_cast<size_t>(dim) * dim)
    throw DimensionError("entry count does not match dim*dim");
  check_finite();
}

Operator Operator::identity(int dim) {
  Operator x(dim);
  for (int i = 0; i < dim; ++i) x.at(i, i) = 1.0;
  return x;
}

Operator Operator::diagonal(std::span<const double> d) {
  Operator x(static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) x.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  x.check_finite();
  return x;
}

Operator Operator::diagonal(std::span<const Complex> d) {
  Operator x(static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) x.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  x.check_finite();
  return x;
}

Operator Operator::adjoint() const {
  Operator r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

Complex Operator::trace_raw() const {
  Complex t(0.0, 0.0);
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double Operator::max_abs() const {
  double m = 0.0;
  for (const Complex& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Operator::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double Operator::hermiticity_defect() const {
  double m = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      m = std::max(m, std::abs(at(i, j) - std::conj(at(j, i))));
  return m;
}

void Operator::check_finite() const {
  for (const Complex& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DomainError("operator entries must be finite");
}

static void check_same_dim(const Operator& x, const Operator& y) {
  if (x.dim() != y.dim())
    throw DimensionError("operand dimensions disagree: " + std::to_string(x.dim()) + " vs " +
                         std::to_string(y.dim()));
}

Operator& Operator::operator+=(const Operator& o) {
  check_same_dim(*this, o);
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  check_same_dim(*this, o);
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Operator& Operator::operator*=(Complex c) {
  for (Complex& v : a_) v *= c;
  return *this;
}

Operator operator+(const Operator& x, const Operator& y) {
  Operator r = x;
  r += y;
  return r;
}

Operator operator-(const Operator& x, const Operator& y) {
  Operator r = x;
  r -= y;
  return r;
}

Operator operator*(const Operator& x, const Operator& y) {
  check_same_dim(x, y);
  const int n = x.dim();
  Operator r(n);
  // i-k-j loop order keeps the inner accesses contiguous in row-major storage
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex xik = x.at(i, k);
      if (xik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  }
  return r;
}

Operator operator*(Complex c, const Operator& x) {
  Operator r = x;
  r *= c;
  return r;
}

Operator operator*(double c, const Operator& x) { return Complex(c, 0.0) * x; }

double max_entry_distance(const Operator& x, const Operator& y) {
  check_same_dim(x, y);
  double m = 0.0;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) m = std::max(m, std::abs(x.at(i, j) - y.at(i, j)));
  return m;
}

Operator kron(const Operator& a, const Operator& b) {
  const long long prod = static_cast<long long>(a.dim()) * b.dim();
  if (prod > kMaxDim)
    throw SizeError("kron result dimension " + std::to_string(prod) + " exceeds cap " +
                    std::to_string(kMaxDim));
  const int da = a.dim(), db = b.dim();
  Operator r(static_cast<int>(prod));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      const Complex aij = a.at(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l) r.at(i * db + k, j * db + l) = aij * b.at(k, l);
    }
  return r;
}

SelfAdjointOperator::SelfAdjointOperator(const Operator& x, double sym_tol) : op_(x.dim()) {
  const double eps = sym_tol * x.dim() * std::max(x.max_abs(), 1e-300);
  const double defect = x.hermiticity_defect();
  if (defect > eps)
    throw SymmetryError("hermiticity defect " + std::to_string(defect) + " exceeds " +
                        std::to_string(eps));
  for (int i = 0; i < x.dim(); ++i) {
    op_.at(i, i) = Complex(x.at(i, i).real(), 0.0);
    for (int j = i + 1; j < x.dim(); ++j) {
      const Complex v = 0.5 * (x.at(i, j) + std::conj(x.at(j, i)));
      op_.at(i, j) = v;
      op_.at(j, i) = std::conj(v);
    }
  }
}

SelfAdjointOperator SelfAdjointOperator::diagonal(std::span<const double> d) {
  return selfadjoint_unchecked(Operator::diagonal(d));
}

SelfAdjointOperator SelfAdjointOperator::identity(int dim) {
  return selfadjoint_unchecked(Operator::identity(dim));
}

SelfAdjointOperator SelfAdjointOperator::zero(int dim) {
  return selfadjoint_unchecked(Operator(dim));
}

SelfAdjointOperator SelfAdjointOperator::operator+(const SelfAdjointOperator& o) const {
  return selfadjoint_unchecked(op_ + o.op_);
}

SelfAdjointOperator SelfAdjointOperator::operator-(const SelfAdjointOperator& o) const {
  return selfadjoint_unchecked(op_ - o.op_);
}

SelfAdjointOperator SelfAdjointOperator::scaled(double c) const {
  return selfadjoint_unchecked(c * op_);
}

SelfAdjointOperator selfadjoint_unchecked(Operator x) {
  return SelfAdjointOperator(std::move(x), SelfAdjointOperator::Trusted{});
}

}  // namespace ncprob

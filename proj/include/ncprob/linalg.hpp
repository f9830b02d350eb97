#pragma once

// Dense complex matrices sized for desk-scale tensor products, plus the
// operator order x <= y decided through the minimum eigenvalue of y - x.

#include <complex>
#include <span>
#include <vector>

#include "ncprob/errors.hpp"

namespace ncprob {

using Complex = std::complex<double>;

// Hard cap on matrix dimension; tensor products beyond this are refused.
inline constexpr int kMaxDim = 4096;

// Tolerances shared across the library. All must be strictly positive.
struct ToleranceConfig {
  double eig_tol = 1e-10;    // band around interval endpoints for spectral cuts
  double sym_tol = 1e-12;    // factor in eps = sym_tol * dim * max|entry|
  double psd_tol = 1e-10;    // how negative an eigenvalue may be and still count as >= 0
  double quad_tol = 1e-9;    // target absolute error for quadrature cross-checks
  double slack_tol = 1e-8;   // default slack for inequality verification
  void validate() const;
};

// Square complex matrix, row-major dense storage. Entries must stay finite;
// constructors and factories reject NaN/Inf.
class Operator {
 public:
  explicit Operator(int dim);
  Operator(int dim, std::vector<Complex> entries);

  static Operator identity(int dim);
  static Operator diagonal(std::span<const double> d);
  static Operator diagonal(std::span<const Complex> d);

  int dim() const { return dim_; }
  Complex& at(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  const Complex& at(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
  std::span<Complex> data() { return a_; }
  std::span<const Complex> data() const { return a_; }

  Operator adjoint() const;
  Complex trace_raw() const;  // plain matrix trace, no normalization
  double max_abs() const;
  double frobenius_norm() const;
  // max_ij |a(i,j) - conj(a(j,i))|
  double hermiticity_defect() const;
  bool is_hermitian(double eps) const { return hermiticity_defect() <= eps; }
  void check_finite() const;

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(Complex c);

  friend Operator operator+(const Operator& x, const Operator& y);
  friend Operator operator-(const Operator& x, const Operator& y);
  friend Operator operator*(const Operator& x, const Operator& y);
  friend Operator operator*(Complex c, const Operator& x);
  friend Operator operator*(double c, const Operator& x);

 private:
  int dim_;
  std::vector<Complex> a_;
};

// max_ij |x(i,j) - y(i,j)|
double max_entry_distance(const Operator& x, const Operator& y);

// Kronecker product; refuses results larger than kMaxDim.
Operator kron(const Operator& a, const Operator& b);

// Self-adjoint operator. Construction checks the hermiticity defect against
// eps = sym_tol * dim * max|entry| and stores the symmetrization (x + x*)/2.
class SelfAdjointOperator {
 public:
  explicit SelfAdjointOperator(const Operator& x, double sym_tol = 1e-12);
  static SelfAdjointOperator diagonal(std::span<const double> d);
  static SelfAdjointOperator identity(int dim);
  static SelfAdjointOperator zero(int dim);

  const Operator& op() const { return op_; }
  int dim() const { return op_.dim(); }

  SelfAdjointOperator operator+(const SelfAdjointOperator& o) const;
  SelfAdjointOperator operator-(const SelfAdjointOperator& o) const;
  SelfAdjointOperator scaled(double c) const;

 private:
  struct Trusted {};
  SelfAdjointOperator(Operator x, Trusted) : op_(std::move(x)) {}
  Operator op_;
  friend SelfAdjointOperator selfadjoint_unchecked(Operator x);
};

// Internal fast path for operators that are self-adjoint by construction.
SelfAdjointOperator selfadjoint_unchecked(Operator x);

struct OrderWitness {
  bool holds = false;
  double min_eigenvalue = 0.0;  // of y - x
};

// Decides x <= y in the positive-semidefinite order: holds iff the minimum
// eigenvalue of y - x is >= -tol. The witness always carries that eigenvalue.
OrderWitness operator_leq(const SelfAdjointOperator& x, const SelfAdjointOperator& y,
                          double tol = 1e-10);

}  // namespace ncprob

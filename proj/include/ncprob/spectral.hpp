#pragma once

// Spectral calculus for self-adjoint operators: a cyclic Jacobi eigensolver,
// functional calculus, spectral projections against interval sets, modulus,
// spectral tails, the scalar spectral measure, and Schatten norms including
// the layer-cake form computed piecewise exactly.

#include <functional>
#include <vector>

#include "ncprob/linalg.hpp"
#include "ncprob/prob_space.hpp"
#include "ncprob/projections.hpp"

namespace ncprob {

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Operator eigenvectors;            // unitary; column k pairs with eigenvalues[k]

  // U f(Lambda) U*; rejects f values that are not finite.
  Operator apply(const std::function<double(double)>& f) const;
  Operator reconstruct() const;
};

// Cyclic Jacobi iteration on a complex Hermitian matrix. Deterministic sweep
// order; converged when the off-diagonal Frobenius mass is <= 1e-14 * ||x||_F;
// throws ConvergenceError after max_sweeps. Eigenvector phases are fixed by
// making the first nonzero component of each column real positive.
SpectralDecomposition eig_hermitian(const SelfAdjointOperator& x, int max_sweeps = 100);

// One endpoint of an interval; infinite endpoints use +-inf and ignore closed.
struct Endpoint {
  double value = 0.0;
  bool closed = true;
};

struct Interval {
  Endpoint lo;
  Endpoint hi;
  // Membership with an eig_tol band: eigenvalues within eig_tol of a closed
  // endpoint count as inside, of an open endpoint as outside.
  bool contains(double lambda, double eig_tol) const;
};

// Finite union of disjoint intervals, kept sorted.
class IntervalSet {
 public:
  IntervalSet(std::initializer_list<Interval> intervals);
  explicit IntervalSet(std::vector<Interval> intervals);

  static IntervalSet ray_from(double t, bool closed = true);    // [t, inf) / (t, inf)
  static IntervalSet ray_below(double t, bool closed = false);  // (-inf, t) / (-inf, t]
  static IntervalSet segment(double a, bool a_closed, double b, bool b_closed);
  static IntervalSet whole_line();

  bool contains(double lambda, double eig_tol) const;
  const std::vector<Interval>& intervals() const { return v_; }

 private:
  std::vector<Interval> v_;
};

// Purely atomic scalar measure: the distribution of x under the trace.
struct ScalarMeasure {
  struct Atom {
    double value = 0.0;
    double mass = 0.0;
  };
  std::vector<Atom> atoms;
  double total_mass() const;
  // integral of f against the measure
  double integrate(const std::function<double(double)>& f) const;
};

Operator functional_calculus(const SelfAdjointOperator& x,
                             const std::function<double(double)>& f);

Operator matrix_exp(const SelfAdjointOperator& x);

// Spectral projection chi_B(x) for an interval set B.
Projection spectral_projection(const SelfAdjointOperator& x, const IntervalSet& B,
                               double eig_tol = 1e-10);

// |x| = (x* x)^{1/2}. Hermitian inputs take the |eigenvalue| fast path;
// eigenvalues of x*x below are clamped at -psd_tol before the square root.
SelfAdjointOperator modulus(const Operator& x, double psd_tol = 1e-10);

// Largest singular value.
double operator_norm(const Operator& x);
double operator_norm(const SelfAdjointOperator& x);

// tau(chi_[t,inf)(x)): fraction of eigenvalues >= t - eig_tol.
double tail_prob(const TracialSpace& space, const SelfAdjointOperator& x, double t,
                 double eig_tol = 1e-10);

// Same tail from precomputed eigenvalues of an operator on `space`.
double tail_from_eigenvalues(const std::vector<double>& eigenvalues, double t,
                             double eig_tol = 1e-10);

// Distribution of x under the normalized trace; eigenvalues closer than
// eig_tol * (1 + max|lambda|) are merged into one atom.
ScalarMeasure scalar_spectral_measure(const TracialSpace& space, const SelfAdjointOperator& x,
                                      double eig_tol = 1e-10);

// ||x||_p = tau(|x|^p)^{1/p} for p >= 1 (ParamError below 1).
double schatten_norm(const TracialSpace& space, const Operator& x, double p);

// ||x||_p^p for positive x through the layer-cake formula
//   integral_0^inf p t^{p-1} tau(chi_[t,inf)(x)) dt,
// evaluated segment by segment with the exact antiderivative. Throws
// PositivityError if x has an eigenvalue below -psd_tol.
double layer_cake_norm_pth_power(const TracialSpace& space, const SelfAdjointOperator& x,
                                 double p, double psd_tol = 1e-10);

// Truncation x chi_(-inf, s](x): keeps eigenvalues <= s (closed endpoint,
// eig_tol band), zeroes the rest.
SelfAdjointOperator truncate(const SelfAdjointOperator& x, double s, double eig_tol = 1e-10);

// Nudges t away from the spectrum: while some eigenvalue is within eig_tol,
// steps t by +1e-6. Keeps verification grids off spectral atoms.
double nudge_off_spectrum(double t, const std::vector<double>& eigenvalues,
                          double eig_tol = 1e-10);

}  // namespace ncprob

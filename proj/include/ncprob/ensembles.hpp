#pragma once

// Deterministic random ensembles. The generator is counter-based (a Weyl
// sequence fed through a 64-bit finalizer), so streams can be split by index
// and every draw is reproducible bit for bit across platforms and thread
// counts. Generators construct hypothesis data exactly: bounded spectra stay
// inside [a, b] by construction and centered spectra have mean exactly zero.

#include <cstdint>
#include <vector>

#include "ncprob/linalg.hpp"
#include "ncprob/projections.hpp"
#include "ncprob/prob_space.hpp"

namespace ncprob {

class RngStream {
 public:
  explicit RngStream(uint64_t seed) : state_(seed) {}

  // Independent child stream for a trial or site index.
  RngStream split(uint64_t index) const;

  uint64_t next_u64();
  double next_uniform();  // [0, 1)
  double next_uniform(double a, double b);
  double next_gaussian();
  Complex next_gaussian_complex();

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Matrix with independent standard complex Gaussian entries.
Operator random_operator(int dim, RngStream& rng);

// Haar-like unitary: Gram-Schmidt of a Gaussian matrix with positive
// normalization, columns deterministic given the stream.
Operator random_unitary(int dim, RngStream& rng);

// Self-adjoint with eigenvalues drawn uniformly from [a, b]; satisfies
// a*1 <= x <= b*1 by construction.
SelfAdjointOperator random_bounded_selfadjoint(int dim, double a, double b, RngStream& rng);

// Same, with the eigenvalue mean pinned to mu (normalized trace == mu).
SelfAdjointOperator random_bounded_mean(int dim, double a, double b, double mu, RngStream& rng);

struct CenteredSample {
  SelfAdjointOperator x;
  double moment_bound = 0.0;  // (tau|x|^r)^(1/r), so the moment hypothesis is tight
};

// Self-adjoint with ||x|| <= m_bound and normalized trace exactly zero.
CenteredSample random_centered(int dim, double m_bound, double r, RngStream& rng);

// Site operator with conditional expectation zero as a matrix (not merely
// trace zero) and ||x|| = m_bound: a bounded draw minus its conditional
// expectation, rescaled.
SiteOperator random_centered_site(const TracialSpace& space, int site, double m_bound,
                                  RngStream& rng);

// Sites j = 1..n carrying diag(1, -1) on a dim-2 factor (for the scalar
// subalgebra space (1, 2, 2, ..., 2)).
std::vector<SiteOperator> bernoulli_diagonal(int n);

// Rank-`rank` orthogonal projection in dimension dim.
Projection random_projection(int dim, int rank, RngStream& rng);

}  // namespace ncprob

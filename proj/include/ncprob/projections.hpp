#pragma once

// Orthogonal projections and their lattice. Joins are computed from the range
// of p + q through a spectral cut; meets by De Morgan. Equivalence of
// projections is certified through trace equality (finite factor).

#include <vector>

#include "ncprob/linalg.hpp"
#include "ncprob/prob_space.hpp"
#include "ncprob/verification.hpp"

namespace ncprob {

// Eigenvalues of p + q below this fraction of the largest one are treated as
// zero when deciding the range of a join.
inline constexpr double kRankTol = 1e-8;

class Projection {
 public:
  // Requires p = p* and p*p = p within tol (max entry distance).
  explicit Projection(const SelfAdjointOperator& p, double tol = 1e-10);

  static Projection zero(int dim);
  static Projection identity(int dim);

  const Operator& op() const { return p_.op(); }
  const SelfAdjointOperator& sa() const { return p_; }
  int dim() const { return p_.dim(); }
  int rank() const;  // round(Tr p)

  Projection complement() const;  // 1 - p

 private:
  struct Trusted {};
  Projection(SelfAdjointOperator p, Trusted) : p_(std::move(p)) {}
  SelfAdjointOperator p_;
  friend Projection projection_unchecked(SelfAdjointOperator p);
};

Projection projection_unchecked(SelfAdjointOperator p);

// Projection onto range(p) + range(q).
Projection lattice_join(const Projection& p, const Projection& q);
// Projection onto range(p) ∩ range(q), computed as 1 - join(1-p, 1-q).
Projection lattice_meet(const Projection& p, const Projection& q);

Projection lattice_join(const std::vector<Projection>& ps);
Projection lattice_meet(const std::vector<Projection>& ps);

// Checks, on one pair and one family:
//  (a) tau(p v q - q) = tau(p - p ^ q)           (trace form of equivalence)
//  (b) p ^ q = 0 implies rank(p) <= rank(1 - q)  (subequivalence consequence)
//  (c) tau(v family) <= sum tau(p_k)             (subadditivity)
// plus De Morgan consistency. Witness carries per-check violations.
VerificationReport lemma_lattice_suite(const TracialSpace& space, const Projection& p,
                                       const Projection& q,
                                       const std::vector<Projection>& family,
                                       double tol = 1e-10);

// Tail-domination step used by the moment inequality: with y_j the truncation
// of x_j at level s, verifies
//   tau(chi_[t,inf)(sum x_j)) <= tau(chi_[t,inf)(sum y_j))
//                                + sum_j tau(chi_[s,inf)(x_j))
// and that the underlying meet of spectral projections has rank zero.
VerificationReport rosenthal_domination_check(const TracialSpace& space,
                                              const std::vector<SelfAdjointOperator>& xs,
                                              double s, double t, double tol = 1e-10);

}  // namespace ncprob

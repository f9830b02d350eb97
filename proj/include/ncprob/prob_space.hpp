#pragma once

// Tracial probability space built from a tensor product of matrix factors
// M_{d_0} (x) M_{d_1} (x) ... (x) M_{d_n} with the normalized trace as state.
// Factor 0 is the conditioned-on subalgebra; site j acts on factors {0, j}.
// The conditional expectation onto factor 0 is the normalized partial trace
// over factors 1..n tensored back with the identity, which makes the site
// algebras successively independent by construction.

#include <cstdint>
#include <vector>

#include "ncprob/linalg.hpp"
#include "ncprob/verification.hpp"

namespace ncprob {

class TracialSpace {
 public:
  // factor_dims = (d_0, d_1, ..., d_n), every d_k >= 1, product <= kMaxDim.
  explicit TracialSpace(std::vector<int> factor_dims);

  int total_dim() const { return total_dim_; }
  int subalgebra_dim() const { return dims_[0]; }  // d_0
  int num_sites() const { return static_cast<int>(dims_.size()) - 1; }
  int factor_dim(int k) const;
  // dimension of the local space of site j, i.e. d_0 * d_j
  int site_local_dim(int site) const;
  int stride(int k) const { return strides_[k]; }

  Operator identity() const { return Operator::identity(total_dim_); }

  // normalized trace tau = Tr / total_dim
  Complex trace(const Operator& x) const;
  double trace_re(const Operator& x) const { return trace(x).real(); }

 private:
  std::vector<int> dims_;
  std::vector<int> strides_;
  int total_dim_;
};

// Operator on the local space of one site: factors (0, site), factor 0 slow.
struct SiteOperator {
  int site = 1;
  Operator local;
};

// Extends a site-local operator to the full space by tensoring with the
// identity on the remaining factors.
Operator embed(const TracialSpace& space, const SiteOperator& x);

// Sum of embedded site operators.
Operator embed_sum(const TracialSpace& space, const std::vector<SiteOperator>& xs);

// Conditional expectation onto the factor-0 subalgebra: normalized partial
// trace over factors 1..n, re-embedded as y (x) identity.
Operator conditional_expectation(const TracialSpace& space, const Operator& x);

// Same map restricted to a site operator, returned on the d_0 x d_0 factor.
// Equals the factor-0 block of conditional_expectation(embed(x)).
Operator conditional_expectation_site(const TracialSpace& space, const SiteOperator& x);

// Normalized trace of the embedded operator (equals the local normalized trace).
Complex site_trace(const TracialSpace& space, const SiteOperator& x);

// Randomized audit of the conditional expectation: positivity, contraction,
// bimodule property over factor 0, trace preservation, idempotence, and
// traciality of the state. Witness carries the max violation per axiom.
VerificationReport check_ce_axioms(const TracialSpace& space, int samples, uint64_t seed,
                                   double tol = 1e-10);

// Randomized audit of successive independence across the split
// {sites 1..split} vs {site split+1}: E(xy) = E(x)E(y) for x in the algebra
// generated by the left sites and y in the right site.
VerificationReport check_successive_independence(const TracialSpace& space, int split,
                                                 int samples, uint64_t seed, double tol = 1e-9);

}  // namespace ncprob

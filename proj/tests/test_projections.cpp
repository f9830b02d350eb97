#include <doctest.h>

#include "ncprob/ensembles.hpp"
#include "ncprob/projections.hpp"
#include "ncprob/spectral.hpp"

using namespace ncprob;

TEST_SUITE("projections") {

TEST_CASE("construction validates idempotence") {
  const double ok[] = {1.0, 0.0, 1.0};
  CHECK_NOTHROW(Projection{SelfAdjointOperator::diagonal(ok)});
  const double bad[] = {0.5, 1.0, 0.0};
  CHECK_THROWS_AS(Projection{SelfAdjointOperator::diagonal(bad)}, ProjectionError);
}

TEST_CASE("rank and complement") {
  const double d[] = {1.0, 1.0, 0.0, 0.0};
  Projection p(SelfAdjointOperator::diagonal(d));
  CHECK(p.rank() == 2);
  CHECK(p.complement().rank() == 2);
  CHECK(Projection::zero(3).rank() == 0);
  CHECK(Projection::identity(3).rank() == 3);
}

TEST_CASE("join and meet on overlapping diagonal ranges") {
  const double dp[] = {1.0, 1.0, 0.0, 0.0};
  const double dq[] = {0.0, 1.0, 1.0, 0.0};
  Projection p(SelfAdjointOperator::diagonal(dp));
  Projection q(SelfAdjointOperator::diagonal(dq));
  Projection join = lattice_join(p, q);
  Projection meet = lattice_meet(p, q);
  CHECK(join.rank() == 3);
  CHECK(meet.rank() == 1);
  CHECK(join.op().at(3, 3).real() == doctest::Approx(0.0));
  CHECK(meet.op().at(1, 1).real() == doctest::Approx(1.0));
}

TEST_CASE("join of a family equals iterated joins") {
  RngStream rng(17);
  const int dim = 6;
  std::vector<Projection> ps;
  for (int k = 0; k < 3; ++k) ps.push_back(random_projection(dim, 1 + k % 2, rng));
  Projection family = lattice_join(ps);
  Projection iter = lattice_join(lattice_join(ps[0], ps[1]), ps[2]);
  CHECK(max_entry_distance(family.op(), iter.op()) < 1e-9);
}

TEST_CASE("lattice lemmas hold on random pairs in dimension 8") {
  TracialSpace space({1, 8});
  RngStream rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Projection p = random_projection(8, 1 + static_cast<int>(rng.next_uniform() * 7), rng);
    Projection q = random_projection(8, 1 + static_cast<int>(rng.next_uniform() * 7), rng);
    std::vector<Projection> family;
    for (int k = 0; k < 3; ++k)
      family.push_back(random_projection(8, 1 + static_cast<int>(rng.next_uniform() * 4), rng));
    auto report = lemma_lattice_suite(space, p, q, family);
    CHECK(report.pass);
  }
}

TEST_CASE("orthogonal ranks add under join") {
  const double dp[] = {1.0, 0.0, 0.0, 0.0};
  const double dq[] = {0.0, 0.0, 1.0, 1.0};
  Projection p(SelfAdjointOperator::diagonal(dp));
  Projection q(SelfAdjointOperator::diagonal(dq));
  CHECK(lattice_join(p, q).rank() == 3);
  CHECK(lattice_meet(p, q).rank() == 0);
}

TEST_CASE("tail domination on a frozen one-site example") {
  TracialSpace space({1, 2});
  const double d[] = {0.0, 2.0};
  std::vector<SelfAdjointOperator> xs = {SelfAdjointOperator::diagonal(d)};
  // truncation at s=1 empties the tail at t=1.5, site tail pays for it exactly
  auto report = rosenthal_domination_check(space, xs, 1.0, 1.5);
  CHECK(report.pass);
  CHECK(report.lhs == doctest::Approx(0.5));
  CHECK(report.rhs == doctest::Approx(0.5));
  CHECK(report.witness.at("meet_rank") == doctest::Approx(0.0));
}

TEST_CASE("tail domination across two sites") {
  TracialSpace space({1, 2, 2});
  RngStream rng(31);
  std::vector<SelfAdjointOperator> xs;
  for (int site = 1; site <= 2; ++site) {
    SiteOperator x = random_centered_site(space, site, 1.0, rng);
    xs.push_back(SelfAdjointOperator(embed(space, x)));
  }
  auto report = rosenthal_domination_check(space, xs, 0.63, 1.17);
  CHECK(report.pass);
}

}  // TEST_SUITE

#include <random>

#include "doctest.h"

#include "centkit/linalg.hpp"
#include "centkit/oracle.hpp"
#include "centkit/partition.hpp"

using namespace centkit;

namespace {

// Does some non-degenerate form with (v,w) = eps (w,v) make e_matrix(p) skew?
// Solves for G linearly, then probes random combinations of the solution basis.
bool has_invariant_form(const Partition& p, int eps) {
  const QMatrix e = e_matrix(p);
  const std::size_t n = e.rows();
  const std::size_t u = n * n;
  QMatrix eqs(2 * u, u);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      // G^T = eps G
      eqs(r * n + c, c * n + r) += 1;
      eqs(r * n + c, r * n + c) -= eps;
      // e^T G + G e = 0
      for (std::size_t k = 0; k < n; ++k) {
        if (!e(k, r).is_zero()) eqs(u + r * n + c, k * n + c) += e(k, r);
        if (!e(k, c).is_zero()) eqs(u + r * n + c, r * n + k) += e(k, c);
      }
    }
  const auto sols = nullspace(eqs);
  std::mt19937 rng(static_cast<unsigned>(p.size() * 31 + p.length()));
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int attempt = 0; attempt < 12; ++attempt) {
    QVector g(u);
    for (const auto& s : sols) axpy(g, Rational(coef(rng)), s);
    if (rank(QMatrix::from_flat(g, n, n)) == n) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parse accepts commas, unsorted input and exponent shorthand") {
  CHECK(Partition::parse("3,2,2,1").parts() == std::vector<int>{3, 2, 2, 1});
  CHECK(Partition::parse("1,3,2,2").parts() == std::vector<int>{3, 2, 2, 1});
  CHECK(Partition::parse("2^3,1^2").parts() == std::vector<int>{2, 2, 2, 1, 1});
  CHECK(Partition::parse(" 4 ").parts() == std::vector<int>{4});
  CHECK_THROWS_AS(Partition::parse("3,0"), InvalidPartition);
  CHECK_THROWS_AS(Partition::parse("3,-1"), InvalidPartition);
  CHECK_THROWS_AS(Partition::parse("a,b"), InvalidPartition);
  CHECK_THROWS_AS(Partition::parse(""), InvalidPartition);
}

TEST_CASE("basic accessors") {
  const Partition p({3, 2, 2, 1});
  CHECK(p.size() == 8);
  CHECK(p.length() == 4);
  CHECK(p.multiplicity(2) == 2);
  CHECK(p.distinct_parts() == std::vector<int>{3, 2, 1});
  CHECK(p.conjugate() == std::vector<int>{4, 3, 1});
  CHECK(p.str() == "3,2,2,1");
}

TEST_CASE("algebra type parsing and epsilon") {
  CHECK(parse_algebra_type("SP") == AlgebraType::SP);
  CHECK(parse_algebra_type("sl") == AlgebraType::GL);
  CHECK_FALSE(parse_algebra_type("g2"));
  CHECK(epsilon(AlgebraType::SO) == 1);
  CHECK(epsilon(AlgebraType::SP) == -1);
  CHECK_THROWS(static_cast<void>(epsilon(AlgebraType::GL)));
}

TEST_CASE("validate examples") {
  CHECK(validate(Partition({2, 2}), AlgebraType::SP));
  CHECK_FALSE(validate(Partition({3, 1}), AlgebraType::SP));
  CHECK(validate(Partition({3, 3}), AlgebraType::SO));
  CHECK_FALSE(validate(Partition({2, 1}), AlgebraType::SO));
  CHECK(validate(Partition({2, 1}), AlgebraType::GL));
}

TEST_CASE("validate agrees with a search for an invariant non-degenerate form") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : partitions_of(n)) {
      CAPTURE(p.str());
      CHECK(validate(p, AlgebraType::SO) == has_invariant_form(p, 1));
      CHECK(validate(p, AlgebraType::SP) == has_invariant_form(p, -1));
    }
}

TEST_CASE("build_pairing examples") {
  CHECK(build_pairing(Partition({2, 2}), AlgebraType::SP).partner == std::vector<int>{1, 2});
  CHECK(build_pairing(Partition({2, 2}), AlgebraType::SO).partner == std::vector<int>{2, 1});
  CHECK(build_pairing(Partition({3, 2, 2, 1}), AlgebraType::SO).partner == std::vector<int>{1, 3, 2, 4});
  CHECK_THROWS_AS(static_cast<void>(build_pairing(Partition({3, 1}), AlgebraType::SP)), InvalidPartition);
  CHECK_THROWS_AS(static_cast<void>(build_pairing(Partition({2, 1}), AlgebraType::GL)), InvalidPartition);
}

TEST_CASE("pairing satisfies the involution conditions for n <= 14") {
  for (AlgebraType t : {AlgebraType::SO, AlgebraType::SP}) {
    const int eps = epsilon(t);
    for (const auto& p : valid_partitions(t, 14)) {
      CAPTURE(p.str());
      const BlockPairing pi = build_pairing(p, t);
      for (int i = 1; i <= p.length(); ++i) {
        const int ip = pi(i);
        CHECK(p.part(ip) == p.part(i));
        CHECK(pi(ip) == i);
        CHECK(std::abs(ip - i) <= 1);
        const bool self = (p.part(i) % 2 == 0 ? 1 : -1) * eps == -1;
        CHECK((ip == i) == self);
      }
      CHECK(build_pairing(p, t).partner == pi.partner);
    }
  }
}

TEST_CASE("reachable criterion examples") {
  CHECK(is_reachable_criterion(Partition({3, 2, 2, 1})));
  CHECK_FALSE(is_reachable_criterion(Partition({3, 1})));
  CHECK(is_reachable_criterion(Partition({1, 1, 1})));
}

TEST_CASE("rigid criterion examples") {
  CHECK(is_rigid_criterion(Partition({2, 1, 1}), AlgebraType::SP));
  CHECK_FALSE(is_rigid_criterion(Partition({3, 3}), AlgebraType::SO));
  CHECK(is_rigid_criterion(Partition({2, 2, 1, 1, 1}), AlgebraType::SO));
  CHECK_FALSE(is_rigid_criterion(Partition({2, 2, 1, 1}), AlgebraType::SO));
  CHECK(is_rigid_criterion(Partition({1, 1, 1}), AlgebraType::GL));
  CHECK_FALSE(is_rigid_criterion(Partition({2, 1}), AlgebraType::GL));
  CHECK_THROWS_AS(static_cast<void>(is_rigid_criterion(Partition({3, 1}), AlgebraType::SP)), InvalidPartition);
}

TEST_CASE("rigid criterion implies reachable criterion") {
  for (AlgebraType t : {AlgebraType::SO, AlgebraType::SP, AlgebraType::GL})
    for (const auto& p : valid_partitions(t, 14))
      if (is_rigid_criterion(p, t)) CHECK(is_reachable_criterion(p));
}

TEST_CASE("g0 factor examples") {
  const auto a = g0_factors(Partition({3, 3}), AlgebraType::SP);
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0] == G0Factor{FactorKind::SP, 2, 3});
  CHECK(a.factors[0].dim() == 3);

  const auto b = g0_factors(Partition({2, 1, 1}), AlgebraType::SP);
  CHECK(b.factors == std::vector<G0Factor>{{FactorKind::SO, 1, 2}, {FactorKind::SP, 2, 1}});
  CHECK(b.semisimple);
  CHECK(b.dim() == 3);

  const auto c = g0_factors(Partition({2, 2, 1, 1}), AlgebraType::SO);
  CHECK(c.factors == std::vector<G0Factor>{{FactorKind::SP, 2, 2}, {FactorKind::SO, 2, 1}});
  CHECK_FALSE(c.semisimple);

  const auto d = g0_factors(Partition({2, 1}), AlgebraType::GL);
  CHECK(d.factors == std::vector<G0Factor>{{FactorKind::GL, 1, 2}, {FactorKind::GL, 1, 1}});
  CHECK_FALSE(d.semisimple);
  CHECK(g0_factors(Partition({1, 1, 1}), AlgebraType::GL).semisimple);
  CHECK(g0_factors(Partition({2, 2}), AlgebraType::GL).semisimple);
}

TEST_CASE("partition enumeration") {
  const std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n - 1)]);
  const auto four = partitions_of(4);
  CHECK(four.front() == Partition({4}));
  CHECK(four.back() == Partition({1, 1, 1, 1}));
  for (std::size_t i = 1; i < four.size(); ++i) CHECK(four[i - 1] > four[i]);
  // sp: (2), (1,1); then (4), (2,2), (2,1,1), (1^4).
  CHECK(valid_partitions(AlgebraType::SP, 4).size() == 6);
}

TEST_CASE("two-block shapes") {
  const auto s = two_block_shape(Partition({3, 3, 2}));
  REQUIRE(s);
  CHECK(s->m == 2);
  CHECK(s->n == 1);
  CHECK(s->d == 2);
  CHECK_FALSE(two_block_shape(Partition({3, 1})));
  CHECK_FALSE(two_block_shape(Partition({2, 2})));
  CHECK(two_block_partition(1, 2, 1) == Partition({2, 1, 1}));
  CHECK(is_rectangular(Partition({2, 2, 2})));
  CHECK_FALSE(is_rectangular(Partition({2, 1})));
}

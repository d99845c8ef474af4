#include "doctest.h"

#include "centkit/derived.hpp"
#include "centkit/oracle.hpp"

using namespace centkit;

namespace {

CentralizerAnalysis make(std::vector<int> parts, AlgebraType t) { return CentralizerAnalysis(Partition(std::move(parts)), t); }

}  // namespace

TEST_CASE("derived subalgebra examples") {
  for (int n = 1; n <= 6; ++n) {
    const StructuredAlgebra regular(Partition({n}), AlgebraType::GL);
    CHECK(derived_subalgebra(regular).dim() == 0);
  }
  const StructuredAlgebra sp211(Partition({2, 1, 1}), AlgebraType::SP);
  CHECK(derived_subalgebra(sp211).dim() == 6);
  const StructuredAlgebra so2211(Partition({2, 2, 1, 1}), AlgebraType::SO);
  CHECK(derived_subalgebra(so2211).dim() < so2211.dim());
  // The generic LieSpan overload agrees with the graded computation.
  CHECK(derived_subalgebra(so2211.whole(), so2211.bracket_fn()) == derived_subalgebra(so2211));
}

TEST_CASE("structural reachability examples") {
  for (int n = 1; n <= 5; ++n) {
    const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    CHECK(is_reachable_structural(StructuredAlgebra(ones, AlgebraType::GL)));
  }
  CHECK_FALSE(is_reachable_structural(StructuredAlgebra(Partition({3, 1}), AlgebraType::GL)));
  auto a = make({3, 2, 2, 1}, AlgebraType::SO);
  const Reachability r = reachability(a);
  CHECK(r.reachable());
  CHECK(r.consistent());
}

TEST_CASE("perfectness examples") {
  CHECK(is_perfect(StructuredAlgebra(Partition({2, 1, 1}), AlgebraType::SP)));
  CHECK_FALSE(is_perfect(StructuredAlgebra(Partition({2, 2, 1, 1}), AlgebraType::SO)));
  for (int n = 2; n <= 6; ++n) CHECK_FALSE(is_perfect(StructuredAlgebra(Partition({n}), AlgebraType::GL)));
  // sl_n = [sl_n, sl_n]
  CHECK(is_perfect(StructuredAlgebra(Partition({1, 1, 1}), AlgebraType::GL)));
  CHECK_FALSE(is_perfect(StructuredAlgebra(Partition({3, 3}), AlgebraType::SO)));
}

TEST_CASE("fhat Gram examples") {
  const QMatrix even = fhat_gram(StructuredAlgebra(Partition({2, 2}), AlgebraType::SP));
  CHECK(even.rows() == 0);
  const QMatrix g = fhat_gram(StructuredAlgebra(Partition({2, 1, 1}), AlgebraType::SP));
  REQUIRE(g.rows() == 2);
  CHECK(g.transpose() == g * Rational(-1));
  CHECK(rank(g) == 2);
}

TEST_CASE("fhat Gram entries agree with the trace of f times the matrix commutator") {
  for (AlgebraType t : {AlgebraType::GL, AlgebraType::SO, AlgebraType::SP})
    for (const auto& p : valid_partitions(t, 8)) {
      CAPTURE(p.str());
      CentralizerAnalysis an(p, t);
      const auto& alg = an.algebra();
      const LieSpan g1 = an.piece(1);
      const QMatrix& gram = an.fhat_gram();
      const QMatrix& f = alg.triple().f;
      for (std::size_t x = 0; x < g1.dim(); ++x)
        for (std::size_t y = 0; y < g1.dim(); ++y) {
          const QMatrix c = commutator(alg.hat().matrix_of(g1.basis()[x]), alg.hat().matrix_of(g1.basis()[y]));
          CHECK(gram(x, y) == (f * c).trace());
        }
      CHECK(gram.transpose() == gram * Rational(-1));
    }
}

TEST_CASE("graded generation examples") {
  auto a = make({2, 1, 1}, AlgebraType::SP);
  const auto r = verify_graded_generation(a);
  CHECK(r.g_lambda == CheckStatus::Pass);
  CHECK(r.g1 == CheckStatus::Pass);
  CHECK(r.g2 == CheckStatus::Pass);
  REQUIRE(r.steps.size() == 3);
  for (const auto& s : r.steps) CHECK(s.equal);

  auto b = make({2, 2, 1, 1}, AlgebraType::SO);
  CHECK(verify_graded_generation(b).g_lambda == CheckStatus::Pass);

  auto c = make({3, 1}, AlgebraType::SO);
  const auto rc = verify_graded_generation(c);
  CHECK(rc.g_lambda == CheckStatus::NotApplicable);
  CHECK(rc.g1 == CheckStatus::Pass);
  CHECK(rc.steps.empty());

  auto d = make({3, 1}, AlgebraType::GL);
  CHECK(verify_graded_generation(d).g_lambda == CheckStatus::NotApplicable);
}

TEST_CASE("two-block examples") {
  const TwoBlockReport a = verify_two_block(1, 1, 1, AlgebraType::GL);
  CHECK(a.partition == Partition({2, 1}));
  CHECK(a.commutator_dim == 1);
  CHECK(a.g2_dim == 1);
  CHECK(a.ok());

  const TwoBlockReport b = verify_two_block(1, 2, 1, AlgebraType::SP);
  CHECK(b.membership);
  CHECK_FALSE(b.codim_ok);

  const TwoBlockReport c = verify_two_block(1, 1, 2, AlgebraType::GL);
  CHECK(c.g2_dim == c.commutator_dim + 1);
  CHECK(c.membership);
  CHECK(*c.module_ok);

  CHECK_THROWS_AS(static_cast<void>(verify_two_block(1, 1, 1, AlgebraType::SO)), InvalidPartition);
  CHECK_THROWS_AS(static_cast<void>(verify_two_block(0, 1, 1, AlgebraType::GL)), InvalidPartition);
  auto rect = make({2, 2}, AlgebraType::GL);
  CHECK_THROWS_AS(static_cast<void>(verify_two_block(rect)), InvalidPartition);
}

TEST_CASE("two-block dimensions agree with the matrix commutator span") {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (int d = 1; d <= 2; ++d) {
        const Partition p = two_block_partition(m, n, d);
        CAPTURE(p.str());
        const OracleAlgebra o = kernel_centralizer(p, AlgebraType::GL);
        // Weight-one and weight-two pieces straight from the kernel.
        const auto hd = h_matrix(p);
        auto weight_of = [&](const QMatrix& x) {
          for (std::size_t u = 0; u < o.n; ++u)
            for (std::size_t v = 0; v < o.n; ++v)
              if (!x(u, v).is_zero()) return hd(u, u) - hd(v, v);
          return Rational(-99);
        };
        std::vector<QVector> g1, g2;
        for (const auto& x : o.basis) {
          // Kernel basis vectors need not be homogeneous; split by weight.
          std::map<std::string, QMatrix> parts;
          for (std::size_t u = 0; u < o.n; ++u)
            for (std::size_t v = 0; v < o.n; ++v)
              if (!x(u, v).is_zero()) {
                const std::string w = (hd(u, u) - hd(v, v)).str();
                auto [it, fresh] = parts.try_emplace(w, QMatrix(o.n, o.n));
                it->second(u, v) = x(u, v);
              }
          for (const auto& [w, part] : parts) {
            if (weight_of(part) == Rational(1)) g1.push_back(part.flat());
            if (weight_of(part) == Rational(2)) g2.push_back(part.flat());
          }
        }
        const LieSpan s1(g1, o.n * o.n), s2(g2, o.n * o.n);
        EchelonBasis comm(o.n * o.n);
        for (const auto& x : s1.basis())
          for (const auto& y : s1.basis()) {
            const QMatrix c = commutator(QMatrix::from_flat(x, o.n, o.n), QMatrix::from_flat(y, o.n, o.n));
            if (!c.is_zero()) comm.insert(c.flat());
          }
        const TwoBlockReport r = verify_two_block(m, n, d, AlgebraType::GL);
        CHECK(r.commutator_dim == comm.rank());
        CHECK(r.g2_dim == s2.dim());
      }
}

TEST_CASE("nilradical examples") {
  auto a = make({2, 1, 1}, AlgebraType::SP);
  CHECK(verify_nilradical(a) == CheckStatus::Pass);
  auto b = make({1, 1, 1, 1}, AlgebraType::SO);
  CHECK(verify_nilradical(b) == CheckStatus::Pass);
  CHECK(b.positive_part().dim() == 0);
  auto c = make({3, 2, 2, 1}, AlgebraType::SO);
  CHECK(verify_nilradical(c) == CheckStatus::Pass);
  auto d = make({3, 1}, AlgebraType::SO);
  CHECK(verify_nilradical(d) == CheckStatus::NotApplicable);
}

TEST_CASE("one-block rule on rectangular partitions with dk <= 12") {
  for (AlgebraType t : {AlgebraType::SO, AlgebraType::SP})
    for (int d = 1; d <= 12; ++d)
      for (int k = 1; d * k <= 12; ++k) {
        const Partition p(std::vector<int>(static_cast<std::size_t>(k), d));
        if (!validate(p, t)) continue;
        CAPTURE(p.str());
        CentralizerAnalysis an(p, t);
        const OneBlockReport r = verify_one_block(an);
        CHECK(r.status == CheckStatus::Pass);
        const bool plus = (d % 2 == 0 ? 1 : -1) * epsilon(t) == 1;
        const auto kk = static_cast<std::size_t>(k);
        CHECK(r.g0_dim == (plus ? kk * (kk + 1) / 2 : kk * (kk - 1) / 2));
      }
  auto gl = make({2, 2}, AlgebraType::GL);
  CHECK(verify_one_block(gl).status == CheckStatus::NotApplicable);
  auto mixed = make({2, 1, 1}, AlgebraType::SP);
  CHECK(verify_one_block(mixed).status == CheckStatus::NotApplicable);
}

TEST_CASE("grading: pieces sum to the algebra and brackets add weights") {
  for (AlgebraType t : {AlgebraType::GL, AlgebraType::SO, AlgebraType::SP})
    for (const auto& p : valid_partitions(t, 9)) {
      CAPTURE(p.str());
      CentralizerAnalysis an(p, t);
      const GradedDecomposition& g = an.grading();
      CHECK(g.total_dim() == an.algebra().dim());
      for (const auto& [l, a] : g.pieces) CHECK(l >= 0);
      for (const auto& [l, a] : g.pieces)
        for (const auto& [m, b] : g.pieces) {
          const LieSpan target = g.piece(l + m);
          for (const auto& x : a.basis())
            for (const auto& y : b.basis()) CHECK(target.contains(an.algebra().bracket(x, y)));
        }
      CHECK(an.algebra().top_weight() >= (g.pieces.empty() ? 0 : g.pieces.rbegin()->first));
    }
}

TEST_CASE("g0 dimension from the factor list matches the weight-zero piece") {
  for (AlgebraType t : {AlgebraType::GL, AlgebraType::SO, AlgebraType::SP})
    for (const auto& p : valid_partitions(t, 12)) {
      CentralizerAnalysis an(p, t);
      CHECK(an.piece(0).dim() == static_cast<std::size_t>(g0_factors(p, t).dim()));
    }
}

TEST_CASE("GL structural reachability matches the no-gap rule for n <= 10") {
  for (const auto& p : valid_partitions(AlgebraType::GL, 10)) {
    CAPTURE(p.str());
    CentralizerAnalysis an(p, AlgebraType::GL);
    CHECK(an.e_in_derived() == is_reachable_criterion(p));
  }
}

TEST_CASE("perfect target for GL is the traceless part") {
  auto a = make({2, 1}, AlgebraType::GL);
  CHECK(a.whole().dim() == 5);
  CHECK(a.perfect_target().dim() == 4);
  const QVector tr = a.algebra().hat().trace_functional();
  for (const auto& v : a.perfect_target().basis()) CHECK(dot(tr, v).is_zero());
}

TEST_CASE("status strings") {
  CHECK(to_string(CheckStatus::Pass) == "pass");
  CHECK(to_string(CheckStatus::Fail) == "fail");
  CHECK(to_string(CheckStatus::NotApplicable) == "n/a");
}

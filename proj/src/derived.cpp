#include "centkit/derived.hpp"

#include <algorithm>
#include <stdexcept>

namespace centkit {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

LieSpan GradedDecomposition::piece(int lambda) const {
  auto it = pieces.find(lambda);
  return it == pieces.end() ? LieSpan(ambient_dim) : it->second;
}

std::size_t GradedDecomposition::total_dim() const {
  std::size_t total = 0;
  for (const auto& [lambda, s] : pieces) total += s.dim();
  return total;
}

namespace {

struct Homogeneous {
  int weight;
  const QVector* vector;
};

// Brackets land in a single weight, and weight pieces occupy disjoint
// coordinates, so one echelon basis per target weight is enough. `cap` gives
// an upper bound per target weight used to stop early.
template <class Cap>
LieSpan graded_bracket_span(const std::vector<Homogeneous>& a, const std::vector<Homogeneous>& b, bool symmetric,
                            std::size_t ambient, const GlCentralizer& hat, Cap cap) {
  std::map<int, EchelonBasis> by_weight;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = symmetric ? x + 1 : 0; y < b.size(); ++y) {
      const int nu = a[x].weight + b[y].weight;
      const std::size_t limit = cap(nu);
      if (limit == 0) continue;
      auto [it, inserted] = by_weight.try_emplace(nu, ambient);
      if (it->second.rank() >= limit) continue;
      QVector z = hat.bracket(*a[x].vector, *b[y].vector);
      if (!is_zero(z)) it->second.insert(std::move(z));
    }
  }
  std::vector<QVector> rows;
  for (const auto& [nu, eb] : by_weight)
    for (auto& r : eb.canonical_rows()) rows.push_back(std::move(r));
  return LieSpan(rows, ambient);
}

std::vector<Homogeneous> homogeneous(const StructuredAlgebra& a, std::optional<int> only = std::nullopt) {
  std::vector<Homogeneous> out;
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (!only || a.weights()[k] == *only) out.push_back({a.weights()[k], &a.basis()[k]});
  return out;
}

}  // namespace

const LieSpan& CentralizerAnalysis::whole() {
  if (!whole_) whole_ = algebra_.whole();
  return *whole_;
}

const LieSpan& CentralizerAnalysis::perfect_target() {
  if (target_) return *target_;
  if (type() != AlgebraType::GL) {
    target_ = whole();
    return *target_;
  }
  // Project every basis vector onto ker(trace) along xi_1^{1,0}.
  const GlCentralizer& hat = algebra_.hat();
  const QVector tr = hat.trace_functional();
  const std::size_t pivot = *hat.index_of({1, 1, 0});
  const QVector v0 = unit_vector(hat.dim(), pivot);
  const Rational t0 = tr[pivot];
  std::vector<QVector> rows;
  for (const auto& v : algebra_.basis()) {
    QVector w = v;
    axpy(w, -(dot(tr, v) / t0), v0);
    rows.push_back(std::move(w));
  }
  target_ = LieSpan(rows, hat.dim());
  return *target_;
}

const GradedDecomposition& CentralizerAnalysis::grading() {
  if (!grading_) grading_ = graded_decomposition(algebra_);
  return *grading_;
}

const LieSpan& CentralizerAnalysis::positive_part() {
  if (positive_) return *positive_;
  std::vector<QVector> rows;
  for (std::size_t k = 0; k < algebra_.dim(); ++k)
    if (algebra_.weights()[k] >= 1) rows.push_back(algebra_.basis()[k]);
  positive_ = LieSpan(rows, algebra_.ambient_dim());
  return *positive_;
}

const std::vector<QVector>& CentralizerAnalysis::weight_basis(int lambda) {
  auto it = weight_bases_.find(lambda);
  if (it != weight_bases_.end()) return it->second;
  std::vector<QVector> rows;
  for (std::size_t k = 0; k < algebra_.dim(); ++k)
    if (algebra_.weights()[k] == lambda) rows.push_back(algebra_.basis()[k]);
  return weight_bases_.emplace(lambda, std::move(rows)).first->second;
}

const LieSpan& CentralizerAnalysis::derived() {
  if (derived_) return *derived_;
  const GradedDecomposition& g = grading();
  const bool gl = type() == AlgebraType::GL;
  auto cap = [&](int nu) {
    const std::size_t d = g.piece(nu).dim();
    return gl && nu == 0 && d > 0 ? d - 1 : d;
  };
  derived_ = graded_bracket_span(homogeneous(algebra_), homogeneous(algebra_), true, algebra_.ambient_dim(),
                                 algebra_.hat(), cap);
  return *derived_;
}

const LieSpan& CentralizerAnalysis::g1_bracket(int lambda) {
  auto it = g1_brackets_.find(lambda);
  if (it != g1_brackets_.end()) return it->second;
  const GradedDecomposition& g = grading();
  const std::size_t limit = g.piece(lambda + 1).dim();
  LieSpan result = graded_bracket_span(homogeneous(algebra_, 1), homogeneous(algebra_, lambda), lambda == 1,
                                       algebra_.ambient_dim(), algebra_.hat(), [&](int) { return limit; });
  return g1_brackets_.emplace(lambda, std::move(result)).first->second;
}

const LieSpan& CentralizerAnalysis::g1_with_whole() {
  if (g1_whole_) return *g1_whole_;
  const GradedDecomposition& g = grading();
  g1_whole_ = graded_bracket_span(homogeneous(algebra_, 1), homogeneous(algebra_), false, algebra_.ambient_dim(),
                                  algebra_.hat(), [&](int nu) { return g.piece(nu).dim(); });
  return *g1_whole_;
}

bool CentralizerAnalysis::e_in_derived() { return derived().contains(algebra_.e_vector()); }
bool CentralizerAnalysis::e_in_g1g1() { return g1_bracket(1).contains(algebra_.e_vector()); }

const QMatrix& CentralizerAnalysis::fhat_gram() {
  if (fhat_) return *fhat_;
  const GlCentralizer& hat = algebra_.hat();
  const QMatrix& f = algebra_.triple().f;
  // phi(x) = trace(f * matrix_of(x)), one entry per xi coordinate.
  QVector phi(hat.dim());
  for (std::size_t idx = 0; idx < hat.dim(); ++idx) {
    const BasisElement& a = hat.element(idx);
    const auto& p = hat.partition();
    for (int m = 0; m < p.part(a.i) && m + a.s < p.part(a.j); ++m)
      phi[idx] += f(hat.vector_position(a.i, m), hat.vector_position(a.j, m + a.s));
  }
  const LieSpan g1 = piece(1);
  const std::size_t r = g1.dim();
  QMatrix gram(r, r);
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y) gram(x, y) = dot(phi, hat.bracket(g1.basis()[x], g1.basis()[y]));
  fhat_ = std::move(gram);
  return *fhat_;
}

std::size_t CentralizerAnalysis::fhat_rank() { return rank(fhat_gram()); }

LieSpan derived_subalgebra(const LieSpan& a, const BracketFn& bracket) {
  return pairwise_bracket_span(a, a, bracket);
}

LieSpan derived_subalgebra(const StructuredAlgebra& a) {
  CentralizerAnalysis an(a);
  return an.derived();
}

GradedDecomposition graded_decomposition(const StructuredAlgebra& a) {
  GradedDecomposition g;
  g.ambient_dim = a.ambient_dim();
  std::map<int, std::vector<QVector>> rows;
  for (std::size_t k = 0; k < a.dim(); ++k) rows[a.weights()[k]].push_back(a.basis()[k]);
  for (auto& [lambda, vs] : rows) g.pieces.emplace(lambda, LieSpan(vs, a.ambient_dim()));
  return g;
}

Reachability reachability(CentralizerAnalysis& a) { return {a.e_in_derived(), a.e_in_g1g1()}; }

bool is_reachable_structural(const StructuredAlgebra& a) {
  CentralizerAnalysis an(a);
  return an.e_in_derived();
}

bool is_perfect(CentralizerAnalysis& a) { return a.derived() == a.perfect_target(); }

bool is_perfect(const StructuredAlgebra& a) {
  CentralizerAnalysis an(a);
  return is_perfect(an);
}

QMatrix fhat_gram(const StructuredAlgebra& a) {
  CentralizerAnalysis an(a);
  return an.fhat_gram();
}

GradedGenerationReport verify_graded_generation(CentralizerAnalysis& a) {
  GradedGenerationReport out;
  // [g(0), g(1)] = g(1) holds without any hypothesis.
  {
    const GradedDecomposition& g = a.grading();
    const auto& alg = a.algebra();
    const LieSpan g1 = g.piece(1);
    const LieSpan br = graded_bracket_span(homogeneous(alg, 0), homogeneous(alg, 1), false, alg.ambient_dim(),
                                           alg.hat(), [&](int) { return g1.dim(); });
    out.g1 = status_of(br == g1);
  }
  if (a.type() == AlgebraType::GL || !a.e_in_derived()) return out;
  bool all = true;
  for (int lambda = 0; lambda <= std::max(1, a.algebra().top_weight()); ++lambda) {
    const LieSpan& br = a.g1_bracket(lambda);
    const LieSpan next = a.piece(lambda + 1);
    const bool eq = br == next;
    out.steps.push_back({lambda, br.dim(), next.dim(), eq});
    all = all && eq;
    if (lambda == 1) out.g2 = status_of(eq);
  }
  out.g_lambda = status_of(all);
  return out;
}

TwoBlockReport verify_two_block(int m, int n, int d, AlgebraType t) {
  if (m < 1 || n < 1 || d < 1) throw InvalidPartition("two-block shape needs m, n, d >= 1");
  const Partition p = two_block_partition(m, n, d);
  if (!validate(p, t)) throw InvalidPartition("partition " + p.str() + " is not valid for " + std::string(to_string(t)));
  CentralizerAnalysis an(p, t);
  return verify_two_block(an);
}

TwoBlockReport verify_two_block(CentralizerAnalysis& a) {
  const auto& alg = a.algebra();
  const auto shape = two_block_shape(alg.partition());
  if (!shape) throw InvalidPartition("partition " + alg.partition().str() + " is not of shape ((d+1)^m, d^n)");
  const auto [m, n, d] = *shape;
  const GlCentralizer& hat = alg.hat();
  TwoBlockReport out;
  out.partition = alg.partition();
  out.type = a.type();
  const LieSpan& comm = a.g1_bracket(1);
  const LieSpan g2 = a.piece(2);
  out.commutator_dim = comm.dim();
  out.g2_dim = g2.dim();
  QVector v = hat.e_component(d);
  for (auto& x : v) x *= Rational(m);
  axpy(v, Rational(-n), hat.e_component(d + 1));
  out.membership = comm.contains(v);
  if (a.type() == AlgebraType::GL) {
    const std::size_t expected_codim = d >= 2 ? 1 : 0;
    out.codim_ok = g2.dim() >= comm.dim() && g2.dim() - comm.dim() == expected_codim;
    if (d == 1) {
      out.module_ok = comm == g2;
    } else {
      // sl_m + sl_n + F(m e_d - n e_{d+1}) is the kernel in g(2) of sum_i x(xi_i^{i,1}).
      QVector tau(hat.dim());
      for (int i = 1; i <= alg.partition().length(); ++i)
        if (auto idx = hat.index_of({i, i, 1})) tau[*idx] = 1;
      std::vector<QVector> rows;
      const auto& basis = g2.basis();
      std::optional<std::size_t> pick;
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (!dot(tau, basis[k]).is_zero()) {
          pick = k;
          break;
        }
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (pick && k == *pick) continue;
        QVector w = basis[k];
        if (pick) axpy(w, -(dot(tau, w) / dot(tau, basis[*pick])), basis[*pick]);
        rows.push_back(std::move(w));
      }
      out.module_ok = comm == LieSpan(rows, hat.dim());
    }
  }
  return out;
}

CheckStatus verify_nilradical(CentralizerAnalysis& a) {
  if (a.type() == AlgebraType::GL || !a.e_in_derived()) return CheckStatus::NotApplicable;
  return status_of(a.g1_with_whole() == a.positive_part());
}

OneBlockReport verify_one_block(CentralizerAnalysis& a) {
  OneBlockReport out;
  const Partition& p = a.algebra().partition();
  if (a.type() == AlgebraType::GL || !is_rectangular(p) || p.empty()) return out;
  const int d = p.largest();
  const auto k = static_cast<std::size_t>(p.length());
  const std::size_t sym = k * (k + 1) / 2;
  const std::size_t alt = k * (k - 1) / 2;
  const bool plus = (d % 2 == 0 ? 1 : -1) * epsilon(a.type()) == 1;
  bool ok = true;
  for (int m = 0; m < d; ++m) {
    const bool symmetric_square = plus == (m % 2 == 0);
    const std::size_t expected = symmetric_square ? sym : alt;
    const std::size_t actual = a.piece(2 * m).dim();
    out.weight_dims.emplace_back(actual, expected);
    ok = ok && actual == expected;
  }
  out.g0_dim = out.weight_dims.front().first;
  out.expected_g0_dim = out.weight_dims.front().second;
  out.status = status_of(ok && a.grading().total_dim() == a.algebra().dim());
  return out;
}

}  // namespace centkit

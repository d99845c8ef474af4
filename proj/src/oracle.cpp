#include "centkit/oracle.hpp"

#include <stdexcept>

#include "centkit/centralizer_oss.hpp"

namespace centkit {

namespace {

std::vector<std::size_t> block_offsets(const Partition& p) {
  std::vector<std::size_t> off{0};
  for (int d : p.parts()) off.push_back(off.back() + static_cast<std::size_t>(d));
  return off;
}

std::vector<int> h_diagonal(const Partition& p) {
  std::vector<int> out;
  for (int d : p.parts())
    for (int m = 0; m < d; ++m) out.push_back(2 * m + 1 - d);
  return out;
}

}  // namespace

QMatrix e_matrix(const Partition& p) {
  const auto n = static_cast<std::size_t>(p.size());
  const auto off = block_offsets(p);
  QMatrix e(n, n);
  for (std::size_t b = 0; b < p.parts().size(); ++b)
    for (int m = 0; m + 1 < p.parts()[b]; ++m)
      e(off[b] + static_cast<std::size_t>(m) + 1, off[b] + static_cast<std::size_t>(m)) = 1;
  return e;
}

QMatrix h_matrix(const Partition& p) {
  const auto diag = h_diagonal(p);
  QMatrix h(diag.size(), diag.size());
  for (std::size_t u = 0; u < diag.size(); ++u) h(u, u) = diag[u];
  return h;
}

OracleAlgebra kernel_centralizer(const Partition& p, AlgebraType t) {
  if (!validate(p, t)) throw InvalidPartition("partition " + p.str() + " is not valid for " + std::string(to_string(t)));
  OracleAlgebra out;
  out.partition = p;
  out.type = t;
  out.n = static_cast<std::size_t>(p.size());
  out.e = e_matrix(p);
  out.h = h_matrix(p);
  const std::size_t n = out.n;
  const QMatrix& e = out.e;
  if (commutator(out.h, e) != e * Rational(2)) throw std::logic_error("oracle: [h, e] != 2e");

  const bool formed = t != AlgebraType::GL;
  if (formed) {
    QMatrix g = build_form(p, t).gram;
    if (g.transpose() != g * Rational(epsilon(t))) throw std::logic_error("oracle: form has the wrong symmetry");
    if (!(e.transpose() * g + g * e).is_zero()) throw std::logic_error("oracle: form is not e-invariant");
    out.gram = std::move(g);
  }

  // Unknown X(r, c) sits at r * n + c.
  const std::size_t unknowns = n * n;
  QMatrix eqs((formed ? 2 : 1) * unknowns, unknowns);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t row = r * n + c;
      // (X e - e X)(r, c)
      for (std::size_t k = 0; k < n; ++k) {
        if (!e(k, c).is_zero()) eqs(row, r * n + k) += e(k, c);
        if (!e(r, k).is_zero()) eqs(row, k * n + c) -= e(r, k);
      }
      if (!formed) continue;
      const QMatrix& g = *out.gram;
      const std::size_t row2 = unknowns + row;
      // (G X + X^T G)(r, c)
      for (std::size_t k = 0; k < n; ++k) {
        if (!g(r, k).is_zero()) eqs(row2, k * n + c) += g(r, k);
        if (!g(k, c).is_zero()) eqs(row2, k * n + r) += g(k, c);
      }
    }
  }
  const auto kernel = nullspace(eqs);
  out.span = LieSpan(kernel, unknowns);
  for (const auto& v : out.span.basis()) out.basis.push_back(QMatrix::from_flat(v, n, n));
  return out;
}

LieSpan oracle_derived(const OracleAlgebra& a) {
  const std::size_t unknowns = a.n * a.n;
  // The derived algebra is traceless; for GL the identity keeps it proper.
  const std::size_t cap = a.type == AlgebraType::GL && a.dim() > 0 ? a.dim() - 1 : a.dim();
  EchelonBasis eb(unknowns);
  for (std::size_t x = 0; x < a.basis.size() && eb.rank() < cap; ++x)
    for (std::size_t y = x + 1; y < a.basis.size() && eb.rank() < cap; ++y) {
      QMatrix c = commutator(a.basis[x], a.basis[y]);
      if (!c.is_zero()) eb.insert(c.flat());
    }
  return LieSpan::from_echelon(eb);
}

std::map<int, std::size_t> oracle_graded_dims(const OracleAlgebra& a) {
  // ad(h) acts on E_{uv} by h_u - h_v, so eigenspaces are coordinate subspaces
  // and an ad(h)-stable span splits as the direct sum of its projections.
  const std::size_t n = a.n;
  const auto hd = h_diagonal(a.partition);
  std::map<int, std::vector<QVector>> projected;
  for (const auto& v : a.span.basis()) {
    std::map<int, QVector> parts;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t w = 0; w < n; ++w) {
        const Rational& x = v[u * n + w];
        if (x.is_zero()) continue;
        auto [it, fresh] = parts.try_emplace(hd[u] - hd[w], n * n);
        it->second[u * n + w] = x;
      }
    for (auto& [lambda, part] : parts) projected[lambda].push_back(std::move(part));
  }
  std::map<int, std::size_t> dims;
  std::size_t total = 0;
  for (const auto& [lambda, vs] : projected) {
    dims[lambda] = LieSpan(vs, n * n).dim();
    total += dims[lambda];
  }
  if (total != a.dim()) throw std::logic_error("oracle: kernel is not ad(h)-stable");
  return dims;
}

CrossValidation cross_validate(CentralizerAnalysis& symbolic) {
  const StructuredAlgebra& alg = symbolic.algebra();
  const OracleAlgebra oracle = kernel_centralizer(alg.partition(), alg.type());
  CrossValidation out;
  out.symbolic_dim = alg.dim();
  out.oracle_dim = oracle.dim();
  out.dims = out.symbolic_dim == out.oracle_dim;

  out.membership = true;
  for (const auto& v : alg.basis()) {
    if (!oracle.span.contains(alg.hat().matrix_of(v).flat())) {
      out.membership = false;
      break;
    }
  }

  out.symbolic_derived_dim = symbolic.derived().dim();
  out.oracle_derived_dim = oracle_derived(oracle).dim();
  out.derived = out.symbolic_derived_dim == out.oracle_derived_dim;

  for (const auto& [lambda, piece] : symbolic.grading().pieces)
    if (piece.dim() > 0) out.symbolic_graded[lambda] = piece.dim();
  for (const auto& [lambda, d] : oracle_graded_dims(oracle))
    if (d > 0) out.oracle_graded[lambda] = d;
  out.graded = out.symbolic_graded == out.oracle_graded;
  return out;
}

CrossValidation cross_validate(const Partition& p, AlgebraType t) {
  CentralizerAnalysis an(p, t);
  return cross_validate(an);
}

}  // namespace centkit

#include "centkit/sl2_triple.hpp"

#include <stdexcept>

namespace centkit {

Sl2Triple sl2_triple(const GlCentralizer& hat, const FormMatrix* form) {
  const Partition& p = hat.partition();
  const auto n = static_cast<std::size_t>(p.size());
  Sl2Triple triple{hat.matrix_of(hat.e_vector()), QMatrix(n, n), QMatrix(n, n)};
  std::vector<int> hdiag(n);
  for (int i = 1; i <= p.length(); ++i)
    for (int m = 0; m < p.part(i); ++m) {
      const std::size_t pos = hat.vector_position(i, m);
      hdiag[pos] = 2 * m + 1 - p.part(i);
      triple.h(pos, pos) = hdiag[pos];
    }

  // [h, f] = -2f confines f to the entries (u, v) with h_u - h_v = -2.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (hdiag[u] - hdiag[v] == -2) unknowns.emplace_back(u, v);

  const std::size_t blocks = form ? 2 : 1;
  QMatrix system(blocks * n * n, unknowns.size());
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    QMatrix unit(n, n);
    unit(unknowns[col].first, unknowns[col].second) = 1;
    const QMatrix ad = commutator(triple.e, unit);
    for (std::size_t r = 0; r < n * n; ++r) system(r, col) = ad.flat()[r];
    if (form) {
      const QMatrix anti = sigma_matrix(unit, *form) - unit;
      for (std::size_t r = 0; r < n * n; ++r) system(n * n + r, col) = anti.flat()[r];
    }
  }
  QVector rhs(blocks * n * n);
  for (std::size_t r = 0; r < n * n; ++r) rhs[r] = triple.h.flat()[r];

  const auto x = solve(system, rhs);
  if (!x) throw std::logic_error("sl2_triple: no f for partition " + p.str());
  for (std::size_t col = 0; col < unknowns.size(); ++col)
    triple.f(unknowns[col].first, unknowns[col].second) = (*x)[col];

  if (commutator(triple.h, triple.e) != triple.e * Rational(2) ||
      commutator(triple.h, triple.f) != triple.f * Rational(-2) || commutator(triple.e, triple.f) != triple.h)
    throw std::logic_error("sl2_triple: relations fail for partition " + p.str());
  return triple;
}

Sl2Triple sl2_triple(const Partition& p, AlgebraType t) {
  const GlCentralizer hat(p);
  if (t == AlgebraType::GL) return sl2_triple(hat, nullptr);
  const FormMatrix form = build_form(p, t);
  return sl2_triple(hat, &form);
}

}  // namespace centkit

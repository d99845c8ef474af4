#include "centkit/centralizer_gl.hpp"

#include <algorithm>

namespace centkit {

std::string BasisElement::str() const {
  return "xi_" + std::to_string(i) + "^{" + std::to_string(j) + "," + std::to_string(s) + "}";
}

GlCentralizer::GlCentralizer(Partition p) : partition_(std::move(p)) {
  const int k = partition_.length();
  const auto kk = static_cast<std::size_t>(k);
  block_offset_.assign(kk * kk, 0);
  window_start_.assign(kk * kk, 0);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      const int di = partition_.part(i);
      const int dj = partition_.part(j);
      const auto cell = static_cast<std::size_t>((i - 1) * k + (j - 1));
      block_offset_[cell] = basis_.size();
      window_start_[cell] = std::max(dj - di, 0);
      for (int s = std::max(dj - di, 0); s <= dj - 1; ++s) {
        basis_.push_back({i, j, s});
        weights_.push_back(di - dj + 2 * s);
      }
    }
  }
  vector_offset_.assign(kk + 1, 0);
  for (int i = 1; i <= k; ++i)
    vector_offset_[static_cast<std::size_t>(i)] =
        vector_offset_[static_cast<std::size_t>(i - 1)] + static_cast<std::size_t>(partition_.part(i));

  const std::size_t n = basis_.size();
  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = bracket(basis_[a], basis_[b]);
}

bool GlCentralizer::admissible(const BasisElement& a) const noexcept {
  const int k = partition_.length();
  if (a.i < 1 || a.i > k || a.j < 1 || a.j > k) return false;
  const int di = partition_.parts()[static_cast<std::size_t>(a.i - 1)];
  const int dj = partition_.parts()[static_cast<std::size_t>(a.j - 1)];
  return a.s >= std::max(dj - di, 0) && a.s <= dj - 1;
}

std::optional<std::size_t> GlCentralizer::index_of(const BasisElement& a) const noexcept {
  if (!admissible(a)) return std::nullopt;
  const auto cell = static_cast<std::size_t>((a.i - 1) * partition_.length() + (a.j - 1));
  return block_offset_[cell] + static_cast<std::size_t>(a.s - window_start_[cell]);
}

SignedCombination GlCentralizer::bracket(const BasisElement& a, const BasisElement& b) const {
  SignedCombination out;
  if (!admissible(a) || !admissible(b)) return out;
  // [xi_i^{j,s}, xi_p^{q,t}] = delta_{q,i} xi_p^{j,t+s} - delta_{j,p} xi_i^{q,s+t}
  if (b.j == a.i) {
    const BasisElement term{b.i, a.j, a.s + b.s};
    if (admissible(term)) out.push_back({1, term});
  }
  if (a.j == b.i) {
    const BasisElement term{a.i, b.j, a.s + b.s};
    if (admissible(term)) {
      auto same = std::find_if(out.begin(), out.end(), [&](const SignedTerm& t) { return t.element == term; });
      if (same != out.end()) {
        out.erase(same);
      } else {
        out.push_back({-1, term});
      }
    }
  }
  return out;
}

const SignedCombination& GlCentralizer::bracket_of_indices(std::size_t a, std::size_t b) const {
  return table_.at(a * basis_.size() + b);
}

QVector GlCentralizer::bracket(const QVector& x, const QVector& y) const {
  const std::size_t n = basis_.size();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: coordinate length");
  std::vector<std::size_t> ys;
  for (std::size_t b = 0; b < n; ++b)
    if (!y[b].is_zero()) ys.push_back(b);
  QVector out(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b : ys) {
      const auto& terms = table_[a * n + b];
      if (terms.empty()) continue;
      const Rational c = x[a] * y[b];
      for (const auto& t : terms) {
        const std::size_t idx = *index_of(t.element);
        if (t.coefficient == 1) {
          out[idx] += c;
        } else {
          out[idx] -= c;
        }
      }
    }
  }
  return out;
}

int GlCentralizer::weight(const BasisElement& a) const {
  if (!admissible(a)) throw std::invalid_argument("weight: inadmissible element " + a.str());
  return partition_.part(a.i) - partition_.part(a.j) + 2 * a.s;
}

std::size_t GlCentralizer::vector_position(int block, int power) const {
  if (block < 1 || block > partition_.length() || power < 0 || power >= partition_.part(block))
    throw std::out_of_range("vector_position: no such basis vector");
  return vector_offset_[static_cast<std::size_t>(block - 1)] + static_cast<std::size_t>(power);
}

QMatrix GlCentralizer::matrix_of(const BasisElement& a) const {
  const auto n = static_cast<std::size_t>(partition_.size());
  QMatrix m(n, n);
  if (!admissible(a)) return m;
  // e^m w_i -> e^{m+s} w_j, zero once the power leaves block j.
  for (int pow = 0; pow < partition_.part(a.i); ++pow) {
    if (pow + a.s >= partition_.part(a.j)) break;
    m(vector_position(a.j, pow + a.s), vector_position(a.i, pow)) = 1;
  }
  return m;
}

QMatrix GlCentralizer::matrix_of(const QVector& coords) const {
  if (coords.size() != basis_.size()) throw DimensionMismatch("matrix_of: coordinate length");
  const auto n = static_cast<std::size_t>(partition_.size());
  QMatrix m(n, n);
  for (std::size_t idx = 0; idx < coords.size(); ++idx) {
    if (coords[idx].is_zero()) continue;
    const BasisElement& a = basis_[idx];
    for (int pow = 0; pow < partition_.part(a.i); ++pow) {
      if (pow + a.s >= partition_.part(a.j)) break;
      m(vector_position(a.j, pow + a.s), vector_position(a.i, pow)) += coords[idx];
    }
  }
  return m;
}

QVector GlCentralizer::e_vector() const {
  QVector v(basis_.size());
  for (int i = 1; i <= partition_.length(); ++i)
    if (auto idx = index_of({i, i, 1})) v[*idx] = 1;
  return v;
}

QVector GlCentralizer::e_component(int d) const {
  QVector v(basis_.size());
  for (int i = 1; i <= partition_.length(); ++i)
    if (partition_.part(i) == d)
      if (auto idx = index_of({i, i, 1})) v[*idx] = 1;
  return v;
}

QVector GlCentralizer::trace_functional() const {
  QVector v(basis_.size());
  for (int i = 1; i <= partition_.length(); ++i) v[*index_of({i, i, 0})] = partition_.part(i);
  return v;
}

QVector GlCentralizer::to_vector(const SignedCombination& c) const {
  QVector v(basis_.size());
  for (const auto& t : c) {
    auto idx = index_of(t.element);
    if (!idx) throw std::invalid_argument("to_vector: inadmissible element " + t.element.str());
    v[*idx] += t.coefficient;
  }
  return v;
}

std::vector<BasisElement> enumerate_basis(const Partition& p) { return GlCentralizer(p).basis(); }

SignedCombination bracket(const Partition& p, const BasisElement& a, const BasisElement& b) {
  return GlCentralizer(p).bracket(a, b);
}

int weight(const Partition& p, const BasisElement& a) { return GlCentralizer(p).weight(a); }

QMatrix matrix_of(const BasisElement& a, const Partition& p) { return GlCentralizer(p).matrix_of(a); }

}  // namespace centkit

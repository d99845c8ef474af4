#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "centkit/linalg.hpp"
#include "centkit/partition.hpp"

namespace centkit {

/// xi_i^{j,s}: sends w_i to e^s w_j and kills w_t for t != i (blocks 1-based).
struct BasisElement {
  int i = 1;
  int j = 1;
  int s = 0;
  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
  [[nodiscard]] std::string str() const;
};

struct SignedTerm {
  int coefficient;
  BasisElement element;
  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};
using SignedCombination = std::vector<SignedTerm>;

/// The centraliser of e in gl(V) in its xi basis.
///
/// Coordinates are ordered lexicographically in (i, j, s). The vector space V
/// is ordered as {e^m w_i} with blocks by i and powers ascending.
class GlCentralizer {
 public:
  explicit GlCentralizer(Partition p);

  [[nodiscard]] const Partition& partition() const noexcept { return partition_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  [[nodiscard]] const BasisElement& element(std::size_t index) const { return basis_.at(index); }

  [[nodiscard]] bool admissible(const BasisElement& a) const noexcept;
  [[nodiscard]] std::optional<std::size_t> index_of(const BasisElement& a) const noexcept;

  /// Commutator relation with out-of-window terms dropped; inadmissible inputs are zero.
  [[nodiscard]] SignedCombination bracket(const BasisElement& a, const BasisElement& b) const;
  /// Bilinear extension to coordinate vectors via the precomputed table.
  [[nodiscard]] QVector bracket(const QVector& x, const QVector& y) const;
  [[nodiscard]] const SignedCombination& bracket_of_indices(std::size_t a, std::size_t b) const;

  /// ad(h) eigenvalue (d_i - d_j) + 2s.
  [[nodiscard]] int weight(const BasisElement& a) const;
  [[nodiscard]] int weight(std::size_t index) const { return weights_.at(index); }

  [[nodiscard]] int vector_dim() const noexcept { return partition_.size(); }
  /// Position of e^m w_i in the ordered basis of V.
  [[nodiscard]] std::size_t vector_position(int block, int power) const;

  [[nodiscard]] QMatrix matrix_of(const BasisElement& a) const;
  [[nodiscard]] QMatrix matrix_of(const QVector& coords) const;

  /// Coordinates of e = sum_i xi_i^{i,1}.
  [[nodiscard]] QVector e_vector() const;
  /// Coordinates of e_d: the part of e supported on blocks of size d.
  [[nodiscard]] QVector e_component(int d) const;
  /// Linear functional x -> trace(matrix_of(x)).
  [[nodiscard]] QVector trace_functional() const;

  [[nodiscard]] QVector to_vector(const SignedCombination& c) const;

 private:
  Partition partition_;
  std::vector<BasisElement> basis_;
  std::vector<int> weights_;
  std::vector<std::size_t> block_offset_;           // (i, j) -> first coordinate
  std::vector<int> window_start_;                   // (i, j) -> smallest admissible s
  std::vector<std::size_t> vector_offset_;          // block -> first position in V
  std::vector<SignedCombination> table_;            // dim * dim
};

[[nodiscard]] std::vector<BasisElement> enumerate_basis(const Partition& p);
[[nodiscard]] SignedCombination bracket(const Partition& p, const BasisElement& a, const BasisElement& b);
[[nodiscard]] int weight(const Partition& p, const BasisElement& a);
[[nodiscard]] QMatrix matrix_of(const BasisElement& a, const Partition& p);

}  // namespace centkit

#pragma once

#include <utility>
#include <vector>

#include "centkit/centralizer_gl.hpp"
#include "centkit/linalg.hpp"
#include "centkit/partition.hpp"

namespace centkit {

/// Gram matrix of the invariant form in the ordered basis {e^m w_i}:
/// (x, y)_V = x^T gram y.
struct FormMatrix {
  QMatrix gram;
  QMatrix gram_inverse;
  int epsilon = 1;
  BlockPairing pairing;
};

/// (w_i, e^{d_i-1} w_{i'}) = +1 for i <= i'; every other entry is forced by
/// e-invariance and the symmetry of the form.
[[nodiscard]] FormMatrix build_form(const Partition& p, AlgebraType t);

/// The involution x -> -G^{-1} x^T G on n x n matrices.
[[nodiscard]] QMatrix sigma_matrix(const QMatrix& x, const FormMatrix& form);

struct SignedElement {
  int sign;
  BasisElement element;
  friend bool operator==(const SignedElement&, const SignedElement&) = default;
};

/// sigma(xi_i^{j,s}) = sign * xi_{j'}^{i', s + d_i - d_j}, the sign read off the form.
/// Throws std::logic_error if the image is not of that shape.
[[nodiscard]] SignedElement sigma(const GlCentralizer& hat, const BasisElement& a, const FormMatrix& form);

enum class Parity { Fixed, AntiFixed };

/// xi_i^{j,d_j-s} + sign * xi_{j'}^{i',d_i-s}, an element of g_e (Fixed) or
/// m_e (AntiFixed). When primary == mirror the element appears once.
struct SignedPair {
  BasisElement primary;
  BasisElement mirror;
  int sign;  // eps(i,j,s) for g_e entries; the opposite sign for m_e entries
  Parity parity;
  /// The s label: primary == xi_i^{j, d_j - s}.
  int s_label;
  [[nodiscard]] bool self_paired() const noexcept { return primary == mirror; }
  [[nodiscard]] std::string str() const;
};

/// sigma on every coordinate of the gl centraliser: image index and sign.
class SigmaTable {
 public:
  SigmaTable(const GlCentralizer& hat, const FormMatrix& form);
  [[nodiscard]] std::size_t image(std::size_t index) const { return image_.at(index); }
  [[nodiscard]] int sign(std::size_t index) const { return sign_.at(index); }
  [[nodiscard]] QVector apply(const QVector& x) const;

 private:
  std::vector<std::size_t> image_;
  std::vector<int> sign_;
};

struct GeMeBases {
  std::vector<SignedPair> ge;
  std::vector<SignedPair> me;
};

[[nodiscard]] GeMeBases ge_me_bases(const GlCentralizer& hat, const SigmaTable& sigma);
/// Throws InvalidPartition unless validate(p, t) with t != GL.
[[nodiscard]] GeMeBases ge_me_bases(const Partition& p, AlgebraType t);

[[nodiscard]] QVector to_vector(const SignedPair& pair, const GlCentralizer& hat);

}  // namespace centkit

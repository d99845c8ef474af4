#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "centkit/centralizer_gl.hpp"
#include "centkit/centralizer_oss.hpp"
#include "centkit/linalg.hpp"
#include "centkit/partition.hpp"
#include "centkit/sl2_triple.hpp"

namespace centkit {

/// A centraliser g_e presented inside the xi coordinates of the gl centraliser.
///
/// For GL the basis is every xi coordinate. For SO/SP it is the sigma-fixed
/// combinations. Every basis vector is ad(h)-homogeneous.
class StructuredAlgebra {
 public:
  StructuredAlgebra(const Partition& p, AlgebraType t);

  [[nodiscard]] const Partition& partition() const noexcept { return hat_->partition(); }
  [[nodiscard]] AlgebraType type() const noexcept { return type_; }
  [[nodiscard]] const GlCentralizer& hat() const noexcept { return *hat_; }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return hat_->dim(); }

  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] const std::vector<QVector>& basis() const noexcept { return basis_; }
  [[nodiscard]] const std::vector<int>& weights() const noexcept { return weights_; }
  /// Human-readable label per basis vector.
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// SO/SP only: the signed pairs behind the basis (g_e) and the m_e complement.
  [[nodiscard]] const std::optional<GeMeBases>& pairs() const noexcept { return pairs_; }

  [[nodiscard]] const std::optional<FormMatrix>& form() const noexcept { return form_; }
  [[nodiscard]] const std::optional<SigmaTable>& sigma() const noexcept { return sigma_; }
  [[nodiscard]] const Sl2Triple& triple() const noexcept { return triple_; }

  [[nodiscard]] QVector e_vector() const { return hat_->e_vector(); }
  [[nodiscard]] QVector bracket(const QVector& x, const QVector& y) const { return hat_->bracket(x, y); }
  [[nodiscard]] BracketFn bracket_fn() const;
  [[nodiscard]] LieSpan whole() const { return LieSpan(basis_, ambient_dim()); }
  /// Largest ad(h) weight that can occur: 2(d_1 - 1).
  [[nodiscard]] int top_weight() const noexcept { return 2 * (partition().largest() - 1); }

 private:
  AlgebraType type_;
  std::shared_ptr<const GlCentralizer> hat_;
  std::optional<FormMatrix> form_;
  std::optional<SigmaTable> sigma_;
  std::optional<GeMeBases> pairs_;
  std::vector<QVector> basis_;
  std::vector<int> weights_;
  std::vector<std::string> labels_;
  Sl2Triple triple_;
};

}  // namespace centkit

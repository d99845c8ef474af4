#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "centkit/rational.hpp"

namespace centkit {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using QVector = std::vector<Rational>;

[[nodiscard]] bool is_zero(const QVector& v);
[[nodiscard]] QVector zero_vector(std::size_t n);
[[nodiscard]] QVector unit_vector(std::size_t n, std::size_t index);
/// y += c * x
void axpy(QVector& y, const Rational& c, const QVector& x);
[[nodiscard]] Rational dot(const QVector& a, const QVector& b);

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws DimensionMismatch on ragged input.
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(std::span<const QVector> rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] QVector row(std::size_t r) const;
  [[nodiscard]] QMatrix transpose() const;
  [[nodiscard]] Rational trace() const;
  [[nodiscard]] bool is_zero() const;
  /// Row-major flattening, the coordinates used for spans of matrices.
  [[nodiscard]] const QVector& flat() const noexcept { return data_; }
  static QMatrix from_flat(const QVector& flat, std::size_t rows, std::size_t cols);

  QMatrix& operator+=(const QMatrix& rhs);
  QMatrix& operator-=(const QMatrix& rhs);
  QMatrix& operator*=(const Rational& c);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& c) { return a *= c; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, const QVector& v);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  [[nodiscard]] std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  QVector data_;
};

[[nodiscard]] QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// Unique reduced row-echelon form (zero rows kept at the bottom).
[[nodiscard]] QMatrix rref(const QMatrix& m);
[[nodiscard]] std::size_t rank(const QMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in column order.
[[nodiscard]] std::vector<QVector> nullspace(const QMatrix& m);
/// A solution of m x = b, or nullopt if the system is inconsistent.
[[nodiscard]] std::optional<QVector> solve(const QMatrix& m, const QVector& b);
[[nodiscard]] std::optional<QMatrix> inverse(const QMatrix& m);

/// Row-echelon basis grown one vector at a time.
///
/// Rows are kept sorted by pivot with pivot entry 1 but are not back-reduced
/// until `canonical_rows` is called; that keeps insertion at one reduction pass.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }

  /// Returns true if `v` was independent of the current rows.
  bool insert(QVector v);
  /// Reduces `v` in place against the rows; zero afterwards iff v was in the span.
  void reduce(QVector& v) const;
  [[nodiscard]] bool contains(QVector v) const;
  [[nodiscard]] std::vector<QVector> canonical_rows() const;

 private:
  struct Row {
    std::size_t pivot;
    QVector data;
    std::vector<std::size_t> support;
  };
  void reduce_impl(QVector& v) const;

  std::size_t ambient_;
  std::vector<Row> rows_;
};

/// Subspace of Q^ambient_dim held by its canonical RREF basis.
class LieSpan {
 public:
  explicit LieSpan(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}
  /// Throws DimensionMismatch if any vector has the wrong length.
  LieSpan(std::span<const QVector> vectors, std::size_t ambient_dim);
  static LieSpan from_echelon(const EchelonBasis& basis);
  static LieSpan full(std::size_t ambient_dim);

  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] const std::vector<QVector>& basis() const noexcept { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  [[nodiscard]] bool contains(const QVector& v) const;
  [[nodiscard]] bool contains(const LieSpan& other) const;
  [[nodiscard]] LieSpan sum(const LieSpan& other) const;
  [[nodiscard]] LieSpan intersect(const LieSpan& other) const;

  friend bool operator==(const LieSpan& a, const LieSpan& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  void check_same_ambient(const LieSpan& other) const;

  std::size_t ambient_;
  std::vector<QVector> basis_;
  std::vector<std::size_t> pivots_;
};

[[nodiscard]] LieSpan span(std::span<const QVector> vectors, std::size_t ambient_dim);

using BracketFn = std::function<QVector(const QVector&, const QVector&)>;

/// Span of [a, b] over all pairs of canonical basis vectors a of A, b of B.
///
/// If `rank_cap` is given the search stops once that rank is reached; callers
/// pass the dimension of a subspace already known to contain every bracket.
[[nodiscard]] LieSpan pairwise_bracket_span(const LieSpan& a, const LieSpan& b,
                                            const BracketFn& bracket,
                                            std::optional<std::size_t> rank_cap = std::nullopt);

/// Same as above on explicit generator lists (need not be canonical).
[[nodiscard]] LieSpan pairwise_bracket_span(std::span<const QVector> a, std::span<const QVector> b,
                                            std::size_t ambient_dim, const BracketFn& bracket,
                                            std::optional<std::size_t> rank_cap = std::nullopt);

}  // namespace centkit

#include "centkit/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace centkit {

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

QVector zero_vector(std::size_t n) { return QVector(n); }

QVector unit_vector(std::size_t n, std::size_t index) {
  QVector v(n);
  v.at(index) = 1;
  return v;
}

void axpy(QVector& y, const Rational& c, const QVector& x) {
  if (y.size() != x.size()) throw DimensionMismatch("axpy: length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += c * x[i];
  }
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

// ---------------------------------------------------------------------------
// QMatrix

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("QMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(std::span<const QVector> rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("QMatrix::from_rows: length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

QMatrix QMatrix::from_flat(const QVector& flat, std::size_t rows, std::size_t cols) {
  if (flat.size() != rows * cols) throw DimensionMismatch("QMatrix::from_flat: size mismatch");
  QMatrix m(rows, cols);
  m.data_ = flat;
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return QVector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational QMatrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
  Rational acc;
  for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
  return acc;
}

bool QMatrix::is_zero() const { return centkit::is_zero(data_); }

QMatrix& QMatrix::operator+=(const QMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!rhs.data_[i].is_zero()) data_[i] += rhs.data_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!rhs.data_[i].is_zero()) data_[i] -= rhs.data_[i];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= c;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product");
  QVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Gauss-Jordan

namespace {

struct Reduced {
  QMatrix m;
  std::vector<std::size_t> pivots;
};

Reduced gauss_jordan(QMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(r, k).is_zero()) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) submul(m(i, k), f, m(r, k));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

QMatrix rref(const QMatrix& m) { return gauss_jordan(m).m; }

std::size_t rank(const QMatrix& m) { return gauss_jordan(m).pivots.size(); }

std::vector<QVector> nullspace(const QMatrix& m) {
  const auto [red, pivots] = gauss_jordan(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto [red, pivots] = gauss_jordan(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red(r, m.cols());
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto [red, pivots] = gauss_jordan(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

// ---------------------------------------------------------------------------
// EchelonBasis

void EchelonBasis::reduce_impl(QVector& v) const {
  for (const Row& row : rows_) {
    if (v[row.pivot].is_zero()) continue;
    const Rational f = v[row.pivot];
    for (std::size_t k : row.support) submul(v[k], f, row.data[k]);
  }
}

void EchelonBasis::reduce(QVector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("EchelonBasis: vector length");
  reduce_impl(v);
}

bool EchelonBasis::contains(QVector v) const {
  reduce(v);
  return is_zero(v);
}

bool EchelonBasis::insert(QVector v) {
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < ambient_ && v[pivot].is_zero()) ++pivot;
  if (pivot == ambient_) return false;
  const Rational inv = Rational(1) / v[pivot];
  Row row{pivot, std::move(v), {}};
  for (std::size_t k = pivot; k < ambient_; ++k) {
    if (row.data[k].is_zero()) continue;
    if (!inv.is_one()) row.data[k] *= inv;
    row.support.push_back(k);
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                              [](const Row& r, std::size_t p) { return r.pivot < p; });
  rows_.insert(pos, std::move(row));
  return true;
}

std::vector<QVector> EchelonBasis::canonical_rows() const {
  std::vector<QVector> out;
  out.reserve(rows_.size());
  for (const Row& r : rows_) out.push_back(r.data);
  // Back substitution from the bottom row up.
  for (std::size_t i = out.size(); i-- > 0;) {
    const std::size_t p = rows_[i].pivot;
    for (std::size_t j = 0; j < i; ++j) {
      if (out[j][p].is_zero()) continue;
      const Rational f = out[j][p];
      for (std::size_t k = p; k < ambient_; ++k)
        if (!out[i][k].is_zero()) submul(out[j][k], f, out[i][k]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// LieSpan

LieSpan::LieSpan(std::span<const QVector> vectors, std::size_t ambient_dim) : ambient_(ambient_dim) {
  EchelonBasis eb(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw DimensionMismatch("span: vector length differs from ambient");
    eb.insert(v);
  }
  *this = from_echelon(eb);
}

LieSpan LieSpan::from_echelon(const EchelonBasis& basis) {
  LieSpan s(basis.ambient_dim());
  s.basis_ = basis.canonical_rows();
  for (const auto& row : s.basis_) {
    std::size_t p = 0;
    while (row[p].is_zero()) ++p;
    s.pivots_.push_back(p);
  }
  return s;
}

LieSpan LieSpan::full(std::size_t ambient_dim) {
  LieSpan s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

void LieSpan::check_same_ambient(const LieSpan& other) const {
  if (ambient_ != other.ambient_) throw DimensionMismatch("LieSpan: ambient dimensions differ");
}

bool LieSpan::contains(const QVector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("LieSpan::contains: vector length");
  // Against an RREF basis the coefficient of row r is simply v[pivot_r].
  QVector w = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rational f = w[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t k = pivots_[r]; k < ambient_; ++k) submul(w[k], f, basis_[r][k]);
  }
  return is_zero(w);
}

bool LieSpan::contains(const LieSpan& other) const {
  check_same_ambient(other);
  if (other.dim() > dim()) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const QVector& v) { return contains(v); });
}

LieSpan LieSpan::sum(const LieSpan& other) const {
  check_same_ambient(other);
  EchelonBasis eb(ambient_);
  for (const auto& v : basis_) eb.insert(v);
  for (const auto& v : other.basis_) eb.insert(v);
  return from_echelon(eb);
}

LieSpan LieSpan::intersect(const LieSpan& other) const {
  check_same_ambient(other);
  // Zassenhaus: rows (a | a) and (b | 0); rows with vanishing left half carry A ∩ B.
  const std::size_t n = ambient_;
  EchelonBasis eb(2 * n);
  for (const auto& a : basis_) {
    QVector row(2 * n);
    std::copy(a.begin(), a.end(), row.begin());
    std::copy(a.begin(), a.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
    eb.insert(std::move(row));
  }
  for (const auto& b : other.basis_) {
    QVector row(2 * n);
    std::copy(b.begin(), b.end(), row.begin());
    eb.insert(std::move(row));
  }
  std::vector<QVector> right;
  for (const auto& row : eb.canonical_rows()) {
    if (!std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n),
                     [](const Rational& x) { return x.is_zero(); }))
      continue;
    right.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return LieSpan(right, n);
}

LieSpan span(std::span<const QVector> vectors, std::size_t ambient_dim) { return LieSpan(vectors, ambient_dim); }

LieSpan pairwise_bracket_span(std::span<const QVector> a, std::span<const QVector> b, std::size_t ambient_dim,
                              const BracketFn& bracket, std::optional<std::size_t> rank_cap) {
  EchelonBasis eb(ambient_dim);
  const std::size_t cap = rank_cap.value_or(ambient_dim);
  for (const auto& x : a) {
    if (x.size() != ambient_dim) throw DimensionMismatch("pairwise_bracket_span: ambient mismatch");
    for (const auto& y : b) {
      if (y.size() != ambient_dim) throw DimensionMismatch("pairwise_bracket_span: ambient mismatch");
      if (eb.rank() >= cap) return LieSpan::from_echelon(eb);
      QVector z = bracket(x, y);
      if (z.size() != ambient_dim) throw DimensionMismatch("pairwise_bracket_span: bracket output length");
      if (!is_zero(z)) eb.insert(std::move(z));
    }
  }
  return LieSpan::from_echelon(eb);
}

LieSpan pairwise_bracket_span(const LieSpan& a, const LieSpan& b, const BracketFn& bracket,
                              std::optional<std::size_t> rank_cap) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("pairwise_bracket_span: ambient mismatch");
  return pairwise_bracket_span(a.basis(), b.basis(), a.ambient_dim(), bracket, rank_cap);
}

}  // namespace centkit

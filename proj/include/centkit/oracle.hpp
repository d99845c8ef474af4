#pragma once

#include <map>
#include <optional>
#include <vector>

#include "centkit/derived.hpp"
#include "centkit/linalg.hpp"
#include "centkit/partition.hpp"

namespace centkit {

/// A centraliser computed as a matrix kernel, independent of the xi tables.
/// The span lives in row-major n*n coordinates.
struct OracleAlgebra {
  Partition partition;
  AlgebraType type = AlgebraType::GL;
  std::size_t n = 0;
  QMatrix e;
  QMatrix h;
  std::optional<QMatrix> gram;
  std::vector<QMatrix> basis;
  LieSpan span;
  bool kernel_computed = true;

  [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
};

/// Block-diagonal Jordan matrix in the basis {e^m w_i}: column e^m w_i has a
/// single 1 in row e^{m+1} w_i.
[[nodiscard]] QMatrix e_matrix(const Partition& p);
/// diag(2m + 1 - d_i) in the same basis.
[[nodiscard]] QMatrix h_matrix(const Partition& p);

/// Kernel of x -> [x, e], intersected with {x : G x + x^T G = 0} for SO/SP.
/// Throws InvalidPartition if !validate(p, t); std::logic_error if the form
/// is not e-invariant.
[[nodiscard]] OracleAlgebra kernel_centralizer(const Partition& p, AlgebraType t);

/// Span of [x, y] over basis pairs.
[[nodiscard]] LieSpan oracle_derived(const OracleAlgebra& a);
/// dim of the ad(h) eigenspace of weight lambda, for every weight that occurs.
[[nodiscard]] std::map<int, std::size_t> oracle_graded_dims(const OracleAlgebra& a);

struct CrossValidation {
  std::size_t symbolic_dim = 0;
  std::size_t oracle_dim = 0;
  std::size_t symbolic_derived_dim = 0;
  std::size_t oracle_derived_dim = 0;
  std::map<int, std::size_t> symbolic_graded;
  std::map<int, std::size_t> oracle_graded;
  bool dims = false;
  bool membership = false;
  bool derived = false;
  bool graded = false;
  [[nodiscard]] bool ok() const noexcept { return dims && membership && derived && graded; }
};

[[nodiscard]] CrossValidation cross_validate(CentralizerAnalysis& symbolic);
[[nodiscard]] CrossValidation cross_validate(const Partition& p, AlgebraType t);

}  // namespace centkit

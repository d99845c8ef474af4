#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "centkit/derived.hpp"
#include "centkit/partition.hpp"

namespace centkit {

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string detail;  // empty when there is nothing beyond the status
};

struct VerificationReport {
  Partition partition;
  AlgebraType type = AlgebraType::GL;

  // For GL the algebra is sl: dim_ge excludes the centre, dim_gl keeps it.
  std::size_t dim_ge = 0;
  std::size_t dim_gl = 0;
  std::size_t dim_derived = 0;
  std::map<int, std::size_t> graded_dims;

  bool reachable_criterion = false;
  bool rigid_criterion = false;
  bool g0_semisimple = false;

  bool e_in_derived = false;
  bool e_in_g1g1 = false;
  bool perfect = false;
  std::size_t g1_dim = 0;
  std::size_t fhat_rank = 0;

  std::vector<Check> checks;

  [[nodiscard]] bool all_pass() const noexcept;
  /// Throws std::out_of_range for an unknown name.
  [[nodiscard]] const Check& check(std::string_view name) const;
  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

struct VerifyOptions {
  bool oracle = true;  // run the matrix-kernel cross validation
};

/// Every check applicable to (p, t); failures are recorded, not thrown.
/// Throws InvalidPartition if !validate(p, t).
[[nodiscard]] VerificationReport verify_main_theorems(const Partition& p, AlgebraType t, VerifyOptions options = {});

/// Names accepted by verify_main_theorems' checks array, in report order.
[[nodiscard]] const std::vector<std::string>& check_names();

}  // namespace centkit

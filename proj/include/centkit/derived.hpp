#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "centkit/algebra.hpp"
#include "centkit/linalg.hpp"

namespace centkit {

enum class CheckStatus { Pass, Fail, NotApplicable };
[[nodiscard]] std::string_view to_string(CheckStatus s);
[[nodiscard]] inline CheckStatus status_of(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

/// g(lambda)_e for every weight that occurs; absent weights are zero.
struct GradedDecomposition {
  std::size_t ambient_dim = 0;
  std::map<int, LieSpan> pieces;
  [[nodiscard]] LieSpan piece(int lambda) const;
  [[nodiscard]] std::size_t total_dim() const;
};

/// Memoised subspaces of one centraliser. Not thread-safe; use one per task.
class CentralizerAnalysis {
 public:
  explicit CentralizerAnalysis(const Partition& p, AlgebraType t) : algebra_(p, t) {}
  explicit CentralizerAnalysis(StructuredAlgebra algebra) : algebra_(std::move(algebra)) {}

  [[nodiscard]] const StructuredAlgebra& algebra() const noexcept { return algebra_; }
  [[nodiscard]] AlgebraType type() const noexcept { return algebra_.type(); }

  const LieSpan& whole();
  /// The space a perfect centraliser equals: g_e for SO/SP, g_e ∩ sl for GL.
  const LieSpan& perfect_target();
  const GradedDecomposition& grading();
  LieSpan piece(int lambda) { return grading().piece(lambda); }
  /// Sum of the strictly positive weight pieces.
  const LieSpan& positive_part();

  /// [g_e, g_e]
  const LieSpan& derived();
  /// [g(1)_e, g(lambda)_e]
  const LieSpan& g1_bracket(int lambda);
  /// [g(1)_e, g_e]
  const LieSpan& g1_with_whole();

  bool e_in_derived();
  bool e_in_g1g1();

  /// kappa(f, [x, y]) on the canonical basis of g(1)_e, kappa the trace form.
  const QMatrix& fhat_gram();
  std::size_t fhat_rank();

 private:
  const std::vector<QVector>& weight_basis(int lambda);

  StructuredAlgebra algebra_;
  std::optional<LieSpan> whole_;
  std::optional<LieSpan> target_;
  std::optional<GradedDecomposition> grading_;
  std::optional<LieSpan> positive_;
  std::optional<LieSpan> derived_;
  std::optional<LieSpan> g1_whole_;
  std::map<int, LieSpan> g1_brackets_;
  std::map<int, std::vector<QVector>> weight_bases_;
  std::optional<QMatrix> fhat_;
};

[[nodiscard]] LieSpan derived_subalgebra(const LieSpan& a, const BracketFn& bracket);
[[nodiscard]] LieSpan derived_subalgebra(const StructuredAlgebra& a);
[[nodiscard]] GradedDecomposition graded_decomposition(const StructuredAlgebra& a);

struct Reachability {
  bool in_derived = false;  // e ∈ [g_e, g_e]
  bool in_g1g1 = false;     // e ∈ [g(1)_e, g(1)_e]
  [[nodiscard]] bool reachable() const noexcept { return in_derived; }
  [[nodiscard]] bool consistent() const noexcept { return in_derived == in_g1g1; }
};

[[nodiscard]] Reachability reachability(CentralizerAnalysis& a);
[[nodiscard]] bool is_reachable_structural(const StructuredAlgebra& a);
[[nodiscard]] bool is_perfect(CentralizerAnalysis& a);
[[nodiscard]] bool is_perfect(const StructuredAlgebra& a);
[[nodiscard]] QMatrix fhat_gram(const StructuredAlgebra& a);

struct GradedGenerationReport {
  struct Step {
    int lambda;
    std::size_t bracket_dim;  // dim [g(1), g(lambda)]
    std::size_t target_dim;   // dim g(lambda + 1)
    bool equal;
  };
  CheckStatus g_lambda = CheckStatus::NotApplicable;  // all steps, SO/SP reachable only
  CheckStatus g1 = CheckStatus::NotApplicable;        // [g(0), g(1)] = g(1), unconditional
  CheckStatus g2 = CheckStatus::NotApplicable;        // the lambda = 1 step
  std::vector<Step> steps;
};

[[nodiscard]] GradedGenerationReport verify_graded_generation(CentralizerAnalysis& a);

struct TwoBlockReport {
  Partition partition;
  AlgebraType type = AlgebraType::GL;
  std::size_t commutator_dim = 0;  // dim [g(1), g(1)]
  std::size_t g2_dim = 0;          // dim g(2)
  bool membership = false;         // m e_d - n e_{d+1} ∈ [g(1), g(1)]
  std::optional<bool> codim_ok;    // GL only
  std::optional<bool> module_ok;   // GL only: equality with sl_m + sl_n + F(m e_d - n e_{d+1})
  [[nodiscard]] bool ok() const noexcept {
    return membership && codim_ok.value_or(true) && module_ok.value_or(true);
  }
};

/// Throws InvalidPartition if ((d+1)^m, d^n) is not valid for t.
[[nodiscard]] TwoBlockReport verify_two_block(int m, int n, int d, AlgebraType t);
[[nodiscard]] TwoBlockReport verify_two_block(CentralizerAnalysis& a);

/// [g(1)_e, g_e] equals the positive-weight part. SO/SP with e reachable only.
[[nodiscard]] CheckStatus verify_nilradical(CentralizerAnalysis& a);

struct OneBlockReport {
  CheckStatus status = CheckStatus::NotApplicable;
  std::size_t g0_dim = 0;
  std::size_t expected_g0_dim = 0;
  std::vector<std::pair<std::size_t, std::size_t>> weight_dims;  // (actual, expected) for weight 2m, m < d
};

/// Rectangular d^k in SO/SP: dim g(2m)_e follows the S^2/Lambda^2 rule.
[[nodiscard]] OneBlockReport verify_one_block(CentralizerAnalysis& a);

}  // namespace centkit

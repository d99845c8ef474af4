#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace centkit {

class InvalidPartition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class AlgebraType { GL, SO, SP };

/// +1 for SO (symmetric form), -1 for SP (skew form). Throws for GL.
[[nodiscard]] int epsilon(AlgebraType t);
[[nodiscard]] std::string_view to_string(AlgebraType t);
/// Accepts "gl", "sl", "so", "sp" (case-insensitive).
[[nodiscard]] std::optional<AlgebraType> parse_algebra_type(std::string_view s);

/// Jordan type of a nilpotent: block sizes d_1 >= ... >= d_k >= 1.
class Partition {
 public:
  Partition() = default;
  /// Sorts into weakly decreasing order; throws InvalidPartition on non-positive parts.
  explicit Partition(std::vector<int> parts);

  /// "3,2,2,1" or the exponent shorthand "2^3,1^2".
  static Partition parse(std::string_view text);

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }  // 1-based
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int size() const noexcept { return size_; }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  [[nodiscard]] int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  [[nodiscard]] int multiplicity(int d) const;
  /// Distinct part sizes, largest first.
  [[nodiscard]] std::vector<int> distinct_parts() const;
  [[nodiscard]] std::vector<int> conjugate() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the parts.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// True iff p is the Jordan type of a nilpotent in the algebra of type t.
[[nodiscard]] bool validate(const Partition& p, AlgebraType t) noexcept;

/// The block involution i -> i' (1-based). partner[i-1] == i'.
struct BlockPairing {
  std::vector<int> partner;
  [[nodiscard]] int operator()(int i) const { return partner.at(static_cast<std::size_t>(i - 1)); }
};

/// Throws InvalidPartition if !validate(p, t) or t == GL.
[[nodiscard]] BlockPairing build_pairing(const Partition& p, AlgebraType t);

/// Distinct parts are exactly {1, ..., d_1}.
[[nodiscard]] bool is_reachable_criterion(const Partition& p) noexcept;
[[nodiscard]] bool is_rigid_criterion(const Partition& p, AlgebraType t);

enum class FactorKind { GL, SP, SO };
[[nodiscard]] std::string_view to_string(FactorKind k);

/// One simple-or-reductive factor of g(0)_e attached to a part size.
struct G0Factor {
  FactorKind kind;
  int rank;       // multiplicity r_d the factor acts on
  int part_size;  // d
  [[nodiscard]] int dim() const;
  friend bool operator==(const G0Factor&, const G0Factor&) = default;
};

struct G0Structure {
  std::vector<G0Factor> factors;  // largest part first
  /// SO/SP: no so_2 factor. GL: g(0)_e of the traceless algebra is semisimple,
  /// i.e. there is a single distinct part size.
  bool semisimple = false;
  [[nodiscard]] int dim() const;
};

[[nodiscard]] G0Structure g0_factors(const Partition& p, AlgebraType t);

/// All partitions of n, lexicographically descending: (n), (n-1,1), ...
[[nodiscard]] std::vector<Partition> partitions_of(int n);
/// Valid partitions of every size 1..max_n for type t, ordered by (n, lex descending).
[[nodiscard]] std::vector<Partition> valid_partitions(AlgebraType t, int max_n);

/// Detects ((d+1)^m, d^n) with m, n >= 1. Returns (m, n, d).
struct TwoBlockShape {
  int m, n, d;
};
[[nodiscard]] std::optional<TwoBlockShape> two_block_shape(const Partition& p);
[[nodiscard]] Partition two_block_partition(int m, int n, int d);
[[nodiscard]] bool is_rectangular(const Partition& p) noexcept;

}  // namespace centkit

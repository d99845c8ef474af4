#include "centkit/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

namespace centkit {

int epsilon(AlgebraType t) {
  switch (t) {
    case AlgebraType::SO:
      return 1;
    case AlgebraType::SP:
      return -1;
    case AlgebraType::GL:
      break;
  }
  throw std::invalid_argument("epsilon is undefined for gl");
}

std::string_view to_string(AlgebraType t) {
  switch (t) {
    case AlgebraType::GL:
      return "gl";
    case AlgebraType::SO:
      return "so";
    case AlgebraType::SP:
      return "sp";
  }
  return "?";
}

std::optional<AlgebraType> parse_algebra_type(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "gl" || lower == "sl") return AlgebraType::GL;
  if (lower == "so") return AlgebraType::SO;
  if (lower == "sp") return AlgebraType::SP;
  return std::nullopt;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int d : parts_)
    if (d <= 0) throw InvalidPartition("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

int parse_positive(std::string_view tok, std::string_view whole) {
  while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
  while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value <= 0)
    throw InvalidPartition("cannot parse partition '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(start, comma - start);
    const std::size_t caret = tok.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_positive(tok, text));
    } else {
      const int d = parse_positive(tok.substr(0, caret), text);
      const int r = parse_positive(tok.substr(caret + 1), text);
      if (r > 10000) throw InvalidPartition("exponent too large in '" + std::string(text) + "'");
      parts.insert(parts.end(), static_cast<std::size_t>(r), d);
    }
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int d) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), d));
}

std::vector<int> Partition::distinct_parts() const {
  std::vector<int> out;
  for (int d : parts_)
    if (out.empty() || out.back() != d) out.push_back(d);
  return out;
}

std::vector<int> Partition::conjugate() const {
  std::vector<int> c(static_cast<std::size_t>(largest()), 0);
  for (int d : parts_)
    for (int j = 0; j < d; ++j) ++c[static_cast<std::size_t>(j)];
  return c;
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

// (-1)^d * eps == -1 exactly when every block of size d is self-paired.
bool self_paired(int d, int eps) { return ((d % 2 == 0) ? eps : -eps) == -1; }

}  // namespace

bool validate(const Partition& p, AlgebraType t) noexcept {
  if (p.empty()) return false;
  if (t == AlgebraType::GL) return true;
  const int eps = epsilon(t);
  for (int d : p.distinct_parts())
    if (!self_paired(d, eps) && p.multiplicity(d) % 2 != 0) return false;
  return true;
}

BlockPairing build_pairing(const Partition& p, AlgebraType t) {
  if (t == AlgebraType::GL) throw InvalidPartition("block pairing is only defined for so/sp");
  if (!validate(p, t))
    throw InvalidPartition("partition " + p.str() + " is not valid for " + std::string(to_string(t)));
  const int eps = epsilon(t);
  BlockPairing pairing;
  pairing.partner.resize(static_cast<std::size_t>(p.length()));
  int i = 1;
  while (i <= p.length()) {
    const int d = p.part(i);
    int run_end = i;
    while (run_end + 1 <= p.length() && p.part(run_end + 1) == d) ++run_end;
    if (self_paired(d, eps)) {
      for (int j = i; j <= run_end; ++j) pairing.partner[static_cast<std::size_t>(j - 1)] = j;
    } else {
      for (int j = i; j <= run_end; j += 2) {
        pairing.partner[static_cast<std::size_t>(j - 1)] = j + 1;
        pairing.partner[static_cast<std::size_t>(j)] = j;
      }
    }
    i = run_end + 1;
  }
  return pairing;
}

bool is_reachable_criterion(const Partition& p) noexcept {
  const auto distinct = p.distinct_parts();
  const int top = p.largest();
  if (static_cast<int>(distinct.size()) != top) return false;
  for (int k = 0; k < top; ++k)
    if (distinct[static_cast<std::size_t>(k)] != top - k) return false;
  return true;
}

bool is_rigid_criterion(const Partition& p, AlgebraType t) {
  if (!validate(p, t))
    throw InvalidPartition("partition " + p.str() + " is not valid for " + std::string(to_string(t)));
  if (t == AlgebraType::GL) return p.largest() == 1;
  if (!is_reachable_criterion(p)) return false;
  // SO forbids r = 2 on odd parts, SP on even parts.
  const int forbidden_parity = t == AlgebraType::SO ? 1 : 0;
  for (int d : p.distinct_parts())
    if (d % 2 == forbidden_parity && p.multiplicity(d) == 2) return false;
  return true;
}

std::string_view to_string(FactorKind k) {
  switch (k) {
    case FactorKind::GL:
      return "gl";
    case FactorKind::SP:
      return "sp";
    case FactorKind::SO:
      return "so";
  }
  return "?";
}

int G0Factor::dim() const {
  switch (kind) {
    case FactorKind::GL:
      return rank * rank;
    case FactorKind::SP:
      return rank * (rank + 1) / 2;
    case FactorKind::SO:
      return rank * (rank - 1) / 2;
  }
  return 0;
}

int G0Structure::dim() const {
  int total = 0;
  for (const auto& f : factors) total += f.dim();
  return total;
}

G0Structure g0_factors(const Partition& p, AlgebraType t) {
  if (!validate(p, t))
    throw InvalidPartition("partition " + p.str() + " is not valid for " + std::string(to_string(t)));
  G0Structure out;
  const auto distinct = p.distinct_parts();
  if (t == AlgebraType::GL) {
    for (int d : distinct) out.factors.push_back({FactorKind::GL, p.multiplicity(d), d});
    out.semisimple = distinct.size() == 1;
    return out;
  }
  const int eps = epsilon(t);
  out.semisimple = true;
  for (int d : distinct) {
    const int r = p.multiplicity(d);
    const FactorKind kind = self_paired(d, eps) ? FactorKind::SO : FactorKind::SP;
    out.factors.push_back({kind, r, d});
    if (kind == FactorKind::SO && r == 2) out.semisimple = false;
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n <= 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int d = std::min(remaining, max_part); d >= 1; --d) {
      cur.push_back(d);
      rec(remaining - d, d);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> valid_partitions(AlgebraType t, int max_n) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& p : partitions_of(n))
      if (validate(p, t)) out.push_back(std::move(p));
  return out;
}

std::optional<TwoBlockShape> two_block_shape(const Partition& p) {
  const auto distinct = p.distinct_parts();
  if (distinct.size() != 2 || distinct[0] != distinct[1] + 1) return std::nullopt;
  return TwoBlockShape{p.multiplicity(distinct[0]), p.multiplicity(distinct[1]), distinct[1]};
}

Partition two_block_partition(int m, int n, int d) {
  if (m < 1 || n < 1 || d < 1) throw InvalidPartition("two-block shape needs m, n, d >= 1");
  std::vector<int> parts(static_cast<std::size_t>(m), d + 1);
  parts.insert(parts.end(), static_cast<std::size_t>(n), d);
  return Partition(std::move(parts));
}

bool is_rectangular(const Partition& p) noexcept { return p.distinct_parts().size() == 1; }

}  // namespace centkit

#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "centkit/partition.hpp"
#include "centkit/report.hpp"

namespace centkit {

/// Largest n accepted by the survey and verify sweeps.
inline constexpr int kMaxSweepN = 16;

struct SurveyRow {
  AlgebraType type = AlgebraType::GL;
  int n = 0;
  Partition partition;
  std::size_t dim_ge = 0;
  std::size_t dim_derived = 0;
  bool reachable_criterion = false;
  bool reachable_structural = false;
  bool rigid = false;
  bool g0_semisimple = false;
  bool pass = false;
};

[[nodiscard]] SurveyRow survey_row(const VerificationReport& r);

/// CENTKIT_JOBS if set, else `flag`, else the hardware concurrency; at least 1.
[[nodiscard]] int resolve_jobs(std::optional<int> flag);

/// Applies fn to every item on `jobs` threads; output order follows input order.
/// The first exception thrown by fn is rethrown after all workers stop.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, int jobs, F fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = items.size();
      }
    }
  };
  const auto count = static_cast<std::size_t>(std::max(1, jobs));
  if (count == 1 || items.size() <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < std::min(count, items.size()); ++k) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Reports for every valid partition of size 1..max_n, sorted by (n, partition descending).
/// Throws std::invalid_argument if max_n is outside 1..kMaxSweepN.
[[nodiscard]] std::vector<VerificationReport> sweep_reports(AlgebraType t, int max_n, int jobs,
                                                            VerifyOptions options = {});
[[nodiscard]] std::vector<SurveyRow> run_survey(AlgebraType t, int max_n, int jobs, VerifyOptions options = {});

inline constexpr std::string_view kSurveyCsvHeader =
    "type,n,partition,dim_ge,dim_derived,reachable,rigid,g0_semisimple,pass";

[[nodiscard]] std::string to_csv(const std::vector<SurveyRow>& rows);
[[nodiscard]] nlohmann::ordered_json to_json(const std::vector<SurveyRow>& rows);

}  // namespace centkit

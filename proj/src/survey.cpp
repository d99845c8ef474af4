#include "centkit/survey.hpp"

#include <cstdlib>
#include <stdexcept>

namespace centkit {

SurveyRow survey_row(const VerificationReport& r) {
  SurveyRow row;
  row.type = r.type;
  row.n = r.partition.size();
  row.partition = r.partition;
  row.dim_ge = r.dim_ge;
  row.dim_derived = r.dim_derived;
  row.reachable_criterion = r.reachable_criterion;
  row.reachable_structural = r.e_in_derived;
  row.rigid = r.rigid_criterion;
  row.g0_semisimple = r.g0_semisimple;
  row.pass = r.all_pass();
  return row;
}

int resolve_jobs(std::optional<int> flag) {
  if (const char* env = std::getenv("CENTKIT_JOBS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  if (flag && *flag >= 1) return *flag;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<VerificationReport> sweep_reports(AlgebraType t, int max_n, int jobs, VerifyOptions options) {
  if (max_n < 1 || max_n > kMaxSweepN)
    throw std::invalid_argument("max-n must lie in 1.." + std::to_string(kMaxSweepN));
  const auto parts = valid_partitions(t, max_n);
  return parallel_map(parts, jobs, [&](const Partition& p) { return verify_main_theorems(p, t, options); });
}

std::vector<SurveyRow> run_survey(AlgebraType t, int max_n, int jobs, VerifyOptions options) {
  std::vector<SurveyRow> rows;
  for (const auto& r : sweep_reports(t, max_n, jobs, options)) rows.push_back(survey_row(r));
  return rows;
}

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_csv(const std::vector<SurveyRow>& rows) {
  std::string out(kSurveyCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += std::string(to_string(r.type)) + ',' + std::to_string(r.n) + ",\"" + r.partition.str() + "\"," +
           std::to_string(r.dim_ge) + ',' + std::to_string(r.dim_derived) + ',' + yes_no(r.reachable_structural) +
           ',' + yes_no(r.rigid) + ',' + yes_no(r.g0_semisimple) + ',' + yes_no(r.pass) + '\n';
  }
  return out;
}

nlohmann::ordered_json to_json(const std::vector<SurveyRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({
        {"type", std::string(to_string(r.type))},
        {"n", r.n},
        {"partition", r.partition.parts()},
        {"dim_ge", r.dim_ge},
        {"dim_derived", r.dim_derived},
        {"reachable_criterion", r.reachable_criterion},
        {"reachable_structural", r.reachable_structural},
        {"rigid", r.rigid},
        {"g0_semisimple", r.g0_semisimple},
        {"pass", r.pass},
    });
  }
  return arr;
}

}  // namespace centkit

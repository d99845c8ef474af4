// centkit: inspect, classify and verify centralisers of nilpotent elements.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 bad invocation or input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "centkit/algebra.hpp"
#include "centkit/derived.hpp"
#include "centkit/partition.hpp"
#include "centkit/report.hpp"
#include "centkit/survey.hpp"

namespace {

using namespace centkit;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgebraType parse_type(const std::string& s) {
  auto t = parse_algebra_type(s);
  if (!t) throw UsageError("unknown algebra type '" + s + "' (expected gl, sl, so or sp)");
  return *t;
}

Partition parse_valid(const std::string& text, AlgebraType t) {
  Partition p = Partition::parse(text);
  if (!validate(p, t))
    throw InvalidPartition("partition " + p.str() + " is not the Jordan type of a nilpotent in " +
                           std::string(to_string(t)));
  return p;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_basis(const std::string& type, const std::string& partition, const std::string& format) {
  const AlgebraType t = parse_type(type);
  const StructuredAlgebra alg(parse_valid(partition, t), t);
  std::vector<std::size_t> order(alg.dim());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return alg.weights()[a] < alg.weights()[b]; });
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto k : order) arr.push_back({{"element", alg.labels()[k]}, {"weight", alg.weights()[k]}});
    std::cout << arr.dump(2) << '\n';
  } else {
    for (auto k : order) std::cout << "weight " << alg.weights()[k] << "  " << alg.labels()[k] << '\n';
  }
  return kExitOk;
}

int cmd_classify(const std::string& type, const std::string& partition, const std::string& format) {
  const AlgebraType t = parse_type(type);
  const VerificationReport r = verify_main_theorems(parse_valid(partition, t), t, {.oracle = false});
  if (format == "json") {
    std::cout << r.to_json().dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "type=" << to_string(t) << " partition=" << r.partition.str() << " rigid=" << yes_no(r.rigid_criterion)
            << " reachable=" << yes_no(r.e_in_derived) << " reachable-criterion=" << yes_no(r.reachable_criterion)
            << " g0-ss=" << yes_no(r.g0_semisimple) << " perfect=" << yes_no(r.perfect) << " dim_ge=" << r.dim_ge
            << " dim_derived=" << r.dim_derived << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string theorem;
  std::string lemma;
  std::string type;
  std::optional<int> max_n;
  std::string partition;
  bool keep_going = false;
  std::optional<int> jobs;
};

// Report check names covered by one command-line check name.
std::vector<std::string> covered_checks(const std::string& name) {
  if (name == "all") return check_names();
  if (name == "g-lambda") return {"g-lambda", "g2"};
  const auto& names = check_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UsageError("unknown check '" + name + "'");
  return {name};
}

int cmd_verify(const VerifyArgs& a) {
  if (a.theorem.empty() == a.lemma.empty()) throw UsageError("give exactly one of --theorem or --lemma");
  if (a.max_n.has_value() == !a.partition.empty()) throw UsageError("give exactly one of --max-n or --partition");
  const std::string name = a.theorem.empty() ? a.lemma : a.theorem;
  const auto wanted = covered_checks(name);
  const AlgebraType t = parse_type(a.type);
  const VerifyOptions options{.oracle =
                                  std::find(wanted.begin(), wanted.end(), "oracle") != wanted.end()};

  std::vector<Partition> scope;
  if (a.max_n) {
    if (*a.max_n < 1 || *a.max_n > kMaxSweepN)
      throw UsageError("--max-n must lie in 1.." + std::to_string(kMaxSweepN));
    scope = valid_partitions(t, *a.max_n);
  } else {
    scope.push_back(parse_valid(a.partition, t));
  }

  const int jobs = resolve_jobs(a.jobs);
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t na = 0;
  // Fail-fast works in chunks of `jobs` partitions so the first failure in
  // sweep order is the one reported.
  const std::size_t chunk = a.keep_going ? scope.size() : static_cast<std::size_t>(jobs);
  for (std::size_t begin = 0; begin < scope.size(); begin += chunk) {
    const std::vector<Partition> batch(scope.begin() + static_cast<std::ptrdiff_t>(begin),
                                       scope.begin() + static_cast<std::ptrdiff_t>(std::min(scope.size(), begin + chunk)));
    const auto reports =
        parallel_map(batch, jobs, [&](const Partition& p) { return verify_main_theorems(p, t, options); });
    bool failed = false;
    for (const auto& r : reports) {
      for (const auto& c : wanted) {
        const Check& check = r.check(c);
        switch (check.status) {
          case CheckStatus::Pass: ++pass; break;
          case CheckStatus::NotApplicable: ++na; break;
          case CheckStatus::Fail:
            ++fail;
            failed = true;
            std::cout << "FAIL " << c << " type=" << to_string(t) << " partition=" << r.partition.str();
            if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
            std::cout << '\n';
            break;
        }
      }
      if (failed && !a.keep_going) break;
    }
    if (failed && !a.keep_going) break;
  }
  std::cout << name << " type=" << to_string(t) << ": " << pass << " pass, " << fail << " fail, " << na << " n/a\n";
  return fail == 0 ? kExitOk : kExitFailure;
}

int cmd_survey(const std::string& type, int max_n, const std::string& out, const std::string& format,
               std::optional<int> jobs_flag) {
  const AlgebraType t = parse_type(type);
  if (max_n < 1 || max_n > kMaxSweepN) throw UsageError("--max-n must lie in 1.." + std::to_string(kMaxSweepN));
  std::ofstream file;
  if (out != "-") {
    file.open(out, std::ios::out | std::ios::trunc);
    if (!file) throw UsageError("cannot write " + out);
  }
  std::ostream& os = out == "-" ? std::cout : file;
  const auto rows = run_survey(t, max_n, resolve_jobs(jobs_flag));
  if (format == "csv") {
    os << to_csv(rows);
  } else {
    os << to_json(rows).dump(2) << '\n';
  }
  os.flush();
  if (!os) throw UsageError("write to " + out + " failed");
  return std::all_of(rows.begin(), rows.end(), [](const SurveyRow& r) { return r.pass; }) ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"centkit: centralisers of nilpotent elements in gl, so and sp"};
  app.require_subcommand(1);

  std::string type;
  std::string partition;
  std::string format = "text";

  auto* basis = app.add_subcommand("basis", "List a basis of the centraliser with ad(h) weights");
  basis->add_option("--type", type, "gl, sl, so or sp")->required();
  basis->add_option("--partition", partition, "Jordan type, e.g. 3,2,2,1 or 2^3,1")->required();
  basis->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* classify = app.add_subcommand("classify", "Print the classifier flags and dimensions");
  classify->add_option("--type", type, "gl, sl, so or sp")->required();
  classify->add_option("--partition", partition, "Jordan type")->required();
  classify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs va;
  int max_n_value = 0;
  int jobs_value = 0;
  auto* verify = app.add_subcommand("verify", "Run one check over a partition or a sweep");
  verify->add_option("--theorem", va.theorem, "rigid-cl, equi-cl or all");
  verify->add_option("--lemma", va.lemma, "g-lambda, g1, f-nondeg, two-blocks, one-block, nilradical, oracle");
  verify->add_option("--type", va.type, "gl, sl, so or sp")->required();
  auto* verify_max_n = verify->add_option("--max-n", max_n_value, "Sweep every valid partition of size <= N");
  verify->add_option("--partition", va.partition, "A single partition");
  verify->add_flag("--keep-going", va.keep_going, "Report every failure instead of stopping at the first");
  auto* verify_jobs = verify->add_option("--jobs", jobs_value, "Worker threads (CENTKIT_JOBS overrides)");

  std::string out = "-";
  std::string survey_format = "json";
  int survey_max_n = 0;
  int survey_jobs_value = 0;
  auto* survey = app.add_subcommand("survey", "One row per valid partition, as JSON or CSV");
  survey->add_option("--type", type, "gl, sl, so or sp")->required();
  survey->add_option("--max-n", survey_max_n, "Largest n")->required();
  survey->add_option("--out", out, "Output path, '-' for stdout");
  survey->add_option("--format", survey_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* survey_jobs = survey->add_option("--jobs", survey_jobs_value, "Worker threads (CENTKIT_JOBS overrides)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*basis) return cmd_basis(type, partition, format);
    if (*classify) return cmd_classify(type, partition, format);
    if (*verify) {
      if (verify_max_n->count() > 0) va.max_n = max_n_value;
      if (verify_jobs->count() > 0) va.jobs = jobs_value;
      return cmd_verify(va);
    }
    if (*survey) {
      std::optional<int> jobs;
      if (survey_jobs->count() > 0) jobs = survey_jobs_value;
      return cmd_survey(type, survey_max_n, out, survey_format, jobs);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidPartition& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

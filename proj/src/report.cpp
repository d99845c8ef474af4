#include "centkit/report.hpp"

#include <algorithm>
#include <stdexcept>

#include "centkit/oracle.hpp"

namespace centkit {

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "rigid-cl", "equi-cl", "rigid-implies-reachable", "reachable-reduction", "reachable-criterion",
      "grading",  "g0-dim",  "f-nondeg",                "g1",                  "g2",
      "g-lambda", "nilradical", "one-block",            "two-blocks",          "oracle",
  };
  return names;
}

bool VerificationReport::all_pass() const noexcept {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check& VerificationReport::check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + std::string(name));
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = std::string(to_string(type));
  j["partition"] = partition.parts();
  j["n"] = partition.size();
  j["dim_ge"] = dim_ge;
  if (type == AlgebraType::GL) j["dim_gl"] = dim_gl;
  j["dim_derived"] = dim_derived;
  nlohmann::ordered_json graded = nlohmann::ordered_json::object();
  for (const auto& [lambda, d] : graded_dims) graded[std::to_string(lambda)] = d;
  j["dims_per_weight"] = graded;
  j["classifier"] = {
      {"reachable_criterion", reachable_criterion},
      {"rigid_criterion", rigid_criterion},
      {"g0_semisimple", g0_semisimple},
  };
  j["structural"] = {
      {"e_in_derived", e_in_derived},
      {"e_in_g1g1", e_in_g1g1},
      {"perfect", perfect},
      {"dim_g1", g1_dim},
      {"fhat_rank", fhat_rank},
  };
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json entry{{"name", c.name}, {"status", std::string(to_string(c.status))}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    arr.push_back(std::move(entry));
  }
  j["checks"] = std::move(arr);
  j["pass"] = all_pass();
  return j;
}

namespace {

std::string dims_pair(std::size_t a, std::size_t b) { return std::to_string(a) + " vs " + std::to_string(b); }

}  // namespace

VerificationReport verify_main_theorems(const Partition& p, AlgebraType t, VerifyOptions options) {
  CentralizerAnalysis an(p, t);
  const StructuredAlgebra& alg = an.algebra();
  const bool gl = t == AlgebraType::GL;

  VerificationReport r;
  r.partition = p;
  r.type = t;
  r.dim_gl = gl ? alg.dim() : 0;
  r.dim_ge = an.perfect_target().dim();
  r.dim_derived = an.derived().dim();
  for (const auto& [lambda, piece] : an.grading().pieces) r.graded_dims[lambda] = piece.dim();

  const G0Structure g0 = g0_factors(p, t);
  r.reachable_criterion = is_reachable_criterion(p);
  r.rigid_criterion = is_rigid_criterion(p, t);
  r.g0_semisimple = g0.semisimple;

  r.e_in_derived = an.e_in_derived();
  r.e_in_g1g1 = an.e_in_g1g1();
  r.perfect = is_perfect(an);
  r.g1_dim = an.piece(1).dim();
  r.fhat_rank = an.fhat_rank();

  auto add = [&](std::string name, CheckStatus s, std::string detail = {}) {
    r.checks.push_back({std::move(name), s, s == CheckStatus::Fail ? std::move(detail) : std::string{}});
  };

  add("rigid-cl", status_of(r.perfect == r.rigid_criterion),
      "perfect=" + std::to_string(r.perfect) + " rigid=" + std::to_string(r.rigid_criterion));
  add("equi-cl", status_of(r.perfect == (r.e_in_derived && r.g0_semisimple)),
      "perfect=" + std::to_string(r.perfect) + " reachable=" + std::to_string(r.e_in_derived) +
          " g0_semisimple=" + std::to_string(r.g0_semisimple));
  add("rigid-implies-reachable", status_of(!r.rigid_criterion || r.e_in_derived));
  add("reachable-reduction", status_of(r.e_in_derived == r.e_in_g1g1));
  add("reachable-criterion", gl ? CheckStatus::NotApplicable : status_of(r.reachable_criterion == r.e_in_derived),
      "criterion=" + std::to_string(r.reachable_criterion) + " structural=" + std::to_string(r.e_in_derived));

  const std::size_t graded_total = an.grading().total_dim();
  add("grading", status_of(graded_total == alg.dim()), dims_pair(graded_total, alg.dim()));
  const std::size_t g0_dim = an.piece(0).dim();
  add("g0-dim", status_of(g0_dim == static_cast<std::size_t>(g0.dim())),
      dims_pair(g0_dim, static_cast<std::size_t>(g0.dim())));
  add("f-nondeg", status_of(r.fhat_rank == r.g1_dim), dims_pair(r.fhat_rank, r.g1_dim));

  const GradedGenerationReport gen = verify_graded_generation(an);
  add("g1", gen.g1);
  add("g2", gen.g2);
  std::string failing_steps;
  for (const auto& s : gen.steps)
    if (!s.equal) failing_steps += "lambda=" + std::to_string(s.lambda) + ":" + dims_pair(s.bracket_dim, s.target_dim) + " ";
  add("g-lambda", gen.g_lambda, failing_steps);
  add("nilradical", verify_nilradical(an));
  add("one-block", verify_one_block(an).status);

  if (two_block_shape(p)) {
    const TwoBlockReport tb = verify_two_block(an);
    add("two-blocks", status_of(tb.ok()),
        "commutator=" + std::to_string(tb.commutator_dim) + " g2=" + std::to_string(tb.g2_dim) +
            " membership=" + std::to_string(tb.membership));
  } else {
    add("two-blocks", CheckStatus::NotApplicable);
  }

  if (options.oracle) {
    const CrossValidation cv = cross_validate(an);
    std::string detail;
    if (!cv.dims) detail += "dim " + dims_pair(cv.symbolic_dim, cv.oracle_dim) + " ";
    if (!cv.membership) detail += "membership ";
    if (!cv.derived) detail += "derived " + dims_pair(cv.symbolic_derived_dim, cv.oracle_derived_dim) + " ";
    if (!cv.graded) detail += "graded ";
    add("oracle", status_of(cv.ok()), detail);
  } else {
    add("oracle", CheckStatus::NotApplicable);
  }
  return r;
}

}  // namespace centkit

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Every comparison is exact (rational arithmetic, span equality); the only
// numeric tolerance is the wall-clock budget of the main sweep.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "centkit/algebra.hpp"
#include "centkit/derived.hpp"
#include "centkit/oracle.hpp"
#include "centkit/report.hpp"
#include "centkit/survey.hpp"

using namespace centkit;

namespace {

constexpr int kMaxSp = 12;
constexpr int kMaxSo = 13;
constexpr int kMaxGl = 10;
constexpr int kHygieneMaxN = 8;
constexpr int kOneBlockMaxDk = 12;
constexpr int kTwoBlockMax = 3;  // m, n, d
constexpr double kSweepBudgetSeconds = 300.0;

struct Outcome {
  bool ok = true;
  std::size_t instances = 0;
  std::string witness;
  void expect(bool cond, const std::string& where) {
    ++instances;
    if (!cond && ok) witness = where;
    ok = ok && cond;
  }
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o, const std::string& note = {}) {
  std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << id << "] " << name << "  (" << o.instances << " instances";
  if (!note.empty()) std::cout << ", " << note;
  if (!o.ok) std::cout << ", first failure: " << o.witness;
  std::cout << ")" << std::endl;
  if (!o.ok) ++failures;
}

std::string tag(const VerificationReport& r) { return std::string(to_string(r.type)) + " " + r.partition.str(); }

bool formed(AlgebraType t) { return t != AlgebraType::GL; }

std::vector<Partition> all_partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 1; m <= n; ++m)
    for (auto& p : partitions_of(m)) out.push_back(p);
  return out;
}

// Antisymmetry, Jacobi and weight additivity on unit vectors of the gl
// centraliser, plus the sigma automorphism property for SO/SP.
bool hygiene(const Partition& p, AlgebraType t) {
  const StructuredAlgebra a(p, t);
  const GlCentralizer& g = a.hat();
  const std::size_t n = g.dim();
  auto u = [&](std::size_t k) { return unit_vector(n, k); };
  std::vector<std::vector<QVector>> table(n, std::vector<QVector>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x][y] = g.bracket(u(x), u(y));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      QVector s = table[x][y];
      axpy(s, 1, table[y][x]);
      if (!is_zero(s)) return false;
      for (std::size_t z = 0; z < n; ++z)
        if (!table[x][y][z].is_zero() && g.weight(z) != g.weight(x) + g.weight(y)) return false;
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        QVector s = g.bracket(table[x][y], u(z));
        axpy(s, 1, g.bracket(table[y][z], u(x)));
        axpy(s, 1, g.bracket(table[z][x], u(y)));
        if (!is_zero(s)) return false;
      }
  if (formed(t)) {
    const SigmaTable& sig = *a.sigma();
    for (std::size_t x = 0; x < n; ++x) {
      if (sig.apply(sig.apply(u(x))) != u(x)) return false;
      for (std::size_t y = 0; y < n; ++y)
        if (sig.apply(table[x][y]) != g.bracket(sig.apply(u(x)), sig.apply(u(y)))) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  const int jobs = resolve_jobs(std::nullopt);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<VerificationReport> reports;
  for (auto [t, n] : {std::pair{AlgebraType::SP, kMaxSp}, {AlgebraType::SO, kMaxSo}, {AlgebraType::GL, kMaxGl}}) {
    auto rs = sweep_reports(t, n, jobs);
    reports.insert(reports.end(), std::make_move_iterator(rs.begin()), std::make_move_iterator(rs.end()));
  }
  const double sweep_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "sweep: " << reports.size() << " partitions (sp n<=" << kMaxSp << ", so n<=" << kMaxSo
            << ", gl n<=" << kMaxGl << ") in " << sweep_seconds << " s on " << jobs << " worker(s)" << std::endl;

  {
    Outcome o;
    for (const auto& r : reports) o.expect(r.perfect == r.rigid_criterion, tag(r));
    o.expect(sweep_seconds < kSweepBudgetSeconds, "sweep exceeded " + std::to_string(kSweepBudgetSeconds) + " s");
    report(1, "perfect <=> rigid criterion, full sweep", o, "budget " + std::to_string(int(kSweepBudgetSeconds)) + " s");
  }
  {
    Outcome o;
    for (const auto& r : reports)
      if (formed(r.type)) o.expect(r.perfect == (r.e_in_derived && r.g0_semisimple), tag(r));
    report(2, "perfect <=> (reachable and g(0)_e semisimple), SO/SP", o);
  }
  {
    Outcome o;
    std::size_t reachable = 0;
    for (const auto& r : reports) {
      o.expect(r.check("g1").status == CheckStatus::Pass, tag(r) + " g1");
      if (formed(r.type) && r.e_in_derived) {
        ++reachable;
        o.expect(r.check("g-lambda").status == CheckStatus::Pass, tag(r) + " g-lambda");
        o.expect(r.check("g2").status == CheckStatus::Pass, tag(r) + " g2");
      }
    }
    report(3, "[g(1),g(l)] = g(l+1) on reachable SO/SP; [g(0),g(1)] = g(1) everywhere", o,
           std::to_string(reachable) + " reachable");
  }
  {
    Outcome o;
    for (const auto& r : reports) o.expect(r.fhat_rank == r.g1_dim, tag(r));
    report(4, "rank of the f-pairing Gram matrix = dim g(1)_e", o);
  }
  {
    Outcome o;
    for (AlgebraType t : {AlgebraType::SO, AlgebraType::SP})
      for (int d = 1; d <= kOneBlockMaxDk; ++d)
        for (int k = 1; d * k <= kOneBlockMaxDk; ++k) {
          const Partition p(std::vector<int>(static_cast<std::size_t>(k), d));
          if (!validate(p, t)) continue;
          CentralizerAnalysis an(p, t);
          const bool plus = (d % 2 == 0 ? 1 : -1) * epsilon(t) == 1;
          const auto kk = static_cast<std::size_t>(k);
          const std::size_t sym = kk * (kk + 1) / 2, alt = kk * (kk - 1) / 2;
          bool ok = an.piece(0).dim() == (plus ? sym : alt);
          for (int m = 0; m < d; ++m) ok = ok && an.piece(2 * m).dim() == ((plus == (m % 2 == 0)) ? sym : alt);
          for (int w = 1; w <= an.algebra().top_weight(); w += 2) ok = ok && an.piece(w).dim() == 0;
          o.expect(ok, std::string(to_string(t)) + " " + p.str());
        }
    report(5, "rectangular d^k: g(2m)_e dims follow the S^2 / Lambda^2 rule", o);
  }
  {
    Outcome o;
    for (int m = 1; m <= kTwoBlockMax; ++m)
      for (int n = 1; n <= kTwoBlockMax; ++n)
        for (int d = 1; d <= kTwoBlockMax; ++d) {
          const TwoBlockReport gl = verify_two_block(m, n, d, AlgebraType::GL);
          const std::size_t expected = d >= 2 ? gl.g2_dim - 1 : gl.g2_dim;
          o.expect(gl.commutator_dim == expected && gl.membership && gl.ok(), "gl " + gl.partition.str());
          for (AlgebraType t : {AlgebraType::SO, AlgebraType::SP}) {
            if (!validate(two_block_partition(m, n, d), t)) continue;
            const TwoBlockReport r = verify_two_block(m, n, d, t);
            o.expect(r.membership, std::string(to_string(t)) + " " + r.partition.str());
          }
        }
    report(6, "two blocks ((d+1)^m, d^n): codimension and m e_d - n e_{d+1} membership", o);
  }
  {
    Outcome o;
    for (const auto& r : reports)
      if (formed(r.type) && r.e_in_derived) o.expect(r.check("nilradical").status == CheckStatus::Pass, tag(r));
    report(7, "[g(1)_e, g_e] = positive-weight part on reachable SO/SP", o);
  }
  {
    Outcome o;
    for (const auto& r : reports) o.expect(r.check("oracle").status == CheckStatus::Pass, tag(r));
    report(8, "symbolic algebra agrees with the matrix-kernel centraliser", o);
  }
  {
    Outcome o;
    for (const auto& p : all_partitions_up_to(kHygieneMaxN))
      for (AlgebraType t : {AlgebraType::GL, AlgebraType::SO, AlgebraType::SP})
        if (validate(p, t)) o.expect(hygiene(p, t), std::string(to_string(t)) + " " + p.str());
    report(9, "antisymmetry, Jacobi, weight additivity, sigma automorphism (n <= 8)", o);
  }
  {
    Outcome o;
    const Partition p21({2, 1}), p211({2, 1, 1}), p1111({1, 1, 1, 1});
    o.expect(GlCentralizer(p21).dim() == 5 && kernel_centralizer(p21, AlgebraType::GL).dim() == 5, "gl 2,1");
    const StructuredAlgebra sp(p211, AlgebraType::SP);
    CentralizerAnalysis an(p211, AlgebraType::SP);
    const OracleAlgebra osp = kernel_centralizer(p211, AlgebraType::SP);
    const std::map<int, std::size_t> graded{{0, 3}, {1, 2}, {2, 1}};
    o.expect(sp.dim() == 6 && osp.dim() == 6, "sp 2,1,1 dim");
    o.expect(an.piece(0).dim() == 3 && an.piece(1).dim() == 2 && an.piece(2).dim() == 1 &&
                 oracle_graded_dims(osp) == graded,
             "sp 2,1,1 graded");
    o.expect(StructuredAlgebra(p1111, AlgebraType::SO).dim() == 6 &&
                 kernel_centralizer(p1111, AlgebraType::SO).dim() == 6,
             "so 1^4");
    report(10, "spot values: gl(2,1)=5, sp(2,1,1)=6 graded 3/2/1, so(1^4)=6", o);
  }

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}

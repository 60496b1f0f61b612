// Acceptance run: one line per criterion, all comparisons exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "singlocus/decomposition.hpp"
#include "singlocus/suite.hpp"

using namespace singlocus;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& note) {
    if (!cond) ok = false;
    notes.push_back(std::string(cond ? "ok   " : "FAIL ") + note);
  }
};

struct Job {
  const char* algebra;
  const char* check;
  double limit = 0;  // seconds; 0 means no limit
};

RunConfig config() {
  RunConfig c;
  c.seed = 42;
  return c;
}

// Runs one registered check and records status, constants and wall time.
CheckRecord run_job(Outcome& out, const Job& job) {
  const auto t0 = Clock::now();
  CheckRecord rec = run_check(parse_label(job.algebra), job.check, config());
  const double secs = seconds_since(t0);
  std::string note = std::string(job.algebra) + " " + job.check + ": " + to_string(rec.status);
  for (const auto& [k, v] : rec.constants) note += " " + k + "=" + v;
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.1f s", secs);
  note += buf;
  if (job.limit > 0) {
    std::snprintf(buf, sizeof buf, ", limit %.0f s", job.limit);
    note += buf;
  }
  note += ")";
  if (rec.status != Status::pass) note += " " + rec.detail + (rec.counterexample.empty() ? "" : " at " + rec.counterexample);
  out.require(rec.status == Status::pass && (job.limit == 0 || secs < job.limit), note);
  return rec;
}

Outcome run_jobs(const std::vector<Job>& jobs) {
  Outcome out;
  for (const auto& job : jobs) run_job(out, job);
  return out;
}

const char* kTargets[] = {"A1", "A2", "B2", "C2", "G2", "A3"};

std::vector<Job> on_targets(const char* check) {
  std::vector<Job> jobs;
  for (const char* a : kTargets) jobs.push_back({a, check});
  return jobs;
}

Outcome kappa_fit() {
  return run_jobs({{"A1", "gamma-psi-kappa"},
                   {"A2", "gamma-psi-kappa", 10},
                   {"B2", "gamma-psi-kappa"},
                   {"C2", "gamma-psi-kappa", 60},
                   {"G2", "gamma-psi-kappa"},
                   {"A3", "gamma-psi-kappa", 600}});
}

Outcome casimir_spectrum() {
  Outcome out = run_jobs({{"A1", "casimir-maximal"},
                          {"A2", "casimir-maximal"},
                          {"B2", "casimir-maximal"},
                          {"C2", "casimir-maximal"},
                          {"G2", "casimir-maximal"},
                          {"A3", "casimir-maximal"},
                          {"A4", "casimir-maximal"}});
  auto a2 = build_classical(Family::A, 2);
  const RootDatum D2 = compute_root_datum(*a2);
  const CasimirReport rep = casimir_maximal(D2);
  out.require(rep.max_casimir == 2 && rep.eigenspace_dim == 20 && rep.weyl_sum == 20,
              "A2: maximal eigenvalue " + to_string(rep.max_casimir) + ", eigenspace " +
                  std::to_string(rep.eigenspace_dim) + ", Weyl sum " + rep.weyl_sum.get_str());

  // full matrix on the third exterior power of sl(4), no weight splitting
  const auto t0 = Clock::now();
  auto a3 = build_classical(Family::A, 3);
  const Mat c = casimir_matrix(*a3, 3);
  const Mat shifted = c - Rat(3) * Mat::identity(c.rows());
  const std::size_t kernel = c.rows() - rank(shifted);
  const double secs = seconds_since(t0);
  const RootDatum D3 = compute_root_datum(*a3);
  const std::size_t expected = casimir_maximal(D3).weyl_sum.get_ui();
  char buf[160];
  std::snprintf(buf, sizeof buf, "A3: %zux%zu Casimir matrix, eigenvalue-3 kernel %zu, Weyl sum %zu (%.1f s, limit 300 s)",
                c.rows(), c.cols(), kernel, expected, secs);
  out.require(c.rows() == 455 && kernel == expected && secs < 300, buf);
  return out;
}

Outcome ideal_counts() {
  Outcome out;
  const std::size_t expected[] = {1, 2, 3, 5};
  for (int n = 1; n <= 4; ++n) {
    auto L = build_classical(Family::A, n);
    const RootDatum D = compute_root_datum(*L);
    const std::size_t got = enumerate_ideals(D, D.ell).size();
    out.require(got == expected[n - 1], "A" + std::to_string(n) + ": " + std::to_string(got) + " ideals of size " +
                                            std::to_string(D.ell) + ", expected " + std::to_string(expected[n - 1]));
  }
  return out;
}

Outcome structural() {
  Outcome out;
  RunConfig c = config();
  c.algebras = {parse_label("A1"), parse_label("A2")};
  for (const auto& info : check_registry()) c.checks.push_back(info.id);
  const auto t0 = Clock::now();
  const VerificationReport rep = run_suite(c);
  const double secs = seconds_since(t0);
  for (const auto& a : rep.algebras)
    for (const auto& r : a.checks)
      out.require(r.status == Status::pass, a.algebra + " " + r.check + ": " + to_string(r.status) +
                                                (r.status == Status::pass ? "" : " " + r.detail));
  char buf[96];
  std::snprintf(buf, sizeof buf, "full suite on A1 and A2 in %.1f s (limit 120 s)", secs);
  out.require(secs < 120, buf);
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Gamma equals kappa times the psi minor with one constant per algebra", kappa_fit},
      {2, "(dx)^r and the vanishing of M both characterize singular elements",
       [] { return run_jobs(on_targets("singular-locus")); }},
      {3, "M restricted to the Cartan is a multiple of the root product",
       [] { return run_jobs(on_targets("cartan-restriction")); }},
      {4, "M restricted to the principal centralizer is a multiple of xi^r",
       [] { return run_jobs(on_targets("principal-restriction")); }},
      {5, "wedge of invariant gradients on the Cartan and its star",
       [] { return run_jobs(on_targets("jacobian-wedge")); }},
      {6, "Casimir eigenvalue ell is maximal with eigenspace the Weyl sum over ideals", casimir_spectrum},
      {7, "ell-element ideal counts for A1..A4", ideal_counts},
      {8, "kernel of Gamma, star images and orbit dimensions", [] { return run_jobs(on_targets("decomposition")); }},
      {9, "invariant differential operators annihilate M",
       [] { return run_jobs({{"A1", "harmonicity"}, {"A2", "harmonicity"}, {"C2", "harmonicity"}}); }},
      {10, "structural identities, full suite on A1 and A2", structural},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    for (const auto& note : out.notes) std::printf("      %s\n", note.c_str());
    std::printf("%s criterion %d: %s (%.1f s)\n", out.ok ? "PASS" : "FAIL", c.id, c.name, seconds_since(t0));
    std::fflush(stdout);
    if (!out.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

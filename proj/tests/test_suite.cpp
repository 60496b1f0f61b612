#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "singlocus/cache.hpp"
#include "singlocus/suite.hpp"

using namespace singlocus;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("singlocus-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

RunConfig quick_config() {
  RunConfig c;
  c.algebras = {parse_label("A1"), parse_label("A2")};
  c.checks = {"structure", "root-system", "ideal-count", "invariants"};
  c.seed = 7;
  return c;
}

}  // namespace

TEST_CASE("check registry") {
  const auto& reg = check_registry();
  CHECK(reg.size() == 17);
  CHECK(reg.front().id == "structure");
  REQUIRE(find_check("decomposition"));
  CHECK(find_check("decomposition")->max_positive_roots == 6);
  CHECK(find_check("nope") == nullptr);
}

TEST_CASE("status strings") {
  for (Status s : {Status::pass, Status::fail, Status::skip}) CHECK(parse_status(to_string(s)) == s);
  CHECK_THROWS(parse_status("maybe"));
}

TEST_CASE("every check passes on sl(2)") {
  RunConfig c;
  c.algebras = {parse_label("A1")};
  for (const auto& info : check_registry()) c.checks.push_back(info.id);
  const VerificationReport rep = run_suite(c);
  REQUIRE(rep.algebras.size() == 1);
  CHECK(rep.algebras[0].checks.size() == 17);
  for (const auto& r : rep.algebras[0].checks) {
    CAPTURE(r.check);
    CAPTURE(r.detail);
    CHECK(r.status == Status::pass);
  }
  CHECK(rep.ok());
}

TEST_CASE("same seed gives identical output") {
  const RunConfig c = quick_config();
  const auto a = run_suite(c), b = run_suite(c);
  CHECK(a == b);
  CHECK(emit_json(a) == emit_json(b));
  CHECK(emit_markdown(a) == emit_markdown(b));
}

TEST_CASE("json round trip") {
  RunConfig c = quick_config();
  c.timings = true;
  const auto rep = run_suite(c);
  CHECK(report_from_json(to_json(rep)) == rep);
  const auto j = to_json(rep);
  CHECK(j.contains("summary"));
  CHECK(j["algebras"][1]["algebra"] == "A2");
  CHECK(j["algebras"][1]["positiveRoots"] == 3);
}

TEST_CASE("empty check list gives an empty report") {
  RunConfig c = quick_config();
  c.checks.clear();
  const auto rep = run_suite(c);
  CHECK(rep.count(Status::pass) == 0);
  CHECK(rep.count(Status::fail) == 0);
  CHECK(rep.ok());
  for (const auto& a : rep.algebras) CHECK(a.checks.empty());
}

TEST_CASE("rank limit and desk-scale limit produce skips") {
  RunConfig c;
  c.algebras = {parse_label("A4")};
  c.checks = {"harmonicity"};
  c.max_rank = 3;
  auto rep = run_suite(c);
  REQUIRE(rep.algebras[0].checks.size() == 1);
  CHECK(rep.algebras[0].checks[0].status == Status::skip);
  c.max_rank = 4;
  rep = run_suite(c);
  CHECK(rep.algebras[0].checks[0].status == Status::skip);
  CHECK(rep.algebras[0].checks[0].detail.find("r = 10") != std::string::npos);
}

TEST_CASE("a failing record keeps its counterexample") {
  VerificationReport rep;
  rep.seed = 1;
  rep.checks = {"singular-locus"};
  AlgebraRecord a;
  a.algebra = "A2";
  CheckRecord r;
  r.check = "singular-locus";
  r.status = Status::fail;
  r.detail = "nonzero";
  r.counterexample = "[1, 0, 0, 0, 0, 0, 0, 0]";
  a.checks.push_back(r);
  rep.algebras.push_back(a);
  CHECK_FALSE(rep.ok());
  CHECK(report_from_json(to_json(rep)).algebras[0].checks[0].counterexample == r.counterexample);
  CHECK(emit_markdown(rep).find(r.counterexample) != std::string::npos);
}

TEST_CASE("algebra cache round trip and rebuild") {
  const fs::path dir = fresh_dir("cache");
  const auto label = parse_label("B2");
  CacheOutcome out{};
  auto a = load_or_build(label, dir.string(), &out);
  CHECK(out == CacheOutcome::built);
  const fs::path file = dir / "B2.json";
  REQUIRE(fs::exists(file));
  auto b = load_or_build(label, dir.string(), &out);
  CHECK(out == CacheOutcome::hit);
  CHECK(b->killing == a->killing);
  CHECK(b->basis_names == a->basis_names);

  {
    std::ofstream f(file, std::ios::trunc);
    f << "{ not json";
  }
  load_or_build(label, dir.string(), &out);
  CHECK(out == CacheOutcome::rebuilt);

  // tamper with the data but keep the old checksum
  nlohmann::json j;
  {
    std::ifstream f(file);
    f >> j;
  }
  j["data"]["killing"][0][0] = "12345";
  {
    std::ofstream f(file, std::ios::trunc);
    f << j.dump();
  }
  load_or_build(label, dir.string(), &out);
  CHECK(out == CacheOutcome::rebuilt);

  load_or_build(label, "", &out);
  CHECK(out == CacheOutcome::disabled);
  fs::remove_all(dir);
}

TEST_CASE("serialized algebras are re-verified") {
  auto L = build_classical(Family::A, 2);
  auto j = algebra_to_json(*L);
  CHECK(algebra_from_json(j)->structure.size() == L->n);
  CHECK(checksum(j) == checksum(algebra_to_json(*L)));
  CHECK(checksum(j).size() == 16);
  j["killing"][0][0] = "3";
  CHECK_THROWS_AS(algebra_from_json(j), std::runtime_error);
}

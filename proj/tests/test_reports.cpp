#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "isofam/reports.hpp"

using namespace isofam;

namespace {

Report verify_at(GraphCase kase, int n) {
  Setup s = build_setup(kase, n);
  return run_verify(s, enumerate_phi(s));
}

}  // namespace

TEST_CASE("verify reports pass on every case") {
  for (const auto& combo : std::vector<std::pair<GraphCase, int>>{
           {GraphCase::PathOdd, 3},
           {GraphCase::PathOdd, 5},
           {GraphCase::PathEven, 4},
           {GraphCase::PathEven, 6},
           {GraphCase::PathOdd, 7},
           {GraphCase::PathOdd, 9},
           {GraphCase::PathEven, 8},
           {GraphCase::Cycle, 3},
           {GraphCase::Cycle, 5},
           {GraphCase::Cycle, 7},
           {GraphCase::Cycle, 9},
           {GraphCase::CycleQuotient, 3},
           {GraphCase::CycleQuotient, 5},
           {GraphCase::CycleQuotient, 7},
           {GraphCase::CycleQuotient, 9}}) {
    GraphCase kase = combo.first;
    int n = combo.second;
    Report rep = verify_at(kase, n);
    INFO(case_name(kase), " n=", n, "\n", rep.to_text());
    CHECK(rep.pass());
  }
}

TEST_CASE("fourier, omega, and sectors reports pass") {
  Setup q5 = build_setup(GraphCase::CycleQuotient, 5);
  PhiTable t5 = enumerate_phi(q5);
  {
    Report rep = run_fourier(q5, t5, false);
    INFO(rep.to_text());
    CHECK(rep.pass());
  }
  {
    Report rep = run_omega(q5, t5, {4, 5});
    INFO(rep.to_text());
    CHECK(rep.pass());
    // a non-default edge works as well
    CHECK(run_omega(q5, t5, {1, 2}).pass());
  }
  {
    Report rep = run_sectors(q5, t5, {4, 5}, 0, std::nullopt);
    INFO(rep.to_text());
    CHECK(rep.pass());
    // explicit side data
    CHECK(run_sectors(q5, t5, {4, 5}, 5, q5.vertex_mask({2, 3})).pass());
  }
}

TEST_CASE("every registered check is reachable from its command") {
  std::map<std::string, std::set<std::string>> produced;

  for (auto [kase, n] : std::vector<std::pair<GraphCase, int>>{
           {GraphCase::PathOdd, 5},
           {GraphCase::PathEven, 4},
           {GraphCase::Cycle, 5},
           {GraphCase::CycleQuotient, 5}}) {
    Report rep = verify_at(kase, n);
    for (const CheckResult& c : rep.checks) produced["verify"].insert(c.id);
  }
  {
    Setup q7 = build_setup(GraphCase::CycleQuotient, 7);
    PhiTable t7 = enumerate_phi(q7);
    for (const CheckResult& c : run_fourier(q7, t7, true).checks)
      produced["fourier"].insert(c.id);
    for (const CheckResult& c : run_omega(q7, t7, {6, 7}).checks)
      produced["omega"].insert(c.id);
    for (const CheckResult& c : run_sectors(q7, t7, {6, 7}, 0, std::nullopt).checks)
      produced["sectors"].insert(c.id);
  }

  std::set<std::string> all_produced, all_registered;
  for (const CheckSpec& spec : required_checks()) {
    all_registered.insert(spec.id);
    INFO("check ", spec.id, " reachable from ", spec.command);
    CHECK(produced[spec.command].count(spec.id));
  }
  for (auto& [cmd, ids] : produced) all_produced.insert(ids.begin(), ids.end());
  CHECK(all_produced == all_registered);
}

TEST_CASE("report rendering") {
  Report rep = verify_at(GraphCase::CycleQuotient, 3);
  nlohmann::json j = rep.to_json();
  CHECK(j["command"] == "verify");
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() == rep.checks.size());
  std::string text = rep.to_text();
  CHECK(text.find("PASS perfect.basis") != std::string::npos);
}

TEST_CASE("order exports from the table") {
  Setup q3 = build_setup(GraphCase::CycleQuotient, 3);
  PhiTable t3 = enumerate_phi(q3);
  std::string dot = order_dot(t3);
  CHECK(dot.find("digraph") != std::string::npos);
  std::string csv = order_csv(t3);
  CHECK(csv == "from,to\n0,1\n0,2\n0,3\n");
}

TEST_CASE("table serialization and cache round trip") {
  Setup q5 = build_setup(GraphCase::CycleQuotient, 5);
  PhiTable t5 = enumerate_phi(q5);
  std::string lines = phi_jsonl(t5);
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 16);
  CHECK(lines.find("\"eps\":0") != std::string::npos);

  std::string path = "/tmp/isofam-test-cache.jsonl";
  REQUIRE(save_phi_cache(t5, path));
  std::string warning;
  auto loaded = load_phi_cache(q5, path, &warning);
  REQUIRE(loaded);
  CHECK(warning.empty());
  CHECK(phi_jsonl(*loaded) == lines);  // bit-identical re-serialization

  // a different setup refuses the file
  Setup q7 = build_setup(GraphCase::CycleQuotient, 7);
  auto wrong = load_phi_cache(q7, path, &warning);
  CHECK_FALSE(wrong);
  CHECK(warning.find("different setup") != std::string::npos);

  // corrupt content recomputes with a warning
  {
    std::ofstream out(path, std::ios::trunc);
    out << "{\"schema\":\"isofam-phi-v1\",\"case\":\"c\",\"n\":5,\"count\":16}\n";
    out << "not json\n";
  }
  auto corrupt = load_phi_cache(q5, path, &warning);
  CHECK_FALSE(corrupt);
  CHECK_FALSE(warning.empty());

  // stale schema tag
  {
    std::ofstream out(path, std::ios::trunc);
    out << "{\"schema\":\"isofam-phi-v0\",\"case\":\"c\",\"n\":5,\"count\":16}\n";
  }
  auto stale = load_phi_cache(q5, path, &warning);
  CHECK_FALSE(stale);
  CHECK(warning.find("schema") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("lifted tables carry the flag") {
  Setup b5 = build_setup(GraphCase::Cycle, 5);
  std::string lines = phi_jsonl(enumerate_phi(b5));
  CHECK(lines.find("\"lifted\":true") != std::string::npos);
  Setup q5 = build_setup(GraphCase::CycleQuotient, 5);
  CHECK(phi_jsonl(enumerate_phi(q5)).find("lifted") == std::string::npos);
}

TEST_CASE("omega record lines") {
  Setup q5 = build_setup(GraphCase::CycleQuotient, 5);
  OmegaTable o5 = enumerate_omega(q5, enumerate_phi(q5), {4, 5});
  std::string lines = omega_jsonl(o5);
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 16);
  CHECK(lines.find("\"sign\":\"+\"") != std::string::npos);
  CHECK(lines.find("\"sector\":null") != std::string::npos);
}

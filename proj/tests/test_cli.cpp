#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(OSCALG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int rc = pclose(p);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

nlohmann::json parse_report(const RunResult& r) {
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.contains("suite"));
  REQUIRE(j.contains("checks"));
  REQUIRE(j.contains("elapsed_ms"));
  return j;
}

void expect_all_pass(const nlohmann::json& j) {
  for (auto& c : j["checks"]) {
    INFO(c["id"].get<std::string>(), ": ", c["witness"].get<std::string>());
    CHECK(c["pass"] == true);
  }
  CHECK(j["failed"] == 0);
}

}  // namespace

TEST_CASE("series subcommand passes and reports clean JSON") {
  RunResult r = run_cli("series ratio-3-7 --betti 1,0,1,0,1 --order 5");
  CHECK(r.status == 0);
  auto j = parse_report(r);
  CHECK(j["suite"] == "series-ratio-3-7");
  CHECK(j["orders"]["q-order"] == 5);
  CHECK(j["checks"].size() >= 1);
  expect_all_pass(j);
}

TEST_CASE("hodge refinement subcommand accepts a table") {
  RunResult r = run_cli("series hodge-3-8 --hodge 1,0,1,0,20,0,1,0,1 --order 4");
  CHECK(r.status == 0);
  expect_all_pass(parse_report(r));
}

TEST_CASE("theta and rank-two series subcommands pass at defaults") {
  for (const char* kind : {"theta", "yoshioka", "uhlenbeck-p2", "goettsche", "macdonald"}) {
    RunResult r = run_cli(std::string("series ") + kind);
    INFO(kind);
    CHECK(r.status == 0);
    expect_all_pass(parse_report(r));
  }
}

TEST_CASE("invalid betti input is a usage error") {
  // duality violated
  CHECK(run_cli("series goettsche --betti 1,0,0,0,2").status == 2);
  // malformed list
  CHECK(run_cli("series goettsche --betti 1,2").status == 2);
  CHECK(run_cli("series goettsche --betti a,b,c,d,e").status == 2);
  // unknown kind
  CHECK(run_cli("series nonsense").status == 2);
}

TEST_CASE("fock subcommand passes and validates input") {
  RunResult r = run_cli("fock --betti 1,0,1,0,1 --max-energy 3 --rank 2 --recover-constants 4");
  CHECK(r.status == 0);
  auto j = parse_report(r);
  CHECK(j["suite"] == "fock");
  expect_all_pass(j);
  bool saw_constants = false;
  for (auto& c : j["checks"])
    if (c["id"] == "normalization-constants-recovered") {
      saw_constants = true;
      CHECK(c["witness"].get<std::string>().find("c_1=-2") != std::string::npos);
      CHECK(c["witness"].get<std::string>().find("c_4=-8") != std::string::npos);
    }
  CHECK(saw_constants);
}

TEST_CASE("fock accepts an explicit pairing file") {
  std::string path = "cli_pairing_input.json";
  {
    std::ofstream f(path);
    f << R"({"degrees": [0, 2, 4],
             "pairing": [[0, 0, 1], [0, "1", 0], [1, 0, 0]]})";
  }
  RunResult r = run_cli("fock --pairing-matrix " + path + " --max-energy 3");
  std::remove(path.c_str());
  CHECK(r.status == 0);
  expect_all_pass(parse_report(r));
  // a missing file is a usage error
  CHECK(run_cli("fock --pairing-matrix no_such_file.json").status == 2);
}

TEST_CASE("schubert subcommand: bounds and the signed count") {
  CHECK(run_cli("schubert --r 2 --n 3").status == 2);
  CHECK(run_cli("schubert --r 0 --n 0").status == 2);

  RunResult r = run_cli("schubert --r 4 --n 2 --pairing 2");
  CHECK(r.status == 0);
  auto j = parse_report(r);
  expect_all_pass(j);
  for (auto& c : j["checks"])
    if (c["id"] == "excess-top-integral") CHECK(c["witness"] == "6");
}

TEST_CASE("quot subcommand is seed-deterministic") {
  std::string args = "quot --instances 3 --seed 11 --max-dim 6";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  auto j = parse_report(a);
  CHECK(j["seed"] == 11);
  expect_all_pass(j);

  // a different seed changes witnesses but still passes
  RunResult c = run_cli("quot --instances 3 --seed 12 --max-dim 6");
  CHECK(c.status == 0);
  CHECK(c.out != a.out);
}

TEST_CASE("series output is byte-stable across runs") {
  RunResult a = run_cli("series theta --order 3");
  RunResult b = run_cli("series theta --order 3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("series can be exported") {
  std::string path = "cli_series_out.json";
  RunResult r = run_cli("series goettsche --betti 1,0,22,0,1 --order 4 --out " + path);
  CHECK(r.status == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  auto j = nlohmann::json::parse(f);
  std::remove(path.c_str());
  CHECK(j["D"] == 1);
  CHECK(j["order"] == "4");
  CHECK(j["coeffs"].is_array());
}

TEST_CASE("quot instances can be exported as exact JSON") {
  std::string path = "cli_quot_out.json";
  RunResult r = run_cli("quot --instances 2 --seed 5 --max-dim 5 --out " + path);
  CHECK(r.status == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  auto j = nlohmann::json::parse(f);
  std::remove(path.c_str());
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  for (auto& inst : j) {
    long d = inst["dim"].get<long>();
    CHECK(d >= 1);
    CHECK(inst["B1"].size() == static_cast<std::size_t>(d));
    CHECK(inst["B2"].size() == static_cast<std::size_t>(d));
    CHECK(inst["vectors"].size() >= 1);
    CHECK(inst["B1"][0][0].is_string());
  }
}

TEST_CASE("usage errors") {
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("series").status == 2);  // kind is required
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("series --help").status == 0);
}

TEST_CASE("timings flag adds wall time without breaking the schema") {
  RunResult r = run_cli("series theta --order 3 --timings");
  CHECK(r.status == 0);
  auto j = parse_report(r);
  CHECK(j["elapsed_ms"].is_number());
  expect_all_pass(j);
}

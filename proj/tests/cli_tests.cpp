#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"
#include "subprocess.hpp"

using drz::testutil::run_command;
using Json = nlohmann::ordered_json;

namespace {

const std::string kBin = DRZ_BIN;

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/drz_cli_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

Json strip_elapsed(Json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) v = strip_elapsed(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_elapsed(v);
  }
  return j;
}

}  // namespace

TEST_CASE("drazin subcommand on a GF(7) matrix") {
  auto path = write_temp("gf7.mat", "GF 7\n2 2\n2 0\n0 0\n");
  auto r = run_command(kBin + " drazin " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("index: 1") != std::string::npos);
  CHECK(r.output.find("4 0") != std::string::npos);  // a^D = diag(4,0)
  CHECK(r.output.find("# a^pi") != std::string::npos);
}

TEST_CASE("drazin subcommand on integer scalars") {
  auto two = write_temp("z2.mat", "Z\n1 1\n2\n");
  auto r = run_command(kBin + " drazin " + two);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("NotDrazinInvertible") != std::string::npos);

  auto zero = write_temp("z0.mat", "Z\n1 1\n0\n");
  auto rz = run_command(kBin + " drazin " + zero);
  CHECK(rz.exit_code == 0);
  CHECK(rz.output.find("index: 1") != std::string::npos);

  auto big = write_temp("zbig.mat", "Z\n2 2\n1 0\n0 1\n");
  CHECK(run_command(kBin + " drazin " + big).exit_code == 2);
}

TEST_CASE("drazin subcommand on Zn scalars") {
  auto s = write_temp("zn12.mat", "Zn 12\n1 1\n2\n");
  auto r = run_command(kBin + " drazin " + s);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("8") != std::string::npos);  // 2^D = 8 in Z_12

  auto m = write_temp("zn12m.mat", "Zn 12\n2 2\n1 0\n0 1\n");
  CHECK(run_command(kBin + " drazin " + m).exit_code == 2);
}

TEST_CASE("drazin subcommand input errors") {
  auto bad = write_temp("bad.mat", "GF 7\n2\n1 0\n");
  CHECK(run_command(kBin + " drazin " + bad).exit_code == 2);
  CHECK(run_command(kBin + " drazin /nonexistent.mat").exit_code == 2);
  auto rect = write_temp("rect.mat", "Q\n1 2\n1 2\n");
  CHECK(run_command(kBin + " drazin " + rect).exit_code == 2);
}

TEST_CASE("verify subcommand single theorem") {
  auto r = run_command(kBin +
                       " verify --theorem T3.5 --domain GF:7 --dim 4"
                       " --trials 100 --seed 1");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["summary"]["pass"] == true);
  CHECK(j["reports"].size() == 1);
  CHECK(j["reports"][0]["theorem"] == "T3.5");
  CHECK(j["reports"][0]["trials"] == 100);
  CHECK(j["reports"][0]["failures"].empty());
}

TEST_CASE("verify rejects bad combinations") {
  CHECK(run_command(kBin + " verify --theorem T3.9 --domain GF:2").exit_code ==
        2);
  auto r = run_command(kBin + " verify --theorem T3.9 --domain GF:2");
  CHECK(r.output.find("requires rationals") != std::string::npos);
  CHECK(run_command(kBin + " verify").exit_code == 2);
  CHECK(run_command(kBin + " verify --theorem bogus --all").exit_code == 2);
  CHECK(run_command(kBin + " verify --theorem nope").exit_code == 2);
  CHECK(run_command(kBin + " verify --all --domain Zn:12").exit_code == 2);
  CHECK(run_command(kBin + " verify --all --dim 0").exit_code == 2);
  CHECK(run_command(kBin + " verify --all --trials 0").exit_code == 2);
  CHECK(run_command(kBin + " nonsense").exit_code == 2);
}

TEST_CASE("verify --all aggregates one entry per theorem") {
  auto r = run_command(kBin + " verify --all --domain Q --dim 3 --trials 50" +
                       " --seed 7");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["reports"].size() == 15);
  CHECK(j["summary"]["total_trials"] == 15 * 50);
  CHECK(j["summary"]["pass"] == true);
}

TEST_CASE("verify output is deterministic modulo elapsed_ms") {
  const std::string cmd =
      kBin + " verify --theorem T3.10 --domain GF:3 --dim 3 --trials 60"
             " --seed 11";
  auto r1 = run_command(cmd);
  auto r2 = run_command(cmd);
  CHECK(r1.exit_code == 0);
  auto j1 = strip_elapsed(Json::parse(r1.output));
  auto j2 = strip_elapsed(Json::parse(r2.output));
  CHECK(j1.dump() == j2.dump());
}

TEST_CASE("verify matches the golden report fixture") {
  auto r = run_command(kBin +
                       " verify --theorem T3.2 --domain GF:7 --dim 3"
                       " --trials 25 --seed 42");
  CHECK(r.exit_code == 0);
  std::ifstream fixture(std::string(FIXTURE_DIR) + "/verify_golden.json");
  REQUIRE(fixture.good());
  Json expected = Json::parse(fixture);
  Json actual = strip_elapsed(Json::parse(r.output));
  CHECK(actual.dump(2) == strip_elapsed(expected).dump(2));
}

TEST_CASE("oracle subcommand") {
  auto r = run_command(kBin + " oracle --domain GF:2 --dim 2 --exhaustive");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["matrices"] == 16);
  CHECK(j["mismatches"] == 0);
  CHECK(j["idempotent_pairs"] == 64);
  CHECK(j["pass"] == true);

  CHECK(run_command(kBin + " oracle --domain GF:7 --dim 3 --exhaustive")
            .exit_code == 2);
  CHECK(run_command(kBin + " oracle --domain GF:2 --dim 2").exit_code == 2);
  CHECK(run_command(kBin + " oracle --domain Q --dim 2 --exhaustive")
            .exit_code == 2);
}

TEST_CASE("counterexample subcommand") {
  auto r = run_command(kBin + " counterexample");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["pass"] == true);
  REQUIRE(j["cases"].size() == 2);
  CHECK(j["cases"][0]["id"] == "M2-Z7");
  bool found = false;
  for (const auto& chk : j["cases"][0]["checks"])
    if (chk["name"] == "sum_times_pi") {
      CHECK(chk["computed"] == "[2 0; 0 0]");
      found = true;
    }
  CHECK(found);
}

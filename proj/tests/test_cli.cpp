#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hermitian-eo");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hermitian::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify subcommand") {
  const Result r = run({"verify", "--p", "2", "--n", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verified"] == true);
  REQUIRE(j["factors"].size() == 2);
  CHECK(j["factors"][0]["relation_word"] == "F^3+V^3");
  CHECK(j["factors"][0]["multiplicity"] == 9);
  CHECK(j["factors"][1]["relation_word"] == "F+V");
  CHECK(j["factors"][1]["multiplicity"] == 1);

  const Result table = run({"--format", "table", "verify", "--p", "2", "--n", "3"});
  CHECK(table.code == 0);
  CHECK(table.out.find("verified yes") != std::string::npos);
}

TEST_CASE("orbits subcommand") {
  const Result r = run({"orbits", "--n", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["elements"] == nlohmann::json::array({1, 2, 4, 8, 16, 15, 13, 9}));
  CHECK(j[1]["elements"] == nlohmann::json::array({3, 6, 12, 7, 14, 11, 5, 10}));
  CHECK(j[1]["a_number"] == 3);
  CHECK_FALSE(j[1].contains("multiplicity"));

  const Result withp = run({"orbits", "--n", "4", "--p", "2", "--format", "json"});
  CHECK(nlohmann::json::parse(withp.out)[1]["multiplicity"] == 3);
}

TEST_CASE("decompose subcommand") {
  const Result r = run({"decompose", "--p", "3", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("(E/E(F+V))^3\n", 0) == 0);
}

TEST_CASE("derham subcommand") {
  const Result r = run({"derham", "--p", "2", "--n", "2", "--check-oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("omega 1 1 -> omega 0 2 1\n") != std::string::npos);
  CHECK(r.out.find("omega 0 0 -> 0\n") != std::string::npos);
  CHECK(r.out.find("oracle agrees") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"derham", "--p", "2", "--n", "1", "--format", "json"}).out);
  CHECK(j["frobenius"][1]["image"]["kind"] == "omega");
  CHECK(j["frobenius"][0]["image"].is_null());
}

TEST_CASE("blocks and eo subcommands") {
  const Result b = run({"blocks", "--p", "2", "--n", "3"});
  CHECK(b.code == 0);
  CHECK(b.out.find("3 1 (0,1,1) ") != std::string::npos);

  const Result e = run({"eo", "--p", "2", "--n", "3", "--method", "both", "--format", "json"});
  CHECK(e.code == 0);
  const auto j = nlohmann::json::parse(e.out);
  CHECK(j["match"] == true);
  CHECK(j["brute"]["key_values"] == j["orbit"]["key_values"]);

  CHECK(run({"eo", "--p", "2", "--n", "3", "--method", "fast"}).code == 2);
}

TEST_CASE("report subcommand is reproducible") {
  const Result a = run({"report", "--p", "3", "--n", "3", "--format", "json"});
  const Result b = run({"report", "--p", "3", "--n", "3", "--format", "json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["supersingular_locus_index"] == 176);
  CHECK(j["supersingular_locus_flag"] == false);
}

TEST_CASE("grid subcommand") {
  const Result serial = run({"grid", "--p", "2,3", "--n", "1..3", "--format", "json"});
  const Result parallel = run({"grid", "--p", "3,2", "--n", "1..3", "--jobs", "4", "--format", "json"});
  REQUIRE(serial.code == 0);
  CHECK(serial.out == parallel.out);
  const auto j = nlohmann::json::parse(serial.out);
  REQUIRE(j.size() == 6);
  CHECK(j[0]["p"] == 2);
  CHECK(j[0]["n"] == 1);
  CHECK(j[5]["p"] == 3);
  CHECK(j[5]["n"] == 3);

  const Result capped = run({"grid", "--p", "2", "--n", "1..3", "--max-genus", "10"});
  CHECK(capped.code == 1);
  CHECK(capped.out.find("size_guard") != std::string::npos);
}

TEST_CASE("argument errors") {
  auto reason = [](const Result& r) { return nlohmann::json::parse(r.err)["error"]; };

  const Result composite = run({"verify", "--p", "4", "--n", "1"});
  CHECK(composite.code == 2);
  CHECK(reason(composite) == "invalid_argument");

  const Result big = run({"verify", "--p", "5", "--n", "6"});
  CHECK(big.code == 2);
  CHECK(reason(big) == "size_guard");

  const Result capped = run({"verify", "--p", "3", "--n", "3", "--max-genus", "100"});
  CHECK(capped.code == 2);
  CHECK(reason(capped) == "size_guard");

  CHECK(run({"verify", "--p", "2"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--format", "xml", "orbits", "--n", "2"}).code == 2);
  CHECK(run({"grid", "--p", "2,x"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("environment overrides the genus cap") {
  setenv("HERMITIAN_EO_MAX_GENUS", "5", 1);
  const Result capped = run({"verify", "--p", "2", "--n", "3"});
  const Result flag = run({"verify", "--p", "2", "--n", "3", "--max-genus", "100"});
  unsetenv("HERMITIAN_EO_MAX_GENUS");
  CHECK(capped.code == 2);
  CHECK(flag.code == 0);
}

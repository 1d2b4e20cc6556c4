#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "class_table.hpp"
#include "springer_cli/cli.hpp"

using springer::testing::parse_class_table;
using springer::testing::read_file;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = springer::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string golden(const std::string& name) { return read_file(std::string(SPRINGER_GOLDEN_DIR) + "/" + name); }

}  // namespace

TEST_CASE("class tables match the golden files") {
  struct Row {
    const char* s;
    const char* n;
    const char* defects;
    const char* file;
  };
  for (const auto& row : {Row{"1", "1", "odd", "x4_1_n1_odd.txt"}, Row{"1", "2", "even", "x4_1_n2_even.txt"},
                          Row{"1", "2", "odd", "x4_1_n2_odd.txt"},
                          Row{"0", "3", "odd-positive", "x4_0_n3_oddpos.txt"}}) {
    CAPTURE(row.file);
    auto r = run({"symbols", "enumerate", "--rho", "4", "--s", row.s, "--n", row.n, "--defects", row.defects,
                  "--classes"});
    CHECK(r.status == 0);
    CHECK(parse_class_table(r.out) == parse_class_table(golden(row.file)));
  }
}

TEST_CASE("json class records") {
  auto r = run({"symbols", "enumerate", "--rho", "4", "--s", "1", "--n", "1", "--defects", "odd", "--classes",
                "--format", "json"});
  REQUIRE(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("params"));
    CHECK(j["n"] == 1);
    CHECK(j["members"].is_array());
    CHECK(j["intervals"][0].contains("proper"));
    CHECK(j["dim"].get<std::size_t>() < 2);
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("springer map") {
  auto r = run({"springer", "map", "--case", "sp", "--n", "1", "--class", "(0)(11)", "--char", "", "--format",
                "json"});
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["symbol"] == "(0,4;3)");
  CHECK(j["defect"] == 1);
  CHECK(j["class"] == "(0)(11)");
  CHECK(j["bipartition"] == "|1");

  auto table = run({"springer", "table", "--case", "a-even", "--n", "2", "--format", "json"});
  CHECK(table.status == 0);
  CHECK(std::count(table.out.begin(), table.out.end(), '\n') > 0);
}

TEST_CASE("spin map") {
  auto r = run({"spin", "map", "--n", "4", "--partition", "2,2", "--format", "json"});
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["t"] == 0);
  CHECK(j["bipartition"] == "|1");
  CHECK(j["weyl_rank"] == 1);
  auto table = run({"spin", "table", "--n", "6"});
  CHECK(table.status == 0);
}

TEST_CASE("count") {
  auto r = run({"count", "--family", "a", "--m", "5"});
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["formula_count"] == 7);
  CHECK(j["agree"] == true);
  auto s = run({"count", "--family", "sporadic"});
  CHECK(s.status == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({}).status == 2);
  CHECK(run({"symbols", "enumerate", "--rho", "4"}).status == 2);
  CHECK(run({"symbols", "enumerate", "--rho", "4", "--s", "1", "--n", "1", "--defects", "odd-positive"}).status == 2);

  auto parity = run({"springer", "map", "--case", "sp", "--n", "2", "--class", "(1)(1)(2)"});
  CHECK(parity.status == 2);
  CHECK(parity.err.find("ParityViolation") != std::string::npos);

  auto missing = run({"spin", "map", "--n", "2", "--partition", "1,1"});
  CHECK(missing.status == 2);
  CHECK(missing.err.find("NotInXn") != std::string::npos);

  auto bad_char = run({"springer", "map", "--case", "sp", "--n", "1", "--class", "(2)", "--char", "2"});
  CHECK(bad_char.status == 2);

  CHECK(run({"selftest", "--max-n", "2"}).status == 0);
}

TEST_CASE("springer inverse") {
  auto r = run({"springer", "inverse", "--case", "sp", "--n", "1", "--symbol", "(0,4,8;2,7)"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("(0)(11) - -> (0,4;3)", 0) == 0);
  auto missing = run({"springer", "inverse", "--case", "sp", "--n", "1", "--symbol", "(2;)"});
  CHECK(missing.status == 1);
  CHECK(missing.err.find("NotInImage") != std::string::npos);
}

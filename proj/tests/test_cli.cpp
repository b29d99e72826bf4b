#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "bipoints/io.hpp"

using namespace bipoints;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string temp_path(const std::string& name) {
  return std::string("/tmp/bipoints_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = temp_path("stdout");
  const std::string cmd =
      std::string(BIPOINTS_CLI_PATH) + " " + args + " > " + out_path + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream f(out_path);
  r.out.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  return r;
}

}  // namespace

TEST_CASE("input parsing") {
  const auto doc = parse_input("# comment\n0:1,0:1\n1:1,2:1\n");
  CHECK(doc.kind == InputDocument::Kind::points);
  REQUIRE(doc.points.size() == 2);
  CHECK(doc.points[1] == std::array<std::int64_t, 4>{1, 1, 2, 1});

  const auto grid = parse_input("scheme infinity\n101\n110\n");
  CHECK(grid.kind == InputDocument::Kind::grid);
  CHECK(grid.scheme == CoordinateScheme::infinity);
  CHECK(grid.grid_rows == std::vector<std::string>{"101", "110"});

  CHECK_THROWS_AS(parse_input(""), ParseError);
  CHECK_THROWS_AS(parse_input("10\n101\n"), ParseError);       // ragged
  CHECK_THROWS_AS(parse_input("0:1,0:1\n101\n"), ParseError);  // mixed
  CHECK_THROWS_AS(parse_input("1:1\n"), ParseError);
  CHECK_THROWS_AS(parse_input("000\n"), ParseError);  // no occupied cell

  const auto x = to_pointset<Rational>(parse_input("2:4,1:1\n"));
  CHECK(x.point(0).first.a == Rational(1, 2));

  CHECK_THROWS_AS(to_pointset<Rational>(parse_input("1:1,1:1\n2:2,3:3\n")), DuplicatePoint);
}

TEST_CASE("digest is stable") {
  CHECK(fnv1a_digest("") == "cbf29ce484222325");
  CHECK(fnv1a_digest("abc") != fnv1a_digest("abd"));
}

TEST_CASE("cli check") {
  const std::string file = temp_path("diag");
  write_file(file, "0:1,0:1\n1:1,1:1\n");
  auto r = run_cli("check " + file);
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["command"] == "check");
  CHECK(j["result"]["acm"] == false);
  CHECK(j["result"]["witness"].size() == 2);

  const std::string row = temp_path("row");
  write_file(row, "0:1,0:1\n0:1,1:1\n0:1,2:1\n");
  r = run_cli("check " + row);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["result"]["acm"] == true);

  const std::string bad = temp_path("bad");
  write_file(bad, "10\n011\n");
  r = run_cli("check " + bad);
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli degrees") {
  const std::string file = temp_path("grid23");
  write_file(file, "111\n111\n");
  auto r = run_cli("degrees " + file);
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["result"]["all_singletons"] == true);
  CHECK(j["result"]["consistent"] == true);
  for (const auto& rec : j["result"]["points"])
    CHECK(rec["degree_set"] == json::parse("[[1,2]]"));

  const std::string diag = temp_path("diag");
  write_file(diag, "0:1,0:1\n1:1,1:1\n");
  r = run_cli("degrees " + diag);
  j = json::parse(r.out);
  CHECK(j["result"]["all_singletons"] == false);
  CHECK(j["result"]["consistent"] == true);
  for (const auto& rec : j["result"]["points"])
    CHECK(rec["degree_set"] == json::parse("[[0,1],[1,0]]"));

  r = run_cli("degrees --point 5 " + diag);
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli separator") {
  const std::string file = temp_path("pair");
  write_file(file, "0:1,0:1\n1:1,1:1\n");
  auto r = run_cli("separator --point 0 --deg-i 1 --deg-j 0 " + file);
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["result"]["separator"]["coefficients"] == json::parse(R"(["-1","1"])"));
  CHECK(j["result"]["value_at_point"] == "1");
  CHECK(j["result"]["vanishes_elsewhere"] == true);

  r = run_cli("separator --point 0 --deg-i 0 --deg-j 0 " + file);
  CHECK(r.exit_code == 1);  // NoSeparator

  const std::string single = temp_path("single");
  write_file(single, "1:1,1:1\n");
  r = run_cli("separator --point 0 --deg-i 0 --deg-j 0 " + single);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["result"]["separator"]["coefficients"] == json::parse(R"(["1"])"));
}

TEST_CASE("cli hilbert") {
  const std::string file = temp_path("single");
  write_file(file, "4:1,5:1\n");
  auto r = run_cli("hilbert --max-i 2 --max-j 2 " + file);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["result"]["values"] == json::parse("[[1,1,1],[1,1,1],[1,1,1]]"));
}

TEST_CASE("cli census") {
  auto r = run_cli("census --rows 2 --cols 2");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["result"]["total"] == 15);
  CHECK(j["result"]["acm"] == 13);
  CHECK(j["result"]["mismatches"] == 0);

  r = run_cli("census --rows 5 --cols 4");
  CHECK(r.exit_code == 2);  // LimitExceeded
}

TEST_CASE("cli random round-trips and is deterministic") {
  auto r1 = run_cli("random --rows 3 --cols 3 --points 5 --seed 42");
  auto r2 = run_cli("random --rows 3 --cols 3 --points 5 --seed 42");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);

  const auto x = to_pointset<Rational>(parse_input(r1.out));
  CHECK(x.size() == 5);
  const auto direct = random_pointset<Rational>(3, 3, 5, 42);
  CHECK(x.points() == direct.points());

  auto acm = run_cli("random --rows 3 --cols 3 --seed 7 --acm");
  CHECK(acm.exit_code == 0);
  const auto y = to_pointset<Rational>(parse_input(acm.out));
  CHECK(is_acm_pairwise(incidence(y)).is_acm);
}

TEST_CASE("cli staircase") {
  const std::string file = temp_path("stair");
  write_file(file, "011\n111\n");
  auto r = run_cli("staircase " + file);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "###\n##.\n");

  const std::string diag = temp_path("diag");
  write_file(diag, "0:1,0:1\n1:1,1:1\n");
  r = run_cli("staircase " + diag);
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli verify") {
  const std::string file = temp_path("verify_in");
  write_file(file, "101\n110\n011\n");
  auto r = run_cli("verify " + file);
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["result"]["pass"] == true);
  CHECK(j["result"]["checks"].size() >= 8);
}

TEST_CASE("cli field selection") {
  const std::string file = temp_path("pairf");
  write_file(file, "0:1,0:1\n1:1,1:1\n");
  auto r = run_cli("--field fp:1000003 degrees " + file);
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["field"] == "fp:1000003");
  for (const auto& rec : j["result"]["points"])
    CHECK(rec["degree_set"] == json::parse("[[0,1],[1,0]]"));

  CHECK(run_cli("--field fp:17 check " + file).exit_code == 2);       // too small
  CHECK(run_cli("--field fp:1000004 check " + file).exit_code == 2);  // composite
  CHECK(run_cli("--field weird check " + file).exit_code == 2);
}

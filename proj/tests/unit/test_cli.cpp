#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "binomiacci/cli.hpp"
#include "binomiacci/render.hpp"

using namespace binomiacci;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

}  // namespace

TEST_CASE("table") {
  SUBCASE("pretty marks the diagonal") {
    const Run r = run({"table", "--rows", "4", "--cols", "7"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 6);
    CHECK(l[5].find("[114]") != std::string::npos);
    CHECK(l[3].find("[8]") != std::string::npos);
    CHECK(l[5].find("720") != std::string::npos);
  }
  SUBCASE("single row csv") {
    const Run r = run({"table", "--rows", "0", "--cols", "3", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "k,0,1,2,3\n0,1,1,2,3\n");
  }
  SUBCASE("csv diagonal matches the central numbers") {
    const Run r = run({"table", "--rows", "8", "--cols", "8", "--format", "csv"});
    REQUIRE(r.code == 0);
    const CsvTable t = parse_csv(r.out);
    REQUIRE(t.rows.size() == 9);
    const std::vector<std::string> central{"1", "2", "8", "30", "114", "436", "1676", "6468", "25040"};
    for (std::size_t k = 0; k <= 8; ++k) CHECK(t.rows[k][k + 1] == central[k]);
  }
  SUBCASE("json uses decimal strings") {
    const Run r = run({"table", "--rows", "40", "--cols", "40", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "table");
    CHECK(j["params"]["rows"] == 40);
    CHECK(j["rows"][3]["3"] == "30");
    CHECK(j["rows"][40]["40"].is_string());
  }
}

TEST_CASE("triangle") {
  const Run seven = run({"triangle", "--rows", "7"});
  REQUIRE(seven.code == 0);
  const auto l = lines(seven.out);
  REQUIRE(l.size() == 7);
  CHECK(l.back() == "13 20 27 30 27 20 13");
  CHECK(l.front().find_first_not_of(' ') > 0);
  CHECK(run({"triangle", "--rows", "1"}).out == "1\n");

  const Run csv = run({"triangle", "--rows", "12", "--format", "csv"});
  const CsvTable t = parse_csv(csv.out);
  CHECK(t.header == std::vector<std::string>{"m", "k", "value"});
  for (const auto& row : t.rows) {
    const int m = std::stoi(row[0]);
    const int k = std::stoi(row[1]);
    for (const auto& other : t.rows) {
      if (std::stoi(other[0]) == m && std::stoi(other[1]) == m - k) CHECK(other[2] == row[2]);
    }
  }
  CHECK(run({"triangle", "--rows", "0"}).code == kExitUsage);
}

TEST_CASE("series") {
  CHECK(run({"series", "--which", "central", "--order", "5"}).out == "1 2 8 30 114 436\n");
  CHECK(run({"series", "--which", "fib", "--order", "6"}).out == "1 1 2 3 5 8 13\n");
  CHECK(run({"series", "--which", "row:2", "--order", "4"}).out == "2 4 8 15 27\n");

  const Run bivariate = run({"series", "--which", "bivariate", "--order", "4", "--format", "csv"});
  REQUIRE(bivariate.code == 0);
  CHECK(parse_csv(bivariate.out).rows[4][5] == "114");

  const Run json = run({"series", "--which", "central", "--order", "3", "--format", "json"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["rows"][3]["coefficient"] == "30");
  CHECK(j["rows"][3]["power"] == 3);

  for (const char* bad : {"row:", "row:x", "row:-1", "diag", "central2"}) {
    CHECK(run({"series", "--which", bad, "--order", "3"}).code == kExitUsage);
  }
}

TEST_CASE("asympt") {
  const Run one = run({"asympt", "--max", "1", "--format", "csv"});
  REQUIRE(one.code == 0);
  CHECK(one.out == "n,exact,estimate,ratio\n1,2,6.77027500257,3.38513750129\n");

  const Run csv = run({"asympt", "--max", "200", "--format", "csv"});
  const CsvTable t = parse_csv(csv.out);
  REQUIRE(t.rows.size() == 200);
  for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(std::stod(t.rows[i][3]) < std::stod(t.rows[i - 1][3]));

  const Run big = run({"asympt", "--max", "600", "--format", "json"});
  REQUIRE(big.code == 0);
  const auto j = nlohmann::json::parse(big.out);
  CHECK(j["rows"][0]["estimate"].is_number());
  CHECK(j["rows"][599]["estimate"].is_string());
  CHECK(j["rows"][599]["ratio"].is_number());
  CHECK(run({"asympt", "--max", "0"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const Run gf = run({"verify", "--suite", "gf"});
  CHECK(gf.code == 0);
  CHECK(gf.out.find("FAIL") == std::string::npos);
  CHECK(gf.out.find("PASS") != std::string::npos);

  const Run residues = run({"verify", "--suite", "residues", "--format", "json"});
  CHECK(residues.code == 0);
  const auto j = nlohmann::json::parse(residues.out);
  CHECK(j["rows"].size() >= 2);
  for (const auto& row : j["rows"]) CHECK(row["status"] == "PASS");

  CHECK(run({"verify", "--suite", "bogus"}).code == kExitUsage);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"table", "--rows", "2"}).code == kExitUsage);
  CHECK(run({"table", "--rows", "-1", "--cols", "2"}).code == kExitUsage);
  CHECK(run({"table", "--rows", "two", "--cols", "2"}).code == kExitUsage);
  CHECK(run({"table", "--rows", "2", "--cols", "2", "--format", "xml"}).code == kExitUsage);
  const Run guarded = run({"table", "--rows", "10001", "--cols", "0"});
  CHECK(guarded.code == kExitUsage);
  CHECK(guarded.err.find("--force") != std::string::npos);
  CHECK(run({"table", "--rows", "10001", "--cols", "0", "--force"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("csv and json round-trip byte-identically") {
  const std::vector<std::vector<std::string>> commands{
      {"table", "--rows", "12", "--cols", "9"},
      {"triangle", "--rows", "9"},
      {"series", "--which", "bivariate", "--order", "6"},
      {"series", "--which", "central", "--order", "30"},
      {"asympt", "--max", "40"},
      {"verify", "--suite", "asymptotics"},
  };
  for (auto args : commands) {
    auto csv_args = args;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    const std::string csv = run(csv_args).out;
    CHECK(write_csv(parse_csv(csv)) == csv);

    auto json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    const std::string json = run(json_args).out;
    CHECK(reformat_json(json) == json);
  }
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "--suite", "residues", "--format", "csv"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("--out writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "binomiacci_cli_test.csv";
  std::filesystem::remove(path);
  const Run r = run({"series", "--which", "fib", "--order", "4", "--format", "csv", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "power,coefficient\n0,1\n1,1\n2,2\n3,3\n4,5\n");
  std::filesystem::remove(path);

  CHECK(run({"table", "--rows", "1", "--cols", "1", "--out", "/nonexistent/dir/x.txt"}).code == kExitUsage);
}

TEST_CASE("real formatting") {
  CHECK(format_real(6.770275002573076) == "6.77027500257");
  CHECK(format_real(469245977.8689106) == "469245977.869");
  CHECK(format_real_from_log(1, std::log(123.456)) == "123.456");
  CHECK(format_real_from_log(-1, 1000.0 * std::log(10.0) + std::log(2.5)) == "-2.5e+1000");
  CHECK(format_real_from_log(0, 0.0) == "0");
}

TEST_CASE("csv quoting") {
  const CsvTable table{{"name", "value"}, {{"a, b", "1"}, {"say \"hi\"", "2"}, {"plain", ""}}};
  const std::string text = write_csv(table);
  CHECK(text == "name,value\n\"a, b\",1\n\"say \"\"hi\"\"\",2\nplain,\n");
  const CsvTable back = parse_csv(text);
  CHECK(back.header == table.header);
  CHECK(back.rows == table.rows);
  CHECK_THROWS_AS(parse_csv("a\n\"open"), std::invalid_argument);
}

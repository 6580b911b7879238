#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "kfull/cli.hpp"

using namespace kfull;
using kfull::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) v.push_back(line);
  return v;
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("round_decimal") {
  using cli::Rounding;
  CHECK(cli::round_decimal(Real("0.0492272730"), 6, Rounding::half_even) == "0.049227");
  CHECK(cli::round_decimal(Real("0.1079205435"), 6, Rounding::half_even) == "0.107921");
  CHECK(cli::round_decimal(Real("0.1079205435"), 6, Rounding::truncate) == "0.107920");
  CHECK(cli::round_decimal(Real("0.0000025"), 6, Rounding::half_even) == "0.000002");
  CHECK(cli::round_decimal(Real("0.0000035"), 6, Rounding::half_even) == "0.000004");
  CHECK(cli::round_decimal(Real("12.5"), 0, Rounding::half_even) == "12");
  CHECK(cli::round_decimal(Real("-0.25"), 1, Rounding::half_even) == "-0.2");
}

TEST_CASE("table text output") {
  auto r = call({"table", "--k", "2", "--max-index", "5"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 8);
  CHECK(has(ls[2], "0.049227"));
  CHECK(has(ls[3], "0.158761"));

  // truncation reproduces every published digit
  r = call({"table", "--k", "2", "--rounding", "truncate"});
  REQUIRE(r.code == 0);
  for (const char* cell : {"0.107920", "0.079380", "0.030530", "0.007444", "0.001278", "0.091591", "0.000001"})
    CHECK(has(r.out, cell));
  r = call({"table", "--k", "3", "--rounding", "truncate"});
  for (const char* cell : {"0.000146", "0.048348", "0.019896", "0.004360"}) CHECK(has(r.out, cell));

  r = call({"table", "--max-index", "0"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 3);
  CHECK(has(r.out, "0.049227"));
}

TEST_CASE("table csv and json") {
  auto r = call({"table", "--k", "3", "--format", "csv", "--max-index", "3"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls[0] == "k,l,m,value,radius,method");
  CHECK(ls.size() == 1 + 10);
  CHECK(ls[1].rfind("3,0,0,1.46352836245950288782", 0) == 0);

  r = call({"table", "--format", "json", "--max-index", "2", "--method", "direct"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["k"] == 2);
  CHECK(j["method"] == "direct");
  REQUIRE(j["entries"].size() == 6);
  CHECK(std::stod(j["entries"][0]["value"].get<std::string>()) == doctest::Approx(0.0492272730092).epsilon(1e-12));
  CHECK(std::stod(j["entries"][0]["radius"].get<std::string>()) < 1e-15);
}

TEST_CASE("constants") {
  auto r = call({"constants", "--k", "2", "--max-index", "2"});
  REQUIRE(r.code == 0);
  CHECK(has(r.out, "C_2"));
  CHECK(has(r.out, "4.9227273009241277128019440e-02"));
  CHECK(has(r.out, "c_2"));
  CHECK(has(r.out, "2.1732543125195541382370898e+00"));
  CHECK(has(r.out, "2.7596551140771898111231975e-01"));
  r = call({"constants", "--k", "3", "--format", "json", "--max-index", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["constants"][0]["name"] == "C_3");
  CHECK(std::stod(j["constants"][0]["value"].get<std::string>()) == doctest::Approx(1.4635283624595e-4));
}

TEST_CASE("enumerate") {
  auto r = call({"enumerate", "lambda", "--bound", "30"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 5);
  r = call({"enumerate", "kfull", "--bound", "100", "--proper"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"8", "27", "32", "72"});
  r = call({"enumerate", "members_B", "--N", "40"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"3", "6", "12", "23", "26", "34"});
  r = call({"enumerate", "members_B", "--N", "100", "--I", "2", "--J", "2"});
  CHECK(r.code == 2);
  r = call({"enumerate", "lambda", "--k", "3", "--bound", "7", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 5);
  CHECK(has(r.out, "\"2,1\""));
  CHECK(call({"enumerate", "primes"}).code == 2);
}

TEST_CASE("verify") {
  auto r = call({"verify", "--k", "2", "--quick"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "all checks passed"));
  for (const char* name : {"three_route", "normalization", "row_sum", "symmetry", "multinomial", "positivity",
                           "golden_table", "lemma_equivalence", "lemma_uniqueness", "empirical",
                           "power_sum_cross", "power_sum_closed_form", "newton_xi"})
    CHECK(has(r.out, std::string("PASS ") + name));

  r = call({"verify", "--k", "2", "--quick", "--tolerance", "three_route=0", "--format", "json"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == false);
  bool named = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "three_route") named = c["passed"] == false;
  CHECK(named);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({"table", "--k", "1"}).code == 2);
  CHECK(call({"table", "--digits", "200"}).code == 2);
  CHECK(call({"table", "--format", "xml"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"table", "--r-max", "10"}).code == 2);
  CHECK(has(call({"verify", "--tolerance", "oops"}).err, "name=value"));
}

TEST_CASE("empirical is deterministic across thread counts") {
  const auto a = call({"empirical", "--k", "2", "--N", "20000", "--format", "csv", "--threads", "1",
                        "--tolerance", "empirical=1"});
  const auto b = call({"empirical", "--k", "2", "--N", "20000", "--format", "csv", "--threads", "4",
                        "--tolerance", "empirical=1"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = call({"empirical", "--k", "2", "--N", "2000", "--tolerance", "empirical=1e-9"});
  CHECK(c.code == 1);
  CHECK(has(c.out, "OUTSIDE"));
}

TEST_CASE("config file and output path") {
  const std::string cfg = "kfull_test_config.toml";
  const std::string out = "kfull_test_out.csv";
  {
    std::ofstream f(cfg);
    f << "k = 3\nmax-index = 1\nformat = \"csv\"\n";
  }
  auto r = call({"table", "--config", cfg});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 4);
  CHECK(r.out.rfind("k,l,m", 0) == 0);
  CHECK(has(r.out, "\n3,0,0,"));
  // the command line wins over the file
  r = call({"table", "--config", cfg, "--k", "2", "--out", out});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(has(ss.str(), "\n2,0,0,4.9227"));
  std::remove(cfg.c_str());
  std::remove(out.c_str());
}

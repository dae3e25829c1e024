#include <doctest.h>

#include "cuspidal/cli.hpp"
#include "cuspidal/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

using namespace cuspidal;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("shortest round-trip doubles") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5e-300) == "-2.5e-300");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(std::nan("")) == "nan");
  for (double x : {std::numbers::pi, 1.0 / 3.0, 6.02214076e23, -1e-17}) CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("csv quoting and line endings") {
  Report r;
  r.columns = {"a", "b"};
  r.add_row({"x,y", 0.5});
  r.add_row({"say \"hi\"", 2});
  CHECK(to_csv(r) == "a,b\n\"x,y\",0.5\n\"say \"\"hi\"\"\",2\n");
  CHECK_THROWS(r.add_row({1}));
}

TEST_CASE("json layout") {
  Report r;
  r.columns = {"s", "value"};
  r.meta["command"] = "test";
  r.add_row({0.1, std::numeric_limits<double>::infinity()});
  r.summary["n"] = 1;
  const auto doc = nlohmann::json::parse(to_json(r));
  CHECK(doc["meta"]["command"] == "test");
  CHECK(doc["rows"][0]["s"] == 0.1);
  CHECK(doc["rows"][0]["value"] == "inf");
  CHECK(doc["summary"]["n"] == 1);
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("classify command") {
  const auto r = cli({"--format", "csv", "classify", "1", "5", "3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "p,q,lambda,mu,tag,descends_to_projective\n"
        "1,5,1/2,-1,ExceptionalOdd,false\n"
        "1,5,3/2,0,SphericalNonCuspidal,true\n"
        "1,5,5/2,1,Cuspidal,false\n");
  const auto all_cusp = cli({"--format", "json", "classify", "2", "2", "2"});
  const auto doc = nlohmann::json::parse(all_cusp.out);
  CHECK(doc["rows"].size() == 2);
  for (const auto& row : doc["rows"]) CHECK(row["tag"] == "Cuspidal");
  CHECK(cli({"classify", "0", "3", "1"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--format", "xml", "classify", "1", "3", "2"}).code == 2);
  CHECK(cli({"radon", "2", "2"}).code == 2);
  CHECK(cli({"radon", "2", "2", "1/3"}).code == 2);
  CHECK(cli({"radon", "2", "2", "1/2", "--s", "1:0:0.5"}).code == 2);
  CHECK(cli({"radon", "2", "2", "1/2", "--cfg", "rel_tol=-1"}).code == 2);
  CHECK(cli({"radon", "2", "2", "1/2", "--cfg", "colour=blue"}).code == 2);
  CHECK(cli({"radon", "2", "3", "--raw", "gauss:1"}).code == 2);
  CHECK(cli({"verify", "nonexistent"}).code == 2);
}

TEST_CASE("radon command rows and footer") {
  const auto r = cli({"--format", "json", "radon", "1", "5", "1/2"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  for (const auto& row : doc["rows"]) {
    CHECK(row["p"] == 1);
    CHECK(row["q"] == 5);
    CHECK(row["lambda"] == "1/2");
    CHECK(row.contains("s"));
    CHECK(row.contains("value"));
    CHECK(row.contains("error_estimate"));
  }
  CHECK(doc["summary"]["verdict"] == "NonCuspidalNumeric");
  CHECK(doc["summary"]["oracle_rel_diff"].get<double>() < 1e-3);
  CHECK(doc["summary"]["exponent"].get<double>() == doctest::Approx(-2.0).epsilon(1e-3));

  const auto cusp = nlohmann::json::parse(cli({"--format", "json", "radon", "2", "2", "1/2"}).out);
  CHECK(cusp["summary"]["verdict"] == "CuspidalNumeric");
  const auto sph = nlohmann::json::parse(cli({"--format", "json", "radon", "1", "3", "1/2"}).out);
  CHECK(sph["summary"]["verdict"] == "NonCuspidalNumeric");
  CHECK(sph["summary"]["exponent"].get<double>() == doctest::Approx(-1.0).epsilon(1e-3));
}

TEST_CASE("radon output is byte-identical across runs") {
  const std::vector<std::string> args{"--format", "csv", "radon", "2", "3", "--raw", "bump:1", "--s", "-1:2:0.5",
                                      "--cfg", "rel_tol=1e-9", "--cfg", "substitution=compactify_tan"};
  const auto a = cli(args);
  const auto b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("p,q,lambda,s,value,error_estimate,converged,evaluations\n", 0) == 0);
  CHECK(a.out.find('\r') == std::string::npos);
}

TEST_CASE("plot data and output files") {
  const std::string plot = "cli_test_plot.csv";
  const std::string table = "cli_test_table.csv";
  const auto r = cli({"--format", "csv", "--output", table, "radon", "1", "3", "1/2", "--s", "0:1:0.5",
                      "--emit-plot-data", plot});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const auto text = slurp(plot);
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "s,log_abs_Rf");
  std::getline(lines, line);
  CHECK(line.rfind("0,", 0) == 0);
  CHECK(std::stod(line.substr(2)) == doctest::Approx(std::log(std::numbers::pi)).epsilon(1e-9));
  CHECK(slurp(table).rfind("p,q,lambda", 0) == 0);
  std::remove(plot.c_str());
  std::remove(table.c_str());
}

TEST_CASE("verify command writes a json report") {
  const std::string path = "cli_test_verify.json";
  const auto r = cli({"verify", "classification", "--json", path});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(slurp(path));
  CHECK(doc["summary"]["passed"] == true);
  CHECK(doc["rows"].size() == 36);
  CHECK(doc["rows"][0]["criterion"] == 1);
  std::remove(path.c_str());
}

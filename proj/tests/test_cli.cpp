#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rtd/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rtd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string &name) { return std::string(RTD_TEST_DATA) + "/" + name; }

} // namespace

TEST_CASE("density") {
  const auto r = run({"density", "--s", "2", "--t", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("density 1/4") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"--format", "json", "density", "--s", "2", "--t", "4"}).out);
  CHECK(j["density"]["exact"] == "1/4");
  CHECK(j["density"]["approx"] == 0.25);
}

TEST_CASE("global flags may follow the subcommand") {
  const auto j = nlohmann::json::parse(run({"density", "--s", "2", "--t", "6", "--format", "json", "--grid-bits", "10"}).out);
  CHECK(j["density"]["exact"] == "4/7");
}

TEST_CASE("audit") {
  const auto j = nlohmann::json::parse(run({"--format", "json", "audit", "--s", "5", "--t-min", "10", "--t-max", "11"}).out);
  REQUIRE(j["rows"].size() == 2);
  for (const auto &row : j["rows"]) {
    CHECK(row["counterexample"] == true);
    CHECK(row["observed_b"] == 6);
  }
  const auto csv = run({"--format", "csv", "audit", "--s", "5", "--t-min", "10", "--t-max", "10"});
  CHECK(csv.out.rfind("t,conjectured_b,observed_b,counterexample,margin,margin_float", 0) == 0);
  CHECK(csv.out.find("533/135000,0.00394814814814815") != std::string::npos);
}

TEST_CASE("coeffs") {
  CHECK(run({"coeffs", "--m", "2"}).out == "c_0=1, c_1=1\n");
  CHECK(run({"coeffs", "--m", "3"}).out == "c_0=3/4, c_1=9/8\n");
}

TEST_CASE("check") {
  const auto j = nlohmann::json::parse(run({"--format", "json", "check", "--graph", data("k5.json"), "--t", "10"}).out);
  CHECK(j["free"] == false);
  CHECK(j["score"] == 10);
  CHECK(j["trimmed"]["score"] == 10);
  const auto free = nlohmann::json::parse(run({"--format", "json", "check", "--graph", data("k5.json"), "--t", "11"}).out);
  CHECK(free["free"] == true);
  CHECK(free["witness"].is_null());
}

TEST_CASE("structure") {
  const auto j = nlohmann::json::parse(
      run({"--format", "json", "structure", "--graph", data("counterexample_t11.json"), "--s", "5", "--t", "11"}).out);
  CHECK(j["all_hold"] == true);
  CHECK(j["partition"]["part_sizes"] == nlohmann::json::array({2, 2, 1, 1}));
}

TEST_CASE("search and refusal") {
  const auto j = nlohmann::json::parse(
      run({"--format", "json", "search", "--n", "3", "--s", "3", "--t", "5", "--denominator", "6", "--alphabet", "0,1/2,1"}).out);
  CHECK(j["density"]["exact"] == "1/36");
  const auto refused = run({"search", "--n", "8", "--s", "3", "--t", "5"});
  CHECK(refused.code == 3);
  CHECK(refused.err.find("search refused") != std::string::npos);
}

TEST_CASE("realize writes an edge list") {
  const auto path = std::filesystem::temp_directory_path() / "rtd_cli_edges.txt";
  const auto r = run({"--format", "json", "realize", "--graph", data("k5.json"), "--N", "10", "--out", path.string()});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["stats"]["omega"] == 5);
  CHECK(j["t"] == 11);
  CHECK(j["stats"]["contains_kt"] == false);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "10 parts=[2,2,2,2,2]");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"density", "--s", "2"}).code == 2);
  CHECK(run({"density", "--s", "2", "--t", "4", "--bogus"}).code == 2);
  CHECK(run({"--format", "xml", "coeffs", "--m", "2"}).code == 2);
  CHECK(run({"density", "--s", "1", "--t", "4"}).code == 2);
  const auto bad = run({"check", "--graph", data("malformed.json"), "--t", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(run({"check", "--graph", data("missing.json"), "--t", "3"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"--format", "json", "density", "--s", "5", "--t", "12"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> rz{"--format", "json", "--seed", "4", "realize", "--graph", data("half_edge.json"), "--N", "60"};
  CHECK(run(rz).out == run(rz).out);
}

TEST_CASE("thread count from the environment") {
  setenv("RT_ENGINE_THREADS", "3", 1);
  const auto a = run({"--format", "json", "density", "--s", "4", "--t", "12"});
  setenv("RT_ENGINE_THREADS", "1", 1);
  const auto b = run({"--format", "json", "density", "--s", "4", "--t", "12"});
  setenv("RT_ENGINE_THREADS", "zero", 1);
  CHECK(run({"coeffs", "--m", "2"}).code == 2);
  unsetenv("RT_ENGINE_THREADS");
  CHECK(a.out == b.out);
}

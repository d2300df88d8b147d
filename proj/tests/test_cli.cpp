#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "clusterrad/cli.hpp"
#include "clusterrad/parallel.hpp"

using namespace clusterrad;

namespace {

std::string dataPath(const char* name) { return std::string(CLUSTERRAD_DATA_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"bogus"}).code == cli::kExitUsage);
  CHECK(invoke({"mayer", "--potential", dataPath("hardrod.json"), "--frobnicate"}).code == cli::kExitUsage);
  CHECK(invoke({"bounds", "--potential", dataPath("morse6.json"), "--beta", "-1"}).code == cli::kExitUsage);
  CHECK(invoke({"bounds", "--potential", dataPath("morse6.json"), "--beta", "1", "--beta-sweep", "1:2:3"}).code ==
        cli::kExitUsage);
  CHECK(invoke({"bounds", "--potential", dataPath("morse6.json"), "--beta-sweep", "1:2"}).code == cli::kExitUsage);
  CHECK(invoke({"bounds"}).code == cli::kExitUsage);
}

TEST_CASE("unreadable potential file exits with 1 and an error document") {
  const auto r = invoke({"bounds", "--potential", "/nonexistent/x.json"});
  CHECK(r.code == cli::kExitDomain);
  const auto j = nlohmann::json::parse(r.err);
  CHECK(j.at("error") == "io");
  CHECK(j.contains("message"));
}

TEST_CASE("domain errors surface their category") {
  const auto r = invoke({"verify-tgi", "--n", "9"});
  CHECK(r.code == cli::kExitDomain);
  CHECK(nlohmann::json::parse(r.err).at("error") == "range");
}

TEST_CASE("mayer on hard rods") {
  const auto r = invoke({"mayer", "--potential", dataPath("hardrod.json"), "--n", "3", "--method", "exact1d"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string config, header, row;
  std::getline(lines, config);
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(config.rfind("# run_config: ", 0) == 0);
  CHECK(header == "n,value,std_error,method,box_side,samples");
  CHECK(row.rfind("3,1.5", 0) == 0);
}

TEST_CASE("verify-tgi passes every trial") {
  const auto r = invoke({"verify-tgi", "--n", "3", "--trials", "100", "--seed", "7"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("passes") == 100);
  CHECK(j.at("tolerance") == 1e-6);
  CHECK(j.at("run_config").at("seed") == 7);
}

TEST_CASE("bounds json and csv sweep") {
  const auto r = invoke({"bounds", "--potential", dataPath("morse6.json"), "--beta", "1.0", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("inputs").at("B") == 38.65);
  CHECK(j.at("recomputation_check") == true);
  CHECK(j.at("ratios").size() == 2);

  const auto s = invoke({"bounds", "--potential", dataPath("squarewell.json"), "--beta-sweep", "0.1:1:4:log",
                         "--format", "csv"});
  REQUIRE(s.code == 0);
  std::istringstream lines(s.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 6);
  CHECK(s.out.find("beta,penrose_ruelle,brydges_federbush,penrose,ruelle") != std::string::npos);
}

TEST_CASE("stability json layout") {
  const auto r = invoke({"stability", "--potential", dataPath("squarewell.json"), "--n", "4", "--trials", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"lower_bound", "upper_bound", "witness", "n_max", "restarts", "seed"}) CHECK(j.contains(key));
}

TEST_CASE("integrals csv") {
  const auto r = invoke({"integrals", "--potential", dataPath("squarewell.json"), "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("1,54.57144484956") != std::string::npos);
}

TEST_CASE("beta sweep parsing") {
  CHECK(cli::parseBetaSweep("1:3:3") == std::vector<double>{1.0, 2.0, 3.0});
  const auto logs = cli::parseBetaSweep("0.1:10:3:log");
  CHECK(logs[1] == doctest::Approx(1.0));
  CHECK(cli::parseBetaSweep("2:5:1") == std::vector<double>{2.0});
  CHECK_THROWS(cli::parseBetaSweep("0:1:3"));
  CHECK_THROWS(cli::parseBetaSweep("1:2:0"));
  CHECK_THROWS(cli::parseBetaSweep("1:2:3:cubic"));
}

TEST_CASE("seventeen significant digits") {
  CHECK(cli::formatReal(0.1) == "0.10000000000000001");
  CHECK(cli::formatReal(1.5) == "1.5");
}

TEST_CASE("environment overrides the worker flag") {
  ::setenv("CLUSTER_RADIUS_WORKERS", "3", 1);
  CHECK(resolveWorkers(1) == 3);
  ::unsetenv("CLUSTER_RADIUS_WORKERS");
  CHECK(resolveWorkers(2) == 2);
}

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mollify/cli.hpp"

using namespace mollify;
using namespace mollify::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mollify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("proportion for the preset") {
  const auto r = invoke({"proportion", "--preset", "paper"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["proportion"] == "23763/69665");
  CHECK(j["decimal"]["proportion"].get<double>() == doctest::Approx(0.341103).epsilon(1e-6));
  CHECK(j["s1_main"] == "89/80");
  CHECK(parse_rational(j["lambda"].get<std::string>()) == parse_rational("69665/19200"));
  CHECK(j["spec"]["P"] == nlohmann::json({"21/20", "-1/20"}));
  // the preset sits on the boundary of the proven range: warn, do not fail
  CHECK(r.err.find("warning:") != std::string::npos);
  CHECK(j["warnings"].size() == 1);
}

TEST_CASE("optimize reproduces the single-piece optimum") {
  const auto r = invoke({"optimize", "--dp", "1", "--dq", "0", "--theta1", "1/2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["proportion"] == "1/3");
  CHECK(j["Q"].empty());
  CHECK(j["model"]["positive_semidefinite"] == true);
}

TEST_CASE("census csv") {
  const auto r = invoke({"census", "--q", "5"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "q,total,nonzero,min_abs_L,s1_emp,s1_pred,s2_emp,s2_pred,dev1,dev2");
  CHECK(row.rfind("5,1,1,", 0) == 0);
}

TEST_CASE("validation failures exit with 2") {
  CHECK(invoke({"proportion", "--P", "1", "--P-const", "1"}).code == kExitValidation);
  CHECK(invoke({"proportion", "--theta1", "1/4", "--theta2", "1/2"}).code == kExitValidation);
  CHECK(invoke({"proportion", "--theta1", "abc"}).code == kExitValidation);
  CHECK(invoke({"frobnicate"}).code == kExitValidation);
  CHECK(invoke({"proportion", "--preset", "paper", "--P", "1"}).code == kExitValidation);
  CHECK(invoke({"proportion", "--P", "0", "--Q", ""}).code == kExitValidation);  // zero mollifier
  CHECK(invoke({"shifted", "--q", "101", "--alpha", "5"}).code == kExitValidation);
  CHECK(invoke({"proportion", "--format", "xml"}).code == kExitValidation);
  const auto r = invoke({});
  CHECK(r.code == kExitValidation);
}

TEST_CASE("valid specs from flags") {
  auto r = invoke({"proportion", "--P", "1", "--Q", ""});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["proportion"] == "1/3");
  r = invoke({"proportion", "--theta1", "1/4", "--P", "1"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["proportion"] == "1/5");
  r = invoke({"proportion", "--theta1", "0.4", "--theta2", "1/5", "--P", "1", "--Q", "1/2,-1/3"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["warnings"].empty());
}

TEST_CASE("capacity and accuracy exit codes") {
  setenv("MOLLIFY_MAX_Q", "1000", 1);
  CHECK(invoke({"census", "--q", "1009"}).code == kExitCapacity);
  unsetenv("MOLLIFY_MAX_Q");
  CHECK(invoke({"census", "--q", "1009"}).code == 0);
  CHECK(invoke({"shifted", "--alpha", "0.2", "--nodes", "4", "--nodes-high", "2"}).code == kExitAccuracy);
}

TEST_CASE("reports round-trip and are reproducible") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"proportion", "--preset", "paper"},
           {"optimize", "--dp", "2", "--dq", "1"},
           {"moments", "--theta1", "2/5", "--theta2", "1/5", "--P", "1,-1/7", "--Q", "3/2", "--alpha", "0.1", "--beta", "-0.05"},
           {"empirical", "--q", "101,211", "--theta1", "1/4", "--theta2", "1/4"},
           {"oracles", "--q", "13", "--seed", "9", "--log-y", "8"},
           {"kernels", "--x", "0.5,2"}}) {
    const auto first = invoke(args);
    REQUIRE(first.code == 0);
    const auto again = invoke(args);
    CHECK(first.out == again.out);
    const auto j = nlohmann::ordered_json::parse(first.out);
    const auto config = config_from_json(j["config"]);
    CHECK(config_to_json(config).dump() == j["config"].dump());
    std::ostringstream out, err;
    REQUIRE(dispatch(config, out, err) == 0);
    CHECK(out.str() == first.out);
    if (j.contains("proportion")) {
      const auto text = j["proportion"].get<std::string>();
      CHECK(format_rational(parse_rational(text)) == text);
    }
  }
}

TEST_CASE("report formats and output file") {
  const auto path = std::filesystem::temp_directory_path() / "mollify_cli_test.csv";
  CHECK(invoke({"scan", "--max-dp", "2", "--max-dq", "1", "--out", path.string()}).code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "dP,dQ,proportion_exact,proportion_decimal,coeffs");
  std::filesystem::remove(path);
  const auto text = invoke({"proportion", "--preset", "is-baseline", "--format", "text"});
  CHECK(text.out.find("proportion = 1/3\n") != std::string::npos);
  const auto csv = invoke({"shifted", "--format", "csv", "--check-fd", "--alpha", "0.05"});
  CHECK(csv.out.rfind("q,alpha,beta,I,J1,J2,J1_fd,J2_fd\n10007,0.05,0.05,", 0) == 0);
}

#include <sstream>

#include "crc/cli.hpp"
#include "crc/errors.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace crc;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "crcverify");
  std::ostringstream help, out, err;
  auto config = parse_args(static_cast<int>(args.size()), args.data(), help);
  if (!config) return {0, help.str(), ""};
  int code = run(*config, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("all runs at least twelve named checks and passes") {
  auto r = invoke({"all", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "all");
  CHECK(j["passed"] == true);
  REQUIRE(j["checks"].size() >= 12);
  std::set<std::string> names;
  for (const auto& c : j["checks"]) {
    CHECK(c["passed"] == true);
    CHECK_FALSE(c["anchor"].get<std::string>().empty());
    names.insert(c["name"].get<std::string>());
  }
  CHECK(names.size() == j["checks"].size());
  CHECK(invoke({"all", "--format", "json"}).out == r.out);
}

TEST_CASE("orbifold table as printed") {
  auto r = invoke({"tables", "--space", "X"});
  CHECK(r.code == 0);
  for (const char* line : {"S1*S1 = S3 + 2*q\n", "S2*S2 = 2/3*S3 + 2*q\n", "S4*S4 = 1/3*q*S3 + q^2\n",
                           "S5*S5 = 12*q^2*S3\n"})
    CHECK(r.out.find(line) != std::string::npos);
  auto y = invoke({"tables", "--space", "Y", "--q1", "-1"});
  CHECK(y.out.find("T1*T1 = 10*T3 - 3*T4\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto r = invoke({"wdvv", "--space", "Y", "--max-beta", "9,9"});
  CHECK(r.code == 2);
  CHECK(r.err.find("(9,9)") != std::string::npos);
  CHECK(invoke({"wdvv", "--space", "Y", "--max-beta", "2,2"}).code == 0);
  CHECK(invoke({"wdvv", "--max-beta", "2,2"}).code == 2);
  CHECK(invoke({"wdvv", "--space", "X", "--max-beta", "2,2"}).code == 2);
  CHECK(invoke({"tables", "--space", "X", "--q1", "-1"}).code == 2);
  CHECK_THROWS_AS(invoke({"--unknown"}), ConfigError);
  CHECK_THROWS_AS(invoke({"crc", "--order", "0"}), ConfigError);
  CHECK_THROWS_AS(invoke({"tables", "--space", "Z"}), ConfigError);
  CHECK(invoke({"--help"}).out.find("--max-beta") != std::string::npos);
}

TEST_CASE("crc json report") {
  auto r = invoke({"crc", "--order", "15", "--report", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"isomorphism\":true,\"potential_residual_terms\":0,\"tan_order\":15}\n");
}

TEST_CASE("recursion extends the resolution range") {
  CHECK(invoke({"wdvv", "--recursion", "--n-max", "20"}).code == 0);
  CHECK(invoke({"wdvv", "--recursion", "--check-all", "--space", "Y", "--max-beta", "8,3", "--n-max", "8"}).code == 0);
}

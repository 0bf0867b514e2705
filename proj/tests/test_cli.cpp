#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cli.hpp"
#include "document.hpp"

using namespace splq;
using nlohmann::json;

namespace {

struct outcome {
  int code;
  std::string out, err;
};

outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("fixtures pass") {
  for (std::string name : {"5.1", "9.1"}) {
    const auto r = call({"--fixture", name});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("fixture").at("pass").get<bool>());
    CHECK(j.at("fixture").at("max_relative_error").get<double>() <= 1e-12);
  }
}

TEST_CASE("one node per subinterval on [-1, 1] is Gauss-Legendre") {
  const auto r = call({"--continuity", "1", "--nodes", "1", "--lengths", "2", "--interval", "-1", "1", "--middle", "1"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  const auto& nodes = j.at("rule").at("nodes");
  REQUIRE(nodes.size() == 2);
  const double g = 1.0 / std::sqrt(3.0);
  CHECK(nodes[0].at("x").get<double>() == doctest::Approx(-g).epsilon(1e-15));
  CHECK(nodes[1].at("x").get<double>() == doctest::Approx(g).epsilon(1e-15));
  CHECK(nodes[0].at("w").get<double>() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(nodes[1].at("w").get<double>() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pinned half rule with verification") {
  const auto r = call({"--family", "half", "--continuity", "0", "--nodes", "2", "--lengths", "1,2,3,1,1,1", "--interval",
                       "0", "9", "--middle", "3", "--free", "pin=3.0", "--verify"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("verification").at("max_residual").get<double>() <= 1e-10);
  CHECK(j.at("rule").at("free_value").get<double>() == doctest::Approx(-1.0 / 6.0).epsilon(1e-13));
  const auto& nodes = j.at("rule").at("nodes");
  REQUIRE(nodes.size() == 10);
  CHECK(nodes[3].at("x").get<double>() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(nodes[3].at("w").get<double>() == doctest::Approx(5.0 / 6.0).epsilon(1e-13));
}

TEST_CASE("csv output") {
  const auto r = call({"--fixture", "5.1", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "subinterval,x,w");
  int rows = 0;
  double prev = -INFINITY;
  while (std::getline(in, line)) {
    const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
    const double x = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    CHECK(x > prev);
    prev = x;
    ++rows;
  }
  CHECK(rows == 7);
}

TEST_CASE("middle defaults to a central subinterval") {
  const auto r = call({"--continuity", "1", "--nodes", "1", "--lengths", "1,2,3,1,1,1"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  const int m = j.at("request").at("middle").get<int>();
  CHECK((m == 3 || m == 4));
}

TEST_CASE("real-line rules") {
  const auto r = call({"--realline", "c1", "--n", "2"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("realline").at("weights")[0].get<double>() == doctest::Approx(14.0 / 15.0));
  CHECK(call({"--realline", "c1", "--n", "1"}).code == 2);
}

TEST_CASE("bad input exits with 2 and names the flag") {
  auto r = call({"--continuity", "2", "--lengths", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--continuity") != std::string::npos);
  r = call({"--lengths", "1,x,2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--lengths") != std::string::npos);
  r = call({"--lengths", "1,2", "--free", "omega=2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--free") != std::string::npos);
  CHECK(call({"--lengths", "1,-2"}).code == 2);
  CHECK(call({"--lengths", "1,2,3", "--interval", "0", "7"}).code == 2);
  CHECK(call({"--lengths", "1,1", "--family", "half", "--nodes", "2", "--middle", "2"}).code == 2);
  CHECK(call({"--lengths", "1,1,1", "--middle", "5"}).code == 2);
  CHECK(call({"--fixture", "7.3"}).code == 2);
  CHECK(call({"--bogus"}).code == 2);
  CHECK(call({}).code == 2);
}

TEST_CASE("numeric failures exit with 3 and name the subinterval") {
  auto r = call({"--continuity", "1", "--nodes", "2", "--lengths", "1,1,1,1,1,1", "--middle", "1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("subinterval") != std::string::npos);
  r = call({"--continuity", "0", "--nodes", "2", "--lengths", "1,1,1,1,1", "--middle", "3", "--free", "pin=50"});
  CHECK(r.code == 3);
}

TEST_CASE("json documents round-trip") {
  const auto r = call({"--family", "half", "--continuity", "0", "--nodes", "2", "--lengths", "1,2,3,1,1,1", "--middle",
                       "3", "--free", "pin=3.0", "--verify"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  const auto doc = cli::from_json(j);
  CHECK(cli::to_json(doc) == j);
  REQUIRE(doc.rule.flat.size() == 10);
  const auto again = cli::from_json(json::parse(cli::to_json(doc).dump()));
  for (size_t i = 0; i < doc.rule.flat.size(); ++i) {
    CHECK(again.rule.flat[i].x == doc.rule.flat[i].x);
    CHECK(again.rule.flat[i].w == doc.rule.flat[i].w);
  }
  CHECK(*again.rule.meta.free_value == *doc.rule.meta.free_value);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--continuity", "0", "--nodes", "3", "--lengths", "0.5,1,2,1"};
  CHECK(call(args).out == call(args).out);
}

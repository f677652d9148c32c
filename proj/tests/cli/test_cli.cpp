#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "nhodge_cli/app.hpp"

using nhodge::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kA = {"--ambient", "torus", "--n", "1", "--expr", "1 - t*x1^3"};
const std::vector<std::string> kB = {"--ambient", "affine", "--n", "1", "--expr", "x1^2 - t"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

// One document per command; NHODGE_UPDATE_GOLDEN=1 rewrites the files.
void check_golden(const std::string& name, const std::vector<std::string>& input) {
  Json actual;
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"analyze"}, {"hodge"}, {"jordan", "--all"}, {"multiplicity"}}) {
    Result r = call(with(cmd, input));
    REQUIRE(r.code == 0);
    actual[cmd.front()] = r.json();
  }
  const std::string path = std::string(NHODGE_GOLDEN_DIR) + "/" + name + ".json";
  if (const char* update = std::getenv("NHODGE_UPDATE_GOLDEN"); update && std::string(update) == "1") {
    std::ofstream(path) << actual.dump(2) << "\n";
  }
  std::ifstream in(path);
  REQUIRE(in.good());
  const Json expected = Json::parse(in);
  CHECK(expected == actual);
}

}  // namespace

TEST_CASE("golden instance A") {
  Json a = call(with({"analyze"}, kA)).json();
  CHECK(a["schema_version"] == 1);
  CHECK(a["bad_orders"] == Json::array({1}));
  CHECK(a["spectrum"] == Json::array({"0/1", "1/3", "2/3"}));
  std::vector<int> m;
  for (const auto& c : a["newton"]["cells"]) m.push_back(c["m"].get<int>());
  CHECK(m == std::vector<int>{1, 1, 3});

  Result j = call(with({"jordan", "--lambda", "1/3"}, kA));
  REQUIRE(j.code == 0);
  const Json t = j.json()["jordan"]["1/3"];
  CHECK(t["via_E"] == Json::array({1}));
  CHECK(t["via_formula"] == Json::array({1}));
  CHECK(t["agree"] == true);
  CHECK(call(with({"multiplicity"}, kA)).json()["multiplicity"]["product"] == "(t^3-1)^1");
  check_golden("instance_a", kA);
}

TEST_CASE("golden instance B") {
  Json a = call(with({"analyze"}, kB)).json();
  CHECK(a["newton"]["infinity_faces"] == Json::parse("[[[2]]]"));
  CHECK(a["bad_orders"] == Json::array({1}));
  CHECK(a["predicates"]["convenient"] == true);
  Json j = call(with({"jordan", "--lambda", "1/2"}, kB)).json()["jordan"]["1/2"];
  CHECK(j["via_E"] == Json::array({1}));
  CHECK(j["agree"] == true);
  CHECK(call(with({"multiplicity"}, kB)).json()["multiplicity"]["product"] == "(t^2-1)^1");
  check_golden("instance_b", kB);
}

TEST_CASE("exit codes") {
  using namespace nhodge::cli;
  CHECK(call({"analyze", "--ambient", "affine", "--n", "1", "--expr", "x1^-1"}).code == BadInput);
  CHECK(call({"analyze", "--n", "1", "--expr", "1 + + x1"}).code == BadInput);
  CHECK(call({"analyze", "--n", "1", "--expr", "1 + y"}).code == BadInput);
  CHECK(call({"analyze", "--n", "1", "--expr", "x1"}).code == Degenerate);
  CHECK(call({"analyze", "--n", "2", "--expr", "1 + x1 + x1^2*t"}).code == Degenerate);
  CHECK(call(with({"jordan", "--lambda", "0/1"}, kA)).code == BadLambda);
  CHECK(call(with({"hodge", "--lambda", "0/1"}, kA)).code == BadLambda);

  CHECK(call({}).code == Usage);
  CHECK(call({"frobnicate"}).code == Usage);
  CHECK(call({"analyze", "--expr", "1 + x1"}).code == Usage);  // text needs --n
  CHECK(call({"analyze", "--n", "1", "--poly", "/nonexistent/poly.txt"}).code == Usage);
  CHECK(call(with({"jordan"}, kA)).code == Usage);
  CHECK(call(with({"jordan", "--lambda", "2/6"}, kA)).code == Usage);
  CHECK(call(with({"jordan", "--lambda", "0.5"}, kA)).code == Usage);
  CHECK(call(with({"jordan", "--lambda", "1/3", "--all"}, kA)).code == Usage);
  CHECK(call(with({"hodge", "--refined"}, kB)).code == Usage);
  CHECK(call({"--help"}).code == Ok);
}

TEST_CASE("stderr names the violated assumption") {
  Result r = call(with({"jordan", "--lambda", "0/1"}, kA));
  CHECK(r.out.empty());
  CHECK(r.err.rfind("nhodge: E_BAD_LAMBDA: λ ∈ R_f: ", 0) == 0);
  r = call({"analyze", "--n", "1", "--expr", "x1"});
  CHECK(r.err.find("the Newton polytope must be n-dimensional") != std::string::npos);
}

TEST_CASE("bad eigenvalues are skipped with a warning under --all") {
  Result r = call(with({"jordan", "--all"}, kA));
  REQUIRE(r.code == 0);
  CHECK(r.json()["skipped"] == Json::array({"0/1"}));
  CHECK(r.err.find("warning: skipping 0/1") != std::string::npos);
  CHECK(r.json()["jordan"].size() == 2);
}

TEST_CASE("refined E covers bad eigenvalues on the torus") {
  Result r = call(with({"hodge", "--refined"}, kA));
  REQUIRE(r.code == 0);
  CHECK(r.json()["hodge"].size() == 3);
  CHECK(r.json()["hodge"]["0/1"]["lambda"] == "0/1");
}

TEST_CASE("json round-trips and coefficients stay exact") {
  const std::vector<std::string> f = {"--n", "2", "--expr", "t^2 + x1^2 + x2^2 + t*x1^-1*x2^-1"};
  Result r = call(with({"hodge"}, f));
  REQUIRE(r.code == 0);
  const Json doc = r.json();
  CHECK(Json::parse(doc.dump()) == doc);
  for (const auto& [lam, h] : doc["hodge"].items())
    for (const auto& term : h["E_uvw"]["terms"]) CHECK(term["coeff"].is_string());
}

TEST_CASE("complete intersections and file input") {
  const std::string path = "nhodge_cli_test_g.txt";
  std::ofstream(path) << "x1 + t^2*x2 + t";
  Result r = call({"jordan", "--all", "--n", "2", "--expr", "t^2 + x1^2 + x2^2 + t*x1^-1*x2^-1", "--ci", path});
  CHECK(r.code == 0);
  CHECK(r.json()["input"]["k"] == 2);
  for (const auto& [lam, t] : r.json()["jordan"].items()) CHECK(t["agree"] == true);
  Json a = call({"analyze", "--n", "2", "--expr", "1 + x1 + x2", "--ci", path}).json();
  CHECK(a["newton"].contains("minkowski"));
  std::remove(path.c_str());
}

TEST_CASE("selfcheck") {
  Result r = call({"selfcheck", "--seed", "5", "--count", "4"});
  CHECK(r.code == 0);
  CHECK(r.json()["consistency"]["failed"] == 0);
  CHECK(r.json()["consistency"]["passed"].get<int>() > 0);
  CHECK(call(with({"selfcheck"}, kA)).code == 0);
}

TEST_CASE("table output") {
  Result r = call(with({"multiplicity", "--output", "table"}, kB));
  CHECK(r.code == 0);
  CHECK(r.out.find("product: (t^2-1)^1") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "steklov/steklov.h"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kPath2 = R"({
  "vertices":[{"id":"v0","boundary":true},{"id":"v1"},{"id":"v2","boundary":true}],
  "edges":[{"u":"v0","v":"v1"},{"u":"v1","v":"v2"}]})";

struct Str {
  char* s = nullptr;
  ~Str() { stk_string_free(s); }
};

}  // namespace

TEST_CASE("graph round trip through the C surface") {
  stk_graph* g = nullptr;
  REQUIRE(stk_graph_from_json(kPath2, &g) == STK_OK);
  Str out;
  REQUIRE(stk_graph_to_json(g, &out.s) == STK_OK);
  auto j = ordered_json::parse(out.s);
  CHECK(j["vertices"].size() == 3);
  CHECK(j["edges"].size() == 2);

  stk_graph* again = nullptr;
  REQUIRE(stk_graph_from_json(out.s, &again) == STK_OK);
  Str out2;
  REQUIRE(stk_graph_to_json(again, &out2.s) == STK_OK);
  CHECK(std::strcmp(out.s, out2.s) == 0);
  stk_graph_free(g);
  stk_graph_free(again);
}

TEST_CASE("error codes and thread-local messages") {
  stk_graph* g = nullptr;
  CHECK(stk_graph_from_json("not json", &g) == STK_ERR_PARSE);
  CHECK(std::string(stk_last_error()).find("ParseError") != std::string::npos);

  CHECK(stk_graph_from_json(R"({"vertices":[{"id":"a"},{"id":"a"}],"edges":[]})", &g) ==
        STK_ERR_INVALID);

  // Interior component with no route to the boundary.
  const char* island = R"({
    "vertices":[{"id":"b","boundary":true},{"id":"x"},{"id":"y"},{"id":"z"}],
    "edges":[{"u":"b","v":"x"},{"u":"y","v":"z"}]})";
  REQUIRE(stk_graph_from_json(island, &g) == STK_OK);
  Str report;
  CHECK(stk_spectrum_report(g, "", nullptr, &report.s) == STK_ERR_SINGULAR);
  stk_graph_free(g);

  CHECK(stk_graph_from_json(nullptr, &g) == STK_ERR_PARSE);
}

TEST_CASE("spectrum report and lambda1") {
  stk_graph* g = nullptr;
  REQUIRE(stk_graph_from_json(kPath2, &g) == STK_OK);
  stk_tolerances tol;
  stk_default_tolerances(&tol);
  CHECK(tol.eig_group_rel == 1e-7);
  CHECK(tol.zero_abs == 1e-8);
  CHECK(tol.compare_abs == 1e-8);

  Str report;
  REQUIRE(stk_spectrum_report(g, "", &tol, &report.s) == STK_OK);
  auto j = ordered_json::parse(report.s);
  REQUIRE(j["sigma"].size() == 2);
  CHECK(j["sigma"][0].get<double>() == doctest::Approx(0.0));
  CHECK(j["sigma"][1].get<double>() == doctest::Approx(1.0));  // 2/l with l = 2
  CHECK(j["tolerances"]["zero_abs"] == 1e-8);

  double lam = 0.0;
  REQUIRE(stk_lambda1(g, "v1", &lam) == STK_OK);
  CHECK(lam == doctest::Approx(1.0));
  CHECK(stk_lambda1(g, "nope", &lam) == STK_ERR_INVALID);
  stk_graph_free(g);
}

TEST_CASE("families via the C surface") {
  Str graph_json, oracle_json;
  REQUIRE(stk_family("regular-star", R"({"r":3,"l":2})", &graph_json.s, &oracle_json.s) ==
          STK_OK);
  auto oracle = ordered_json::parse(oracle_json.s);
  REQUIRE(oracle["sigma"].size() == 3);
  CHECK(oracle["sigma"][1].get<double>() == doctest::Approx(0.5));

  stk_graph* g = nullptr;
  REQUIRE(stk_graph_from_json(graph_json.s, &g) == STK_OK);
  Str report;
  REQUIRE(stk_spectrum_report(g, "", nullptr, &report.s) == STK_OK);
  auto spec = ordered_json::parse(report.s);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(spec["sigma"][i].get<double>() ==
          doctest::Approx(oracle["sigma"][i].get<double>()).epsilon(1e-8));
  }
  stk_graph_free(g);

  CHECK(stk_family("star", R"({"arms":[1,2,3]})", nullptr, nullptr) == STK_OK);
  CHECK(stk_family("klein-bottle", "{}", nullptr, nullptr) == STK_ERR_INVALID);
  CHECK(stk_family("comb", R"({"r":2})", nullptr, nullptr) == STK_ERR_INVALID);
}

TEST_CASE("verify and fuzz via the C surface") {
  Str star_json;
  REQUIRE(stk_family("regular-star", R"({"r":3,"l":2})", &star_json.s, nullptr) == STK_OK);
  ordered_json request = {{"graph", ordered_json::parse(star_json.s)}, {"z", "o"}};
  Str report;
  int verdict = -1;
  REQUIRE(stk_verify("wedge", request.dump().c_str(), nullptr, &report.s, &verdict) == STK_OK);
  CHECK(verdict == 0);
  CHECK(ordered_json::parse(report.s)["verdict"] == "pass");

  CHECK(stk_verify("nonsense", "{}", nullptr, nullptr, &verdict) == STK_ERR_INVALID);
  CHECK(stk_verify("wedge", "{}", nullptr, nullptr, &verdict) == STK_ERR_PARSE);

  Str fuzz_report;
  int violations = -1;
  REQUIRE(stk_fuzz(R"({"trials":10,"seed":7})", nullptr, &fuzz_report.s, &violations) ==
          STK_OK);
  CHECK(violations == 0);
  auto fj = ordered_json::parse(fuzz_report.s);
  CHECK(fj["verdict"] == "pass");
  CHECK(fj["config"]["seed"] == 7);
}

// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include "lefschetz_lab/lefschetz_lab.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  llab_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(llab_version()).size() > 0);
  CHECK(std::string(llab_status_name(LLAB_EXCLUDED)) == "excluded");
}

TEST_CASE("parse, print and free") {
  llab_poly* p = nullptr;
  REQUIRE(llab_poly_parse("x0*u1^3*u2 + x1*u1*u2^3 + x0^3*x1^2", "x0,x1,u1,u2", 2, &p) == LLAB_OK);
  char* s = nullptr;
  REQUIRE(llab_poly_to_string(p, &s) == LLAB_OK);
  CHECK(take(s) == "x0^3*x1^2 + x0*u1^3*u2 + x1*u1*u2^3");
  unsigned d = 0;
  CHECK(llab_poly_degree(p, &d) == LLAB_OK);
  CHECK(d == 5);
  llab_poly_free(p);
}

TEST_CASE("variables are inferred in order of appearance") {
  llab_poly* p = nullptr;
  REQUIRE(llab_poly_parse("y^2 + x*y", nullptr, -1, &p) == LLAB_OK);
  uint64_t h[8];
  unsigned len = 0;
  REQUIRE(llab_hilbert(p, h, 8, &len) == LLAB_OK);
  CHECK(len == 3);
  CHECK(h[1] == 2);
  llab_poly_free(p);
}

TEST_CASE("errors map to status codes and messages") {
  llab_poly* p = nullptr;
  CHECK(llab_poly_parse("x^", "x", -1, &p) == LLAB_PARSE);
  CHECK(p == nullptr);
  CHECK(std::string(llab_last_error()).find("position") != std::string::npos);
  CHECK(llab_poly_parse("x", "x", 5, &p) == LLAB_INVALID_ARGUMENT);
  CHECK(llab_poly_parse(nullptr, "x", -1, &p) == LLAB_INVALID_ARGUMENT);
  char* out = nullptr;
  CHECK(llab_generate(R"({"family":"thmwlp","n":3,"d":6})", &out) == LLAB_EXCLUDED);
  CHECK(llab_generate(R"({"family":"permutti","m":2,"n":2,"e":2,"d":4})", &out) == LLAB_INFEASIBLE);
  CHECK(llab_generate(R"({"family":"gn","m":2,"n":2,"r":1,"e":2,"d":3})", &out) == LLAB_DEGENERATE);
  CHECK(llab_generate("{not json", &out) == LLAB_INVALID_ARGUMENT);
  CHECK(out == nullptr);
}

TEST_CASE("hessian vanishing through the C API") {
  llab_poly* p = nullptr;
  REQUIRE(llab_poly_parse("x*u^2 + y*u*v + z*v^2", "x,y,z,u,v", 3, &p) == LLAB_OK);
  int v = -1;
  CHECK(llab_hessian_vanishes(p, 1, LLAB_MODE_EXACT, 0, &v) == LLAB_OK);
  CHECK(v == 1);
  CHECK(llab_hessian_vanishes(p, 0, LLAB_MODE_PROBABILISTIC, 0, &v) == LLAB_OK);
  CHECK(v == 0);
  llab_poly_free(p);
}

TEST_CASE("analyze returns JSON and a summary") {
  llab_poly* p = nullptr;
  REQUIRE(llab_poly_parse("x^3 + y^3", "x,y", -1, &p) == LLAB_OK);
  char* js = nullptr;
  char* sum = nullptr;
  REQUIRE(llab_analyze(p, R"({"seed":3})", &js, &sum) == LLAB_OK);
  const auto j = nlohmann::json::parse(take(js));
  CHECK(j["slp"]["verdict"] == "holds");
  CHECK(j["seed"] == 3);
  CHECK(take(sum).find("SLP: holds") != std::string::npos);
  CHECK(llab_analyze(p, R"({"mode":"slow"})", &js, nullptr) == LLAB_INVALID_ARGUMENT);
  llab_poly_free(p);
}

TEST_CASE("generate returns the instance") {
  char* out = nullptr;
  REQUIRE(llab_generate(R"({"family":"gnp","m":2,"n":2,"k":1,"e":2})", &out) == LLAB_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["polynomial"] == "x*u^2 + y*u*v + z*v^2");
  llab_poly* p = nullptr;
  REQUIRE(llab_generate_poly(R"({"family":"ikeda"})", &p) == LLAB_OK);
  unsigned d = 0;
  CHECK(llab_poly_degree(p, &d) == LLAB_OK);
  CHECK(d == 5);
  llab_poly_free(p);
}

TEST_CASE("reproduce") {
  int all = -1;
  char* table = nullptr;
  REQUIRE(llab_reproduce(nullptr, nullptr, &table, &all) == LLAB_OK);
  CHECK(take(table).find("PASS ikeda") != std::string::npos);
  CHECK(llab_reproduce(R"({"suite":"other"})", nullptr, nullptr, &all) == LLAB_INVALID_ARGUMENT);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "fgb.h"

namespace {
std::string take(char* s) {
  std::string out = s ? s : "";
  fgb_string_free(s);
  return out;
}
}  // namespace

TEST_CASE("word handles") {
  fgb_word* x = nullptr;
  fgb_word* y = nullptr;
  REQUIRE(fgb_word_parse(2, "ab", &x) == FGB_OK);
  REQUIRE(fgb_word_parse(2, "Ba", &y) == FGB_OK);
  CHECK(fgb_word_length(x) == 2);

  fgb_word* prod = nullptr;
  REQUIRE(fgb_word_multiply(x, y, &prod) == FGB_OK);
  char* text = nullptr;
  REQUIRE(fgb_word_format(prod, &text) == FGB_OK);
  CHECK(take(text) == "aa");

  fgb_word* inv = nullptr;
  REQUIRE(fgb_word_inverse(x, &inv) == FGB_OK);
  REQUIRE(fgb_word_format(inv, &text) == FGB_OK);
  CHECK(take(text) == "BA");

  long long gp = -1;
  fgb_word* base = nullptr;
  REQUIRE(fgb_word_parse(2, "1", &base) == FGB_OK);
  REQUIRE(fgb_gromov_product(x, prod, base, &gp) == FGB_OK);
  CHECK(gp == 1);

  fgb_word_free(x);
  fgb_word_free(y);
  fgb_word_free(prod);
  fgb_word_free(inv);
  fgb_word_free(base);
}

TEST_CASE("parse failures set errors") {
  fgb_word* w = nullptr;
  CHECK(fgb_word_parse(2, "aA", &w) == FGB_ERR_PARSE);
  CHECK(std::string(fgb_last_error()).find("reduced") != std::string::npos);
  CHECK(fgb_word_parse(2, "c", &w) == FGB_ERR_PARSE);
  CHECK(fgb_word_parse(1, "a", &w) == FGB_ERR_PARSE);  // rank rejected
  CHECK(fgb_word_parse(2, nullptr, &w) == FGB_ERR_ARGUMENT);

  fgb_point* p = nullptr;
  CHECK(fgb_point_parse(2, "a", &p) == FGB_ERR_PARSE);
  CHECK(fgb_point_parse(2, "a|Ab", &p) == FGB_ERR_PARSE);
}

TEST_CASE("rank mismatch is reported") {
  fgb_word* x = nullptr;
  fgb_word* y = nullptr;
  REQUIRE(fgb_word_parse(2, "a", &x) == FGB_OK);
  REQUIRE(fgb_word_parse(3, "c", &y) == FGB_OK);
  fgb_word* out = nullptr;
  CHECK(fgb_word_multiply(x, y, &out) == FGB_ERR_ARGUMENT);
  CHECK(std::string(fgb_last_error()).find("rank") != std::string::npos);
  fgb_word_free(x);
  fgb_word_free(y);
}

TEST_CASE("points and the action") {
  fgb_word* g = nullptr;
  fgb_point* x = nullptr;
  REQUIRE(fgb_word_parse(2, "a", &g) == FGB_OK);
  REQUIRE(fgb_point_parse(2, "A|b", &x) == FGB_OK);

  fgb_point* moved = nullptr;
  REQUIRE(fgb_act(g, x, &moved) == FGB_OK);
  char* text = nullptr;
  REQUIRE(fgb_point_format(moved, &text) == FGB_OK);
  CHECK(take(text) == "1|b");

  fgb_point* lim = nullptr;
  REQUIRE(fgb_limit_point(g, -1, &lim) == FGB_OK);
  REQUIRE(fgb_point_format(lim, &text) == FGB_OK);
  CHECK(take(text) == "1|A");

  int fixed = -1;
  REQUIRE(fgb_is_fixed(g, lim, &fixed) == FGB_OK);
  CHECK(fixed == 1);

  fgb_word* prefix = nullptr;
  REQUIRE(fgb_point_prefix(moved, 3, &prefix) == FGB_OK);
  REQUIRE(fgb_word_format(prefix, &text) == FGB_OK);
  CHECK(take(text) == "bbb");

  int rel = -1;
  REQUIRE(fgb_related(2, "1|a", "1|A", "a", &rel) == FGB_OK);
  CHECK(rel == 1);
  REQUIRE(fgb_related(2, "1|a", "1|b", "a", &rel) == FGB_OK);
  CHECK(rel == 0);

  fgb_word_free(g);
  fgb_word_free(prefix);
  fgb_point_free(x);
  fgb_point_free(moved);
  fgb_point_free(lim);
}

TEST_CASE("cylinder functions through the C API") {
  fgb_word* a = nullptr;
  REQUIRE(fgb_word_parse(2, "a", &a) == FGB_OK);
  fgb_levelfn* q = nullptr;
  REQUIRE(fgb_cylinder_q(a, &q) == FGB_OK);

  fgb_point* x = nullptr;
  REQUIRE(fgb_point_parse(2, "1|A", &x) == FGB_OK);
  long long value = -1;
  REQUIRE(fgb_levelfn_evaluate(q, x, &value) == FGB_OK);
  CHECK(value == 1);

  fgb_levelfn* shifted = nullptr;
  REQUIRE(fgb_levelfn_translate(a, q, &shifted) == FGB_OK);
  char* json = nullptr;
  REQUIRE(fgb_levelfn_to_json(q, &json) == FGB_OK);
  CHECK(take(json).find("\"level\":1") != std::string::npos);

  fgb_levelfn_free(q);
  fgb_levelfn_free(shifted);
  fgb_word_free(a);
  fgb_point_free(x);
}

TEST_CASE("command layer") {
  char* report = nullptr;
  REQUIRE(fgb_run_kgroup(R"({"d":2,"relation":"S","max_level":4})", &report) ==
          FGB_OK);
  std::string text = take(report);
  CHECK(text.find("\"stabilized\":true") != std::string::npos);
  CHECK(text.find("\"unit\":[1,1]") != std::string::npos);

  report = nullptr;
  CHECK(fgb_run_kgroup(R"({"d":2,"relation":"S","max_level":3})", &report) ==
        FGB_ERR_NOT_STABILIZED);
  CHECK(take(report).find("\"stabilized\":false") != std::string::npos);

  report = nullptr;
  CHECK(fgb_run_kgroup("{not json", &report) == FGB_ERR_PARSE);

  report = nullptr;
  REQUIRE(fgb_run_witness(
              R"({"d":2,"mode":"density","x":"a","y":"b"})", &report) == FGB_OK);
  CHECK(take(report).find("\"witness\":\"aaB\"") != std::string::npos);

  report = nullptr;
  CHECK(fgb_run_witness(R"({"d":2,"mode":"density","x":"a","y":"a"})",
                        &report) == FGB_ERR_ARGUMENT);

  report = nullptr;
  REQUIRE(fgb_run_orbits(R"({"d":2,"relation":"a,b"})", &report) == FGB_OK);
  CHECK(take(report).find("\"count\":2") != std::string::npos);

  report = nullptr;
  REQUIRE(fgb_run_act(R"({"d":2,"g":"ab","x":"1|b","relation":"a"})",
                      &report) == FGB_OK);
  std::string act_text = take(report);
  CHECK(act_text.find("\"result\":") != std::string::npos);
  CHECK(act_text.find("\"class\":") != std::string::npos);

  report = nullptr;
  REQUIRE(fgb_run_verify(R"({"d":2,"mode":"recurrences","max_k":3})",
                         &report) == FGB_OK);
  CHECK(take(report).find("\"all_pass\":true") != std::string::npos);
}

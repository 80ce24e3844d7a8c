#include "severi/severi.h"

#include <doctest.h>

#include <cstring>
#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  severi_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("ADE vectors through the C interface") {
  severi_nh* v = nullptr;
  REQUIRE(severi_nh_ade("E6", SEVERI_ADE_TRUNCATION, &v) == SEVERI_OK);
  char* json = nullptr;
  REQUIRE(severi_nh_to_json(v, &json) == SEVERI_OK);
  CHECK(take(json) == R"({"kind":"local","low":0,"values":[5,10,6,1]})");
  CHECK(severi_nh_is_local(v) == 1);
  CHECK(severi_nh_low(v) == 0);
  CHECK(severi_nh_high(v) == 3);
  int64_t x = 0;
  CHECK(severi_nh_value(v, 1, &x) == SEVERI_OK);
  CHECK(x == 10);

  severi_nh* f = nullptr;
  severi_nh* d = nullptr;
  REQUIRE(severi_nh_ade("E6", SEVERI_ADE_FORMULA, &f) == SEVERI_OK);
  REQUIRE(severi_nh_ade("E6", SEVERI_ADE_DYNKIN, &d) == SEVERI_OK);
  CHECK(severi_nh_equal(v, f) == 1);
  CHECK(severi_nh_equal(v, d) == 1);
  severi_nh_free(v);
  severi_nh_free(f);
  severi_nh_free(d);
}

TEST_CASE("errors carry a status and a message") {
  severi_nh* v = nullptr;
  CHECK(severi_nh_ade("Q9", SEVERI_ADE_TRUNCATION, &v) == SEVERI_INVALID_ARGUMENT);
  CHECK(v == nullptr);
  CHECK(std::strlen(severi_last_error()) > 0);

  severi_braid* b = nullptr;
  CHECK(severi_braid_parse("(1 2", 3, &b) == SEVERI_PARSE_ERROR);
  CHECK(std::string(severi_status_name(SEVERI_PARSE_ERROR)) == "parse error");

  severi_series* s = nullptr;
  REQUIRE(severi_series_from_csv("1,0", &s) == SEVERI_OK);
  CHECK(severi_nh_from_series_global(s, 3, &v) == SEVERI_INSUFFICIENT_ORDER);
  severi_series_free(s);

  CHECK(severi_series_from_csv("1,x", &s) == SEVERI_PARSE_ERROR);
  CHECK(severi_nh_ade(nullptr, SEVERI_ADE_TRUNCATION, &v) == SEVERI_INVALID_ARGUMENT);
}

TEST_CASE("series and transforms") {
  severi_series* s = nullptr;
  REQUIRE(severi_series_model(SEVERI_MODEL_D, 6, 1, &s) == SEVERI_OK);
  CHECK(severi_series_order(s) == 6);
  CHECK(take([&] { char* o = nullptr; severi_series_to_text(s, &o); return o; }()) == "1,1,2,3,5,7,10");
  severi_series_free(s);

  REQUIRE(severi_series_from_csv("1,1", &s) == SEVERI_OK);
  severi_nh* v = nullptr;
  REQUIRE(severi_nh_from_series_local(s, 1, 1, &v) == SEVERI_OK);
  char* text = nullptr;
  REQUIRE(severi_nh_to_text(v, &text) == SEVERI_OK);
  CHECK(take(text) == "[2,1]");

  severi_series* back = nullptr;
  REQUIRE(severi_nh_to_series(v, 1, 1, &back) == SEVERI_OK);
  REQUIRE(severi_series_to_text(back, &text) == SEVERI_OK);
  CHECK(take(text) == "1,1");
  severi_series_free(back);
  severi_series_free(s);

  const severi_nh* locals[] = {v, v};
  severi_nh* combined = nullptr;
  REQUIRE(severi_nh_combine(0, locals, 2, &combined) == SEVERI_OK);
  REQUIRE(severi_nh_to_text(combined, &text) == SEVERI_OK);
  CHECK(take(text) == "[4,4,1]");
  severi_nh_free(combined);
  severi_nh_free(v);

  const char* dens[] = {"1,-1", "1,0,-1", "1,0,0,-1"};
  REQUIRE(severi_series_expand_rational("1", dens, 3, 8, &s) == SEVERI_OK);
  REQUIRE(severi_series_to_text(s, &text) == SEVERI_OK);
  CHECK(take(text) == "1,1,2,3,4,5,7,8,10");
  severi_series_free(s);
}

TEST_CASE("n_h JSON round trip") {
  severi_nh* v = nullptr;
  REQUIRE(severi_nh_from_json(R"({"kind":"global","low":1,"values":[3,1]})", &v) == SEVERI_OK);
  CHECK(severi_nh_is_local(v) == 0);
  CHECK(severi_nh_low(v) == 1);
  severi_nh* w = nullptr;
  REQUIRE(severi_nh_from_values(0, 1, "3,1", &w) == SEVERI_OK);
  CHECK(severi_nh_equal(v, w) == 1);
  severi_nh_free(v);
  severi_nh_free(w);
  CHECK(severi_nh_from_json("{", &v) == SEVERI_PARSE_ERROR);
}

TEST_CASE("braids through the C interface") {
  severi_braid* b = nullptr;
  REQUIRE(severi_braid_parse("1 1 1", 2, &b) == SEVERI_OK);
  CHECK(severi_braid_strands(b) == 2);
  CHECK(severi_braid_writhe(b) == 3);
  CHECK(severi_braid_length(b) == 3);
  CHECK(severi_braid_components(b) == 1);
  CHECK(severi_braid_is_positive(b) == 1);
  int mu = 0;
  CHECK(severi_braid_milnor(b, &mu) == SEVERI_OK);
  CHECK(mu == 2);

  severi_homfly* h = nullptr;
  REQUIRE(severi_braid_homfly(b, &h) == SEVERI_OK);
  CHECK(severi_homfly_admissible(h) == 5);
  char* text = nullptr;
  REQUIRE(severi_homfly_to_text(h, SEVERI_HOMFLY_PINF, &text) == SEVERI_OK);
  CHECK(take(text) == "2*z^-1 + z");
  REQUIRE(severi_homfly_to_text(h, SEVERI_HOMFLY_NORMALIZED, &text) == SEVERI_OK);
  CHECK(take(text) == "2*a^2*z^0 + a^2*z^2 - a^4*z^0");

  severi_pinf* p = nullptr;
  REQUIRE(severi_braid_pinf(b, &p) == SEVERI_OK);
  CHECK(severi_pinf_count_size(p) == 2);
  CHECK(severi_pinf_count(p, 0) == 1);
  CHECK(severi_pinf_count(p, 1) == 2);

  REQUIRE(severi_braid_to_json(b, h, p, &text) == SEVERI_OK);
  const std::string doc = take(text);
  CHECK(doc.find(R"("counts":[[0,1],[1,2]])") != std::string::npos);
  CHECK(doc.find(R"("pinf":[[-1,"2"],[1,"1"]])") != std::string::npos);

  int ok = 0;
  REQUIRE(severi_braid_markov_json(b, &text, &ok) == SEVERI_OK);
  severi_string_free(text);
  CHECK(ok == 1);

  severi_pinf_free(p);
  severi_homfly_free(h);
  severi_braid_free(b);
}

TEST_CASE("enumeration budget") {
  severi_braid* b = nullptr;
  REQUIRE(severi_braid_parse("(1)^12", 2, &b) == SEVERI_OK);
  severi_set_max_letters(8);
  severi_homfly* h = nullptr;
  CHECK(severi_braid_homfly(b, &h) == SEVERI_BUDGET_EXCEEDED);
  severi_set_max_letters(0);
  REQUIRE(severi_braid_homfly(b, &h) == SEVERI_OK);
  severi_homfly_free(h);
  severi_braid_free(b);
}

TEST_CASE("catalog, conjecture and selftest") {
  char* text = nullptr;
  int status = -2;
  REQUIRE(severi_conjecture_json("E8", &text, &status) == SEVERI_OK);
  severi_string_free(text);
  CHECK(status == 1);
  REQUIRE(severi_conjecture_json("T(3,7)", &text, &status) == SEVERI_OK);
  severi_string_free(text);
  CHECK(status == -1);

  REQUIRE(severi_catalog_json(&text) == SEVERI_OK);
  CHECK(take(text).find(R"("name":"E8")") != std::string::npos);

  REQUIRE(severi_dynkin_json("D5", &text) == SEVERI_OK);
  CHECK(take(text).find(R"("counts":[[0,1],[1,5],[2,6],[3,2]])") != std::string::npos);

  int failures = -1;
  REQUIRE(severi_selftest(&text, &failures) == SEVERI_OK);
  severi_string_free(text);
  CHECK(failures == 0);
}

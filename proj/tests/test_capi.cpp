#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"

#include "zetab/capi.h"

#include <string>

using nlohmann::json;

namespace {

std::string take(char* p) {
  REQUIRE(p != nullptr);
  std::string s(p);
  zb_string_free(p);
  return s;
}

} // namespace

TEST_CASE("builtin session produces a passing verification report") {
  zb_session* s = zb_open(nullptr);
  REQUIRE(s != nullptr);
  char* out = nullptr;
  CHECK(zb_report_verify(s, 1.0, &out) == ZB_OK);
  json doc = json::parse(take(out));
  CHECK(doc.at("pass").get<bool>());
  CHECK(doc.at("checks").size() > 20);
  for (const auto& c : doc.at("checks")) CHECK(c.at("pass").get<bool>());
  zb_close(s);
}

TEST_CASE("zeta report on the builtin configuration passes and is deterministic") {
  zb_session* s = zb_open(zb_builtin_config());
  char* out = nullptr;
  CHECK(zb_report_zeta(s, 1.0, &out) == ZB_OK);
  std::string first = take(out);
  json doc = json::parse(first);
  CHECK(doc.at("pass").get<bool>());
  for (const char* t : {"interior", "leftover", "gq", "pg", "gg"})
    CHECK(doc.at("terms").at(t).at("pass").get<bool>());
  CHECK(doc.at("gq_route_gap").get<double>() < 1e-6);

  char* again = nullptr;
  CHECK(zb_report_zeta(s, 1.0, &again) == ZB_OK);
  CHECK(take(again) == first); // byte-identical rerun
  zb_close(s);
}

TEST_CASE("fit report carries the sweep samples") {
  zb_session* s = zb_open(nullptr);
  char* out = nullptr;
  CHECK(zb_report_fit(s, "leftover", 1.0, &out) == ZB_OK);
  json doc = json::parse(take(out));
  CHECK(doc.at("family") == "leftover");
  CHECK(doc.at("samples").size() >= 16);
  double prev = 0.0;
  for (const auto& row : doc.at("samples")) {
    CHECK(row.at("mu").get<double>() > prev);
    prev = row.at("mu").get<double>();
    CHECK(std::isfinite(row.at("re").get<double>()));
    CHECK(std::isfinite(row.at("im").get<double>()));
  }
  CHECK(doc.at("fit").at("residual").get<double>() < 1e-8);
  zb_close(s);
}

TEST_CASE("defect report matches the predicted scaling") {
  zb_session* s = zb_open(nullptr);
  char* out = nullptr;
  CHECK(zb_report_defect(s, 2.0, 1.0, &out) == ZB_OK);
  json doc = json::parse(take(out));
  CHECK(doc.at("pass").get<bool>());
  CHECK(doc.at("gap").get<double>() <= doc.at("tolerance").get<double>());
  zb_close(s);
}

TEST_CASE("configuration and argument errors are reported, not thrown") {
  zb_session* bad = zb_open("{ not json");
  REQUIRE(bad != nullptr);
  char* out = nullptr;
  CHECK(zb_report_zeta(bad, 1.0, &out) == ZB_FAIL_CONFIG);
  CHECK(out == nullptr);
  CHECK(std::string(zb_last_error(bad)).size() > 0);
  zb_close(bad);

  zb_session* s = zb_open(nullptr);
  CHECK(zb_report_fit(s, "nope", 1.0, &out) == ZB_FAIL_CONFIG);
  CHECK(zb_report_zeta(s, -1.0, &out) == ZB_FAIL_CONFIG);
  CHECK(zb_report_fit(s, nullptr, 1.0, &out) == ZB_FAIL_CONFIG);

  // a configuration with no plus-type poles has no leftover family
  zb_session* np = zb_open(R"({"p": {"poles": [{"qdeg": 0, "a": 1.0, "sign": -1, "k": 1}]}})");
  CHECK(zb_report_fit(np, "leftover", 1.0, &out) == ZB_FAIL_CONFIG);
  zb_close(np);
  zb_close(s);
}

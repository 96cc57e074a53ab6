#include "doctest.h"

#include "ulrichlab/report.hpp"
#include "ulrichlab/scalar.hpp"

using namespace ulab;

TEST_CASE("golden report passes over the rationals") {
  auto rows = paper_report();
  CHECK(rows.size() == 14);
  for (const auto& r : rows) {
    INFO(r.id, ": ", r.computed, " ", r.error);
    CHECK(r.status == "PASS");
    CHECK(r.computed == r.expected);
    CHECK(r.error.empty());
  }
  CHECK(report_passed(rows));
}

TEST_CASE("golden report is field independent") {
  set_session_field(parse_field("fp:2"));
  auto rows = paper_report();
  set_session_field(parse_field("rational"));
  for (const auto& r : rows) {
    INFO(r.id, " under fp:2 -> ", r.computed, " ", r.error);
    CHECK(r.status == "PASS");
  }
}

TEST_CASE("report rows carry stable ids") {
  auto rows = paper_report();
  REQUIRE(!rows.empty());
  CHECK(rows.front().id == "t456-pair");
  CHECK(rows.back().id == "t345-betti-growth");
  for (const auto& r : rows) {
    CHECK(!r.id.empty());
    CHECK(!r.statement.empty());
    CHECK(!r.expected.empty());
  }
}

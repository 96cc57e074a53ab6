#pragma once

#include <string>
#include <vector>

namespace ulab {

// One checked line of the golden report. `status` is PASS when computed
// matches expected exactly, FAIL on a value mismatch, and ERROR when the
// computation itself threw; an ERROR row records the message and never
// aborts the remaining rows.
struct ReportRow {
  std::string id;
  std::string statement;
  std::string expected;
  std::string computed;
  std::string status;
  std::string error;
};

std::vector<ReportRow> paper_report();

bool report_passed(const std::vector<ReportRow>& rows);

}  // namespace ulab

#ifndef EKBOUNDS_REPORT_HPP
#define EKBOUNDS_REPORT_HPP

#include <string>
#include <vector>

// One-shot reproduction table: every headline number this library computes,
// next to its reference value and tolerance.  MATCH/MISMATCH rows gate the
// exit status; REFERENCE_ONLY rows are informational comparisons against
// published figures whose exact configuration is ambiguous.

namespace ekbounds {

enum class RowStatus { Match, Mismatch, ReferenceOnly };

struct ReportRow {
  std::string label;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  RowStatus status = RowStatus::Match;
};

std::string to_string(RowStatus status);

std::vector<ReportRow> reproduction_table();

// True iff every row is MATCH or REFERENCE_ONLY.
bool all_match(const std::vector<ReportRow>& rows);

}  // namespace ekbounds

#endif  // EKBOUNDS_REPORT_HPP

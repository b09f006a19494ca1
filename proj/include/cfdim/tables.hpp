#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cfdim/run_record.hpp"
#include "cfdim/solver.hpp"

namespace cfdim {

// Published reference rows.  Table 1: complex rectangles; table 2: real
// finite alphabets plus truncated progressions; table 3: truncated
// cofinite alphabets.
struct PaperRow {
  const char* alphabet;
  std::optional<long long> ceiling;
  int k;
  double ref_minus;
  double ref_plus;
  bool flagged;     // known to conflict with the q^-2t convention; reported, not gated
  bool clamp_plus;  // reference upper value is clamped at 1
};

const std::vector<PaperRow>& paper_table(int table_id);

struct TableRowResult {
  PaperRow row;
  int used_k = 0;
  RunRecord record;
  std::optional<double> delta_minus;
  std::optional<double> delta_plus;
  std::string flag;
};

// Runs one row at the reference k, or the largest k whose predicted cost
// fits the remaining budget (budget <= 0 means unlimited).
TableRowResult run_table_row(const PaperRow& row, const SolveOptions& opts,
                             double budget_seconds);

// Whole-table run; format is "csv" or "text".
void run_table(int table_id, double budget_seconds, const SolveOptions& opts,
               const std::string& format, std::ostream& os);

}  // namespace cfdim

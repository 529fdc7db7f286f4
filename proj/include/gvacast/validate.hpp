#pragma once

#include <string>
#include <vector>

#include "gvacast/fixtures.hpp"

namespace gvacast {

// Outcome of re-deriving one reference table from the input fixtures.
struct TableCheck {
  std::string name;        // e.g. "levels 2019-20"
  bool pass = false;
  double max_abs_dev = 0.0;  // worst |computed - reference| over the gated cells
  std::string worst_cell;    // label of the cell attaining max_abs_dev
  std::string gate;          // human-readable pass rule
};

struct ValidationReport {
  std::vector<TableCheck> tables;
  bool all_pass = false;
};

// Runs the full pipeline (nowcast -> projections -> growth tables) on the
// given fixtures and compares the six derived tables against the embedded
// reference tables at the pinned tolerances:
//   levels 2019-20              all cells ±0.5, annual ±0.5 of cell sum
//   growth 2019-20              every cell within 0.1 percent points
//   levels 2020-21 scenario 1   all cells and totals ±0.01
//   growth 2020-21 scenario 1   integer-percent rounding matches exactly
//   levels 2020-21 scenario 2   grand total ±1
//   growth 2020-21 scenario 2   integer-percent rounding matches exactly
ValidationReport run_golden_validation(const FixtureSet& fixtures);

// Text and JSON summaries of a report (one line/object per table).
std::string format_validation_report(const ValidationReport& report);
std::string format_validation_report_json(const ValidationReport& report);

}  // namespace gvacast

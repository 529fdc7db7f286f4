#pragma once

#include <array>
#include <string>

#include "gvacast/inputs.hpp"
#include "gvacast/matrix.hpp"

namespace gvacast {

// Compiled-in input data reproducing the published study: observed FY2019
// quarters, the back-derived FY2018 year, the Q4 nowcast shocks, and the
// two capacity-utilization scenarios (refined factors plus the rounded
// 2-decimal grids as published).
struct FixtureSet {
  GvaMatrix actuals_2019_20_q1q3;
  GvaMatrix actuals_2018_19;
  ShockSpec shock_q4_fy2019;
  UtilizationSchedule scenario1;
  UtilizationSchedule scenario2;
  UtilizationSchedule scenario1_rounded;
  UtilizationSchedule scenario2_rounded;

  FixtureSet();
};

// The embedded fixture set.
const FixtureSet& bundled_fixtures();

// Fixture set honoring the GVA_SCENARIO_FIXTURES environment variable: when
// set, it names a directory holding actuals_2019_20_q1q3.csv,
// actuals_2018_19.csv, shock_q4_fy2019.csv, scenario1.csv, scenario2.csv,
// scenario1_rounded.csv and scenario2_rounded.csv in the serializer formats;
// otherwise the embedded set is returned.
FixtureSet load_fixtures();

// Reference ("golden") tables: the published levels and growth tables the
// validate command re-derives. Cells follow the canonical sector order;
// growth cells are percent numbers at the published precision.
struct GoldenGvaTable {
  int fy_start;
  std::array<std::array<double, 4>, kSectorCount> cell;  // [sector][quarter-1]
  std::array<double, kSectorCount> row_total;
  std::array<double, 4> col_total;
  double grand_total;

  // Totals recomputed from the printed cells in canonical order. The
  // published FY2019 totals row is internally inconsistent with its own
  // cells (see fixtures.cpp); sums of cells are what the published
  // downstream tables were actually computed from.
  double cell_row_sum(std::size_t sector_index) const;
  double cell_col_sum(int quarter) const;
  double cell_grand_sum() const;
};

struct GoldenGrowthTable {
  int fy_start;
  int decimals;  // published display precision: 0 or 1
  // [row][q1..q4, annual]; rows = 8 sectors then TOTAL, percent units.
  std::array<std::array<double, 5>, kSectorCount + 1> pct;
};

const GoldenGvaTable& golden_levels_fy2019();
const GoldenGvaTable& golden_levels_fy2020_s1();
const GoldenGvaTable& golden_levels_fy2020_s2();
const GoldenGrowthTable& golden_growth_fy2019();
const GoldenGrowthTable& golden_growth_fy2020_s1();
const GoldenGrowthTable& golden_growth_fy2020_s2();

// Builds a full-year matrix from a golden table's cells (all entries
// estimated=false).
GvaMatrix matrix_from_golden(const GoldenGvaTable& table);

}  // namespace gvacast

#pragma once

#include <array>

#include "gvacast/inputs.hpp"
#include "gvacast/matrix.hpp"

namespace gvacast {

// Projects a full fiscal year by elementwise multiplication:
// out[s, (target_fy, q)] = baseline[s, (baseline_fy, q)] * sched[s, q]
// for all 32 cells. Entries are flagged estimated; provenance records the
// scenario label. Throws Error{PartialYear} if baseline_fy is incomplete
// and Error{InvalidArgument} if target_fy == baseline_fy.
GvaMatrix project_fiscal_year(const GvaMatrix& baseline, int baseline_fy,
                              int target_fy, const UtilizationSchedule& sched);

// Differences and ratios between two full-year matrices over the same
// fiscal year (b relative to a).
struct ScenarioComparison {
  int fy_start = 0;
  std::array<std::array<double, 4>, kSectorCount> cell_diff{};   // b - a
  std::array<std::array<double, 4>, kSectorCount> cell_ratio{};  // b / a
  std::array<double, 4> quarter_total_diff{};
  double annual_total_diff = 0.0;
};

// Throws Error{PartialYear} unless both matrices cover fy fully.
ScenarioComparison compare_scenarios(const GvaMatrix& a, const GvaMatrix& b,
                                     int fy_start);

}  // namespace gvacast

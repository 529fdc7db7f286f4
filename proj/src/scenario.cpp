#include "gvacast/scenario.hpp"

#include <string>

#include "gvacast/errors.hpp"

namespace gvacast {

namespace {

void require_full_year(const GvaMatrix& m, int fy_start, const char* role) {
  if (m.has_full_year(fy_start)) return;
  std::string gaps;
  for (const auto& fq : m.missing_quarters(fy_start)) {
    if (!gaps.empty()) gaps += ", ";
    gaps += fq.label();
  }
  if (gaps.empty()) gaps = "all quarters";
  throw Error(ErrorKind::PartialYear, std::string(role) + " fiscal year " +
                                          std::to_string(fy_start) +
                                          " is incomplete (" + gaps + ")");
}

}  // namespace

GvaMatrix project_fiscal_year(const GvaMatrix& baseline, int baseline_fy,
                              int target_fy, const UtilizationSchedule& sched) {
  if (target_fy == baseline_fy)
    throw Error(ErrorKind::InvalidArgument,
                "target fiscal year must differ from the baseline year (" +
                    std::to_string(baseline_fy) + ")");
  require_full_year(baseline, baseline_fy, "baseline");

  GvaMatrix out;
  for (int q = 1; q <= 4; ++q) {
    const FiscalQuarter src(baseline_fy, q);
    const FiscalQuarter dst(target_fy, q);
    for (SectorId s : kAllSectors)
      out.set(s, dst, baseline.at(s, src) * sched.factor(s, q),
              /*estimated=*/true);
  }
  out.add_provenance("projected fiscal year " + std::to_string(target_fy) +
                     " from " + std::to_string(baseline_fy) +
                     " under schedule '" + sched.label() + "'");
  return out;
}

ScenarioComparison compare_scenarios(const GvaMatrix& a, const GvaMatrix& b,
                                     int fy_start) {
  require_full_year(a, fy_start, "first");
  require_full_year(b, fy_start, "second");

  ScenarioComparison cmp;
  cmp.fy_start = fy_start;
  for (int q = 1; q <= 4; ++q) {
    const FiscalQuarter fq(fy_start, q);
    for (SectorId s : kAllSectors) {
      const double va = a.at(s, fq);
      const double vb = b.at(s, fq);
      cmp.cell_diff[index_of(s)][q - 1] = vb - va;
      cmp.cell_ratio[index_of(s)][q - 1] = vb / va;
    }
    cmp.quarter_total_diff[q - 1] =
        quarter_total(b, total_group(), fq) - quarter_total(a, total_group(), fq);
  }
  cmp.annual_total_diff = annual_total(b, total_group(), fy_start) -
                          annual_total(a, total_group(), fy_start);
  return cmp;
}

}  // namespace gvacast

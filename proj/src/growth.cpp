#include "gvacast/growth.hpp"

#include <cmath>
#include <string>

#include "gvacast/errors.hpp"

namespace gvacast {

namespace {

constexpr double kNearZero = 1e-9;

// The table builder promises complete target and prior years up front, so
// an incomplete input surfaces as PartialYear naming the first gap instead
// of a point-lookup failure deep inside a quarter total.
void require_both_years(const GvaMatrix& m, const SectorGroup& group, int target_fy) {
  for (int fy : {target_fy - 1, target_fy})
    for (int q = 1; q <= 4; ++q)
      for (SectorId s : group.members())
        if (!m.contains(s, FiscalQuarter(fy, q)))
          throw Error(ErrorKind::PartialYear,
                      "growth table for FY" + std::to_string(target_fy) + " needs " +
                          FiscalQuarter(fy, q).label() + " " + std::string(code(s)));
}

double growth_from_levels(double current, double prior, const std::string& what) {
  if (std::fabs(prior) < kNearZero)
    throw Error(ErrorKind::NearZeroBase,
                "prior-year level for " + what + " is below 1e-9; growth is undefined");
  return current / prior - 1.0;
}

}  // namespace

double yoy_growth(const GvaMatrix& m, const SectorGroup& group, FiscalQuarter fq) {
  const double current = quarter_total(m, group, fq);
  const double prior = quarter_total(m, group, fq.prev_year());
  return growth_from_levels(current, prior, group.name() + " " + fq.label());
}

double yoy_growth(const GvaMatrix& m, SectorId sector, FiscalQuarter fq) {
  return yoy_growth(m, singleton_group(sector), fq);
}

double annual_growth(const GvaMatrix& m, const SectorGroup& group, int fy_start) {
  const double current = annual_total(m, group, fy_start);
  const double prior = annual_total(m, group, fy_start - 1);
  return growth_from_levels(current, prior,
                            group.name() + " FY" + std::to_string(fy_start));
}

double annual_growth(const GvaMatrix& m, SectorId sector, int fy_start) {
  return annual_growth(m, singleton_group(sector), fy_start);
}

GrowthTable build_growth_table(const GvaMatrix& m, int target_fy,
                               const std::vector<SectorGroup>& rows) {
  GrowthTable table;
  table.target_fy = target_fy;
  table.rows.reserve(rows.size());
  for (const SectorGroup& group : rows) {
    require_both_years(m, group, target_fy);
    GrowthTable::Row row{group, {}, 0.0};
    for (int q = 1; q <= 4; ++q)
      row.quarterly[q - 1] = yoy_growth(m, group, FiscalQuarter(target_fy, q));
    row.annual = annual_growth(m, group, target_fy);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<std::pair<std::string, double>> plot_series(
    const GvaMatrix& m, const SectorGroup& group, const std::vector<int>& fy_starts) {
  std::vector<std::pair<std::string, double>> points;
  points.reserve(fy_starts.size() * 4);
  for (int fy : fy_starts) {
    for (int q = 1; q <= 4; ++q) {
      const FiscalQuarter fq(fy, q);
      points.emplace_back(fq.label(), yoy_growth(m, group, fq));
    }
  }
  return points;
}

}  // namespace gvacast

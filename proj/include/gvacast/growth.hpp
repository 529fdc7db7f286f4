#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gvacast/fiscal.hpp"
#include "gvacast/matrix.hpp"
#include "gvacast/sectors.hpp"

namespace gvacast {

// Year-over-year growth of a group's quarter total:
// quarter_total(fq) / quarter_total(prev_year(fq)) - 1.
// Throws Error{MissingEntry} for absent data and Error{NearZeroBase} if the
// prior-year level is below 1e-9 in magnitude.
double yoy_growth(const GvaMatrix& m, const SectorGroup& group, FiscalQuarter fq);
double yoy_growth(const GvaMatrix& m, SectorId sector, FiscalQuarter fq);

// annual_total(fy) / annual_total(fy - 1) - 1, same guards, with
// Error{PartialYear} when either year is incomplete.
double annual_growth(const GvaMatrix& m, const SectorGroup& group, int fy_start);
double annual_growth(const GvaMatrix& m, SectorId sector, int fy_start);

// One growth-table row per group (singleton groups for plain sectors),
// four quarterly cells plus the annual cell, growth stored as fractions.
struct GrowthTable {
  struct Row {
    SectorGroup group;
    std::array<double, 4> quarterly{};
    double annual = 0.0;
  };

  std::vector<Row> rows;
  int target_fy = 0;
  std::string label;
};

// Builds the growth table of target_fy against the prior year for the given
// rows. Requires both years complete for every row's members.
GrowthTable build_growth_table(const GvaMatrix& m, int target_fy,
                               const std::vector<SectorGroup>& rows);

// Chronological (quarter label, growth fraction) pairs for the listed
// fiscal years — 4 points per year, labels like "2019Q1". Each listed year
// and its predecessor must be complete for the group.
std::vector<std::pair<std::string, double>> plot_series(
    const GvaMatrix& m, const SectorGroup& group, const std::vector<int>& fy_starts);

}  // namespace gvacast

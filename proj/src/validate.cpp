#include "gvacast/validate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "gvacast/growth.hpp"
#include "gvacast/nowcast.hpp"
#include "gvacast/scenario.hpp"
#include "text_format.hpp"

namespace gvacast {

namespace {

std::string quarter_name(int q) { return "Q" + std::to_string(q); }

void track(TableCheck& check, double computed, double reference, std::string cell) {
  const double dev = std::fabs(computed - reference);
  if (dev >= check.max_abs_dev) {
    check.max_abs_dev = dev;
    check.worst_cell = std::move(cell);
  }
}

// Cells and totals of one projected/nowcast year against the reference
// levels, within tol. `annual_reference` lets the caller gate the grand
// total against the cell-consistent sum where the published totals row is
// known to disagree with its own cells.
TableCheck check_levels(std::string name, const GvaMatrix& m,
                        const GoldenGvaTable& golden, double tol,
                        bool include_totals, double annual_reference,
                        std::string gate) {
  TableCheck check{std::move(name), false, 0.0, "", std::move(gate)};
  for (SectorId s : kAllSectors)
    for (int q = 1; q <= 4; ++q)
      track(check, m.at(s, FiscalQuarter(golden.fy_start, q)),
            golden.cell[index_of(s)][q - 1],
            std::string(code(s)) + " " + quarter_name(q));
  if (include_totals) {
    for (SectorId s : kAllSectors)
      track(check, annual_total(m, singleton_group(s), golden.fy_start),
            golden.row_total[index_of(s)], std::string(code(s)) + " total");
    for (int q = 1; q <= 4; ++q)
      track(check, quarter_total(m, total_group(), FiscalQuarter(golden.fy_start, q)),
            golden.col_total[q - 1], "TOTAL " + quarter_name(q));
  }
  track(check, annual_total(m, total_group(), golden.fy_start), annual_reference,
        "TOTAL annual");
  check.pass = check.max_abs_dev <= tol;
  return check;
}

TableCheck check_grand_total(std::string name, const GvaMatrix& m,
                             const GoldenGvaTable& golden, double tol,
                             std::string gate) {
  TableCheck check{std::move(name), false, 0.0, "", std::move(gate)};
  track(check, annual_total(m, total_group(), golden.fy_start), golden.grand_total,
        "TOTAL annual");
  check.pass = check.max_abs_dev <= tol;
  return check;
}

std::vector<SectorGroup> growth_rows() {
  std::vector<SectorGroup> rows;
  for (SectorId s : kAllSectors) rows.push_back(singleton_group(s));
  rows.push_back(total_group());
  return rows;
}

// Growth table against the reference percents. tol_pct > 0 compares raw
// percent values; tol_pct == 0 requires the half-away-from-zero rounding at
// the reference's precision to match every cell exactly.
TableCheck check_growth(std::string name, const GrowthTable& computed,
                        const GoldenGrowthTable& golden, double tol_pct,
                        std::string gate) {
  TableCheck check{std::move(name), false, 0.0, "", std::move(gate)};
  bool rounded_match = true;
  for (std::size_t r = 0; r < computed.rows.size(); ++r) {
    const GrowthTable::Row& row = computed.rows[r];
    for (int c = 0; c < 5; ++c) {
      const double fraction = c < 4 ? row.quarterly[c] : row.annual;
      const double pct = fraction * 100.0;
      const double ref = golden.pct[r][c];
      const std::string cell =
          row.group.name() + " " + (c < 4 ? quarter_name(c + 1) : "annual");
      track(check, pct, ref, cell);
      if (tol_pct == 0.0 &&
          detail::format_fixed(pct, golden.decimals) !=
              detail::format_fixed(ref, golden.decimals))
        rounded_match = false;
    }
  }
  check.pass = tol_pct > 0.0 ? check.max_abs_dev <= tol_pct : rounded_match;
  return check;
}

}  // namespace

ValidationReport run_golden_validation(const FixtureSet& fixtures) {
  // Pipeline: merge the two observed spans, nowcast the missing quarter,
  // project both scenarios, then grow everything year over year.
  const GvaMatrix observed =
      merge(fixtures.actuals_2018_19, fixtures.actuals_2019_20_q1q3);
  const GvaMatrix history =
      complete_fiscal_year(observed, 2019, fixtures.shock_q4_fy2019);
  const GvaMatrix s1 =
      merge(history, project_fiscal_year(history, 2019, 2020, fixtures.scenario1));
  const GvaMatrix s2 =
      merge(history, project_fiscal_year(history, 2019, 2020, fixtures.scenario2));

  const auto rows = growth_rows();
  ValidationReport report;
  report.tables.push_back(check_levels(
      "levels 2019-20", history, golden_levels_fy2019(), 0.5,
      /*include_totals=*/false, golden_levels_fy2019().cell_grand_sum(),
      "cells within 0.5; annual within 0.5 of the cell sum"));
  report.tables.push_back(check_growth(
      "growth 2019-20", build_growth_table(history, 2019, rows),
      golden_growth_fy2019(), 0.1, "every cell within 0.1 percent points"));
  report.tables.push_back(check_levels(
      "levels 2020-21 scenario 1", s1, golden_levels_fy2020_s1(), 0.01,
      /*include_totals=*/true, golden_levels_fy2020_s1().grand_total,
      "cells and totals within 0.01"));
  report.tables.push_back(check_growth(
      "growth 2020-21 scenario 1", build_growth_table(s1, 2020, rows),
      golden_growth_fy2020_s1(), 0.0, "integer-percent rounding matches exactly"));
  report.tables.push_back(check_grand_total(
      "levels 2020-21 scenario 2", s2, golden_levels_fy2020_s2(), 1.0,
      "grand total within 1"));
  report.tables.push_back(check_growth(
      "growth 2020-21 scenario 2", build_growth_table(s2, 2020, rows),
      golden_growth_fy2020_s2(), 0.0, "integer-percent rounding matches exactly"));

  report.all_pass = true;
  for (const TableCheck& t : report.tables) report.all_pass = report.all_pass && t.pass;
  return report;
}

std::string format_validation_report(const ValidationReport& report) {
  std::string out;
  std::size_t width = 0;
  for (const TableCheck& t : report.tables) width = std::max(width, t.name.size());
  for (const TableCheck& t : report.tables) {
    out += t.name + std::string(width - t.name.size(), ' ');
    out += t.pass ? "  PASS" : "  FAIL";
    out += "  max |dev| " + detail::format_fixed(t.max_abs_dev, 6);
    out += " at " + t.worst_cell;
    out += "  (gate: " + t.gate + ")\n";
  }
  out += report.all_pass ? "overall: PASS\n" : "overall: FAIL\n";
  return out;
}

std::string format_validation_report_json(const ValidationReport& report) {
  nlohmann::json tables = nlohmann::json::array();
  for (const TableCheck& t : report.tables) {
    tables.push_back({{"name", t.name},
                      {"pass", t.pass},
                      {"max_abs_dev", t.max_abs_dev},
                      {"worst_cell", t.worst_cell},
                      {"gate", t.gate}});
  }
  nlohmann::json j{{"all_pass", report.all_pass}, {"tables", tables}};
  return j.dump(2) + "\n";
}

}  // namespace gvacast

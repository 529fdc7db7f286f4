#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gvacast/growth.hpp"
#include "gvacast/matrix.hpp"

namespace gvacast {

enum class TableFormat { csv, markdown };

// Renders one fiscal year of m as a 9-row table (8 sectors + TOTAL) with
// columns Q1..Q4 + total, levels printed with 2 decimals (half away from
// zero). CSV rows are keyed by sector code; markdown uses display names and
// suffixes estimated/projected cells with `*`. Totals are computed by
// quarter_total/annual_total — the renderer never re-sums in a different
// order. Output is byte-stable for identical input.
std::string render_gva_table(const GvaMatrix& m, int fy_start, TableFormat format);

// Renders a growth table with percent cells rounded half away from zero to
// `decimals` (0 or 1), e.g. "-25%" / "2.8%".
std::string render_growth_table(const GrowthTable& table, int decimals,
                                TableFormat format);

// A named plot series as produced by plot_series().
struct PlotSeries {
  std::string name;  // file stem, e.g. "total" or "primary_s1"
  std::vector<std::pair<std::string, double>> points;
};

// Writes one CSV per series at <prefix><name>.csv with header
// `quarter_label,growth_fraction`, growth at full precision, LF endings.
// A prefix ending in '/' acts as a directory; parent directories are
// created. I/O failures throw Error{IoError} with the path.
void emit_plot_series(const std::vector<PlotSeries>& series, const std::string& prefix);

}  // namespace gvacast

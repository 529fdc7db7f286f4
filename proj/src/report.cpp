#include "gvacast/report.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <vector>

#include "gvacast/errors.hpp"
#include "text_format.hpp"

namespace gvacast {

namespace {

using detail::format_fixed;
using detail::format_full;
using detail::format_percent;

struct TextRow {
  std::string csv_label;
  std::string md_label;
  std::array<std::string, 5> cells;  // q1..q4, then row total/annual
};

std::string join_csv(const std::string& header, const std::vector<TextRow>& rows) {
  std::string out = header;
  out += '\n';
  for (const TextRow& r : rows) {
    out += r.csv_label;
    for (const std::string& c : r.cells) {
      out += ',';
      out += c;
    }
    out += '\n';
  }
  return out;
}

std::string join_markdown(const std::array<std::string, 6>& header,
                          const std::vector<TextRow>& rows) {
  std::array<std::size_t, 6> width{};
  for (std::size_t c = 0; c < 6; ++c) width[c] = header[c].size();
  for (const TextRow& r : rows) {
    width[0] = std::max(width[0], r.md_label.size());
    for (std::size_t c = 0; c < 5; ++c)
      width[c + 1] = std::max(width[c + 1], r.cells[c].size());
  }

  auto pad_left = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  auto pad_right = [](const std::string& s, std::size_t w) {
    return std::string(w - s.size(), ' ') + s;
  };

  std::string out = "|";
  out += ' ' + pad_left(header[0], width[0]) + " |";
  for (std::size_t c = 1; c < 6; ++c) out += ' ' + pad_right(header[c], width[c]) + " |";
  out += "\n|";
  out += ':' + std::string(width[0] + 1, '-') + '|';
  for (std::size_t c = 1; c < 6; ++c) out += std::string(width[c] + 1, '-') + ":|";
  out += '\n';
  for (const TextRow& r : rows) {
    out += "| " + pad_left(r.md_label, width[0]) + " |";
    for (std::size_t c = 0; c < 5; ++c)
      out += ' ' + pad_right(r.cells[c], width[c + 1]) + " |";
    out += '\n';
  }
  return out;
}

void require_full_year(const GvaMatrix& m, int fy_start) {
  if (m.has_full_year(fy_start)) return;
  std::string gaps;
  for (const auto& fq : m.missing_quarters(fy_start)) {
    if (!gaps.empty()) gaps += ", ";
    gaps += fq.label();
  }
  if (gaps.empty()) gaps = "all quarters";
  throw Error(ErrorKind::PartialYear, "fiscal year " + std::to_string(fy_start) +
                                          " is incomplete (" + gaps + ")");
}

}  // namespace

std::string render_gva_table(const GvaMatrix& m, int fy_start, TableFormat format) {
  require_full_year(m, fy_start);
  const bool markdown = format == TableFormat::markdown;

  std::vector<TextRow> rows;
  rows.reserve(kSectorCount + 1);
  std::array<bool, 4> column_estimated{};
  for (SectorId s : kAllSectors) {
    TextRow row;
    row.csv_label = std::string(code(s));
    row.md_label = std::string(display_name(s));
    bool any_estimated = false;
    for (int q = 1; q <= 4; ++q) {
      const GvaEntry* e = m.find(s, FiscalQuarter(fy_start, q));
      row.cells[q - 1] = format_fixed(e->value, 2);
      if (e->estimated) {
        any_estimated = true;
        column_estimated[q - 1] = true;
        if (markdown) row.cells[q - 1] += '*';
      }
    }
    row.cells[4] = format_fixed(annual_total(m, singleton_group(s), fy_start), 2);
    if (markdown && any_estimated) row.cells[4] += '*';
    rows.push_back(std::move(row));
  }

  TextRow total;
  total.csv_label = "TOTAL";
  total.md_label = "TOTAL";
  bool any_estimated = false;
  for (int q = 1; q <= 4; ++q) {
    total.cells[q - 1] = format_fixed(quarter_total(m, total_group(), FiscalQuarter(fy_start, q)), 2);
    if (column_estimated[q - 1]) {
      any_estimated = true;
      if (markdown) total.cells[q - 1] += '*';
    }
  }
  total.cells[4] = format_fixed(annual_total(m, total_group(), fy_start), 2);
  if (markdown && any_estimated) total.cells[4] += '*';
  rows.push_back(std::move(total));

  if (markdown)
    return join_markdown({"Sector", "Q1", "Q2", "Q3", "Q4", "Total"}, rows);
  return join_csv("sector,q1,q2,q3,q4,total", rows);
}

std::string render_growth_table(const GrowthTable& table, int decimals,
                                TableFormat format) {
  if (decimals != 0 && decimals != 1)
    throw Error(ErrorKind::InvalidArgument,
                "growth tables print 0 or 1 decimals, got " + std::to_string(decimals));

  std::vector<TextRow> rows;
  rows.reserve(table.rows.size());
  for (const GrowthTable::Row& r : table.rows) {
    TextRow row;
    row.csv_label = r.group.name();
    row.md_label = r.group.members().size() == 1
                       ? std::string(display_name(r.group.members().front()))
                       : r.group.name();
    for (int q = 1; q <= 4; ++q)
      row.cells[q - 1] = format_percent(r.quarterly[q - 1], decimals);
    row.cells[4] = format_percent(r.annual, decimals);
    rows.push_back(std::move(row));
  }

  if (format == TableFormat::markdown)
    return join_markdown({"Sector", "Q1", "Q2", "Q3", "Q4", "Annual"}, rows);
  return join_csv("sector,q1,q2,q3,q4,annual", rows);
}

void emit_plot_series(const std::vector<PlotSeries>& series, const std::string& prefix) {
  for (const PlotSeries& s : series) {
    const std::filesystem::path path(prefix + s.name + ".csv");
    std::error_code ec;
    if (path.has_parent_path()) {
      std::filesystem::create_directories(path.parent_path(), ec);
      if (ec)
        throw Error(ErrorKind::IoError, "cannot create directory " +
                                            path.parent_path().string() + ": " +
                                            ec.message());
    }
    std::ofstream out(path);
    if (!out)
      throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
    out << "quarter_label,growth_fraction\n";
    for (const auto& [label, growth] : s.points)
      out << label << ',' << format_full(growth) << '\n';
    out.flush();
    if (!out)
      throw Error(ErrorKind::IoError, "write failed for " + path.string());
  }
}

}  // namespace gvacast

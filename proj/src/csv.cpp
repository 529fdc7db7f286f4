#include "gvacast/csv.hpp"

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "gvacast/errors.hpp"
#include "text_format.hpp"

namespace gvacast {

namespace {

using detail::format_full;
using detail::parse_double;
using detail::parse_long;
using detail::split_fields;
using detail::trim;

std::string line_tag(int line_no) { return "line " + std::to_string(line_no) + ": "; }

// Error::what() is "<Kind>: <message>"; recover the message so a rethrow
// can prepend line context without doubling the kind token.
std::string bare_message(const Error& e) {
  return std::string(e.what()).substr(to_string(e.kind()).size() + 2);
}

// Pulls the next meaningful line (skipping comments and blank lines),
// stripping a trailing CR so CRLF input parses like LF. Returns false at
// end of stream; line_no counts every physical line.
bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    return true;
  }
  return false;
}

void expect_header(std::istream& in, const std::vector<std::string_view>& expected,
                   int& line_no) {
  std::string line;
  if (!next_data_line(in, line, line_no))
    throw Error(ErrorKind::MalformedRow, "line 1: missing header");
  auto fields = split_fields(line);
  bool ok = fields.size() == expected.size();
  for (std::size_t i = 0; ok && i < fields.size(); ++i) ok = fields[i] == expected[i];
  if (!ok) {
    std::string want;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) want += ',';
      want += expected[i];
    }
    throw Error(ErrorKind::MalformedRow,
                line_tag(line_no) + "expected header `" + want + "`, got `" + line + "`");
  }
}

SectorId parse_sector(std::string_view token, int line_no) {
  if (auto s = sector_from_code(token)) return *s;
  throw Error(ErrorKind::UnknownSector,
              line_tag(line_no) + "unknown sector '" + std::string(token) + "'");
}

int parse_quarter(std::string_view token, int line_no) {
  auto q = parse_long(token);
  if (!q || *q < 1 || *q > 4)
    throw Error(ErrorKind::BadQuarter,
                line_tag(line_no) + "quarter must be 1..4, got '" + std::string(token) + "'");
  return static_cast<int>(*q);
}

double parse_value(std::string_view token, std::string_view what, int line_no) {
  auto v = parse_double(token);
  if (!v)
    throw Error(ErrorKind::MalformedRow,
                line_tag(line_no) + "bad " + std::string(what) + " literal '" +
                    std::string(token) + "'");
  return *v;
}

// Shared shape for the two fixed 8-row formats (schedules and shocks).
template <typename RowHandler>
void parse_sector_rows(std::istream& in, std::size_t fields_per_row, int& line_no,
                       RowHandler&& handle_row) {
  std::array<bool, kSectorCount> seen{};
  std::string line;
  while (next_data_line(in, line, line_no)) {
    auto fields = split_fields(line);
    if (fields.size() != fields_per_row)
      throw Error(ErrorKind::MalformedRow,
                  line_tag(line_no) + "expected " + std::to_string(fields_per_row) +
                      " fields, got " + std::to_string(fields.size()));
    SectorId s = parse_sector(fields[0], line_no);
    if (seen[index_of(s)])
      throw Error(ErrorKind::ExtraRow,
                  line_tag(line_no) + "duplicate row for sector " + std::string(code(s)));
    seen[index_of(s)] = true;
    handle_row(s, fields, line_no);
  }
  for (SectorId s : kAllSectors)
    if (!seen[index_of(s)])
      throw Error(ErrorKind::MissingSector,
                  "no row for sector " + std::string(code(s)));
}

}  // namespace

GvaMatrix parse_gva_csv(std::istream& in) {
  int line_no = 0;
  expect_header(in, {"fy_start", "quarter", "sector", "value"}, line_no);

  GvaMatrix m;
  std::string line;
  while (next_data_line(in, line, line_no)) {
    auto fields = split_fields(line);
    if (fields.size() != 4)
      throw Error(ErrorKind::MalformedRow,
                  line_tag(line_no) + "expected 4 fields, got " +
                      std::to_string(fields.size()));
    auto fy = parse_long(fields[0]);
    if (!fy || *fy < 2011 || *fy > 9999)
      throw Error(ErrorKind::MalformedRow,
                  line_tag(line_no) + "fy_start must be a 4-digit year >= 2011, got '" +
                      std::string(fields[0]) + "'");
    int quarter = parse_quarter(fields[1], line_no);
    SectorId s = parse_sector(fields[2], line_no);
    double value = parse_value(fields[3], "value", line_no);
    try {
      m.set(s, FiscalQuarter(static_cast<int>(*fy), quarter), value);
    } catch (const Error& e) {
      throw Error(e.kind(), line_tag(line_no) + bare_message(e));
    }
  }
  return m;
}

std::string serialize_gva_csv(const GvaMatrix& m) {
  std::string out = "fy_start,quarter,sector,value\n";
  for (const auto& [fq, row] : m.rows()) {
    for (SectorId s : kAllSectors) {
      const auto& slot = row[index_of(s)];
      if (!slot.has_value()) continue;
      out += std::to_string(fq.fy_start());
      out += ',';
      out += std::to_string(fq.quarter());
      out += ',';
      out += code(s);
      out += ',';
      out += format_full(slot->value);
      out += '\n';
    }
  }
  return out;
}

UtilizationSchedule parse_schedule_csv(std::istream& in, std::string label) {
  int line_no = 0;
  expect_header(in, {"sector", "q1", "q2", "q3", "q4"}, line_no);

  UtilizationSchedule::Grid grid{};
  parse_sector_rows(in, 5, line_no, [&](SectorId s, const auto& fields, int ln) {
    for (int q = 1; q <= 4; ++q) {
      double u = parse_value(fields[static_cast<std::size_t>(q)], "factor", ln);
      if (!(u >= 0.0 && u <= 2.0))
        throw Error(ErrorKind::FactorOutOfRange,
                    line_tag(ln) + "factor for " + std::string(code(s)) + " q" +
                        std::to_string(q) + " must lie in [0, 2], got " + format_full(u));
      grid[index_of(s)][q - 1] = u;
    }
  });
  return UtilizationSchedule(grid, std::move(label));
}

std::string serialize_schedule_csv(const UtilizationSchedule& sched) {
  std::string out = "sector,q1,q2,q3,q4\n";
  for (SectorId s : kAllSectors) {
    out += code(s);
    for (int q = 1; q <= 4; ++q) {
      out += ',';
      out += format_full(sched.factor(s, q));
    }
    out += '\n';
  }
  return out;
}

ShockSpec parse_shock_csv(std::istream& in, std::string label) {
  int line_no = 0;
  expect_header(in, {"sector", "growth"}, line_no);

  std::array<double, kSectorCount> growth{};
  parse_sector_rows(in, 2, line_no, [&](SectorId s, const auto& fields, int ln) {
    double g = parse_value(fields[1], "growth", ln);
    if (g <= -1.0)
      throw Error(ErrorKind::GrowthOutOfRange,
                  line_tag(ln) + "growth for " + std::string(code(s)) +
                      " must be > -1, got " + format_full(g));
    growth[index_of(s)] = g;
  });
  return ShockSpec(growth, std::move(label));
}

std::string serialize_shock_csv(const ShockSpec& shocks) {
  std::string out = "sector,growth\n";
  for (SectorId s : kAllSectors) {
    out += code(s);
    out += ',';
    out += format_full(shocks.growth(s));
    out += '\n';
  }
  return out;
}

GvaMatrix parse_gva_table_csv(std::istream& in, int fy_start) {
  int line_no = 0;
  expect_header(in, {"sector", "q1", "q2", "q3", "q4", "total"}, line_no);

  GvaMatrix m;
  std::array<bool, kSectorCount> seen{};
  std::string line;
  while (next_data_line(in, line, line_no)) {
    auto fields = split_fields(line);
    if (fields.size() != 6)
      throw Error(ErrorKind::MalformedRow,
                  line_tag(line_no) + "expected 6 fields, got " +
                      std::to_string(fields.size()));
    if (fields[0] == "TOTAL") continue;  // layout row, not data
    SectorId s = parse_sector(fields[0], line_no);
    if (seen[index_of(s)])
      throw Error(ErrorKind::ExtraRow,
                  line_tag(line_no) + "duplicate row for sector " + std::string(code(s)));
    seen[index_of(s)] = true;
    for (int q = 1; q <= 4; ++q) {
      double value = parse_value(fields[static_cast<std::size_t>(q)], "value", line_no);
      try {
        m.set(s, FiscalQuarter(fy_start, q), value);
      } catch (const Error& e) {
        throw Error(e.kind(), line_tag(line_no) + bare_message(e));
      }
    }
  }
  for (SectorId s : kAllSectors)
    if (!seen[index_of(s)])
      throw Error(ErrorKind::MissingSector, "no row for sector " + std::string(code(s)));
  return m;
}

}  // namespace gvacast

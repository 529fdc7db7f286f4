// gvacast — sectoral GVA scenario engine.
//
// Subcommands:
//   nowcast   fill the one missing quarter of a fiscal year from the prior
//             year's same quarter under per-sector growth shocks
//   project   project a full fiscal year by multiplying a baseline year with
//             a capacity-utilization schedule
//   growth    derive a year-over-year growth table from one or more series
//   figures   emit the growth plot series as CSV files
//   validate  re-derive the reference tables from the fixtures and report
//             per-table pass/fail
//
// Exit codes: 0 success, 1 I/O failure, 2 validation/usage failure,
// 3 reference-table mismatch in `validate`.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gvacast/csv.hpp"
#include "gvacast/errors.hpp"
#include "gvacast/fixtures.hpp"
#include "gvacast/growth.hpp"
#include "gvacast/nowcast.hpp"
#include "gvacast/report.hpp"
#include "gvacast/scenario.hpp"
#include "gvacast/validate.hpp"
#include "../src/text_format.hpp"

namespace {

using namespace gvacast;

// Error::what() is "<Kind>: <message>"; recover the bare message so a
// wrapper can prepend file context without doubling the kind token.
std::string bare_message(const Error& e) {
  return std::string(e.what()).substr(to_string(e.kind()).size() + 2);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  return in;
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

GvaMatrix read_gva_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return parse_gva_csv(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + bare_message(e));
  }
}

UtilizationSchedule read_schedule_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return parse_schedule_csv(in, stem_of(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + bare_message(e));
  }
}

ShockSpec read_shock_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return parse_shock_csv(in, stem_of(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + bare_message(e));
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

// Copies one fiscal year out of m, preserving estimated flags.
GvaMatrix extract_year(const GvaMatrix& m, int fy_start) {
  GvaMatrix year;
  for (int q = 1; q <= 4; ++q) {
    const FiscalQuarter fq(fy_start, q);
    for (SectorId s : kAllSectors)
      if (const GvaEntry* e = m.find(s, fq)) year.set(s, fq, e->value, e->estimated);
  }
  return year;
}

struct NowcastArgs {
  std::string base, shocks, out;
  int fy = 0;
  bool stamp = false;
};

int run_nowcast(const NowcastArgs& a) {
  const GvaMatrix base = read_gva_file(a.base);
  const auto missing = base.missing_quarters(a.fy);
  const ShockSpec shocks = read_shock_file(a.shocks);
  const GvaMatrix completed = complete_fiscal_year(base, a.fy, shocks);
  const FiscalQuarter target = missing.front();

  std::cout << "# estimated quarter " << target.label() << " under shock spec '"
            << shocks.label() << "'\n";
  for (SectorId s : kAllSectors)
    std::cout << target.fy_start() << ',' << target.quarter() << ',' << code(s)
              << ',' << detail::format_full(completed.at(s, target)) << '\n';
  std::cout << "# estimated quarter total "
            << detail::format_full(quarter_total(completed, total_group(), target))
            << '\n';

  std::string text;
  if (a.stamp)
    text += "# gvacast nowcast fy=" + std::to_string(a.fy) + " base=" + a.base +
            " shocks=" + a.shocks + "\n";
  text += serialize_gva_csv(extract_year(completed, a.fy));
  write_text_file(a.out, text);
  return 0;
}

struct ProjectArgs {
  std::string baseline, schedule, out;
  int baseline_fy = 0, target_fy = 0;
  bool stamp = false;
};

int run_project(const ProjectArgs& a) {
  const GvaMatrix baseline = read_gva_file(a.baseline);
  const UtilizationSchedule sched = read_schedule_file(a.schedule);
  const GvaMatrix projected =
      project_fiscal_year(baseline, a.baseline_fy, a.target_fy, sched);

  std::cout << "# projected fiscal year " << a.target_fy << " from " << a.baseline_fy
            << " under schedule '" << sched.label() << "'; annual total "
            << detail::format_full(annual_total(projected, total_group(), a.target_fy))
            << '\n';

  std::string text;
  if (a.stamp)
    text += "# gvacast project baseline-fy=" + std::to_string(a.baseline_fy) +
            " target-fy=" + std::to_string(a.target_fy) + " baseline=" + a.baseline +
            " schedule=" + a.schedule + "\n";
  text += serialize_gva_csv(projected);
  write_text_file(a.out, text);
  return 0;
}

struct GrowthArgs {
  std::vector<std::string> data;
  std::string out;
  int fy = 0;
  int decimals = 1;
  bool groups = false;
  bool markdown = false;
  bool stamp = false;
};

int run_growth(const GrowthArgs& a) {
  GvaMatrix m = read_gva_file(a.data.front());
  for (std::size_t i = 1; i < a.data.size(); ++i)
    m = merge(m, read_gva_file(a.data[i]));

  std::vector<SectorGroup> rows;
  for (SectorId s : kAllSectors) rows.push_back(singleton_group(s));
  if (a.groups) {
    rows.push_back(primary_group());
    rows.push_back(secondary_group());
    rows.push_back(tertiary_group());
  }
  rows.push_back(total_group());

  const GrowthTable table = build_growth_table(m, a.fy, rows);
  const bool md = a.markdown || a.out.ends_with(".md") || a.out.ends_with(".markdown");
  const TableFormat fmt = md ? TableFormat::markdown : TableFormat::csv;

  std::string text;
  if (a.stamp) {
    std::string note = "gvacast growth fy=" + std::to_string(a.fy) +
                       " decimals=" + std::to_string(a.decimals);
    for (const std::string& d : a.data) note += " data=" + d;
    text += md ? "<!-- " + note + " -->\n" : "# " + note + "\n";
  }
  text += render_growth_table(table, a.decimals, fmt);

  if (a.out.empty())
    std::cout << text;
  else
    write_text_file(a.out, text);
  return 0;
}

struct FiguresArgs {
  std::string out_dir = "figures";
};

int run_figures(const FiguresArgs& a) {
  const FixtureSet fx = load_fixtures();
  const GvaMatrix observed = merge(fx.actuals_2018_19, fx.actuals_2019_20_q1q3);
  const GvaMatrix history = complete_fiscal_year(observed, 2019, fx.shock_q4_fy2019);
  const GvaMatrix s1 = merge(history, project_fiscal_year(history, 2019, 2020, fx.scenario1));
  const GvaMatrix s2 = merge(history, project_fiscal_year(history, 2019, 2020, fx.scenario2));
  const std::vector<int> years = {2019, 2020};

  const std::vector<PlotSeries> series = {
      {"total", plot_series(s1, total_group(), years)},
      {"total_s2", plot_series(s2, total_group(), years)},
      {"primary_s1", plot_series(s1, primary_group(), years)},
      {"primary_s2", plot_series(s2, primary_group(), years)},
      {"secondary_s1", plot_series(s1, secondary_group(), years)},
      {"secondary_s2", plot_series(s2, secondary_group(), years)},
      {"tertiary_s1", plot_series(s1, tertiary_group(), years)},
      {"tertiary_s2", plot_series(s2, tertiary_group(), years)},
  };

  std::string prefix = a.out_dir;
  if (!prefix.empty() && prefix.back() != '/') prefix += '/';
  emit_plot_series(series, prefix);
  for (const PlotSeries& s : series)
    std::cout << "wrote " << prefix << s.name << ".csv\n";
  return 0;
}

int run_validate(bool json) {
  const FixtureSet fx = load_fixtures();
  const ValidationReport report = run_golden_validation(fx);
  std::cout << (json ? format_validation_report_json(report)
                     : format_validation_report(report));
  return report.all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sectoral GVA scenario engine: nowcast a missing quarter, project a "
      "fiscal year under capacity-utilization schedules, and derive "
      "year-over-year growth tables."};
  app.require_subcommand(1);

  NowcastArgs nc;
  CLI::App* nowcast = app.add_subcommand(
      "nowcast", "Fill the one missing quarter of a fiscal year");
  nowcast->add_option("--base", nc.base, "input GVA series CSV")->required();
  nowcast->add_option("--fy", nc.fy, "fiscal year to complete (start year, e.g. 2019)")
      ->required();
  nowcast->add_option("--shocks", nc.shocks, "per-sector shock CSV (sector,growth)")
      ->required();
  nowcast->add_option("--out", nc.out, "output CSV for the completed fiscal year")
      ->required();
  nowcast->add_flag("--stamp", nc.stamp, "prepend a provenance comment to the output");

  ProjectArgs pj;
  CLI::App* project = app.add_subcommand(
      "project", "Project a fiscal year under a capacity-utilization schedule");
  project->add_option("--baseline", pj.baseline, "baseline GVA series CSV")->required();
  project->add_option("--baseline-fy", pj.baseline_fy, "baseline fiscal year")
      ->required();
  project->add_option("--target-fy", pj.target_fy, "fiscal year to project")
      ->required();
  project->add_option("--schedule", pj.schedule, "utilization schedule CSV")
      ->required();
  project->add_option("--out", pj.out, "output CSV for the projected year")->required();
  project->add_flag("--stamp", pj.stamp, "prepend a provenance comment to the output");

  GrowthArgs gr;
  CLI::App* growth = app.add_subcommand(
      "growth", "Derive a year-over-year growth table");
  growth->add_option("--data", gr.data, "GVA series CSV(s); multiple files are merged")
      ->required()
      ->expected(-1);
  growth->add_option("--fy", gr.fy, "target fiscal year of the table")->required();
  growth->add_option("--decimals", gr.decimals, "percent decimals shown (0 or 1)")
      ->check(CLI::IsMember({0, 1}));
  growth->add_flag("--groups", gr.groups,
                   "append PRIMARY/SECONDARY/TERTIARY group rows");
  growth->add_flag("--markdown", gr.markdown, "force markdown output");
  growth->add_option("--out", gr.out,
                     "output file (.md selects markdown); stdout when omitted");
  growth->add_flag("--stamp", gr.stamp, "prepend a provenance comment to the output");

  FiguresArgs fg;
  CLI::App* figures = app.add_subcommand(
      "figures", "Emit growth plot series CSVs from the fixture pipeline");
  figures->add_option("--out-dir", fg.out_dir, "directory for the series files");

  bool validate_json = false;
  CLI::App* validate = app.add_subcommand(
      "validate", "Re-derive the reference tables from fixtures and report pass/fail");
  validate->add_flag("--json", validate_json, "machine-readable JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? 0 : 2;
  }

  try {
    if (*nowcast) return run_nowcast(nc);
    if (*project) return run_project(pj);
    if (*growth) return run_growth(gr);
    if (*figures) return run_figures(fg);
    if (*validate) return run_validate(validate_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::IoError ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;  // unreachable: require_subcommand(1) guarantees a dispatch
}

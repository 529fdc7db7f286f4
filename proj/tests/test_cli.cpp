// End-to-end tests of the gvacast command-line tool. The binary path comes
// from the GVACAST_BIN environment variable (set by the test harness); each
// test drives it as a subprocess inside a private temp directory.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gvacast/csv.hpp"
#include "gvacast/fixtures.hpp"
#include "gvacast/growth.hpp"
#include "gvacast/nowcast.hpp"
#include "gvacast/report.hpp"
#include "gvacast/scenario.hpp"

using namespace gvacast;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

struct Env {
  std::string bin;
  fs::path dir;

  Env() {
    const char* b = std::getenv("GVACAST_BIN");
    bin = b ? b : "gvacast";
    dir = fs::temp_directory_path() / ("gvacast_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);

    const FixtureSet& fx = bundled_fixtures();
    spit(dir / "base.csv",
         serialize_gva_csv(merge(fx.actuals_2018_19, fx.actuals_2019_20_q1q3)));
    spit(dir / "shocks.csv", serialize_shock_csv(fx.shock_q4_fy2019));
    spit(dir / "zero.csv",
         serialize_shock_csv(ShockSpec(std::array<double, kSectorCount>{}, "zero")));
    spit(dir / "s1.csv", serialize_schedule_csv(fx.scenario1));
    spit(dir / "s2.csv", serialize_schedule_csv(fx.scenario2));
    std::array<std::array<double, 4>, kSectorCount> ones{};
    for (auto& row : ones) row = {1.0, 1.0, 1.0, 1.0};
    spit(dir / "ident.csv", serialize_schedule_csv(UtilizationSchedule(ones, "ident")));
    spit(dir / "conflict.csv", "fy_start,quarter,sector,value\n2019,1,AGR,123456\n");
  }
};

const Env& env() {
  static Env e;
  return e;
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

// Runs the binary with GVA_SCENARIO_FIXTURES cleared unless the caller
// supplies their own variable prefix.
RunResult run_cli(const std::string& args, std::string env_prefix = "") {
  static int seq = 0;
  const fs::path so = env().dir / ("stdout." + std::to_string(seq));
  const fs::path se = env().dir / ("stderr." + std::to_string(seq));
  ++seq;
  if (env_prefix.empty()) env_prefix = "env -u GVA_SCENARIO_FIXTURES ";
  const std::string cmd = env_prefix + "\"" + env().bin + "\" " + args + " > " +
                          so.string() + " 2> " + se.string();
  const int status = std::system(cmd.c_str());
  const int code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, slurp(so), slurp(se)};
}

std::string path(const char* name) { return (env().dir / name).string(); }

GvaMatrix parse_file(const std::string& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  return parse_gva_csv(in);
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli nowcast writes the completed year and reports the estimate") {
  const RunResult r = run_cli("nowcast --base " + path("base.csv") +
                              " --fy 2019 --shocks " + path("shocks.csv") +
                              " --out " + path("now.csv"));
  CAPTURE(r.err);
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "# estimated quarter 2019Q4 under shock spec 'shocks'"));
  CHECK(contains(r.out, "2019,4,TRD,635517.0"));
  CHECK(contains(r.out, "# estimated quarter total 3137118.6"));

  const GvaMatrix now = parse_file(path("now.csv"));
  const GoldenGvaTable& golden = golden_levels_fy2019();
  for (SectorId s : kAllSectors) {
    const double got = now.at(s, FiscalQuarter(2019, 4));
    CHECK(std::fabs(got - golden.cell[index_of(s)][3]) <= 0.5);
  }
  // The output holds exactly the requested fiscal year.
  CHECK(now.has_full_year(2019));
  CHECK(now.missing_quarters(2018).size() == 4);
  // Observed quarters round-trip bit-exactly, and the estimated quarter is
  // byte-for-byte the library's own computation.
  const FixtureSet& fx = bundled_fixtures();
  CHECK(now.at(SectorId::AGR, FiscalQuarter(2019, 1)) == 439248.0);
  CHECK(now.at(SectorId::MFG, FiscalQuarter(2019, 4)) ==
        fx.actuals_2018_19.at(SectorId::MFG, FiscalQuarter(2018, 4)) *
            (1.0 + fx.shock_q4_fy2019.growth(SectorId::MFG)));

  // --stamp prepends a provenance comment and the file still parses.
  const RunResult rs = run_cli("nowcast --base " + path("base.csv") +
                               " --fy 2019 --shocks " + path("shocks.csv") +
                               " --out " + path("now_stamped.csv") + " --stamp");
  REQUIRE(rs.code == 0);
  const std::string stamped = slurp(path("now_stamped.csv"));
  CHECK(stamped.rfind("# gvacast nowcast fy=2019", 0) == 0);
  const GvaMatrix restamped = parse_file(path("now_stamped.csv"));
  CHECK(restamped.at(SectorId::TRD, FiscalQuarter(2019, 4)) ==
        now.at(SectorId::TRD, FiscalQuarter(2019, 4)));
}

TEST_CASE("cli nowcast with zero shocks copies the prior-year quarter exactly") {
  const RunResult r = run_cli("nowcast --base " + path("base.csv") +
                              " --fy 2019 --shocks " + path("zero.csv") +
                              " --out " + path("now_zero.csv"));
  REQUIRE(r.code == 0);
  const GvaMatrix now = parse_file(path("now_zero.csv"));
  const FixtureSet& fx = bundled_fixtures();
  for (SectorId s : kAllSectors)
    CHECK(now.at(s, FiscalQuarter(2019, 4)) ==
          fx.actuals_2018_19.at(s, FiscalQuarter(2018, 4)));
}

TEST_CASE("cli nowcast on an already complete year exits 2 with NothingMissing") {
  run_cli("nowcast --base " + path("base.csv") + " --fy 2019 --shocks " +
          path("shocks.csv") + " --out " + path("now.csv"));
  const RunResult r = run_cli("nowcast --base " + path("now.csv") +
                              " --fy 2019 --shocks " + path("shocks.csv") +
                              " --out " + path("unused.csv"));
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error: NothingMissing"));
}

TEST_CASE("cli project reproduces the scenario annual totals") {
  run_cli("nowcast --base " + path("base.csv") + " --fy 2019 --shocks " +
          path("shocks.csv") + " --out " + path("now.csv"));

  const RunResult r1 = run_cli("project --baseline " + path("now.csv") +
                               " --baseline-fy 2019 --target-fy 2020 --schedule " +
                               path("s1.csv") + " --out " + path("proj1.csv"));
  CAPTURE(r1.err);
  REQUIRE(r1.code == 0);
  CHECK(contains(r1.out, "# projected fiscal year 2020 from 2019 under schedule 's1'"));
  const GvaMatrix p1 = parse_file(path("proj1.csv"));
  const double a1 = annual_total(p1, total_group(), 2020);
  CHECK(a1 == doctest::Approx(10133061.82288).epsilon(1e-9));
  CHECK(std::fabs(a1 - 10133061.83) <= 0.01);

  const RunResult r2 = run_cli("project --baseline " + path("now.csv") +
                               " --baseline-fy 2019 --target-fy 2020 --schedule " +
                               path("s2.csv") + " --out " + path("proj2.csv"));
  REQUIRE(r2.code == 0);
  const GvaMatrix p2 = parse_file(path("proj2.csv"));
  CHECK(std::fabs(annual_total(p2, total_group(), 2020) - 9875668.0) <= 1.0);
}

TEST_CASE("cli project with an identity schedule relabels the baseline bit-exactly") {
  run_cli("nowcast --base " + path("base.csv") + " --fy 2019 --shocks " +
          path("shocks.csv") + " --out " + path("now.csv"));
  const RunResult r = run_cli("project --baseline " + path("now.csv") +
                              " --baseline-fy 2019 --target-fy 2020 --schedule " +
                              path("ident.csv") + " --out " + path("ident_out.csv"));
  REQUIRE(r.code == 0);
  const GvaMatrix base = parse_file(path("now.csv"));
  const GvaMatrix out = parse_file(path("ident_out.csv"));
  for (int q = 1; q <= 4; ++q)
    for (SectorId s : kAllSectors)
      CHECK(out.at(s, FiscalQuarter(2020, q)) == base.at(s, FiscalQuarter(2019, q)));
}

TEST_CASE("cli growth renders the frozen scenario and history rows") {
  run_cli("nowcast --base " + path("base.csv") + " --fy 2019 --shocks " +
          path("shocks.csv") + " --out " + path("now.csv"));
  run_cli("project --baseline " + path("now.csv") +
          " --baseline-fy 2019 --target-fy 2020 --schedule " + path("s1.csv") +
          " --out " + path("proj1.csv"));

  const RunResult s1 = run_cli("growth --data " + path("now.csv") + " --data " +
                               path("proj1.csv") + " --fy 2020 --decimals 0");
  CAPTURE(s1.err);
  REQUIRE(s1.code == 0);
  CHECK(contains(s1.out, "sector,q1,q2,q3,q4,annual"));
  CHECK(contains(s1.out, "AGR,-25%,-25%,0%,3%,-10%"));
  CHECK(contains(s1.out, "TOTAL,-55%,-33%,-5%,3%,-23%"));

  const RunResult hist = run_cli("growth --data " + path("base.csv") + " --data " +
                                 path("now.csv") + " --fy 2019 --decimals 1");
  REQUIRE(hist.code == 0);
  CHECK(contains(hist.out, "AGR,2.8%,3.1%,3.5%,0.0%,2.3%"));
  CHECK(contains(hist.out, "FIN,6.9%,7.1%,7.3%,-6.0%,4.2%"));

  const RunResult grp = run_cli("growth --data " + path("base.csv") + " --data " +
                                path("now.csv") + " --fy 2019 --decimals 1 --groups");
  REQUIRE(grp.code == 0);
  CHECK(contains(grp.out, "PRIMARY,3.1%,2.6%,3.5%,-1.1%,2.0%"));
  CHECK(contains(grp.out, "TERTIARY,6.9%,7.4%,7.4%,-6.0%,3.9%"));

  const RunResult md = run_cli("growth --data " + path("base.csv") + " --data " +
                               path("now.csv") + " --fy 2019 --markdown");
  REQUIRE(md.code == 0);
  CHECK(contains(md.out, "| Mining & Quarrying"));
  CHECK(contains(md.out, "|:---"));
  CHECK(contains(md.out, "---:|"));
}

TEST_CASE("cli growth output file matches the in-process rendering byte for byte") {
  run_cli("nowcast --base " + path("base.csv") + " --fy 2019 --shocks " +
          path("shocks.csv") + " --out " + path("now.csv"));
  run_cli("project --baseline " + path("now.csv") +
          " --baseline-fy 2019 --target-fy 2020 --schedule " + path("s1.csv") +
          " --out " + path("proj1.csv"));
  const RunResult r = run_cli("growth --data " + path("now.csv") + " --data " +
                              path("proj1.csv") + " --fy 2020 --decimals 0 --out " +
                              path("growth_s1.csv"));
  REQUIRE(r.code == 0);

  const FixtureSet& fx = bundled_fixtures();
  const GvaMatrix history = complete_fiscal_year(
      merge(fx.actuals_2018_19, fx.actuals_2019_20_q1q3), 2019, fx.shock_q4_fy2019);
  const GvaMatrix merged =
      merge(history, project_fiscal_year(history, 2019, 2020, fx.scenario1));
  std::vector<SectorGroup> rows;
  for (SectorId s : kAllSectors) rows.push_back(singleton_group(s));
  rows.push_back(total_group());
  const std::string expected =
      render_growth_table(build_growth_table(merged, 2020, rows), 0, TableFormat::csv);
  CHECK(slurp(path("growth_s1.csv")) == expected);
}

TEST_CASE("cli growth rejects conflicting inputs") {
  run_cli("nowcast --base " + path("base.csv") + " --fy 2019 --shocks " +
          path("shocks.csv") + " --out " + path("now.csv"));
  const RunResult r = run_cli("growth --data " + path("now.csv") + " --data " +
                              path("conflict.csv") + " --fy 2019");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "ConflictingEntry"));
}

TEST_CASE("cli validate passes on the bundled fixtures") {
  const RunResult r = run_cli("validate");
  CAPTURE(r.out);
  CAPTURE(r.err);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "overall: PASS"));

  const RunResult j = run_cli("validate --json");
  CHECK(j.code == 0);
  CHECK(contains(j.out, "\"all_pass\": true"));
}

TEST_CASE("cli validate honors GVA_SCENARIO_FIXTURES") {
  const FixtureSet& fx = bundled_fixtures();
  const fs::path good = env().dir / "fx";
  fs::create_directories(good);
  spit(good / "actuals_2019_20_q1q3.csv", serialize_gva_csv(fx.actuals_2019_20_q1q3));
  spit(good / "actuals_2018_19.csv", serialize_gva_csv(fx.actuals_2018_19));
  spit(good / "shock_q4_fy2019.csv", serialize_shock_csv(fx.shock_q4_fy2019));
  spit(good / "scenario1.csv", serialize_schedule_csv(fx.scenario1));
  spit(good / "scenario2.csv", serialize_schedule_csv(fx.scenario2));
  spit(good / "scenario1_rounded.csv", serialize_schedule_csv(fx.scenario1_rounded));
  spit(good / "scenario2_rounded.csv", serialize_schedule_csv(fx.scenario2_rounded));

  const RunResult ok =
      run_cli("validate", "env GVA_SCENARIO_FIXTURES=" + good.string() + " ");
  CAPTURE(ok.out);
  CAPTURE(ok.err);
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "overall: PASS"));

  // Same directory with one observed value nudged: validation must fail.
  const fs::path bad = env().dir / "fx_bad";
  fs::create_directories(bad);
  for (const auto& entry : fs::directory_iterator(good))
    fs::copy_file(entry.path(), bad / entry.path().filename(),
                  fs::copy_options::overwrite_existing);
  GvaMatrix tweaked;
  for (int q = 1; q <= 3; ++q)
    for (SectorId s : kAllSectors) {
      double v = fx.actuals_2019_20_q1q3.at(s, FiscalQuarter(2019, q));
      if (s == SectorId::AGR && q == 1) v += 5000.0;
      tweaked.set(s, FiscalQuarter(2019, q), v);
    }
  spit(bad / "actuals_2019_20_q1q3.csv", serialize_gva_csv(tweaked));

  const RunResult fail =
      run_cli("validate", "env GVA_SCENARIO_FIXTURES=" + bad.string() + " ");
  CHECK(fail.code == 3);
  CHECK(contains(fail.out, "FAIL"));
  CHECK(contains(fail.out, "overall: FAIL"));
}

TEST_CASE("cli figures writes eight deterministic series files") {
  const fs::path figs = env().dir / "figs";
  const RunResult r = run_cli("figures --out-dir " + figs.string());
  CAPTURE(r.err);
  REQUIRE(r.code == 0);

  const std::vector<std::string> names = {"total",        "total_s2",    "primary_s1",
                                          "primary_s2",   "secondary_s1", "secondary_s2",
                                          "tertiary_s1",  "tertiary_s2"};
  std::vector<std::string> first;
  for (const std::string& n : names) {
    const fs::path p = figs / (n + ".csv");
    REQUIRE(fs::exists(p));
    CHECK(contains(r.out, "wrote " + figs.string() + "/" + n + ".csv"));
    const std::string body = slurp(p);
    CHECK(body.rfind("quarter_label,growth_fraction\n", 0) == 0);
    first.push_back(body);
  }

  // A second run regenerates the files byte for byte.
  const RunResult again = run_cli("figures --out-dir " + figs.string());
  REQUIRE(again.code == 0);
  for (std::size_t i = 0; i < names.size(); ++i)
    CHECK(slurp(figs / (names[i] + ".csv")) == first[i]);
}

TEST_CASE("cli usage and I/O errors use the documented exit codes") {
  // Missing required flag.
  CHECK(run_cli("nowcast --fy 2019").code == 2);
  // Unknown subcommand.
  CHECK(run_cli("frobnicate").code == 2);
  // Help succeeds and mentions the subcommands.
  const RunResult help = run_cli("--help");
  CHECK(help.code == 0);
  CHECK(contains(help.out, "nowcast"));
  CHECK(contains(help.out, "validate"));
  // Nonexistent input file is an I/O failure.
  const RunResult io = run_cli("nowcast --base " + path("no_such_file.csv") +
                               " --fy 2019 --shocks " + path("shocks.csv") +
                               " --out " + path("unused.csv"));
  CHECK(io.code == 1);
  CHECK(contains(io.err, "error: IoError"));
  // A growth table with bad precision is rejected by flag validation.
  CHECK(run_cli("growth --data " + path("base.csv") + " --fy 2019 --decimals 2").code ==
        2);
}

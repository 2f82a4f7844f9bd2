#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <doctest.h>
#include <json.hpp>

#include "ctcsim/cli.hpp"

using namespace ctcsim;
using namespace ctcsim::cli;
using nlohmann::json;

namespace {

struct CmdResult {
  int code;
  std::string out;
  std::string err;
};

template <typename Fn>
CmdResult run(Fn fn, const RunConfig& cfg) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = fn(cfg, out, err);
  return CmdResult{code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (const char c : text) {
    if (c == '\n') {
      ++lines;
    }
  }
  return lines;
}

const char* cli_path() { return std::getenv("CTCSIM_CLI"); }

int run_binary(const std::string& args) {
  const std::string cmd = std::string("\"") + cli_path() + "\" " + args;
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path tmp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("format_number uses 12 significant digits") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(2.5) == "2.5");
  CHECK(format_number(-7.0) == "-7");
  CHECK(format_number(std::nan("")) == "nan");
}

TEST_CASE("scan-fig2: default grid emits 40000 data rows") {
  const CmdResult r = run(cmd_scan_fig2, RunConfig{});
  CHECK(r.code == kExitOk);
  CHECK(count_lines(r.out) == 40001);  // header + 200*200
  CHECK(r.out.rfind("c_z_rest,beta,c_z_beta,region\n", 0) == 0);
}

TEST_CASE("scan-fig2: degenerate ranges give a single row") {
  RunConfig cfg;
  cfg.grid.speed_min = cfg.grid.speed_max = 1.0;
  cfg.grid.beta_min = cfg.grid.beta_max = 0.5;
  const CmdResult r = run(cmd_scan_fig2, cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out == "c_z_rest,beta,c_z_beta,region\n1,0.5,1,POSITIVE_TIME\n");
}

TEST_CASE("scan-fig2: identical configs produce identical bytes") {
  RunConfig cfg;
  cfg.grid.speed_count = 50;
  cfg.grid.beta_count = 50;
  const CmdResult a = run(cmd_scan_fig2, cfg);
  const CmdResult b = run(cmd_scan_fig2, cfg);
  CHECK(a.out == b.out);

  cfg.format = OutputFormat::Json;
  const CmdResult ja = run(cmd_scan_fig2, cfg);
  const CmdResult jb = run(cmd_scan_fig2, cfg);
  CHECK(ja.out == jb.out);
  CHECK(json::parse(ja.out).size() == 2500);
}

TEST_CASE("scan-fig2: bad grid exits 2") {
  RunConfig cfg;
  cfg.grid.beta_max = 1.5;
  const CmdResult r = run(cmd_scan_fig2, cfg);
  CHECK(r.code == kExitUsage);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("pulse-fig3: zero boost zeroes the pulse column") {
  RunConfig cfg;
  cfg.pulse.beta = 0.0;
  cfg.pulse.f_count = 41;
  cfg.format = OutputFormat::Json;
  const CmdResult r = run(cmd_pulse_fig3, cfg);
  CHECK(r.code == kExitOk);
  const json rows = json::parse(r.out);
  REQUIRE(rows.size() == 41);
  for (const auto& row : rows) {
    CHECK(row["v_pulse"].get<double>() == 0.0);
    CHECK_FALSE(row["horizon"].get<bool>());
  }
}

TEST_CASE("pulse-fig3: horizon flag near the locus at beta 0.6") {
  RunConfig cfg;  // defaults: beta 0.6, F in [1, 6.4], 541 rows
  cfg.format = OutputFormat::Json;
  const CmdResult r = run(cmd_pulse_fig3, cfg);
  CHECK(r.code == kExitOk);
  const json rows = json::parse(r.out);
  REQUIRE(rows.size() == 541);
  const double locus = 25.0 / 9.0;
  int flagged = 0;
  for (const auto& row : rows) {
    if (row["horizon"].get<bool>()) {
      ++flagged;
      CHECK(std::fabs(row["F"].get<double>() - locus) <= 0.01);
    }
  }
  CHECK(flagged >= 1);
}

TEST_CASE("pulse-fig3: invalid boost exits 2") {
  RunConfig cfg;
  cfg.pulse.beta = 1.5;
  CHECK(run(cmd_pulse_fig3, cfg).code == kExitUsage);
  cfg.pulse.beta = -0.2;
  CHECK(run(cmd_pulse_fig3, cfg).code == kExitUsage);
}

TEST_CASE("flux-profile: identity target") {
  RunConfig cfg;
  cfg.f_target = 1.0;
  cfg.dc = 0.0;
  const CmdResult r = run(cmd_flux_profile, cfg);
  CHECK(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["ac"].get<double>() == 0.0);
  CHECK(j["verdict"] == "FEASIBLE");
}

TEST_CASE("flux-profile: ceiling target cancels the bias") {
  RunConfig cfg;
  cfg.f_target = 6.39245322149966;
  cfg.dc = 0.45;
  const CmdResult r = run(cmd_flux_profile, cfg);
  CHECK(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(std::fabs(j["total"].get<double>()) < 1e-7);
  CHECK(j["c_ratio"].get<double>() == doctest::Approx(2.52833012510227).epsilon(1e-8));
}

TEST_CASE("flux-profile: negative squared speed exits 3 with a verdict record") {
  RunConfig cfg;
  cfg.f_target = -1.0;
  const CmdResult r = run(cmd_flux_profile, cfg);
  CHECK(r.code == kExitInfeasible);
  const json j = json::parse(r.out);
  CHECK(j["verdict"] == "CHRONOLOGY_PROTECTED");
  CHECK(j["c_ratio"].is_null());
}

TEST_CASE("flux-profile: target beyond the window exits 3") {
  RunConfig cfg;
  cfg.f_target = 9.0;
  const CmdResult r = run(cmd_flux_profile, cfg);
  CHECK(r.code == kExitInfeasible);
  CHECK(json::parse(r.out)["verdict"] == "OUT_OF_RANGE");
}

TEST_CASE("flux-profile: wire mode emits per-radius rows") {
  RunConfig cfg;
  cfg.wire_radius = 1.0;
  cfg.wire_exponent = 2;
  cfg.r_min = 0.8;
  cfg.r_max = 1.2;
  cfg.r_count = 5;
  cfg.format = OutputFormat::Csv;
  const CmdResult r = run(cmd_flux_profile, cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("r,t,phi_total_fraction\n", 0) == 0);
  CHECK(count_lines(r.out) == 6);

  cfg.format = OutputFormat::Json;
  const json j = json::parse(run(cmd_flux_profile, cfg).out);
  CHECK(j["samples"].size() == 5);

  // a radius close to the singularity needs an out-of-window factor
  cfg.r_min = 0.2;
  const CmdResult bad = run(cmd_flux_profile, cfg);
  CHECK(bad.code == kExitInfeasible);
}

TEST_CASE("flux-profile: invalid dc exits 2") {
  RunConfig cfg;
  cfg.dc = 0.48;  // beyond the default ceiling
  CHECK(run(cmd_flux_profile, cfg).code == kExitUsage);
}

TEST_CASE("ctc-check: loop point tells the whole story") {
  RunConfig cfg;
  cfg.f1 = 6.25;
  cfg.f2 = 6.25;
  cfg.beta = 0.8;
  const CmdResult r = run(cmd_ctc_check, cfg);
  CHECK(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["region"] == "CTC");
  CHECK(j["thresholds"]["ctc_beta"].get<double>() ==
        doctest::Approx(0.6896551724137931).epsilon(1e-12));
  CHECK(j["round_trip_time"].get<double>() ==
        doctest::Approx(-0.18823529411764706).epsilon(1e-12));
  CHECK(j["return_leg_speed"].get<double>() == doctest::Approx(-1.7).epsilon(1e-12));
  CHECK(j["feasibility"]["verdict"] == "CHRONOLOGY_PROTECTED");
  // the pulse route needs a backward bias pulse at this point
  CHECK(j["pulse"]["v_pulse"].get<double>() == doctest::Approx(-1.4).epsilon(1e-12));
  CHECK(j["pulse"]["feasibility"]["verdict"] == "CHRONOLOGY_PROTECTED");
  REQUIRE_FALSE(j["classical_assembly"].is_null());
  CHECK(j["classical_assembly"]["theta1_deg"].get<double>() ==
        doctest::Approx(59.03624346792648).epsilon(1e-10));
}

TEST_CASE("ctc-check: flat wires are feasible and loop-free") {
  RunConfig cfg;
  cfg.f1 = 1.0;
  cfg.f2 = 1.0;
  cfg.beta = 0.9;
  const json j = json::parse(run(cmd_ctc_check, cfg).out);
  CHECK(j["region"] == "POSITIVE_TIME");
  CHECK(j["feasibility"]["verdict"] == "FEASIBLE");
  CHECK(j["pulse"]["v_pulse"].get<double>() == 0.0);
  CHECK(j["pulse"]["feasibility"]["verdict"] == "FEASIBLE");
  CHECK(j["classical_assembly"].is_null());
}

TEST_CASE("ctc-check: near-threshold round trip is tiny") {
  RunConfig cfg;
  cfg.f1 = 6.25;
  cfg.f2 = 6.25;
  cfg.beta = 0.68966;
  const json j = json::parse(run(cmd_ctc_check, cfg).out);
  CHECK(std::fabs(j["round_trip_time"].get<double>()) < 1e-5);
  CHECK(j["region"] == "CTC");
}

TEST_CASE("ctc-check: singular boundary point") {
  RunConfig cfg;
  cfg.f1 = 6.25;
  cfg.f2 = 6.25;
  cfg.beta = 0.4;  // sqrt(6.25) * 0.4 == 1 exactly
  const json j = json::parse(run(cmd_ctc_check, cfg).out);
  CHECK(j["region"] == "SINGULAR");
  CHECK(j["round_trip_time"].is_null());
  CHECK(j["feasibility"].is_null());
}

TEST_CASE("ctc-check: validation failures exit 2") {
  RunConfig cfg;
  cfg.f1 = 0.5;
  cfg.f2 = 1.0;
  cfg.beta = 0.5;
  CHECK(run(cmd_ctc_check, cfg).code == kExitUsage);

  cfg = RunConfig{};
  cfg.f1 = cfg.f2 = 2.0;
  cfg.beta = 0.5;
  cfg.format = OutputFormat::Csv;  // reports are JSON only
  CHECK(run(cmd_ctc_check, cfg).code == kExitUsage);
}

TEST_CASE("optics-design: symmetric report") {
  RunConfig cfg;
  cfg.f1 = 6.25;
  cfg.f2 = 6.25;
  cfg.mode = AssemblyMode::Symmetric;
  const CmdResult r = run(cmd_optics_design, cfg);
  CHECK(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["assembly"]["theta1_deg"].get<double>() ==
        doctest::Approx(59.03624346792648).epsilon(1e-10));
  CHECK(j["assembly"]["theta2_deg"].get<double>() ==
        doctest::Approx(35.53767779197438).epsilon(1e-10));
  CHECK(j["timeline"]["annihilation_x"].get<double>() == doctest::Approx(0.5));
  CHECK(j["timeline"]["meets_junction"].get<bool>());
}

TEST_CASE("optics-design: event count for two samples per image") {
  RunConfig cfg;
  cfg.f1 = 6.25;
  cfg.f2 = 6.25;
  cfg.n_samples = 2;
  const json j = json::parse(run(cmd_optics_design, cfg).out);
  CHECK(j["timeline"]["events"].size() == 7);
}

TEST_CASE("optics-design: csv layout") {
  RunConfig cfg;
  cfg.f1 = 6.25;
  cfg.f2 = 6.25;
  cfg.format = OutputFormat::Csv;
  const CmdResult r = run(cmd_optics_design, cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("# mode=symmetric\n", 0) == 0);
  CHECK(r.out.find("\ntime,x,image_id,kind\n") != std::string::npos);
}

TEST_CASE("optics-design: loop condition failures exit 4") {
  RunConfig cfg;
  cfg.f1 = 1.0;
  cfg.f2 = 1.0;
  CHECK(run(cmd_optics_design, cfg).code == kExitNoCtc);

  cfg = RunConfig{};
  cfg.f1 = cfg.f2 = 6.25;
  cfg.mode = AssemblyMode::AsGiven;
  cfg.beta = 0.6;  // below the threshold
  CHECK(run(cmd_optics_design, cfg).code == kExitNoCtc);

  cfg.beta = 1.5;
  CHECK(run(cmd_optics_design, cfg).code == kExitUsage);
}

TEST_CASE("binary: determinism, exit codes and config file") {
  if (cli_path() == nullptr) {
    MESSAGE("CTCSIM_CLI not set; skipping binary-level checks");
    return;
  }
  const auto out_a = tmp_file("ctcsim_cli_test_a.csv");
  const auto out_b = tmp_file("ctcsim_cli_test_b.csv");
  const std::string scan_args = "scan-fig2 --speed-count 40 --beta-count 40 --out ";
  CHECK(run_binary(scan_args + out_a.string()) == 0);
  CHECK(run_binary(scan_args + out_b.string()) == 0);
  CHECK(slurp(out_a) == slurp(out_b));
  CHECK(count_lines(slurp(out_a)) == 1601);

  CHECK(run_binary("flux-profile --F -1 > /dev/null 2>/dev/null") == 3);
  CHECK(run_binary("optics-design --F1 1 --F2 1 2>/dev/null") == 4);
  CHECK(run_binary("scan-fig2 --beta-range 0:1.5 2>/dev/null") == 2);
  CHECK(run_binary("pulse-fig3 --beta 1.5 2>/dev/null") == 2);
  CHECK(run_binary("pulse-fig3 2>/dev/null") == 2);  // --beta required
  CHECK(run_binary("--help > /dev/null") == 0);
  CHECK(run_binary("no-such-command 2>/dev/null") == 2);

  // config file sets flags; explicit flags win
  const auto cfg_path = tmp_file("ctcsim_cli_test.cfg");
  {
    std::ofstream cfg_file(cfg_path);
    cfg_file << "flux-ceiling=0.3\n";
  }
  const auto report = tmp_file("ctcsim_cli_test_report.json");
  const std::string check_args = "ctc-check --F1 4 --F2 4 --beta 0.3 --dc 0.2 --config " +
                                 cfg_path.string() + " --out " + report.string();
  CHECK(run_binary(check_args) == 0);
  CHECK(json::parse(slurp(report))["inputs"]["flux_ceiling"].get<double>() == 0.3);
  CHECK(run_binary(check_args + " --flux-ceiling 0.45") == 0);
  CHECK(json::parse(slurp(report))["inputs"]["flux_ceiling"].get<double>() == 0.45);

  for (const auto& p : {out_a, out_b, cfg_path, report}) {
    std::filesystem::remove(p);
  }
}

// SPDX-License-Identifier: Apache-2.0
//
// rramc - memory compiler driver.
//   generate      elaborate a structural netlist and SPICE view
//   simulate      run an operation script against the behavioral model
//   characterize  sweep the built-in test suite across corners
//   calibrate     re-derive the default technology profile
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rramc/calibrate.hpp"
#include "rramc/characterize.hpp"
#include "rramc/errors.hpp"
#include "rramc/netlist.hpp"
#include "rramc/simulator.hpp"

namespace fs = std::filesystem;
using namespace rramc;

namespace {

constexpr int kExitFail = 1;   // tests or expectations failed
constexpr int kExitUsage = 2;  // bad arguments, profile or script

TechnologyProfile resolve_profile(const std::string& path) {
  if (path.empty()) return default_profile();
  return load_profile(path);
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write '" + p.string() + "'");
  out << content;
}

std::uint64_t parse_u64(const std::string& tok, int line) {
  try {
    size_t pos = 0;
    std::uint64_t v;
    if (tok.rfind("0b", 0) == 0 || tok.rfind("0B", 0) == 0) {
      v = std::stoull(tok.substr(2), &pos, 2);
      pos += 2;
    } else {
      v = std::stoull(tok, &pos, 0);
    }
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ScriptError("line " + std::to_string(line) + ": bad number '" +
                          tok + "'",
                      line);
  }
}

double parse_f64(const std::string& tok, int line) {
  try {
    size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ScriptError("line " + std::to_string(line) + ": bad number '" +
                          tok + "'",
                      line);
  }
}

struct ScriptStats {
  int failures = 0;
  std::vector<std::string> messages;
};

/// Executes an operation script.  Grammar (one statement per line,
/// '#' comments):
///   reset
///   write <x> <y> <data>
///   read <x> <y> [<expect>]
///   set_cell <col> <row> <ohms>
ScriptStats run_script(Simulator& sim, const std::string& text) {
  ScriptStats stats;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;

    try {
      if (tok[0] == "reset" && tok.size() == 1) {
        sim.reset();
      } else if (tok[0] == "write" && tok.size() == 4) {
        sim.write(static_cast<std::uint32_t>(parse_u64(tok[1], lineno)),
                  static_cast<std::uint32_t>(parse_u64(tok[2], lineno)),
                  parse_u64(tok[3], lineno));
      } else if (tok[0] == "read" && (tok.size() == 3 || tok.size() == 4)) {
        ReadOutcome out =
            sim.read(static_cast<std::uint32_t>(parse_u64(tok[1], lineno)),
                     static_cast<std::uint32_t>(parse_u64(tok[2], lineno)));
        if (tok.size() == 4) {
          const std::uint64_t expect = parse_u64(tok[3], lineno);
          const std::uint64_t full =
              sim.geometry().word_bits >= 64
                  ? ~0ull
                  : ((1ull << sim.geometry().word_bits) - 1);
          if (out.data != expect || out.reliable_mask != full) {
            ++stats.failures;
            std::ostringstream msg;
            msg << "line " << lineno << ": read x=" << tok[1]
                << " y=" << tok[2] << " expected 0x" << std::hex << expect
                << " got 0x" << out.data << std::dec << " (reliable "
                << out.reliable_mask << ")";
            stats.messages.push_back(msg.str());
          }
        }
      } else if (tok[0] == "set_cell" && tok.size() == 4) {
        sim.set_cell(static_cast<std::uint32_t>(parse_u64(tok[1], lineno)),
                     static_cast<std::uint32_t>(parse_u64(tok[2], lineno)),
                     parse_f64(tok[3], lineno));
      } else {
        throw ScriptError("line " + std::to_string(lineno) +
                              ": unknown statement '" + tok[0] + "'",
                          lineno);
      }
    } catch (const ScriptError&) {
      throw;
    } catch (const SimError& e) {
      throw ScriptError(
          "line " + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  return stats;
}

std::string stats_text(const Netlist& nl, const TechnologyProfile& t) {
  std::ostringstream out;
  const MemoryGeometry& g = nl.geometry();
  out << "design " << nl.design() << "\n";
  out << "geometry M=" << g.rows << " N=" << g.cols << " B=" << g.word_bits
      << " X=" << g.col_bits << " Y=" << g.row_bits << "\n";
  out << "nets " << nl.net_count() << "\n";
  out << "instances " << nl.instance_count() << "\n";
  const CellKind kinds[] = {
      CellKind::MemCell1T1R, CellKind::RefCell,       CellKind::MuxBlock,
      CellKind::MuxSwitch,   CellKind::WriteDriver,   CellKind::SenseAmp,
      CellKind::LevelDown,   CellKind::TriStateBuffer, CellKind::Controller,
      CellKind::DecoderX,    CellKind::DecoderY};
  for (CellKind k : kinds)
    out << "  " << to_string(k) << " " << nl.count(k) << "\n";
  const AreaEstimate a = estimate_area(g, t);
  out << "area_um " << format_double(a.width_m * 1e6) << " x "
      << format_double(a.height_m * 1e6) << "\n";
  out << "area_mm2 " << format_double(a.area_m2 * 1e6) << "\n";
  out << "density_mb_per_mm2 " << format_double(a.density_mb_per_mm2) << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rramc - tool-independent resistive memory compiler"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string profile_path;
  std::string out_dir = ".";
  app.add_option("--profile", profile_path,
                 "technology profile (default: built-in calibrated)");
  app.add_option("-o,--out", out_dir, "output directory");

  std::uint64_t M = 0, N = 0, B = 0;
  double clock_hz = 12.5e6;
  std::string corner = "TT";

  auto* gen = app.add_subcommand("generate", "elaborate a netlist");
  gen->add_option("-M", M, "rows")->required();
  gen->add_option("-N", N, "columns")->required();
  gen->add_option("-B", B, "word bits")->required();

  auto* sim_cmd = app.add_subcommand("simulate", "run an operation script");
  sim_cmd->add_option("-M", M, "rows")->required();
  sim_cmd->add_option("-N", N, "columns")->required();
  sim_cmd->add_option("-B", B, "word bits")->required();
  sim_cmd->add_option("--clock", clock_hz, "clock frequency [Hz]");
  sim_cmd->add_option("--corner", corner, "process corner");
  std::string script_path;
  sim_cmd->add_option("--script", script_path, "operation script")
      ->required();

  auto* chr = app.add_subcommand("characterize", "run the test suite");
  chr->add_option("-M", M, "rows (omit for the default suite)");
  chr->add_option("-N", N, "columns");
  chr->add_option("-B", B, "word bits");
  std::vector<double> clocks;
  chr->add_option("--clock", clocks, "clock frequencies [Hz]");
  std::vector<std::string> corner_list;
  chr->add_option("--corners", corner_list,
                  "corners to sweep (default: all)")
      ->delimiter(',');
  double ratio_a = 0.3;
  chr->add_option("--a", ratio_a, "read preset ratio a");

  auto* cal = app.add_subcommand("calibrate", "re-derive default profile");
  std::string cal_out = "default.profile";
  cal->add_option("--profile-out", cal_out,
                  "output file name (inside the output directory)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const fs::path out(out_dir);
    fs::create_directories(out);

    if (gen->parsed()) {
      const TechnologyProfile t = resolve_profile(profile_path);
      const MemoryGeometry g = validate_geometry(M, N, B);
      const Netlist nl = elaborate(g, t);
      write_file(out / "netlist.rnl", emit_structural(nl));
      write_file(out / "netlist.sp", emit_spice(nl, t));
      const std::string stats = stats_text(nl, t);
      write_file(out / "stats.txt", stats);
      std::cout << stats;
      return 0;
    }

    if (sim_cmd->parsed()) {
      const TechnologyProfile t = resolve_profile(profile_path);
      const MemoryGeometry g = validate_geometry(M, N, B);
      std::ifstream in(script_path, std::ios::binary);
      if (!in) throw ScriptError("cannot open script '" + script_path + "'", 0);
      std::ostringstream buf;
      buf << in.rdbuf();

      Simulator sim(g, t, clock_hz, FillRule::uniform(1e6), corner);
      const ScriptStats stats = run_script(sim, buf.str());
      write_file(out / "waves.vcd", sim.vcd());
      write_file(out / "run.log", sim.run_log());
      for (const auto& m : stats.messages) std::cerr << "FAIL: " << m << "\n";
      std::cout << "simulated " << sim.cycle() << " cycles, "
                << stats.failures << " expectation failure(s)\n";
      return stats.failures == 0 ? 0 : kExitFail;
    }

    if (chr->parsed()) {
      const TechnologyProfile t = resolve_profile(profile_path);
      std::vector<SweepConfig> configs;
      if (M || N || B) {
        if (!(M && N && B))
          throw Error("specify all of -M, -N, -B or none");
        const MemoryGeometry g = validate_geometry(M, N, B);
        for (double c : clocks.empty() ? std::vector<double>{12.5e6, 25e6}
                                       : clocks)
          configs.push_back({g, c});
      } else if (!clocks.empty()) {
        for (double c : clocks)
          for (const auto& cfg : default_suite())
            if (cfg.clock_hz == 12.5e6) configs.push_back({cfg.geometry, c});
      } else {
        configs = default_suite();
      }
      const std::vector<std::string> corners =
          corner_list.empty() ? corner_names(t) : corner_list;
      const CharacterizationReport rep =
          characterize_sweep(configs, t, corners, ratio_a);
      write_file(out / "report.txt", rep.text());
      write_file(out / "report.jsonl", rep.jsonl());
      std::cout << rep.text();
      return rep.all_pass() ? 0 : kExitFail;
    }

    if (cal->parsed()) {
      const std::string text = calibrated_profile_text();
      write_file(out / cal_out, text);
      std::cout << "wrote " << (out / cal_out).string() << "\n";
      return 0;
    }
  } catch (const ScriptError& e) {
    std::cerr << "script error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

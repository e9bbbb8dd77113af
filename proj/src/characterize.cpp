// SPDX-License-Identifier: Apache-2.0
#include "rramc/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>

#include "rramc/analog.hpp"
#include "rramc/errors.hpp"

#include "json.hpp"

namespace rramc {

const char* to_string(TestKind k) {
  switch (k) {
    case TestKind::W1: return "W1";
    case TestKind::W2: return "W2";
    case TestKind::R1: return "R1";
    case TestKind::R2: return "R2";
  }
  return "?";
}

std::uint64_t w1_pattern(std::uint32_t word_bits) {
  std::uint64_t v = 0;
  for (std::uint32_t b = 1; b < word_bits; b += 2) v |= 1ull << b;
  return v;
}

std::uint64_t w2_pattern(std::uint32_t word_bits) {
  const std::uint64_t mask =
      word_bits >= 64 ? ~0ull : ((1ull << word_bits) - 1ull);
  return ~w1_pattern(word_bits) & mask;
}

TestResult run_w_test(const MemoryGeometry& g, const TechnologyProfile& t,
                      double clock_hz, const std::string& corner,
                      bool complement) {
  Simulator sim(g, t, clock_hz, FillRule::uniform(1e6), corner);
  sim.reset();
  const WordAddress addr = worst_case_write_address(g);
  const std::uint64_t pattern =
      complement ? w2_pattern(g.word_bits) : w1_pattern(g.word_bits);
  const WriteOutcome out = sim.write(addr.x, addr.y, pattern);

  TestResult r;
  r.kind = complement ? TestKind::W2 : TestKind::W1;
  r.expected = pattern;
  r.bit_margins.resize(g.word_bits);
  const double vth = write_threshold(t);
  r.worst_margin = 0.0;
  for (std::uint32_t b = 0; b < g.word_bits; ++b) {
    const int bit = static_cast<int>((pattern >> b) & 1);
    const double progress = bit ? -out.vpn[b] : out.vpn[b];
    r.bit_margins[b] = progress - vth;
    if (b == 0 || r.bit_margins[b] < r.worst_margin)
      r.worst_margin = r.bit_margins[b];
    if (out.ok[b]) r.got |= 1ull << b;
  }
  r.pass = out.all_ok;
  return r;
}

std::pair<TestResult, TestResult> run_w_tests(const MemoryGeometry& g,
                                              const TechnologyProfile& t,
                                              double clock_hz,
                                              const std::string& corner) {
  return {run_w_test(g, t, clock_hz, corner, false),
          run_w_test(g, t, clock_hz, corner, true)};
}

TestResult run_r_test(const MemoryGeometry& g, const TechnologyProfile& t,
                      double clock_hz, const std::string& corner, double a,
                      bool complement) {
  if (!(a > 0 && a < 1)) throw SimError("resistance ratio a out of (0, 1)");
  // Preset values are nominal: the memristor does not shift with corner.
  const double lrs = a * t.r_ref;
  const double hrs = t.r_ref / a;

  Simulator sim(g, t, clock_hz, FillRule::uniform(1e6), corner);
  sim.reset();
  const WordAddress addr = worst_case_read_address(g);
  std::uint64_t expected = 0;
  for (std::uint32_t b = 0; b < g.word_bits; ++b) {
    const bool high = complement ? (b % 2 == 1) : (b % 2 == 0);
    sim.set_cell(g.column_of(addr.x, b), addr.y, high ? hrs : lrs);
    if (high) expected |= 1ull << b;
  }
  const ReadOutcome out = sim.read(addr.x, addr.y);

  TestResult r;
  r.kind = complement ? TestKind::R2 : TestKind::R1;
  r.expected = expected;
  r.got = out.data;
  r.bit_margins.resize(g.word_bits);
  r.pass = true;
  for (std::uint32_t b = 0; b < g.word_bits; ++b) {
    const bool correct =
        ((out.data >> b) & 1) == ((expected >> b) & 1);
    const bool bit_pass = correct && out.bits[b].reliable;
    r.bit_margins[b] =
        correct ? out.bits[b].margin : -std::abs(out.bits[b].margin);
    if (b == 0 || r.bit_margins[b] < r.worst_margin)
      r.worst_margin = r.bit_margins[b];
    r.pass = r.pass && bit_pass;
  }
  return r;
}

std::pair<TestResult, TestResult> run_r_tests(const MemoryGeometry& g,
                                              const TechnologyProfile& t,
                                              double clock_hz,
                                              const std::string& corner,
                                              double a) {
  return {run_r_test(g, t, clock_hz, corner, a, false),
          run_r_test(g, t, clock_hz, corner, a, true)};
}

AreaEstimate estimate_area(const MemoryGeometry& g,
                           const TechnologyProfile& t) {
  AreaEstimate e;
  e.width_m = g.cols * t.cell_pitch_x + t.periphery_width;
  e.height_m = g.rows * t.cell_pitch_y + t.periphery_height;
  e.area_m2 = e.width_m * e.height_m * (1.0 + t.periphery_area_overhead);
  // bits / 1e6 = Mb; area_m2 * 1e6 = mm^2.
  e.density_mb_per_mm2 =
      static_cast<double>(g.capacity_bits()) / (e.area_m2 * 1e12);
  return e;
}

bool CharacterizationReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

std::size_t CharacterizationReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (!r.pass) ++n;
  return n;
}

std::string CharacterizationReport::text() const {
  std::string out;
  char buf[160];
  out += "rramc characterization report\n";
  out +=
      "    M     N   B   clock_hz corner test pass    worst_margin_V"
      "  access_ns  write_ns\n";
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf),
                  "%5u %5u %3u %10.0f %-6s %-4s %-4s %+17.9e %10.1f %9.1f\n",
                  r.geometry.rows, r.geometry.cols, r.geometry.word_bits,
                  r.clock_hz, r.corner.c_str(), to_string(r.test),
                  r.pass ? "ok" : "FAIL", r.worst_margin,
                  r.access_time_s * 1e9, r.write_time_s * 1e9);
    out += buf;
  }
  out += "\n";
  for (const auto& [g, a] : areas) {
    std::snprintf(buf, sizeof(buf),
                  "area M=%u N=%u B=%u: %.1f x %.1f um, %.4f mm^2, "
                  "%.4f Mb/mm^2\n",
                  g.rows, g.cols, g.word_bits, a.width_m * 1e6,
                  a.height_m * 1e6, a.area_m2 * 1e6, a.density_mb_per_mm2);
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), "\nRESULT: %s (%zu of %zu tests failed)\n",
                all_pass() ? "PASS" : "FAIL", failure_count(), rows.size());
  out += buf;
  return out;
}

std::string CharacterizationReport::jsonl() const {
  using json = nlohmann::ordered_json;
  std::string out;
  for (const auto& r : rows) {
    json j;
    j["record"] = "test";
    j["m"] = r.geometry.rows;
    j["n"] = r.geometry.cols;
    j["b"] = r.geometry.word_bits;
    j["clock_hz"] = r.clock_hz;
    j["corner"] = r.corner;
    j["test"] = to_string(r.test);
    j["pass"] = r.pass;
    j["worst_margin_v"] = r.worst_margin;
    j["access_time_s"] = r.access_time_s;
    j["write_time_s"] = r.write_time_s;
    out += j.dump();
    out += '\n';
  }
  for (const auto& [g, a] : areas) {
    json j;
    j["record"] = "area";
    j["m"] = g.rows;
    j["n"] = g.cols;
    j["b"] = g.word_bits;
    j["width_m"] = a.width_m;
    j["height_m"] = a.height_m;
    j["area_m2"] = a.area_m2;
    j["density_mb_per_mm2"] = a.density_mb_per_mm2;
    out += j.dump();
    out += '\n';
  }
  json j;
  j["record"] = "summary";
  j["pass"] = all_pass();
  j["tests"] = rows.size();
  j["failures"] = failure_count();
  out += j.dump();
  out += '\n';
  return out;
}

CharacterizationReport characterize_sweep(
    const std::vector<SweepConfig>& configs, const TechnologyProfile& t,
    const std::vector<std::string>& corners, double a) {
  t.validate();
  for (const auto& c : corners) (void)t.corner(c);  // fail early

  struct Cell {
    std::vector<ReportRow> rows;
  };
  std::vector<std::future<Cell>> futures;
  futures.reserve(configs.size() * corners.size());
  for (const auto& cfg : configs) {
    for (const auto& corner : corners) {
      futures.push_back(std::async(std::launch::async, [&, cfg, corner] {
        Cell cell;
        const double access = (t.ph1_cycles + t.ph2_cycles) / cfg.clock_hz;
        const double wtime = t.write_cycles / cfg.clock_hz;
        auto push = [&](const TestResult& r) {
          cell.rows.push_back({cfg.geometry, cfg.clock_hz, corner, r.kind,
                               r.pass, r.worst_margin, access, wtime});
        };
        auto [w1, w2] = run_w_tests(cfg.geometry, t, cfg.clock_hz, corner);
        push(w1);
        push(w2);
        auto [r1, r2] = run_r_tests(cfg.geometry, t, cfg.clock_hz, corner, a);
        push(r1);
        push(r2);
        return cell;
      }));
    }
  }

  CharacterizationReport report;
  for (auto& f : futures) {
    Cell cell = f.get();
    report.rows.insert(report.rows.end(), cell.rows.begin(), cell.rows.end());
  }
  for (const auto& cfg : configs) {
    bool seen = false;
    for (const auto& [g, _] : report.areas)
      if (g == cfg.geometry) seen = true;
    if (!seen)
      report.areas.emplace_back(cfg.geometry,
                                estimate_area(cfg.geometry, t));
  }
  return report;
}

std::vector<SweepConfig> default_suite() {
  std::vector<SweepConfig> out;
  const std::uint64_t sizes[][3] = {
      {32, 32, 4}, {64, 32, 4}, {64, 64, 8}, {128, 64, 8}};
  for (double clock : {12.5e6, 25e6}) {
    for (const auto& s : sizes)
      out.push_back({validate_geometry(s[0], s[1], s[2]), clock});
  }
  return out;
}

std::vector<std::string> corner_names(const TechnologyProfile& t) {
  std::vector<std::string> out;
  out.reserve(t.corners.size());
  for (const auto& c : t.corners) out.push_back(c.name);
  return out;
}

}  // namespace rramc

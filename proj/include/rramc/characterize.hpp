// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rramc/geometry.hpp"
#include "rramc/simulator.hpp"
#include "rramc/technology.hpp"

namespace rramc {

/// Built-in test patterns.
///
/// W1 writes the word with every odd bit set (0b1010 for 4-bit words) to the
/// write-stress address, W2 its complement.  R1 presets the read-stress word
/// to alternating HRS/LRS starting with HRS at bit 0 (so the expected word
/// has every even bit set), R2 the complement.
enum class TestKind { W1, W2, R1, R2 };

const char* to_string(TestKind k);

std::uint64_t w1_pattern(std::uint32_t word_bits);
std::uint64_t w2_pattern(std::uint32_t word_bits);

struct TestResult {
  TestKind kind = TestKind::W1;
  bool pass = false;
  double worst_margin = 0.0;        // volts
  std::vector<double> bit_margins;  // per data bit
  std::uint64_t expected = 0;       // pattern (W) or expected word (R)
  std::uint64_t got = 0;            // ok mask (W) or sensed word (R)
};

/// One write test at the write-stress address over a fresh 1 Mohm array.
/// Margin per bit: settled |v_pn| beyond the switching threshold (negative
/// when the pulse falls short or has the wrong polarity).
TestResult run_w_test(const MemoryGeometry& g, const TechnologyProfile& t,
                      double clock_hz, const std::string& corner,
                      bool complement);
std::pair<TestResult, TestResult> run_w_tests(const MemoryGeometry& g,
                                              const TechnologyProfile& t,
                                              double clock_hz,
                                              const std::string& corner);

/// One read test at the read-stress address with the word preset to
/// alternating a*r_ref / r_ref/a.  Margin per bit: sense margin, negated
/// when the bit resolves to the wrong value.
TestResult run_r_test(const MemoryGeometry& g, const TechnologyProfile& t,
                      double clock_hz, const std::string& corner, double a,
                      bool complement);
std::pair<TestResult, TestResult> run_r_tests(const MemoryGeometry& g,
                                              const TechnologyProfile& t,
                                              double clock_hz,
                                              const std::string& corner,
                                              double a = 0.3);

struct SweepConfig {
  MemoryGeometry geometry;
  double clock_hz = 0.0;
};

struct ReportRow {
  MemoryGeometry geometry;
  double clock_hz = 0.0;
  std::string corner;
  TestKind test = TestKind::W1;
  bool pass = false;
  double worst_margin = 0.0;
  double access_time_s = 0.0;
  double write_time_s = 0.0;
};

struct AreaEstimate {
  double width_m = 0.0;
  double height_m = 0.0;
  double area_m2 = 0.0;
  double density_mb_per_mm2 = 0.0;
};

/// Macro outline: array block plus fixed periphery extents, with an optional
/// fractional overhead.  Density counts raw array bits (1 Mb = 1e6 bits).
AreaEstimate estimate_area(const MemoryGeometry& g,
                           const TechnologyProfile& t);

struct CharacterizationReport {
  std::vector<ReportRow> rows;
  std::vector<std::pair<MemoryGeometry, AreaEstimate>> areas;

  bool all_pass() const;
  std::size_t failure_count() const;
  /// Aligned human-readable table; byte-deterministic.
  std::string text() const;
  /// One JSON object per line (test rows, area rows, summary).
  std::string jsonl() const;
};

/// Runs W1/W2/R1/R2 for every configuration and corner.  Configurations are
/// evaluated in parallel; row order is configs x corners x tests regardless
/// of scheduling.
CharacterizationReport characterize_sweep(
    const std::vector<SweepConfig>& configs, const TechnologyProfile& t,
    const std::vector<std::string>& corners, double a = 0.3);

/// Characterization suite the default profile is calibrated against:
/// 1 kb (32x32x4), 2 kb (64x32x4), 4 kb (64x64x8) and 8 kb (128x64x8)
/// at 12.5 and 25 MHz.
std::vector<SweepConfig> default_suite();

/// Corner names in profile order.
std::vector<std::string> corner_names(const TechnologyProfile& t);

}  // namespace rramc

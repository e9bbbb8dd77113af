// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rramc/analog.hpp"
#include "rramc/controller.hpp"
#include "rramc/geometry.hpp"
#include "rramc/technology.hpp"
#include "rramc/wavetrace.hpp"

namespace rramc {

/// Initial resistance assignment for the array.
struct FillRule {
  enum class Kind { Uniform, Checkerboard, Explicit };
  Kind kind = Kind::Uniform;
  double v0 = 1e6;  // Uniform value, or Checkerboard even-parity value
  double v1 = 1e6;  // Checkerboard odd-parity value
  std::vector<std::vector<double>> matrix;  // Explicit: [row][col] ohms

  static FillRule uniform(double ohms);
  static FillRule checkerboard(double even_ohms, double odd_ohms);
  static FillRule explicit_matrix(std::vector<std::vector<double>> m);
};

struct WriteOutcome {
  bool all_ok = false;
  std::vector<double> vpn;  // checkpoint cell voltage per bit
  std::vector<bool> ok;
  std::uint64_t start_cycle = 0;
};

struct ReadOutcome {
  std::uint64_t data = 0;           // sensed word, bit 0 = LSB
  std::uint64_t reliable_mask = 0;  // 1 = bit sensed with margin
  std::vector<SenseResult> bits;
  std::uint64_t start_cycle = 0;
};

/// Cycle-accurate behavioral simulator: the controller FSM drives the write
/// and sense models against the resistive cell array, recording a value
/// change trace and an operation log.
///
/// Corner handling: electrical parameters (access/mux/driver resistances,
/// reference leg, sense offset) come from the corner-applied profile, while
/// programmed resistances use the nominal profile - memristor state values
/// do not shift with the CMOS corner.
class Simulator {
public:
  Simulator(const MemoryGeometry& g, const TechnologyProfile& t,
            double clock_hz, const FillRule& fill,
            std::string_view corner = "TT");

  /// Pulses RST for one cycle and releases; FSM lands in Idle.
  void reset();

  /// One word write.  Requires the FSM idle (reset() first).
  WriteOutcome write(std::uint32_t x, std::uint32_t y, std::uint64_t data);

  /// One word read (three-phase sequence).  Requires the FSM idle.
  ReadOutcome read(std::uint32_t x, std::uint32_t y);

  /// Direct cell-state pokes for test setup; no trace events.
  void set_cell(std::uint32_t col, std::uint32_t row, double ohms);
  double cell(std::uint32_t col, std::uint32_t row) const;
  bool cell_last_write_ok(std::uint32_t col, std::uint32_t row) const;

  FsmState state() const { return ctl_.state(); }
  std::uint64_t cycle() const { return cycle_; }
  double clock_hz() const { return clock_hz_; }
  double clock_period() const { return period_; }

  /// Develop window: dvlp asserted through read phases 1 and 2, shortened by
  /// the control level-shifter delay.
  double develop_time() const;
  /// Reported access time: the develop window length.
  double access_time() const { return phase_seconds(ph1_ + ph2_); }
  double write_pulse() const { return phase_seconds(wr_); }

  const MemoryGeometry& geometry() const { return geom_; }
  const TechnologyProfile& profile() const { return nom_; }
  const TechnologyProfile& corner_profile() const { return cor_; }
  const std::string& corner_name() const { return corner_; }

  const WaveTrace& trace() const { return trace_; }
  std::string vcd() const;
  std::string run_log() const;

private:
  struct BusDrive {
    std::uint64_t value = 0;
    std::uint64_t xmask = 0;
    bool driven = false;
  };

  MemristorState& cell_at(std::uint32_t col, std::uint32_t row);
  const MemristorState& cell_at(std::uint32_t col, std::uint32_t row) const;
  double phase_seconds(unsigned cycles) const {
    return cycles * period_;
  }
  void require_idle(const char* op) const;
  FsmStep step_cycle(const FsmInputs& in);
  void record_controls(const ControlSignals& s, std::uint64_t t_ps);
  void record_io(const BusDrive& d, std::uint64_t t_ps);
  void log_line(std::string line);

  MemoryGeometry geom_;
  TechnologyProfile nom_;  // nominal profile
  TechnologyProfile cor_;  // corner-applied profile
  std::string corner_;
  double clock_hz_;
  double period_;        // seconds
  std::uint64_t t_ps_;   // picoseconds per cycle
  unsigned wr_, ph1_, ph2_, ph3_;

  std::vector<MemristorState> cells_;
  ControllerSim ctl_;
  std::uint64_t cycle_ = 0;

  WaveTrace trace_;
  std::uint32_t sig_clk_, sig_rst_, sig_en_, sig_rw_;
  std::uint32_t sig_xa_, sig_ya_, sig_io_;
  std::uint32_t sig_read_, sig_write_, sig_dvlp_, sig_pre_, sig_ensa_,
      sig_decen_, sig_iodrv_;
  std::uint32_t sig_zsa_;

  std::vector<std::string> log_;
};

}  // namespace rramc

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace rramc {

enum class FsmState { Reset, Idle, Write, ReadPh1, ReadPh2, ReadPh3 };

const char* to_string(FsmState s);

/// Control outputs, one bit per line in the control bundle.
struct ControlSignals {
  bool read = false;
  bool write = false;
  bool dvlp = false;     // sense develop window
  bool pre = false;      // output pre-charge release (active high = released)
  bool en_sa = false;    // sense amp regeneration enable
  bool dec_en = false;   // row/column decoder enable
  bool io_drive = false; // tri-state buffers drive the IO bus

  bool operator==(const ControlSignals&) const = default;
};

struct FsmInputs {
  bool reset = false;
  bool en = false;
  bool rw = false;  // 1 = read, 0 = write

  bool operator==(const FsmInputs&) const = default;
};

struct FsmStep {
  FsmState state;
  ControlSignals signals;

  bool operator==(const FsmStep&) const = default;
};

/// Moore outputs for a state.
ControlSignals signals_of(FsmState s);

/// One clock edge: next state and that state's outputs.
FsmStep fsm_step(FsmState s, const FsmInputs& in);

/// Per-phase durations in clock cycles (all >= 1).
struct PhaseDurations {
  unsigned write_cycles = 1;
  unsigned ph1_cycles = 1;
  unsigned ph2_cycles = 1;
  unsigned ph3_cycles = 1;
};

/// Cycle-accurate wrapper around fsm_step that stretches each non-idle state
/// to its configured duration.
class ControllerSim {
public:
  explicit ControllerSim(PhaseDurations d = {});

  /// Advances one clock cycle.  Throws OverlappingOperation if `in.en` is
  /// asserted while a read sequence is mid-flight.
  FsmStep tick(const FsmInputs& in);

  FsmState state() const { return state_; }
  ControlSignals signals() const { return signals_of(state_); }
  bool busy() const { return state_ != FsmState::Idle; }

private:
  unsigned duration_of(FsmState s) const;

  PhaseDurations dur_;
  FsmState state_ = FsmState::Reset;
  unsigned elapsed_ = 0;  // cycles spent in the current state
};

struct TraceEntry {
  std::uint64_t cycle;
  FsmState state;
  ControlSignals signals;

  bool operator==(const TraceEntry&) const = default;
};

struct ScheduledOp {
  std::uint64_t cycle;
  FsmInputs inputs;
};

/// Replays scheduled input events through a ControllerSim and returns the
/// state/output stream, one entry per cycle starting at cycle 0, running
/// until the cycle after the last operation has drained back to Idle.
/// Ops must be sorted by strictly increasing cycle.
std::vector<TraceEntry> sequence_trace(const std::vector<ScheduledOp>& ops,
                                       PhaseDurations d = {});

}  // namespace rramc

// SPDX-License-Identifier: Apache-2.0
#include "rramc/controller.hpp"

#include <algorithm>
#include <string>

#include "rramc/errors.hpp"

namespace rramc {

const char* to_string(FsmState s) {
  switch (s) {
    case FsmState::Reset: return "RESET";
    case FsmState::Idle: return "IDLE";
    case FsmState::Write: return "WRITE";
    case FsmState::ReadPh1: return "READ_PH1";
    case FsmState::ReadPh2: return "READ_PH2";
    case FsmState::ReadPh3: return "READ_PH3";
  }
  return "?";
}

ControlSignals signals_of(FsmState s) {
  ControlSignals c;
  switch (s) {
    case FsmState::Reset:
    case FsmState::Idle:
      break;
    case FsmState::Write:
      c.write = true;
      c.dec_en = true;
      break;
    case FsmState::ReadPh1:
      // Develop with the output nodes held in pre-charge.
      c.read = true;
      c.dvlp = true;
      c.pre = false;
      c.dec_en = true;
      break;
    case FsmState::ReadPh2:
      // Keep developing, release the pre-charge.
      c.read = true;
      c.dvlp = true;
      c.pre = true;
      c.dec_en = true;
      break;
    case FsmState::ReadPh3:
      // Regenerate and drive the IO bus.
      c.read = true;
      c.dvlp = false;
      c.pre = true;
      c.en_sa = true;
      c.dec_en = true;
      c.io_drive = true;
      break;
  }
  return c;
}

FsmStep fsm_step(FsmState s, const FsmInputs& in) {
  FsmState next;
  if (in.reset) {
    next = FsmState::Reset;
  } else {
    switch (s) {
      case FsmState::Reset:
        next = FsmState::Idle;
        break;
      case FsmState::Idle:
        if (in.en)
          next = in.rw ? FsmState::ReadPh1 : FsmState::Write;
        else
          next = FsmState::Idle;
        break;
      case FsmState::Write:
        next = FsmState::Idle;
        break;
      case FsmState::ReadPh1:
        next = FsmState::ReadPh2;
        break;
      case FsmState::ReadPh2:
        next = FsmState::ReadPh3;
        break;
      case FsmState::ReadPh3:
        next = FsmState::Idle;
        break;
      default:
        next = FsmState::Reset;
        break;
    }
  }
  return {next, signals_of(next)};
}

ControllerSim::ControllerSim(PhaseDurations d) : dur_(d) {
  if (d.write_cycles < 1 || d.ph1_cycles < 1 || d.ph2_cycles < 1 ||
      d.ph3_cycles < 1)
    throw SimError("phase durations must be >= 1 cycle");
}

unsigned ControllerSim::duration_of(FsmState s) const {
  switch (s) {
    case FsmState::Write: return dur_.write_cycles;
    case FsmState::ReadPh1: return dur_.ph1_cycles;
    case FsmState::ReadPh2: return dur_.ph2_cycles;
    case FsmState::ReadPh3: return dur_.ph3_cycles;
    default: return 1;
  }
}

FsmStep ControllerSim::tick(const FsmInputs& in) {
  const bool mid_read = state_ == FsmState::ReadPh1 ||
                        state_ == FsmState::ReadPh2 ||
                        state_ == FsmState::ReadPh3;
  if (in.en && mid_read && !in.reset)
    throw OverlappingOperation("EN asserted during a read sequence");

  ++elapsed_;
  if (!in.reset && elapsed_ < duration_of(state_)) {
    // Hold the current phase for its configured duration.
    return {state_, signals_of(state_)};
  }
  FsmStep step = fsm_step(state_, in);
  state_ = step.state;
  elapsed_ = 0;
  return step;
}

std::vector<TraceEntry> sequence_trace(const std::vector<ScheduledOp>& ops,
                                       PhaseDurations d) {
  for (size_t i = 1; i < ops.size(); ++i) {
    if (ops[i].cycle <= ops[i - 1].cycle)
      throw SimError("sequence ops must have strictly increasing cycles");
  }

  ControllerSim ctl(d);
  ctl.tick({});  // release reset: the trace replays from Idle
  std::vector<TraceEntry> trace;
  std::uint64_t last_op = ops.empty() ? 0 : ops.back().cycle;
  size_t next = 0;

  // Entry for cycle k is the state held during cycle k; inputs sampled at
  // cycle k take effect in cycle k + 1.
  trace.push_back({0, ctl.state(), ctl.signals()});
  for (std::uint64_t cycle = 0;; ++cycle) {
    FsmInputs in;
    if (next < ops.size() && ops[next].cycle == cycle) {
      in = ops[next].inputs;
      ++next;
    }
    FsmStep step = ctl.tick(in);
    trace.push_back({cycle + 1, step.state, step.signals});
    if (cycle >= last_op && next == ops.size() &&
        step.state == FsmState::Idle)
      break;
  }
  return trace;
}

}  // namespace rramc

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "rramc/geometry.hpp"
#include "rramc/technology.hpp"

namespace rramc {

/// Resistive cell state.  last_write_ok records whether the most recent
/// write pulse reached the switching threshold.
struct MemristorState {
  double resistance = 0.0;  // ohms
  bool last_write_ok = false;

  bool operator==(const MemristorState&) const = default;
};

/// Write driver output pair.  Writing a 0 programs the low-resistance state
/// (positive cell voltage), writing a 1 the high-resistance state (negative).
struct DrivePair {
  double v_p = 0.0;
  double v_n = 0.0;

  bool operator==(const DrivePair&) const = default;
};

/// First-order settling network seen by one cell during a write:
/// driver and routing in series with the cell, with the line capacitance
/// lumped at the cell node.
struct SettlingModel {
  double r_drive = 0.0;  // driver output resistance
  double r_path = 0.0;   // mux + line resistance up to the cell
  double c_node = 0.0;   // lumped line capacitance at the cell
  double r_cell = 0.0;   // cell stack: memristor + access transistor
};

/// Rail pair for a data bit: bit 0 -> (vddw, 0), bit 1 -> (0, vddw).
DrivePair write_driver(int bit, const TechnologyProfile& t);

/// Cell voltage v_p - v_n after t_elapsed seconds of the write pulse.
///
/// The capacitor charges toward the resistive-divider endpoint
/// (v_p - v_n) * r_cell / (r_cell + r_drive + r_path) with time constant
/// tau = r_th * c_node, r_th the parallel combination of the source
/// resistance and the cell.
double vpn_at(const SettlingModel& m, const DrivePair& drive,
              double t_elapsed);

/// Drive-path parasitics for word (x, y): resistance and capacitance grow
/// with the crossed-cell count (y + 1) + x * B.  r_cell is left 0 for the
/// caller to fill in.  Throws SimError on an out-of-range address.
SettlingModel address_parasitics(const MemoryGeometry& g,
                                 const TechnologyProfile& t, std::uint32_t x,
                                 std::uint32_t y);

/// Applies a write pulse outcome: if |vpn| at the checkpoint reached
/// 0.7 * vddw with the polarity matching target_bit, the cell switches to
/// the target state value and last_write_ok is set; otherwise the
/// resistance is unchanged and last_write_ok cleared.
MemristorState apply_write(const MemristorState& cell, double vpn_at_deadline,
                           const TechnologyProfile& t, int target_bit);

/// One sensed bit.  margin is the develop differential beyond the offset
/// budget; reliable additionally requires the develop time floor.
struct SenseResult {
  int bit = 0;
  double margin = 0.0;  // volts
  bool reliable = false;

  bool operator==(const SenseResult&) const = default;
};

/// Current-mode sense: mirrors of the cell and reference read currents
/// develop a differential on c_sense for develop_time seconds.  A cell above
/// the reference integrates positive (bit 1).  corner_offset is an extra
/// offset on top of t.sense_offset; pass 0 when t already carries the corner
/// skew via corner_apply().
SenseResult sense(double r_cell, double r_ref, double develop_time,
                  double corner_offset, const TechnologyProfile& t);

/// Output rail the sense path drives for a result: vddl or 0 when reliable,
/// the metastable midpoint vddl / 2 when not.
double sense_output_level(const SenseResult& r, const TechnologyProfile& t);

/// Write switching threshold in volts: 0.7 * vddw.
double write_threshold(const TechnologyProfile& t);

}  // namespace rramc

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rramc {

/// Process-corner skew applied on top of a nominal profile.
///
/// The strength values are resistance multipliers: a fast device (multiplier
/// < 1) has a lower on-resistance.  See corner_apply() for which profile
/// fields each multiplier touches.
struct CornerProfile {
  std::string name = "TT";
  double nmos_strength = 1.0;   // multiplier on NMOS-side resistances
  double pmos_strength = 1.0;   // multiplier on PMOS-side resistances
  double sense_offset_extra = 0.0;  // additional sense offset [V]

  bool operator==(const CornerProfile&) const = default;
};

/// Electrical and physical parameters of the target process.
///
/// Resistances in ohms, capacitances in farads, lengths in meters, voltages
/// in volts, times in seconds.  Phase durations are in clock cycles.
struct TechnologyProfile {
  int schema = 1;

  // Supply rails.
  double vddl = 0.0;  // core logic supply
  double vddh = 0.0;  // elevated control supply
  double vddw = 0.0;  // write supply

  // Cell stack.
  double r_ref = 0.0;          // reference resistance between LRS and HRS
  double write_ratio_a = 0.0;  // LRS = a * r_ref, HRS = r_ref / a
  double r_on_access = 0.0;    // access transistor on-resistance

  // Drive and routing path.
  double r_driver = 0.0;          // write driver output resistance
  double r_mux_on = 0.0;          // column mux transmission-gate resistance
  double r_line_per_cell = 0.0;   // line resistance per crossed cell
  double c_line_per_cell = 0.0;   // line capacitance per crossed cell

  // Sense path.
  double read_bias_frac = 0.0;    // read bias as a fraction of vddl
  double c_sense = 0.0;           // develop-node capacitance
  double sense_offset = 0.0;      // nominal worst-case input offset [V]
  double sense_min_develop = 0.0; // minimum usable develop time [s]
  double level_down_delay = 0.0;  // control level-shifter delay [s]

  // Floorplan.
  double cell_pitch_x = 0.0;
  double cell_pitch_y = 0.0;
  double periphery_width = 0.0;   // decoder / driver column width
  double periphery_height = 0.0;  // mux / sense / control row height
  double periphery_area_overhead = 0.0;  // extra area fraction

  // Controller phase durations (clock cycles each).
  int write_cycles = 1;
  int ph1_cycles = 1;
  int ph2_cycles = 1;
  int ph3_cycles = 1;

  std::vector<CornerProfile> corners;

  double lrs_ohms() const { return write_ratio_a * r_ref; }
  double hrs_ohms() const { return r_ref / write_ratio_a; }

  /// Finds a corner by name; throws ProfileError if absent.
  const CornerProfile& corner(std::string_view name) const;
  bool has_corner(std::string_view name) const;

  /// Throws ProfileError naming the first violated constraint.
  void validate() const;

  bool operator==(const TechnologyProfile&) const = default;
};

/// Built-in calibrated profile (same values as profiles/default.profile).
TechnologyProfile default_profile();

/// Parses the key = value profile format; throws ProfileError with a line
/// reference on unknown keys, duplicates, bad numbers or missing fields.
TechnologyProfile parse_profile(const std::string& text);
TechnologyProfile load_profile(const std::string& path);

/// Serializes in canonical key order with round-trip-exact numbers.
std::string profile_to_text(const TechnologyProfile& t);
void save_profile(const TechnologyProfile& t, const std::string& path);

/// Returns a copy of `t` with corner skews folded in: NMOS-side resistances
/// (access transistors, the reference leg) scale by nmos_strength, resistances
/// of complementary structures (write driver, transmission gates) by the mean
/// of both strengths, and sense_offset grows by sense_offset_extra.  Applying
/// the TT corner returns `t` unchanged.
TechnologyProfile corner_apply(const TechnologyProfile& t,
                               const CornerProfile& c);

/// Shortest decimal form of `v` that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace rramc

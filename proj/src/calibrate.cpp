// SPDX-License-Identifier: Apache-2.0
//
// Default-profile solver.  The electrical assumptions below are first-order
// but deliberate; the three derived groups (line capacitance, skewed-corner
// sense offsets, floorplan constants) are solved against the published
// behavior of the 8 kb / 25 MHz boundary and the macro outline, so the
// characterization suite reproduces it by construction.
#include "rramc/calibrate.hpp"

#include <cmath>
#include <stdexcept>

#include "rramc/characterize.hpp"
#include "rramc/errors.hpp"
#include "rramc/geometry.hpp"

namespace rramc {

namespace {

// Assumed base values; everything derived is filled in by the solver.
TechnologyProfile base_profile() {
  TechnologyProfile t;
  t.schema = 1;
  t.vddl = 1.8;
  t.vddh = 3.3;
  t.vddw = 3.3;
  t.r_ref = 32500.0;
  t.write_ratio_a = 0.3;
  t.r_on_access = 1000.0;
  t.r_driver = 500.0;
  t.r_mux_on = 800.0;
  t.r_line_per_cell = 150.0;
  t.read_bias_frac = 0.25;
  t.c_sense = 5e-12;
  t.sense_offset = 0.004;
  t.sense_min_develop = 5e-8;
  t.level_down_delay = 0.0;
  t.periphery_area_overhead = 0.0;
  t.write_cycles = 1;
  t.ph1_cycles = 1;
  t.ph2_cycles = 1;
  t.ph3_cycles = 1;
  t.corners = {
      {"TT", 1.0, 1.0, 0.0},
      {"FS", 0.85, 1.15, 0.0},
      {"SF", 1.15, 0.85, 0.0},
      {"FF", 0.85, 0.85, 0.0},
  };
  // Placeholders so validate() passes before the fit completes.
  t.c_line_per_cell = 1e-15;
  t.cell_pitch_x = t.cell_pitch_y = 1e-6;
  t.periphery_width = t.periphery_height = 1e-6;
  return t;
}

// Largest c_line_per_cell for which the write checkpoint still reaches the
// switching threshold for geometry g at the given clock and corner, writing
// a fresh (1 Mohm) cell at the write-stress address.
double write_c_bound(const MemoryGeometry& g, const TechnologyProfile& t,
                     double clock_hz, const CornerProfile& corner) {
  const TechnologyProfile tc = corner_apply(t, corner);
  const WordAddress addr = worst_case_write_address(g);
  const double units = static_cast<double>(addr.y + 1) +
                       static_cast<double>(addr.x) * g.word_bits;
  const double r_src = tc.r_driver + tc.r_mux_on +
                       tc.r_line_per_cell * units;
  const double r_cell = 1e6 + tc.r_on_access;
  const double divider = r_cell / (r_cell + r_src);
  if (divider <= 0.7)
    throw Error("write endpoint below threshold; boundary unreachable");
  const double ln_term = std::log(divider / (divider - 0.7));
  const double r_th = r_src * r_cell / (r_src + r_cell);
  const double t_chk = 0.4 * (t.write_cycles / clock_hz);
  return t_chk / (ln_term * r_th * units);
}

// Weakest developed sense differential (volts) over the two preset states
// at the read-stress address, mirroring the simulator's read path.
double read_weak_delta(const MemoryGeometry& g, const TechnologyProfile& t,
                       double clock_hz, const CornerProfile& corner) {
  const TechnologyProfile tc = corner_apply(t, corner);
  const WordAddress addr = worst_case_read_address(g);
  const double units = static_cast<double>(addr.y + 1) +
                       static_cast<double>(addr.x) * g.word_bits;
  const double cell_path = tc.r_mux_on + tc.r_line_per_cell * units;
  const double ref_path =
      tc.r_mux_on + tc.r_line_per_cell * static_cast<double>(g.rows);
  const double r_ref_eff = tc.r_ref + ref_path;
  const double develop =
      (t.ph1_cycles + t.ph2_cycles) / clock_hz - tc.level_down_delay;
  const double v_bias = tc.read_bias_frac * tc.vddl;

  double weakest = 0.0;
  bool first = true;
  for (const double r_mem : {t.write_ratio_a * t.r_ref,
                             t.r_ref / t.write_ratio_a}) {
    const double r_cell_eff = r_mem + tc.r_on_access + cell_path;
    const double delta = std::abs(
        v_bias * (1.0 / r_ref_eff - 1.0 / r_cell_eff) / tc.c_sense * develop);
    if (first || delta < weakest) weakest = delta;
    first = false;
  }
  return weakest;
}

}  // namespace

CalibrationResult calibrate_default_profile() {
  TechnologyProfile t = base_profile();
  CalibrationInfo info;

  const MemoryGeometry boundary = validate_geometry(128, 64, 8);
  const double pass_clock = 12.5e6;
  const double fail_clock = 25e6;

  // --- line capacitance from the write-settling boundary ---
  double pass_bound = 0.0, fail_bound = 0.0;
  bool first = true;
  for (const auto& corner : t.corners) {
    const double hi = write_c_bound(boundary, t, pass_clock, corner);
    const double lo = write_c_bound(boundary, t, fail_clock, corner);
    pass_bound = first ? hi : std::min(pass_bound, hi);
    fail_bound = first ? lo : std::max(fail_bound, lo);
    first = false;
  }
  if (!(fail_bound < pass_bound))
    throw Error("write boundary infeasible: bounds crossed");
  t.c_line_per_cell = std::sqrt(fail_bound * pass_bound);
  info.c_line_lo = fail_bound;
  info.c_line_hi = pass_bound;

  // --- skewed-corner sense offsets from the read boundary ---
  const std::vector<SweepConfig> suite = default_suite();
  auto window_for = [&](const CornerProfile& corner) {
    CalibrationInfo::Window w;
    bool have_lo = false, have_hi = false;
    for (const auto& cfg : suite) {
      const double delta =
          read_weak_delta(cfg.geometry, t, cfg.clock_hz, corner);
      const bool must_fail =
          cfg.geometry == boundary && cfg.clock_hz == fail_clock;
      if (must_fail) {
        w.lo = have_lo ? std::max(w.lo, delta) : delta;
        have_lo = true;
      } else {
        w.hi = have_hi ? std::min(w.hi, delta) : delta;
        have_hi = true;
      }
    }
    if (!have_lo || !have_hi)
      throw Error("offset window needs both pass and fail points");
    return w;
  };

  for (auto& corner : t.corners) {
    if (corner.name != "FS" && corner.name != "FF") continue;
    CalibrationInfo::Window w = window_for(corner);
    if (!(w.lo < w.hi))
      throw Error("sense offset window infeasible for corner " + corner.name);
    const double total = 0.5 * (w.lo + w.hi);
    if (!(total > t.sense_offset))
      throw Error("solved offset below nominal for corner " + corner.name);
    corner.sense_offset_extra = total - t.sense_offset;
    (corner.name == "FS" ? info.fs : info.ff) = w;
  }

  // Nominal-offset corners must clear every suite point.
  for (const auto& corner : t.corners) {
    if (corner.sense_offset_extra != 0.0) continue;
    for (const auto& cfg : suite) {
      if (read_weak_delta(cfg.geometry, t, cfg.clock_hz, corner) <=
          t.sense_offset)
        throw Error("nominal corner " + corner.name +
                    " fails inside the suite");
    }
  }

  // --- floorplan constants from the published outline and density ---
  info.fig_width_m = 524.3e-6;
  info.fig_height_m = 353.5e-6;
  info.best_density = 0.024;  // Mb/mm^2 at 128 x 64
  const double best_bits = 128.0 * 64.0;
  const double best_area_m2 = best_bits / (info.best_density * 1e12);
  const double best_height = best_area_m2 / info.fig_width_m;
  // Same column count keeps the width; the extra 64 rows set the row pitch.
  t.cell_pitch_y = (best_height - info.fig_height_m) / 64.0;
  t.cell_pitch_x = t.cell_pitch_y;  // square cell assumption
  t.periphery_width = info.fig_width_m - 64.0 * t.cell_pitch_x;
  t.periphery_height = info.fig_height_m - 64.0 * t.cell_pitch_y;

  t.validate();
  return {t, info};
}

TechnologyProfile default_profile() {
  static const TechnologyProfile t = calibrate_default_profile().profile;
  return t;
}

std::string calibrated_profile_text() {
  const CalibrationResult r = calibrate_default_profile();
  std::string out;
  out += "# generated by: rramc calibrate\n";
  out += "# c_line_per_cell window [" + format_double(r.info.c_line_lo) +
         ", " + format_double(r.info.c_line_hi) +
         "] F (8 kb write boundary: pass 12.5 MHz, fail 25 MHz)\n";
  out += "# sense offset windows: FS [" + format_double(r.info.fs.lo) + ", " +
         format_double(r.info.fs.hi) + "] V, FF [" +
         format_double(r.info.ff.lo) + ", " + format_double(r.info.ff.hi) +
         "] V\n";
  out += "# floorplan fit: 64x64 macro " +
         format_double(r.info.fig_width_m * 1e6) + " x " +
         format_double(r.info.fig_height_m * 1e6) + " um, best density " +
         format_double(r.info.best_density) + " Mb/mm^2 at 128x64\n";
  out += profile_to_text(r.profile);
  return out;
}

}  // namespace rramc

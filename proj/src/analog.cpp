// SPDX-License-Identifier: Apache-2.0
#include "rramc/analog.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rramc/errors.hpp"

namespace rramc {

double write_threshold(const TechnologyProfile& t) { return 0.7 * t.vddw; }

DrivePair write_driver(int bit, const TechnologyProfile& t) {
  if (bit)
    return {0.0, t.vddw};  // reverse bias: program HRS
  return {t.vddw, 0.0};    // forward bias: program LRS
}

double vpn_at(const SettlingModel& m, const DrivePair& drive,
              double t_elapsed) {
  const double v_src = drive.v_p - drive.v_n;
  const double r_src = m.r_drive + m.r_path;
  const double r_total = r_src + m.r_cell;
  if (r_total <= 0.0) return v_src;
  const double v_final = v_src * m.r_cell / r_total;
  if (m.c_node <= 0.0) return v_final;
  const double r_th = r_src * m.r_cell / r_total;
  const double tau = r_th * m.c_node;
  if (tau <= 0.0) return v_final;
  return v_final * (1.0 - std::exp(-t_elapsed / tau));
}

SettlingModel address_parasitics(const MemoryGeometry& g,
                                 const TechnologyProfile& t, std::uint32_t x,
                                 std::uint32_t y) {
  if (x >= g.words_per_row())
    throw SimError("x address " + std::to_string(x) + " out of range");
  if (y >= g.rows)
    throw SimError("y address " + std::to_string(y) + " out of range");
  // Crossed cells: down the bit line to row y, plus the word lines skipped
  // while traversing x full words of the row.
  const double cells = static_cast<double>(y + 1) +
                       static_cast<double>(x) * g.word_bits;
  SettlingModel m;
  m.r_drive = t.r_driver;
  m.r_path = t.r_mux_on + t.r_line_per_cell * cells;
  m.c_node = t.c_line_per_cell * cells;
  m.r_cell = 0.0;
  return m;
}

MemristorState apply_write(const MemristorState& cell, double vpn_at_deadline,
                           const TechnologyProfile& t, int target_bit) {
  const double vth = write_threshold(t);
  const double progress = target_bit ? -vpn_at_deadline : vpn_at_deadline;
  MemristorState out = cell;
  if (progress >= vth) {
    out.resistance = target_bit ? t.hrs_ohms() : t.lrs_ohms();
    out.last_write_ok = true;
  } else {
    out.last_write_ok = false;
  }
  return out;
}

SenseResult sense(double r_cell, double r_ref, double develop_time,
                  double corner_offset, const TechnologyProfile& t) {
  const double v_bias = t.read_bias_frac * t.vddl;
  // Mirror difference of the two read currents integrated on c_sense.
  const double rate = v_bias * (1.0 / r_ref - 1.0 / r_cell) / t.c_sense;
  double delta = rate * develop_time;
  delta = std::clamp(delta, -t.vddl, t.vddl);

  SenseResult r;
  r.bit = delta > 0.0 ? 1 : 0;
  const double offset = std::abs(t.sense_offset + corner_offset);
  r.margin = std::abs(delta) - offset;
  r.reliable = r.margin > 0.0 && develop_time >= t.sense_min_develop;
  return r;
}

double sense_output_level(const SenseResult& r, const TechnologyProfile& t) {
  if (!r.reliable) return 0.5 * t.vddl;
  return r.bit ? t.vddl : 0.0;
}

}  // namespace rramc

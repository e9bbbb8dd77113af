// SPDX-License-Identifier: Apache-2.0
#include "rramc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rramc/errors.hpp"

namespace rramc {

FillRule FillRule::uniform(double ohms) {
  FillRule f;
  f.kind = Kind::Uniform;
  f.v0 = f.v1 = ohms;
  return f;
}

FillRule FillRule::checkerboard(double even_ohms, double odd_ohms) {
  FillRule f;
  f.kind = Kind::Checkerboard;
  f.v0 = even_ohms;
  f.v1 = odd_ohms;
  return f;
}

FillRule FillRule::explicit_matrix(std::vector<std::vector<double>> m) {
  FillRule f;
  f.kind = Kind::Explicit;
  f.matrix = std::move(m);
  return f;
}

namespace {

std::uint64_t word_mask(std::uint32_t bits) {
  return bits >= 64 ? ~0ull : ((1ull << bits) - 1ull);
}

std::string bits_string(std::uint64_t v, std::uint32_t width) {
  std::string s = "0b";
  for (std::uint32_t b = width; b-- > 0;)
    s.push_back((v >> b) & 1 ? '1' : '0');
  return s;
}

}  // namespace

Simulator::Simulator(const MemoryGeometry& g, const TechnologyProfile& t,
                     double clock_hz, const FillRule& fill,
                     std::string_view corner)
    : geom_(g),
      nom_(t),
      corner_(corner),
      clock_hz_(clock_hz),
      ctl_(PhaseDurations{static_cast<unsigned>(t.write_cycles),
                          static_cast<unsigned>(t.ph1_cycles),
                          static_cast<unsigned>(t.ph2_cycles),
                          static_cast<unsigned>(t.ph3_cycles)}) {
  t.validate();
  if (!(clock_hz > 0)) throw SimError("clock_hz must be > 0");
  cor_ = corner_apply(t, t.corner(corner));
  period_ = 1.0 / clock_hz;
  t_ps_ = static_cast<std::uint64_t>(std::llround(1e12 / clock_hz));
  if (t_ps_ < 2) throw SimError("clock period below trace resolution");
  wr_ = static_cast<unsigned>(t.write_cycles);
  ph1_ = static_cast<unsigned>(t.ph1_cycles);
  ph2_ = static_cast<unsigned>(t.ph2_cycles);
  ph3_ = static_cast<unsigned>(t.ph3_cycles);

  // Array fill.
  cells_.resize(static_cast<std::size_t>(geom_.rows) * geom_.cols);
  switch (fill.kind) {
    case FillRule::Kind::Uniform:
      if (!(fill.v0 > 0)) throw SimError("fill resistance must be > 0");
      for (auto& c : cells_) c.resistance = fill.v0;
      break;
    case FillRule::Kind::Checkerboard:
      if (!(fill.v0 > 0) || !(fill.v1 > 0))
        throw SimError("fill resistance must be > 0");
      for (std::uint32_t r = 0; r < geom_.rows; ++r)
        for (std::uint32_t c = 0; c < geom_.cols; ++c)
          cells_[static_cast<std::size_t>(r) * geom_.cols + c].resistance =
              ((r + c) % 2 == 0) ? fill.v0 : fill.v1;
      break;
    case FillRule::Kind::Explicit: {
      if (fill.matrix.size() != geom_.rows)
        throw SimError("fill matrix row count mismatch");
      for (std::uint32_t r = 0; r < geom_.rows; ++r) {
        if (fill.matrix[r].size() != geom_.cols)
          throw SimError("fill matrix column count mismatch");
        for (std::uint32_t c = 0; c < geom_.cols; ++c) {
          if (!(fill.matrix[r][c] > 0))
            throw SimError("fill resistance must be > 0");
          cells_[static_cast<std::size_t>(r) * geom_.cols + c].resistance =
              fill.matrix[r][c];
        }
      }
      break;
    }
  }

  // Trace signals, declaration order fixed.
  sig_clk_ = trace_.add_signal("clk", 1);
  sig_rst_ = trace_.add_signal("rst", 1);
  sig_en_ = trace_.add_signal("en", 1);
  sig_rw_ = trace_.add_signal("rw", 1);
  sig_xa_ = trace_.add_signal("x_addr", geom_.col_bits);
  sig_ya_ = trace_.add_signal("y_addr", geom_.row_bits);
  sig_io_ = trace_.add_signal("io", geom_.word_bits);
  sig_read_ = trace_.add_signal("read", 1);
  sig_write_ = trace_.add_signal("write", 1);
  sig_dvlp_ = trace_.add_signal("dvlp", 1);
  sig_pre_ = trace_.add_signal("pre", 1);
  sig_ensa_ = trace_.add_signal("en_sa", 1);
  sig_decen_ = trace_.add_signal("dec_en", 1);
  sig_iodrv_ = trace_.add_signal("io_drive", 1);
  sig_zsa_ = trace_.add_signal("zsa", geom_.word_bits);

  const std::uint64_t bmask = word_mask(geom_.word_bits);
  trace_.record(sig_clk_, 0, 0);
  trace_.record(sig_rst_, 0, 1);  // held in reset until released
  trace_.record(sig_en_, 0, 0);
  trace_.record(sig_rw_, 0, 0);
  trace_.record(sig_xa_, 0, 0);
  trace_.record(sig_ya_, 0, 0);
  trace_.record(sig_io_, 0, 0, 0, bmask);   // bus undriven
  record_controls(signals_of(FsmState::Reset), 0);
  trace_.record(sig_zsa_, 0, 0, bmask, 0);  // sense outputs unknown

  log_line("# rramc run log 1");
  log_line("design " + std::string("rram_m") + std::to_string(geom_.rows) +
           "_n" + std::to_string(geom_.cols) + "_b" +
           std::to_string(geom_.word_bits));
  log_line("corner " + corner_ + " clock_hz " + format_double(clock_hz_));
}

MemristorState& Simulator::cell_at(std::uint32_t col, std::uint32_t row) {
  return cells_[static_cast<std::size_t>(row) * geom_.cols + col];
}

const MemristorState& Simulator::cell_at(std::uint32_t col,
                                         std::uint32_t row) const {
  return cells_[static_cast<std::size_t>(row) * geom_.cols + col];
}

void Simulator::require_idle(const char* op) const {
  if (ctl_.state() == FsmState::Idle) return;
  throw SimError(std::string(op) + " issued in state " +
                 to_string(ctl_.state()) + " (reset() first)");
}

void Simulator::record_controls(const ControlSignals& s, std::uint64_t t_ps) {
  trace_.record(sig_read_, t_ps, s.read);
  trace_.record(sig_write_, t_ps, s.write);
  trace_.record(sig_dvlp_, t_ps, s.dvlp);
  trace_.record(sig_pre_, t_ps, s.pre);
  trace_.record(sig_ensa_, t_ps, s.en_sa);
  trace_.record(sig_decen_, t_ps, s.dec_en);
  trace_.record(sig_iodrv_, t_ps, s.io_drive);
}

void Simulator::record_io(const BusDrive& d, std::uint64_t t_ps) {
  const std::uint64_t bmask = word_mask(geom_.word_bits);
  if (d.driven)
    trace_.record(sig_io_, t_ps, d.value, d.xmask, 0);
  else
    trace_.record(sig_io_, t_ps, 0, 0, bmask);
}

void Simulator::log_line(std::string line) {
  log_.push_back(std::move(line));
}

FsmStep Simulator::step_cycle(const FsmInputs& in) {
  const std::uint64_t t0 = cycle_ * t_ps_;
  trace_.record(sig_clk_, t0, 1);
  trace_.record(sig_clk_, t0 + t_ps_ / 2, 0);
  trace_.record(sig_rst_, t0, in.reset);
  trace_.record(sig_en_, t0, in.en);
  trace_.record(sig_rw_, t0, in.rw);
  FsmStep step = ctl_.tick(in);
  ++cycle_;
  record_controls(step.signals, cycle_ * t_ps_);
  return step;
}

void Simulator::reset() {
  const std::uint64_t start = cycle_;
  step_cycle({.reset = true});
  step_cycle({});
  log_line("reset cycle " + std::to_string(start));
}

double Simulator::develop_time() const {
  return std::max(0.0, phase_seconds(ph1_ + ph2_) - cor_.level_down_delay);
}

WriteOutcome Simulator::write(std::uint32_t x, std::uint32_t y,
                              std::uint64_t data) {
  require_idle("write");
  if (x >= geom_.words_per_row())
    throw SimError("x address " + std::to_string(x) + " out of range");
  if (y >= geom_.rows)
    throw SimError("y address " + std::to_string(y) + " out of range");
  if (data & ~word_mask(geom_.word_bits))
    throw SimError("write data wider than word");

  const std::uint64_t start = cycle_;
  const std::uint64_t t0 = cycle_ * t_ps_;
  trace_.record(sig_xa_, t0, x);
  trace_.record(sig_ya_, t0, y);
  record_io({data, 0, true}, t0);  // testbench drives the write data

  step_cycle({.en = true, .rw = false});
  while (ctl_.state() == FsmState::Write) step_cycle({});
  record_io({0, 0, false}, cycle_ * t_ps_);  // bus released

  // Settling checkpoint at 40% of the write pulse.
  const double t_chk = 0.4 * phase_seconds(wr_);
  SettlingModel base = address_parasitics(geom_, cor_, x, y);

  WriteOutcome out;
  out.start_cycle = start;
  out.vpn.resize(geom_.word_bits);
  out.ok.resize(geom_.word_bits);
  out.all_ok = true;
  for (std::uint32_t b = 0; b < geom_.word_bits; ++b) {
    const int bit = static_cast<int>((data >> b) & 1);
    MemristorState& cell = cell_at(geom_.column_of(x, b), y);
    SettlingModel m = base;
    m.r_cell = cell.resistance + cor_.r_on_access;
    const DrivePair drive = write_driver(bit, cor_);
    const double vpn = vpn_at(m, drive, t_chk);
    // State values come from the nominal profile: the memristor itself does
    // not shift with the CMOS corner.
    cell = apply_write(cell, vpn, nom_, bit);
    out.vpn[b] = vpn;
    out.ok[b] = cell.last_write_ok;
    out.all_ok = out.all_ok && cell.last_write_ok;
  }

  std::uint64_t okmask = 0;
  for (std::uint32_t b = 0; b < geom_.word_bits; ++b)
    if (out.ok[b]) okmask |= 1ull << b;
  double vmin = std::abs(out.vpn[0]), vmax = std::abs(out.vpn[0]);
  for (double v : out.vpn) {
    vmin = std::min(vmin, std::abs(v));
    vmax = std::max(vmax, std::abs(v));
  }
  log_line("write cycle " + std::to_string(start) + " x " +
           std::to_string(x) + " y " + std::to_string(y) + " data " +
           bits_string(data, geom_.word_bits) + " ok " +
           bits_string(okmask, geom_.word_bits) + " vpn_abs_min " +
           format_double(vmin) + " vpn_abs_max " + format_double(vmax));
  return out;
}

ReadOutcome Simulator::read(std::uint32_t x, std::uint32_t y) {
  require_idle("read");
  if (x >= geom_.words_per_row())
    throw SimError("x address " + std::to_string(x) + " out of range");
  if (y >= geom_.rows)
    throw SimError("y address " + std::to_string(y) + " out of range");

  const std::uint64_t start = cycle_;
  const double dev = develop_time();

  // Sense outcome per bit.  The cell leg sees the memristor, its access
  // transistor and the mux/line routing to the addressed word; the
  // reference leg sees the reference resistor and its own column routing.
  ReadOutcome out;
  out.start_cycle = start;
  out.bits.resize(geom_.word_bits);
  const SettlingModel path = address_parasitics(geom_, cor_, x, y);
  const double ref_path =
      cor_.r_mux_on + cor_.r_line_per_cell * static_cast<double>(geom_.rows);
  const double r_ref_eff = cor_.r_ref + ref_path;
  for (std::uint32_t b = 0; b < geom_.word_bits; ++b) {
    const MemristorState& cell = cell_at(geom_.column_of(x, b), y);
    const double r_cell_eff =
        cell.resistance + cor_.r_on_access + path.r_path;
    out.bits[b] = sense(r_cell_eff, r_ref_eff, dev, 0.0, cor_);
    if (out.bits[b].bit) out.data |= 1ull << b;
    if (out.bits[b].reliable) out.reliable_mask |= 1ull << b;
  }

  const std::uint64_t t0 = cycle_ * t_ps_;
  trace_.record(sig_xa_, t0, x);
  trace_.record(sig_ya_, t0, y);
  step_cycle({.en = true, .rw = true});
  const std::uint64_t bmask = word_mask(geom_.word_bits);
  while (ctl_.state() != FsmState::Idle) {
    const bool entering_ph3 = ctl_.state() == FsmState::ReadPh2;
    FsmStep step = step_cycle({});
    if (entering_ph3 && step.state == FsmState::ReadPh3) {
      // Latched sense outputs appear, then the buffers drive the bus.
      const std::uint64_t t3 = cycle_ * t_ps_;
      trace_.record(sig_zsa_, t3, out.data, ~out.reliable_mask & bmask, 0);
      record_io({out.data, ~out.reliable_mask & bmask, true}, t3);
    }
  }
  record_io({0, 0, false}, cycle_ * t_ps_);  // buffers release the bus

  double mmin = out.bits.empty() ? 0.0 : out.bits[0].margin;
  for (const auto& b : out.bits) mmin = std::min(mmin, b.margin);
  log_line("read cycle " + std::to_string(start) + " x " + std::to_string(x) +
           " y " + std::to_string(y) + " data " +
           bits_string(out.data, geom_.word_bits) + " reliable " +
           bits_string(out.reliable_mask, geom_.word_bits) + " margin_min " +
           format_double(mmin));
  return out;
}

void Simulator::set_cell(std::uint32_t col, std::uint32_t row, double ohms) {
  if (col >= geom_.cols) throw SimError("column out of range");
  if (row >= geom_.rows) throw SimError("row out of range");
  if (!(ohms > 0)) throw SimError("cell resistance must be > 0");
  cell_at(col, row).resistance = ohms;
  cell_at(col, row).last_write_ok = false;
  log_line("set_cell col " + std::to_string(col) + " row " +
           std::to_string(row) + " ohms " + format_double(ohms));
}

double Simulator::cell(std::uint32_t col, std::uint32_t row) const {
  if (col >= geom_.cols) throw SimError("column out of range");
  if (row >= geom_.rows) throw SimError("row out of range");
  return cell_at(col, row).resistance;
}

bool Simulator::cell_last_write_ok(std::uint32_t col,
                                   std::uint32_t row) const {
  if (col >= geom_.cols) throw SimError("column out of range");
  if (row >= geom_.rows) throw SimError("row out of range");
  return cell_at(col, row).last_write_ok;
}

std::string Simulator::vcd() const { return trace_.vcd("rram"); }

std::string Simulator::run_log() const {
  std::string out;
  for (const auto& l : log_) {
    out += l;
    out += '\n';
  }
  return out;
}

}  // namespace rramc

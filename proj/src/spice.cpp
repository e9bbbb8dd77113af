// SPDX-License-Identifier: Apache-2.0
//
// Behavioral SPICE-level view of the structural netlist.  The deck is a
// topological cross-check, not a sign-off model: analog blocks expand to
// R/C/switch sketches, digital blocks to empty subcircuits, and memristors
// start uniformly in the high-resistance state.
#include <sstream>

#include "rramc/netlist.hpp"
#include "rramc/technology.hpp"

namespace rramc {

std::size_t spice_elaborated_size(CellKind k) {
  switch (k) {
    case CellKind::MemCell1T1R: return 2;  // access switch + memristor
    case CellKind::RefCell: return 2;      // access switch + reference leg
    case CellKind::MuxSwitch: return 3;    // pass switch, series R, gnd switch
    case CellKind::MuxBlock: return 0;
    case CellKind::WriteDriver: return 6;  // two 3-switch half bridges
    case CellKind::SenseAmp: return 6;     // 2 bias R, 2 develop C, 2 latch S
    case CellKind::LevelDown: return 3;    // pass-through per control line
    case CellKind::TriStateBuffer: return 3;
    case CellKind::Controller: return 0;
    case CellKind::DecoderX: return 0;
    case CellKind::DecoderY: return 0;
  }
  return 0;
}

std::string emit_spice(const Netlist& n, const TechnologyProfile& t) {
  const MemoryGeometry& g = n.geometry();
  std::ostringstream out;
  const std::string r_on = format_double(t.r_mux_on);
  const std::string r_acc = format_double(t.r_on_access);
  const std::string half_vddl = format_double(0.5 * t.vddl);

  out << "* rramc behavioral deck: " << n.design() << "\n";
  out << "* flat top level, one X line per structural instance\n";
  out << ".global VDDL VDDH VDDW VHALF\n";
  out << "V_VDDL VDDL 0 DC " << format_double(t.vddl) << "\n";
  out << "V_VDDH VDDH 0 DC " << format_double(t.vddh) << "\n";
  out << "V_VDDW VDDW 0 DC " << format_double(t.vddw) << "\n";
  out << "V_HALF VHALF 0 DC " << half_vddl << "\n";

  // Switch models: VT picks the control swing each switch listens to.
  out << ".model SW_ACC SW(RON=" << r_acc
      << " ROFF=1e12 VT=" << format_double(0.5 * t.vddh) << ")\n";
  out << ".model SW_TG SW(RON=" << r_on
      << " ROFF=1e12 VT=" << format_double(0.5 * t.vddh) << ")\n";
  out << ".model SW_HI SW(RON=1 ROFF=1e12 VT="
      << format_double(0.5 * t.vddh) << ")\n";
  out << ".model SW_HALF SW(RON=" << format_double(t.r_driver)
      << " ROFF=1e12 VT=" << format_double(0.25 * t.vddl) << ")\n";
  out << ".model SW_CMP SW(RON=1 ROFF=1e12 VT=0)\n";

  out << "\n.subckt MemCell1T1R P N WL\n";
  out << "S1 P MID WL 0 SW_ACC\n";
  out << "R1 MID N " << format_double(t.hrs_ohms()) << "\n";
  out << ".ends\n";

  out << "\n.subckt RefCell P N WL\n";
  out << "S1 P MID WL 0 SW_ACC\n";
  out << "R1 MID N " << format_double(t.r_ref) << "\n";
  out << ".ends\n";

  out << "\n.subckt MuxSwitch BL OUT EN ENB VSS\n";
  out << "S1 BL MID EN VSS SW_TG\n";
  out << "R1 MID OUT " << r_on << "\n";
  out << "S2 BL VSS ENB VSS SW_HI\n";
  out << ".ends\n";

  out << "\n.subckt MuxBlock EN ENB VDDH_P VSS\n";
  out << "* select fanout container, no primitive elements\n";
  out << ".ends\n";

  out << "\n.subckt WriteDriver IN P N EN VDDL_P VDDW_P VSS\n";
  out << "S1 P M1 EN VSS SW_HI\n";
  out << "S2 M1 VDDW_P VHALF IN SW_HALF\n";
  out << "S3 M1 VSS IN VHALF SW_HALF\n";
  out << "S4 N M2 EN VSS SW_HI\n";
  out << "S5 M2 VSS VHALF IN SW_HALF\n";
  out << "S6 M2 VDDW_P IN VHALF SW_HALF\n";
  out << ".ends\n";

  out << "\n.subckt SenseAmp BL REF DVLP PRE EN OUT VDDL_P VSS\n";
  out << "R1 BL D1 " << r_acc << "\n";
  out << "R2 REF D2 " << r_acc << "\n";
  out << "C1 D1 VSS " << format_double(t.c_sense) << "\n";
  out << "C2 D2 VSS " << format_double(t.c_sense) << "\n";
  out << "S1 OUT VDDL_P D2 D1 SW_CMP\n";
  out << "S2 OUT VSS D1 D2 SW_CMP\n";
  out << ".ends\n";

  out << "\n.subckt LevelDown I0 I1 I2 O0 O1 O2 VDDH_P VDDL_P VSS\n";
  out << "R1 I0 O0 1\n";
  out << "R2 I1 O1 1\n";
  out << "R3 I2 O2 1\n";
  out << ".ends\n";

  out << "\n.subckt TriStateBuffer IN OUT EN VDDL_P VSS\n";
  out << "S1 OUT M1 EN VSS SW_HI\n";
  out << "S2 M1 VDDL_P IN VHALF SW_HALF\n";
  out << "S3 M1 VSS VHALF IN SW_HALF\n";
  out << ".ends\n";

  out << "\n.subckt Controller CLK RST EN RW READ READB WRITE DVLP PRE"
         " EN_SA DEC_EN IODRV VDDH_P VSS\n";
  out << "* digital block, modeled behaviorally\n";
  out << ".ends\n";

  out << "\n.subckt DecoderX";
  {
    std::ostringstream hdr;
    hdr << " EN";
    for (std::uint32_t i = 0; i < g.col_bits; ++i) hdr << " A" << i;
    for (std::uint32_t j = 0; j < g.words_per_row(); ++j)
      hdr << " O" << j << " OB" << j;
    hdr << " VDDH_P VSS";
    out << hdr.str() << "\n";
  }
  out << "* digital block, modeled behaviorally\n";
  out << ".ends\n";

  out << "\n.subckt DecoderY";
  {
    std::ostringstream hdr;
    hdr << " EN";
    for (std::uint32_t i = 0; i < g.row_bits; ++i) hdr << " A" << i;
    for (std::uint32_t r = 0; r < g.rows; ++r) hdr << " O" << r;
    hdr << " VDDH_P VSS";
    out << hdr.str() << "\n";
  }
  out << "* digital block, modeled behaviorally\n";
  out << ".ends\n";

  // Lumped line parasitics: full-column worst case on every array line.
  out << "\n* line parasitics\n";
  const std::string c_col =
      format_double(t.c_line_per_cell * static_cast<double>(g.rows));
  for (std::uint32_t c = 0; c < g.cols; ++c) {
    out << "C_P" << c << " P" << c << " 0 " << c_col << "\n";
    out << "C_N" << c << " N" << c << " 0 " << c_col << "\n";
  }
  for (std::uint32_t b = 0; b < g.word_bits; ++b)
    out << "C_REFP" << b << " REFP" << b << " 0 " << c_col << "\n";

  out << "\n* instances\n";
  for (const auto& i : n.instances()) {
    out << "X" << i.id;
    for (const auto& [port, net] : i.ports) {
      (void)port;
      out << " " << (net == "GND" ? std::string("0") : net);
    }
    out << " " << to_string(i.kind) << "\n";
  }
  out << "\n.end\n";
  return out.str();
}

}  // namespace rramc

// SPDX-License-Identifier: Apache-2.0
#include "rramc/netlist.hpp"

#include <set>
#include <sstream>

#include "rramc/errors.hpp"

namespace rramc {

const char* to_string(CellKind k) {
  switch (k) {
    case CellKind::MemCell1T1R: return "MemCell1T1R";
    case CellKind::RefCell: return "RefCell";
    case CellKind::MuxSwitch: return "MuxSwitch";
    case CellKind::MuxBlock: return "MuxBlock";
    case CellKind::WriteDriver: return "WriteDriver";
    case CellKind::SenseAmp: return "SenseAmp";
    case CellKind::LevelDown: return "LevelDown";
    case CellKind::TriStateBuffer: return "TriStateBuffer";
    case CellKind::Controller: return "Controller";
    case CellKind::DecoderX: return "DecoderX";
    case CellKind::DecoderY: return "DecoderY";
  }
  return "?";
}

CellKind cell_kind_from(const std::string& name) {
  for (int k = 0; k <= static_cast<int>(CellKind::DecoderY); ++k) {
    if (name == to_string(static_cast<CellKind>(k)))
      return static_cast<CellKind>(k);
  }
  throw Error("unknown cell kind '" + name + "'");
}

const std::string& Instance::net_of(const std::string& port) const {
  for (const auto& [p, n] : ports) {
    if (p == port) return n;
  }
  throw Error("instance " + id + " has no port '" + port + "'");
}

void Netlist::add_net(const std::string& name, NetClass cls) {
  if (net_index_.count(name)) throw Error("duplicate net '" + name + "'");
  net_index_.emplace(name, nets_.size());
  nets_.push_back({name, cls});
}

Instance& Netlist::add_instance(Instance inst) {
  instances_.push_back(std::move(inst));
  return instances_.back();
}

bool Netlist::has_net(const std::string& name) const {
  return net_index_.count(name) != 0;
}

std::size_t Netlist::count(CellKind k) const {
  std::size_t n = 0;
  for (const auto& i : instances_)
    if (i.kind == k) ++n;
  return n;
}

void Netlist::validate() const {
  std::set<std::string> ids;
  for (const auto& inst : instances_) {
    if (inst.id.empty()) throw Error("instance with empty id");
    if (!ids.insert(inst.id).second)
      throw Error("duplicate instance id '" + inst.id + "'");
    std::set<std::string> ports;
    for (const auto& [port, net] : inst.ports) {
      if (!ports.insert(port).second)
        throw Error("instance " + inst.id + ": duplicate port '" + port +
                    "'");
      if (!has_net(net))
        throw Error("instance " + inst.id + ": port " + port +
                    " bound to undeclared net '" + net + "'");
    }
  }
}

bool Netlist::operator==(const Netlist& other) const {
  return design_ == other.design_ && geom_ == other.geom_ &&
         nets_ == other.nets_ && instances_ == other.instances_;
}

namespace {

std::string num(std::uint32_t v) { return std::to_string(v); }

}  // namespace

Netlist elaborate(const MemoryGeometry& g, const TechnologyProfile& t) {
  t.validate();
  const std::uint32_t words = g.words_per_row();
  const std::uint32_t B = g.word_bits;

  std::string design = "rram_m" + num(g.rows) + "_n" + num(g.cols) + "_b" +
                       num(B);
  Netlist nl(design, g);

  // Rails and top-level inputs.
  for (const char* s : {"VDDL", "VDDH", "VDDW", "GND"})
    nl.add_net(s, NetClass::Supply);
  for (const char* s : {"CLK", "RST", "EN", "RW"})
    nl.add_net(s, NetClass::Signal);
  for (std::uint32_t i = 0; i < g.col_bits; ++i)
    nl.add_net("XA" + num(i), NetClass::Signal);
  for (std::uint32_t i = 0; i < g.row_bits; ++i)
    nl.add_net("YA" + num(i), NetClass::Signal);
  for (std::uint32_t b = 0; b < B; ++b)
    nl.add_net("IO" + num(b), NetClass::Signal);

  // Control bundle and the levelled-down copies feeding the sense amps.
  for (const char* s : {"READ", "READB", "WRITE", "DVLP", "PRE", "EN_SA",
                        "DEC_EN", "IODRV"})
    nl.add_net(s, NetClass::Signal);
  for (const char* s : {"DVLP_L", "PRE_L", "EN_SA_L"})
    nl.add_net(s, NetClass::Signal);

  // Decoder outputs.
  for (std::uint32_t j = 0; j < words; ++j) {
    nl.add_net("XSEL" + num(j), NetClass::Signal);
    nl.add_net("XSELB" + num(j), NetClass::Signal);
  }
  for (std::uint32_t r = 0; r < g.rows; ++r)
    nl.add_net("WL" + num(r), NetClass::Signal);

  // Array lines: a P/N pair per column, one reference P line per data bit.
  for (std::uint32_t c = 0; c < g.cols; ++c) {
    nl.add_net("P" + num(c), NetClass::Signal);
    nl.add_net("N" + num(c), NetClass::Signal);
  }
  for (std::uint32_t b = 0; b < B; ++b)
    nl.add_net("REFP" + num(b), NetClass::Signal);

  // Mux-side rails per data bit and the sense outputs.
  for (std::uint32_t b = 0; b < B; ++b) nl.add_net("BP" + num(b), NetClass::Signal);
  for (std::uint32_t b = 0; b < B; ++b) nl.add_net("BN" + num(b), NetClass::Signal);
  for (std::uint32_t b = 0; b < B; ++b) nl.add_net("BREF" + num(b), NetClass::Signal);
  for (std::uint32_t b = 0; b < B; ++b) nl.add_net("ZSA" + num(b), NetClass::Signal);

  auto inst = [&](std::string id, CellKind kind,
                  std::vector<std::pair<std::string, std::string>> params,
                  std::vector<std::pair<std::string, std::string>> ports) {
    Instance i;
    i.id = std::move(id);
    i.kind = kind;
    i.params = std::move(params);
    i.ports = std::move(ports);
    nl.add_instance(std::move(i));
  };

  // Controller and control level shifters.
  {
    std::vector<std::pair<std::string, std::string>> ports = {
        {"CLK", "CLK"},     {"RST", "RST"},     {"EN", "EN"},
        {"RW", "RW"},       {"READ", "READ"},   {"READB", "READB"},
        {"WRITE", "WRITE"}, {"DVLP", "DVLP"},   {"PRE", "PRE"},
        {"EN_SA", "EN_SA"}, {"DEC_EN", "DEC_EN"}, {"IODRV", "IODRV"},
        {"VDDH", "VDDH"},   {"GND", "GND"}};
    inst("ctrl", CellKind::Controller, {}, std::move(ports));
  }
  inst("lvl", CellKind::LevelDown, {},
       {{"I0", "DVLP"},
        {"I1", "PRE"},
        {"I2", "EN_SA"},
        {"O0", "DVLP_L"},
        {"O1", "PRE_L"},
        {"O2", "EN_SA_L"},
        {"VDDH", "VDDH"},
        {"VDDL", "VDDL"},
        {"GND", "GND"}});

  // Address decoders.
  {
    std::vector<std::pair<std::string, std::string>> ports = {
        {"EN", "DEC_EN"}};
    for (std::uint32_t i = 0; i < g.col_bits; ++i)
      ports.emplace_back("A" + num(i), "XA" + num(i));
    for (std::uint32_t j = 0; j < words; ++j) {
      ports.emplace_back("O" + num(j), "XSEL" + num(j));
      ports.emplace_back("OB" + num(j), "XSELB" + num(j));
    }
    ports.emplace_back("VDDH", "VDDH");
    ports.emplace_back("GND", "GND");
    inst("xdec", CellKind::DecoderX, {{"width", num(g.col_bits)}},
         std::move(ports));
  }
  {
    std::vector<std::pair<std::string, std::string>> ports = {
        {"EN", "DEC_EN"}};
    for (std::uint32_t i = 0; i < g.row_bits; ++i)
      ports.emplace_back("A" + num(i), "YA" + num(i));
    for (std::uint32_t r = 0; r < g.rows; ++r)
      ports.emplace_back("O" + num(r), "WL" + num(r));
    ports.emplace_back("VDDH", "VDDH");
    ports.emplace_back("GND", "GND");
    inst("ydec", CellKind::DecoderY, {{"width", num(g.row_bits)}},
         std::move(ports));
  }

  // Cell array, row-major.
  for (std::uint32_t r = 0; r < g.rows; ++r) {
    for (std::uint32_t c = 0; c < g.cols; ++c) {
      inst("cell_r" + num(r) + "_c" + num(c), CellKind::MemCell1T1R,
           {{"row", num(r)}, {"col", num(c)}},
           {{"P", "P" + num(c)},
            {"N", "N" + num(c)},
            {"WL", "WL" + num(r)}});
    }
  }

  // Reference column array: one reference column per data bit, returning
  // to the ground rail.
  for (std::uint32_t r = 0; r < g.rows; ++r) {
    for (std::uint32_t b = 0; b < B; ++b) {
      inst("ref_r" + num(r) + "_b" + num(b), CellKind::RefCell,
           {{"row", num(r)}, {"bit", num(b)}},
           {{"P", "REFP" + num(b)}, {"N", "GND"}, {"WL", "WL" + num(r)}});
    }
  }

  // P-side mux: one block per word plus the reference block.
  for (std::uint32_t j = 0; j < words; ++j) {
    inst("pmux_b" + num(j), CellKind::MuxBlock,
         {{"side", "P"}, {"block", num(j)}},
         {{"EN", "XSEL" + num(j)},
          {"ENB", "XSELB" + num(j)},
          {"VDDH", "VDDH"},
          {"GND", "GND"}});
    for (std::uint32_t b = 0; b < B; ++b) {
      inst("pmux_b" + num(j) + "_s" + num(b), CellKind::MuxSwitch,
           {{"side", "P"}, {"block", num(j)}, {"bit", num(b)}},
           {{"BL", "P" + num(g.column_of(j, b))},
            {"OUT", "BP" + num(b)},
            {"EN", "XSEL" + num(j)},
            {"ENB", "XSELB" + num(j)},
            {"GND", "GND"}});
    }
  }
  inst("pmux_ref", CellKind::MuxBlock, {{"side", "P"}, {"block", "ref"}},
       {{"EN", "READ"}, {"ENB", "READB"}, {"VDDH", "VDDH"}, {"GND", "GND"}});
  for (std::uint32_t b = 0; b < B; ++b) {
    inst("pmux_ref_s" + num(b), CellKind::MuxSwitch,
         {{"side", "P"}, {"block", "ref"}, {"bit", num(b)}},
         {{"BL", "REFP" + num(b)},
          {"OUT", "BREF" + num(b)},
          {"EN", "READ"},
          {"ENB", "READB"},
          {"GND", "GND"}});
  }

  // N-side mux: word blocks only.
  for (std::uint32_t j = 0; j < words; ++j) {
    inst("nmux_b" + num(j), CellKind::MuxBlock,
         {{"side", "N"}, {"block", num(j)}},
         {{"EN", "XSEL" + num(j)},
          {"ENB", "XSELB" + num(j)},
          {"VDDH", "VDDH"},
          {"GND", "GND"}});
    for (std::uint32_t b = 0; b < B; ++b) {
      inst("nmux_b" + num(j) + "_s" + num(b), CellKind::MuxSwitch,
           {{"side", "N"}, {"block", num(j)}, {"bit", num(b)}},
           {{"BL", "N" + num(g.column_of(j, b))},
            {"OUT", "BN" + num(b)},
            {"EN", "XSEL" + num(j)},
            {"ENB", "XSELB" + num(j)},
            {"GND", "GND"}});
    }
  }

  // Per-bit datapath: write driver, sense amp, IO buffer.
  for (std::uint32_t b = 0; b < B; ++b) {
    inst("wdrv" + num(b), CellKind::WriteDriver, {{"bit", num(b)}},
         {{"IN", "IO" + num(b)},
          {"P", "BP" + num(b)},
          {"N", "BN" + num(b)},
          {"EN", "WRITE"},
          {"VDDL", "VDDL"},
          {"VDDW", "VDDW"},
          {"GND", "GND"}});
  }
  for (std::uint32_t b = 0; b < B; ++b) {
    inst("sa" + num(b), CellKind::SenseAmp, {{"bit", num(b)}},
         {{"BL", "BP" + num(b)},
          {"REF", "BREF" + num(b)},
          {"DVLP", "DVLP_L"},
          {"PRE", "PRE_L"},
          {"EN", "EN_SA_L"},
          {"OUT", "ZSA" + num(b)},
          {"VDDL", "VDDL"},
          {"GND", "GND"}});
  }
  for (std::uint32_t b = 0; b < B; ++b) {
    inst("iob" + num(b), CellKind::TriStateBuffer, {{"bit", num(b)}},
         {{"IN", "ZSA" + num(b)},
          {"OUT", "IO" + num(b)},
          {"EN", "IODRV"},
          {"VDDL", "VDDL"},
          {"GND", "GND"}});
  }

  nl.validate();
  return nl;
}

std::string emit_structural(const Netlist& n) {
  std::ostringstream out;
  const MemoryGeometry& g = n.geometry();
  out << "rnl 1\n";
  out << "design " << n.design() << "\n";
  out << "geometry M=" << g.rows << " N=" << g.cols << " B=" << g.word_bits
      << " X=" << g.col_bits << " Y=" << g.row_bits << "\n";
  for (const auto& net : n.nets()) {
    out << "net " << net.name << " "
        << (net.cls == NetClass::Supply ? "supply" : "signal") << "\n";
  }
  for (const auto& i : n.instances()) {
    out << "inst " << i.id << " " << to_string(i.kind) << " ::";
    for (const auto& [k, v] : i.params) out << " " << k << "=" << v;
    out << " ::";
    for (const auto& [p, net] : i.ports) out << " " << p << "=" << net;
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::pair<std::string, std::string> split_eq(const std::string& tok,
                                             int lineno) {
  auto eq = tok.find('=');
  if (eq == std::string::npos || eq == 0)
    throw Error("line " + std::to_string(lineno) + ": expected key=value, got '" +
                tok + "'");
  return {tok.substr(0, eq), tok.substr(eq + 1)};
}

}  // namespace

Netlist parse_structural(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };

  if (!next_line() || line != "rnl 1")
    throw Error("line 1: expected header 'rnl 1'");
  if (!next_line() || line.rfind("design ", 0) != 0)
    throw Error("line " + std::to_string(lineno) + ": expected design line");
  std::string design = line.substr(7);

  if (!next_line() || line.rfind("geometry ", 0) != 0)
    throw Error("line " + std::to_string(lineno) + ": expected geometry line");
  std::uint64_t m = 0, ncols = 0, b = 0;
  {
    auto toks = split_ws(line);
    for (size_t i = 1; i < toks.size(); ++i) {
      auto [k, v] = split_eq(toks[i], lineno);
      if (k == "M") m = std::stoull(v);
      else if (k == "N") ncols = std::stoull(v);
      else if (k == "B") b = std::stoull(v);
      // X and Y are redundant; re-derived below.
    }
  }
  MemoryGeometry g = validate_geometry(m, ncols, b);

  Netlist nl(design, g);
  bool saw_end = false;
  while (next_line()) {
    if (line == "end") {
      saw_end = true;
      break;
    }
    auto toks = split_ws(line);
    if (toks[0] == "net") {
      if (toks.size() != 3)
        throw Error("line " + std::to_string(lineno) + ": malformed net line");
      NetClass cls;
      if (toks[2] == "supply") cls = NetClass::Supply;
      else if (toks[2] == "signal") cls = NetClass::Signal;
      else
        throw Error("line " + std::to_string(lineno) + ": bad net class '" +
                    toks[2] + "'");
      nl.add_net(toks[1], cls);
    } else if (toks[0] == "inst") {
      if (toks.size() < 4)
        throw Error("line " + std::to_string(lineno) +
                    ": malformed inst line");
      Instance inst;
      inst.id = toks[1];
      inst.kind = cell_kind_from(toks[2]);
      size_t i = 3;
      if (i >= toks.size() || toks[i] != "::")
        throw Error("line " + std::to_string(lineno) +
                    ": expected '::' before params");
      ++i;
      while (i < toks.size() && toks[i] != "::") {
        inst.params.push_back(split_eq(toks[i], lineno));
        ++i;
      }
      if (i >= toks.size())
        throw Error("line " + std::to_string(lineno) +
                    ": expected '::' before ports");
      ++i;  // skip second "::"
      for (; i < toks.size(); ++i)
        inst.ports.push_back(split_eq(toks[i], lineno));
      nl.add_instance(std::move(inst));
    } else {
      throw Error("line " + std::to_string(lineno) + ": unknown record '" +
                  toks[0] + "'");
    }
  }
  if (!saw_end) throw Error("missing 'end' record");
  nl.validate();
  return nl;
}

}  // namespace rramc

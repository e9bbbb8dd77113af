// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "doctest.h"
#include "rramc/errors.hpp"
#include "rramc/netlist.hpp"

using namespace rramc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(bool(in), "cannot open " << path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string param_of(const Instance& inst, const std::string& key) {
  for (const auto& [k, v] : inst.params) {
    if (k == key) return v;
  }
  return {};
}

}  // namespace

TEST_CASE("elaborated instance counts") {
  const TechnologyProfile t = default_profile();

  struct Case {
    std::uint32_t m, n, b;
    std::size_t cells, refs, blocks, switches, nets;
  };
  // blocks = 2^(X+1) + 1 (P side per word + reference + N side per word),
  // switches = B per block,
  // nets = 19 fixed + X + Y + 6B + 2^(X+1) + M + 2N.
  const Case cases[] = {
      {2, 2, 1, 4, 2, 5, 5, 37},
      {32, 32, 4, 1024, 128, 17, 68, 19 + 3 + 5 + 24 + 16 + 32 + 64},
      {64, 64, 8, 4096, 512, 17, 136, 19 + 3 + 6 + 48 + 16 + 64 + 128},
      {128, 64, 8, 8192, 1024, 17, 136, 19 + 3 + 7 + 48 + 16 + 128 + 128},
  };
  for (const Case& c : cases) {
    CAPTURE(c.m);
    CAPTURE(c.n);
    const MemoryGeometry g = validate_geometry(c.m, c.n, c.b);
    const Netlist nl = elaborate(g, t);
    CHECK_NOTHROW(nl.validate());
    CHECK(nl.count(CellKind::MemCell1T1R) == c.cells);
    CHECK(nl.count(CellKind::RefCell) == c.refs);
    CHECK(nl.count(CellKind::MuxBlock) == c.blocks);
    CHECK(nl.count(CellKind::MuxSwitch) == c.switches);
    CHECK(nl.count(CellKind::WriteDriver) == c.b);
    CHECK(nl.count(CellKind::SenseAmp) == c.b);
    CHECK(nl.count(CellKind::TriStateBuffer) == c.b);
    CHECK(nl.count(CellKind::LevelDown) == 1);
    CHECK(nl.count(CellKind::Controller) == 1);
    CHECK(nl.count(CellKind::DecoderX) == 1);
    CHECK(nl.count(CellKind::DecoderY) == 1);
    CHECK(nl.net_count() == c.nets);
    CHECK(nl.instance_count() ==
          c.cells + c.refs + c.blocks + c.switches + 3 * c.b + 4);
  }
}

TEST_CASE("net inventory") {
  const MemoryGeometry g = validate_geometry(64, 64, 8);
  const Netlist nl = elaborate(g, default_profile());

  for (const char* name :
       {"VDDL", "VDDH", "VDDW", "GND", "CLK", "RST", "EN", "RW", "READ",
        "READB", "WRITE", "DVLP", "PRE", "EN_SA", "DEC_EN", "IODRV", "DVLP_L",
        "PRE_L", "EN_SA_L", "XA0", "XA2", "YA0", "YA5", "IO0", "IO7", "WL0",
        "WL63", "P0", "P63", "N63", "REFP0", "REFP7", "XSEL0", "XSEL7",
        "XSELB7", "BP7", "BN7", "BREF7", "ZSA7"}) {
    CAPTURE(name);
    CHECK(nl.has_net(name));
  }
  for (const char* name : {"XA3", "YA6", "IO8", "WL64", "P64", "XSEL8",
                           "REFP8", "ZSA8", "BOGUS"}) {
    CAPTURE(name);
    CHECK_FALSE(nl.has_net(name));
  }

  // Supplies are the first four nets and classed as such.
  REQUIRE(nl.nets().size() > 4);
  for (size_t i = 0; i < 4; ++i)
    CHECK(nl.nets()[i].cls == NetClass::Supply);
  CHECK(nl.nets()[4].cls == NetClass::Signal);
}

TEST_CASE("golden structural emission") {
  const MemoryGeometry g = validate_geometry(2, 2, 1);
  const Netlist nl = elaborate(g, default_profile());
  const std::string got = emit_structural(nl);
  const std::string want =
      slurp(std::string(RRAMC_SOURCE_DIR) + "/tests/golden/netlist_m2_n2_b1.rnl");
  CHECK(got == want);
}

TEST_CASE("structural round trip") {
  const TechnologyProfile t = default_profile();
  for (auto [m, n, b] : {std::array<std::uint64_t, 3>{2, 2, 1},
                         std::array<std::uint64_t, 3>{8, 8, 2},
                         std::array<std::uint64_t, 3>{16, 32, 4}}) {
    const Netlist nl = elaborate(validate_geometry(m, n, b), t);
    const std::string text = emit_structural(nl);
    const Netlist back = parse_structural(text);
    CHECK(back == nl);
    CHECK(emit_structural(back) == text);
  }
}

TEST_CASE("structural parse errors") {
  auto message_of = [](const std::string& text) {
    try {
      parse_structural(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };

  CHECK(message_of("").find("expected header") != std::string::npos);
  CHECK(message_of("rnl 2\n").find("expected header") != std::string::npos);
  CHECK(message_of("rnl 1\nnonsense\n").find("expected design") !=
        std::string::npos);

  const std::string good = emit_structural(
      elaborate(validate_geometry(2, 2, 1), default_profile()));

  // Truncation loses the end record.
  std::string cut = good.substr(0, good.rfind("end"));
  CHECK(message_of(cut).find("missing 'end'") != std::string::npos);

  // A corrupted record is reported with its line number.
  std::string bad = good;
  bad.replace(bad.find("net VDDL supply"), 15, "net VDDL bogus!");
  CHECK(message_of(bad).find("bad net class") != std::string::npos);
  CHECK(message_of(bad).find("line 4") != std::string::npos);
}

TEST_CASE("netlist validation") {
  Netlist nl("t", validate_geometry(2, 2, 1));
  nl.add_net("A", NetClass::Signal);
  CHECK_THROWS_AS(nl.add_net("A", NetClass::Supply), Error);

  Instance i1;
  i1.id = "u1";
  i1.kind = CellKind::MemCell1T1R;
  i1.ports = {{"P", "A"}, {"N", "A"}, {"WL", "A"}};
  nl.add_instance(i1);
  CHECK_NOTHROW(nl.validate());
  CHECK(i1.net_of("P") == "A");
  CHECK_THROWS_AS((void)i1.net_of("Q"), Error);

  // Port bound to a net that was never declared.
  Instance i2 = i1;
  i2.id = "u2";
  i2.ports = {{"P", "MISSING"}};
  nl.add_instance(i2);
  CHECK_THROWS_AS(nl.validate(), Error);

  // Duplicate instance id.
  Netlist nl2("t", validate_geometry(2, 2, 1));
  nl2.add_net("A", NetClass::Signal);
  nl2.add_instance(i1);
  nl2.add_instance(i1);
  CHECK_THROWS_AS(nl2.validate(), Error);

  // Duplicate port on one instance.
  Netlist nl3("t", validate_geometry(2, 2, 1));
  nl3.add_net("A", NetClass::Signal);
  Instance i3 = i1;
  i3.ports = {{"P", "A"}, {"P", "A"}};
  nl3.add_instance(i3);
  CHECK_THROWS_AS(nl3.validate(), Error);

  CHECK_THROWS_AS(cell_kind_from("NoSuchKind"), Error);
  CHECK(cell_kind_from("SenseAmp") == CellKind::SenseAmp);
}

TEST_CASE("column mux connectivity") {
  const MemoryGeometry g = validate_geometry(16, 16, 4);
  const Netlist nl = elaborate(g, default_profile());

  // Map BL net -> (OUT net, bit) for each P-side word-select switch.
  std::map<std::string, std::pair<std::string, std::string>> p_switch;
  for (const auto& inst : nl.instances()) {
    if (inst.kind != CellKind::MuxSwitch) continue;
    if (param_of(inst, "side") != "P" || param_of(inst, "block") == "ref")
      continue;
    auto [it, fresh] = p_switch.emplace(
        inst.net_of("BL"),
        std::make_pair(inst.net_of("OUT"), param_of(inst, "bit")));
    CHECK_MESSAGE(fresh, "bit line multiply selected: " << inst.id);
    (void)it;
  }

  // Every column's P line reaches exactly one switch, and lands on the
  // data line matching its bit position within the word.
  REQUIRE(p_switch.size() == g.cols);
  for (std::uint32_t x = 0; x < g.words_per_row(); ++x) {
    for (std::uint32_t bit = 0; bit < g.word_bits; ++bit) {
      const std::string bl = "P" + std::to_string(g.column_of(x, bit));
      REQUIRE(p_switch.count(bl));
      CHECK(p_switch[bl].first == "BP" + std::to_string(bit));
      CHECK(p_switch[bl].second == std::to_string(bit));
    }
  }

  // Reference switches route REFP<b> to BREF<b> behind the READ gate.
  for (const auto& inst : nl.instances()) {
    if (inst.kind != CellKind::MuxSwitch || param_of(inst, "block") != "ref")
      continue;
    const std::string bit = param_of(inst, "bit");
    CHECK(inst.net_of("BL") == "REFP" + bit);
    CHECK(inst.net_of("OUT") == "BREF" + bit);
    CHECK(inst.net_of("EN") == "READ");
    CHECK(inst.net_of("ENB") == "READB");
  }

  // Cells share word lines by row and bit lines by column; reference cells
  // tie their N terminal to ground.
  for (const auto& inst : nl.instances()) {
    if (inst.kind == CellKind::MemCell1T1R) {
      CHECK(inst.net_of("P") == "P" + param_of(inst, "col"));
      CHECK(inst.net_of("N") == "N" + param_of(inst, "col"));
      CHECK(inst.net_of("WL") == "WL" + param_of(inst, "row"));
    } else if (inst.kind == CellKind::RefCell) {
      CHECK(inst.net_of("N") == "GND");
      CHECK(inst.net_of("WL") == "WL" + param_of(inst, "row"));
    }
  }
}

TEST_CASE("spice deck structure") {
  const MemoryGeometry g = validate_geometry(2, 2, 1);
  const TechnologyProfile t = default_profile();
  const Netlist nl = elaborate(g, t);
  const std::string deck = emit_spice(nl, t);
  CHECK(emit_spice(nl, t) == deck);  // deterministic

  // Parse the deck: count primitive cards per subckt and at top level.
  std::map<std::string, std::size_t> body_elems;
  std::size_t x_lines = 0, top_caps = 0, v_sources = 0, subckts = 0;
  bool saw_end = false;
  std::string cur;
  std::istringstream in(deck);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(".subckt ", 0) == 0) {
      ++subckts;
      std::istringstream ls(line);
      std::string dot, name;
      ls >> dot >> name;
      cur = name;
      body_elems[cur] = 0;
    } else if (line == ".ends") {
      cur.clear();
    } else if (line == ".end") {
      saw_end = true;
    } else if (!line.empty()) {
      const char c = line[0];
      if (!cur.empty()) {
        if (c == 'R' || c == 'C' || c == 'S') ++body_elems[cur];
      } else {
        if (c == 'X') ++x_lines;
        if (c == 'C') ++top_caps;
        if (c == 'V') ++v_sources;
      }
    }
  }
  CHECK(saw_end);
  CHECK(subckts == 11);
  CHECK(x_lines == nl.instance_count());
  CHECK(top_caps == 2 * g.cols + g.word_bits);  // P, N and REFP lines
  CHECK(v_sources == 4);

  // The subckt bodies must match the advertised expansion sizes.
  for (int k = 0; k <= static_cast<int>(CellKind::DecoderY); ++k) {
    const CellKind kind = static_cast<CellKind>(k);
    const std::string name = to_string(kind);
    CAPTURE(name);
    REQUIRE(body_elems.count(name));
    CHECK(body_elems[name] == spice_elaborated_size(kind));
  }

  // Known sizes, pinned.
  CHECK(spice_elaborated_size(CellKind::MemCell1T1R) == 2);
  CHECK(spice_elaborated_size(CellKind::RefCell) == 2);
  CHECK(spice_elaborated_size(CellKind::MuxSwitch) == 3);
  CHECK(spice_elaborated_size(CellKind::WriteDriver) == 6);
  CHECK(spice_elaborated_size(CellKind::SenseAmp) == 6);
  CHECK(spice_elaborated_size(CellKind::LevelDown) == 3);
  CHECK(spice_elaborated_size(CellKind::TriStateBuffer) == 3);
  CHECK(spice_elaborated_size(CellKind::MuxBlock) == 0);
  CHECK(spice_elaborated_size(CellKind::Controller) == 0);

  // Cell and reference resistances appear with the profile values.
  CHECK(deck.find(format_double(t.hrs_ohms())) != std::string::npos);
  CHECK(deck.find(format_double(t.r_ref)) != std::string::npos);
}

TEST_CASE("elaboration is deterministic") {
  const MemoryGeometry g = validate_geometry(8, 8, 2);
  const TechnologyProfile t = default_profile();
  const Netlist a = elaborate(g, t);
  const Netlist b = elaborate(g, t);
  CHECK(a == b);
  CHECK(emit_structural(a) == emit_structural(b));
}

// SPDX-License-Identifier: Apache-2.0
#include "rramc/technology.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <system_error>

#include "rramc/errors.hpp"

namespace rramc {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

const CornerProfile& TechnologyProfile::corner(std::string_view name) const {
  for (const auto& c : corners) {
    if (c.name == name) return c;
  }
  throw ProfileError("unknown corner '" + std::string(name) + "'");
}

bool TechnologyProfile::has_corner(std::string_view name) const {
  for (const auto& c : corners) {
    if (c.name == name) return true;
  }
  return false;
}

void TechnologyProfile::validate() const {
  auto fail = [](const std::string& what) { throw ProfileError(what); };

  if (schema != 1) fail("unsupported schema " + std::to_string(schema));
  if (!(vddl > 0)) fail("vddl must be > 0");
  if (!(vddh >= vddl)) fail("vddh must be >= vddl");
  if (!(vddw > 0)) fail("vddw must be > 0");

  struct Positive {
    const char* name;
    double value;
  };
  const Positive strictly_positive[] = {
      {"r_ref", r_ref},
      {"r_on_access", r_on_access},
      {"r_driver", r_driver},
      {"r_mux_on", r_mux_on},
      {"r_line_per_cell", r_line_per_cell},
      {"c_line_per_cell", c_line_per_cell},
      {"c_sense", c_sense},
      {"cell_pitch_x", cell_pitch_x},
      {"cell_pitch_y", cell_pitch_y},
  };
  for (const auto& p : strictly_positive) {
    if (!(p.value > 0)) fail(std::string(p.name) + " must be > 0");
  }

  if (!(write_ratio_a > 0 && write_ratio_a < 1))
    fail("write_ratio_a must be in (0, 1)");
  if (!(read_bias_frac > 0 && read_bias_frac <= 1))
    fail("read_bias_frac must be in (0, 1]");
  if (!(sense_offset >= 0)) fail("sense_offset must be >= 0");
  if (!(sense_min_develop >= 0)) fail("sense_min_develop must be >= 0");
  if (!(level_down_delay >= 0)) fail("level_down_delay must be >= 0");
  if (!(periphery_width >= 0)) fail("periphery_width must be >= 0");
  if (!(periphery_height >= 0)) fail("periphery_height must be >= 0");
  if (!(periphery_area_overhead >= 0 && periphery_area_overhead < 10))
    fail("periphery_area_overhead must be in [0, 10)");

  if (write_cycles < 1 || ph1_cycles < 1 || ph2_cycles < 1 || ph3_cycles < 1)
    fail("phase durations must be >= 1 cycle");

  if (corners.empty()) fail("profile defines no corners");
  std::set<std::string> seen;
  for (const auto& c : corners) {
    if (c.name.empty()) fail("corner with empty name");
    if (!seen.insert(c.name).second) fail("duplicate corner '" + c.name + "'");
    if (!(c.nmos_strength > 0 && c.nmos_strength <= 2))
      fail("corner " + c.name + ": nmos_strength out of (0, 2]");
    if (!(c.pmos_strength > 0 && c.pmos_strength <= 2))
      fail("corner " + c.name + ": pmos_strength out of (0, 2]");
    if (!(c.sense_offset_extra >= 0))
      fail("corner " + c.name + ": sense_offset_extra must be >= 0");
  }
  if (!has_corner("TT")) fail("profile must define corner TT");
  const CornerProfile& tt = corner("TT");
  if (tt.nmos_strength != 1.0 || tt.pmos_strength != 1.0 ||
      tt.sense_offset_extra != 0.0)
    fail("corner TT must be the identity corner");
}

TechnologyProfile corner_apply(const TechnologyProfile& t,
                               const CornerProfile& c) {
  TechnologyProfile out = t;
  // NMOS-only paths: cell access transistor and the NMOS reference leg.
  out.r_on_access = t.r_on_access * c.nmos_strength;
  out.r_ref = t.r_ref * c.nmos_strength;
  // Complementary structures average the two skews.
  const double mean = 0.5 * (c.nmos_strength + c.pmos_strength);
  out.r_driver = t.r_driver * mean;
  out.r_mux_on = t.r_mux_on * mean;
  out.sense_offset = t.sense_offset + c.sense_offset_extra;
  return out;
}

namespace {

struct FieldRef {
  const char* key;
  double TechnologyProfile::* dbl = nullptr;
  int TechnologyProfile::* num = nullptr;
};

// Canonical field order, shared by the writer and the parser.
const FieldRef kFields[] = {
    {"schema", nullptr, &TechnologyProfile::schema},
    {"vddl", &TechnologyProfile::vddl},
    {"vddh", &TechnologyProfile::vddh},
    {"vddw", &TechnologyProfile::vddw},
    {"r_ref", &TechnologyProfile::r_ref},
    {"write_ratio_a", &TechnologyProfile::write_ratio_a},
    {"r_on_access", &TechnologyProfile::r_on_access},
    {"r_driver", &TechnologyProfile::r_driver},
    {"r_mux_on", &TechnologyProfile::r_mux_on},
    {"r_line_per_cell", &TechnologyProfile::r_line_per_cell},
    {"c_line_per_cell", &TechnologyProfile::c_line_per_cell},
    {"read_bias_frac", &TechnologyProfile::read_bias_frac},
    {"c_sense", &TechnologyProfile::c_sense},
    {"sense_offset", &TechnologyProfile::sense_offset},
    {"sense_min_develop", &TechnologyProfile::sense_min_develop},
    {"level_down_delay", &TechnologyProfile::level_down_delay},
    {"cell_pitch_x", &TechnologyProfile::cell_pitch_x},
    {"cell_pitch_y", &TechnologyProfile::cell_pitch_y},
    {"periphery_width", &TechnologyProfile::periphery_width},
    {"periphery_height", &TechnologyProfile::periphery_height},
    {"periphery_area_overhead", &TechnologyProfile::periphery_area_overhead},
    {"write_cycles", nullptr, &TechnologyProfile::write_cycles},
    {"ph1_cycles", nullptr, &TechnologyProfile::ph1_cycles},
    {"ph2_cycles", nullptr, &TechnologyProfile::ph2_cycles},
    {"ph3_cycles", nullptr, &TechnologyProfile::ph3_cycles},
};

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

double parse_number(const std::string& text, int line) {
  double v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ProfileError("line " + std::to_string(line) + ": bad number '" +
                       text + "'");
  }
  return v;
}

int parse_int(const std::string& text, int line) {
  int v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ProfileError("line " + std::to_string(line) + ": bad integer '" +
                       text + "'");
  }
  return v;
}

}  // namespace

TechnologyProfile parse_profile(const std::string& text) {
  TechnologyProfile t;
  std::set<std::string> assigned;
  std::map<std::string, size_t> corner_index;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ProfileError("line " + std::to_string(lineno) +
                         ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ProfileError("line " + std::to_string(lineno) +
                         ": expected key = value");
    if (!assigned.insert(key).second)
      throw ProfileError("line " + std::to_string(lineno) +
                         ": duplicate key '" + key + "'");

    if (key.rfind("corner.", 0) == 0) {
      std::string rest = key.substr(7);
      auto dot = rest.find('.');
      if (dot == std::string::npos || dot == 0 || dot + 1 >= rest.size())
        throw ProfileError("line " + std::to_string(lineno) +
                           ": malformed corner key '" + key + "'");
      std::string cname = rest.substr(0, dot);
      std::string field = rest.substr(dot + 1);
      auto [it, inserted] =
          corner_index.try_emplace(cname, t.corners.size());
      if (inserted) {
        CornerProfile c;
        c.name = cname;
        t.corners.push_back(c);
      }
      CornerProfile& c = t.corners[it->second];
      if (field == "nmos_strength")
        c.nmos_strength = parse_number(value, lineno);
      else if (field == "pmos_strength")
        c.pmos_strength = parse_number(value, lineno);
      else if (field == "sense_offset_extra")
        c.sense_offset_extra = parse_number(value, lineno);
      else
        throw ProfileError("line " + std::to_string(lineno) +
                           ": unknown corner field '" + field + "'");
      continue;
    }

    bool known = false;
    for (const auto& f : kFields) {
      if (key == f.key) {
        if (f.dbl)
          t.*(f.dbl) = parse_number(value, lineno);
        else
          t.*(f.num) = parse_int(value, lineno);
        known = true;
        break;
      }
    }
    if (!known)
      throw ProfileError("line " + std::to_string(lineno) +
                         ": unknown key '" + key + "'");
  }

  for (const auto& f : kFields) {
    if (!assigned.count(f.key))
      throw ProfileError("missing required key '" + std::string(f.key) + "'");
  }
  t.validate();
  return t;
}

TechnologyProfile load_profile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProfileError("cannot open profile '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile(buf.str());
}

std::string profile_to_text(const TechnologyProfile& t) {
  std::ostringstream out;
  out << "# rramc technology profile (schema 1)\n";
  for (const auto& f : kFields) {
    out << f.key << " = ";
    if (f.dbl)
      out << format_double(t.*(f.dbl));
    else
      out << t.*(f.num);
    out << "\n";
  }
  for (const auto& c : t.corners) {
    out << "corner." << c.name
        << ".nmos_strength = " << format_double(c.nmos_strength) << "\n";
    out << "corner." << c.name
        << ".pmos_strength = " << format_double(c.pmos_strength) << "\n";
    out << "corner." << c.name
        << ".sense_offset_extra = " << format_double(c.sense_offset_extra)
        << "\n";
  }
  return out.str();
}

void save_profile(const TechnologyProfile& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ProfileError("cannot write profile '" + path + "'");
  out << profile_to_text(t);
}

}  // namespace rramc

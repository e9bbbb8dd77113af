// SPDX-License-Identifier: Apache-2.0
#include "rramc/wavetrace.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rramc/errors.hpp"

namespace rramc {

std::uint32_t WaveTrace::add_signal(const std::string& name,
                                    std::uint32_t width) {
  if (width == 0 || width > 64) throw Error("signal width out of range");
  signals_.push_back({name, width, {}});
  return static_cast<std::uint32_t>(signals_.size() - 1);
}

const std::vector<WaveChange>& WaveTrace::changes(std::uint32_t sig) const {
  return signals_.at(sig).changes;
}

void WaveTrace::record(std::uint32_t sig, std::uint64_t t_ps,
                       std::uint64_t value, std::uint64_t xmask,
                       std::uint64_t zmask) {
  Signal& s = signals_.at(sig);
  const std::uint64_t mask =
      s.width == 64 ? ~0ull : ((1ull << s.width) - 1ull);
  WaveChange c{t_ps, value & mask, xmask & mask, zmask & mask};

  if (!s.changes.empty()) {
    WaveChange& last = s.changes.back();
    if (t_ps < last.t_ps)
      throw Error("wave record for '" + s.name + "' goes back in time");
    if (t_ps == last.t_ps) {
      last = c;
      // Collapse if the rewrite restored the previous value.
      if (s.changes.size() >= 2) {
        const WaveChange& prev = s.changes[s.changes.size() - 2];
        if (prev.value == c.value && prev.xmask == c.xmask &&
            prev.zmask == c.zmask)
          s.changes.pop_back();
      }
      return;
    }
    if (last.value == c.value && last.xmask == c.xmask &&
        last.zmask == c.zmask)
      return;  // no change
  }
  s.changes.push_back(c);
}

namespace {

std::string vcd_id(std::size_t index) {
  // Identifiers over the printable range '!'..'~'.
  std::string id;
  do {
    id.push_back(static_cast<char>('!' + index % 94));
    index /= 94;
  } while (index != 0);
  return id;
}

void append_value(std::string& out, const WaveChange& c, std::uint32_t width,
                  const std::string& id) {
  auto bit_char = [&](std::uint32_t bit) -> char {
    const std::uint64_t m = 1ull << bit;
    if (c.xmask & m) return 'x';
    if (c.zmask & m) return 'z';
    return (c.value & m) ? '1' : '0';
  };
  if (width == 1) {
    out.push_back(bit_char(0));
    out += id;
  } else {
    out.push_back('b');
    for (std::uint32_t b = width; b-- > 0;) out.push_back(bit_char(b));
    out.push_back(' ');
    out += id;
  }
  out.push_back('\n');
}

}  // namespace

std::string WaveTrace::vcd(const std::string& top) const {
  std::ostringstream out;
  out << "$version rramc $end\n";
  out << "$timescale 1ps $end\n";
  out << "$scope module " << top << " $end\n";
  for (std::size_t i = 0; i < signals_.size(); ++i) {
    const Signal& s = signals_[i];
    out << "$var wire " << s.width << " " << vcd_id(i) << " " << s.name;
    if (s.width > 1) out << " [" << (s.width - 1) << ":0]";
    out << " $end\n";
  }
  out << "$upscope $end\n";
  out << "$enddefinitions $end\n";

  // Merge the per-signal streams into time order; within one timestamp keep
  // declaration order.
  std::map<std::uint64_t, std::string> frames;
  for (std::size_t i = 0; i < signals_.size(); ++i) {
    const Signal& s = signals_[i];
    const std::string id = vcd_id(i);
    for (const WaveChange& c : s.changes)
      append_value(frames[c.t_ps], c, s.width, id);
  }
  bool first = true;
  for (const auto& [t, body] : frames) {
    out << "#" << t << "\n";
    if (first) {
      out << "$dumpvars\n" << body << "$end\n";
      first = false;
    } else {
      out << body;
    }
  }
  return out.str();
}

}  // namespace rramc

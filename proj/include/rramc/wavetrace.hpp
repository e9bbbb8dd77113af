// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rramc {

/// Four-state value change: per-bit x/z flags override the value bits.
struct WaveChange {
  std::uint64_t t_ps = 0;
  std::uint64_t value = 0;
  std::uint64_t xmask = 0;
  std::uint64_t zmask = 0;

  bool operator==(const WaveChange&) const = default;
};

/// Compact value-change store with a VCD serializer.
class WaveTrace {
public:
  /// Declares a signal; returns its handle.  Width up to 64 bits.
  std::uint32_t add_signal(const std::string& name, std::uint32_t width);

  /// Records a change.  Times must be non-decreasing per signal; a record at
  /// the same timestamp replaces the previous one, identical values are
  /// dropped.
  void record(std::uint32_t sig, std::uint64_t t_ps, std::uint64_t value,
              std::uint64_t xmask = 0, std::uint64_t zmask = 0);

  std::size_t signal_count() const { return signals_.size(); }
  const std::vector<WaveChange>& changes(std::uint32_t sig) const;

  /// Serializes the trace as a VCD file with a 1 ps timescale.
  /// Byte-deterministic; an empty trace yields a header-only dump.
  std::string vcd(const std::string& top = "rram") const;

private:
  struct Signal {
    std::string name;
    std::uint32_t width;
    std::vector<WaveChange> changes;
  };
  std::vector<Signal> signals_;
};

}  // namespace rramc

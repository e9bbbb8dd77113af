// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rramc/geometry.hpp"
#include "rramc/technology.hpp"

namespace rramc {

enum class CellKind {
  MemCell1T1R,
  RefCell,
  MuxSwitch,
  MuxBlock,
  WriteDriver,
  SenseAmp,
  LevelDown,
  TriStateBuffer,
  Controller,
  DecoderX,
  DecoderY,
};

const char* to_string(CellKind k);
CellKind cell_kind_from(const std::string& name);

enum class NetClass { Supply, Signal };

struct Net {
  std::string name;
  NetClass cls = NetClass::Signal;

  bool operator==(const Net&) const = default;
};

/// One instantiated primitive.  params and ports keep insertion order so
/// emission is deterministic.
struct Instance {
  std::string id;
  CellKind kind = CellKind::MemCell1T1R;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, std::string>> ports;  // port -> net

  const std::string& net_of(const std::string& port) const;
  bool operator==(const Instance&) const = default;
};

/// Structural view of one memory instance.
class Netlist {
public:
  Netlist() = default;
  Netlist(std::string design, MemoryGeometry g)
      : design_(std::move(design)), geom_(g) {}

  const std::string& design() const { return design_; }
  const MemoryGeometry& geometry() const { return geom_; }

  void add_net(const std::string& name, NetClass cls);
  Instance& add_instance(Instance inst);

  bool has_net(const std::string& name) const;
  const std::vector<Net>& nets() const { return nets_; }
  const std::vector<Instance>& instances() const { return instances_; }

  std::size_t net_count() const { return nets_.size(); }
  std::size_t instance_count() const { return instances_.size(); }
  std::size_t count(CellKind k) const;

  /// Structural sanity: unique ids, unique port names per instance, every
  /// port bound to a declared net.  Throws Error on the first violation.
  void validate() const;

  bool operator==(const Netlist& other) const;

private:
  std::string design_;
  MemoryGeometry geom_;
  std::vector<Net> nets_;
  std::vector<Instance> instances_;
  std::unordered_map<std::string, std::size_t> net_index_;
};

/// Builds the full structural netlist for one geometry: cell array,
/// reference column array, split column muxes, write drivers, sense amps,
/// level shifters, IO buffers, decoders and the controller.
Netlist elaborate(const MemoryGeometry& g, const TechnologyProfile& t);

/// Versioned line-oriented text form ("rnl 1").  Byte-deterministic.
std::string emit_structural(const Netlist& n);

/// Inverse of emit_structural; throws Error with a line reference.
Netlist parse_structural(const std::string& text);

/// Flat behavioral SPICE deck: one subcircuit per cell kind built from
/// R/C/switch primitives, one X line per instance, plus supply sources and
/// lumped line parasitics.  Digital blocks (controller, decoders) appear as
/// empty subcircuits.  Byte-deterministic.
std::string emit_spice(const Netlist& n, const TechnologyProfile& t);

/// Number of primitive elements emit_spice expands to for one instance of
/// kind `k` (0 for container/digital kinds).
std::size_t spice_elaborated_size(CellKind k);

}  // namespace rramc

// SPDX-License-Identifier: Apache-2.0
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rramc/analog.hpp"
#include "rramc/calibrate.hpp"
#include "rramc/characterize.hpp"
#include "rramc/controller.hpp"
#include "rramc/errors.hpp"
#include "rramc/geometry.hpp"
#include "rramc/netlist.hpp"
#include "rramc/simulator.hpp"
#include "rramc/technology.hpp"

namespace py = pybind11;
using namespace rramc;

PYBIND11_MODULE(_core, m) {
  m.doc() = "RRAM memory compiler core: elaboration, simulation, "
            "characterization";

  // ------------------------------------------------------------- errors --
  auto err = py::register_exception<Error>(m, "Error");
  py::register_exception<GeometryError>(m, "GeometryError", err.ptr());
  py::register_exception<ProfileError>(m, "ProfileError", err.ptr());
  auto sim_err = py::register_exception<SimError>(m, "SimError", err.ptr());
  py::register_exception<OverlappingOperation>(m, "OverlappingOperation",
                                               sim_err.ptr());
  py::register_exception<ScriptError>(m, "ScriptError", err.ptr());

  // ----------------------------------------------------------- geometry --
  py::class_<MemoryGeometry>(m, "MemoryGeometry")
      .def_readonly("rows", &MemoryGeometry::rows)
      .def_readonly("cols", &MemoryGeometry::cols)
      .def_readonly("word_bits", &MemoryGeometry::word_bits)
      .def_readonly("col_bits", &MemoryGeometry::col_bits)
      .def_readonly("row_bits", &MemoryGeometry::row_bits)
      .def("words_per_row", &MemoryGeometry::words_per_row)
      .def("word_count", &MemoryGeometry::word_count)
      .def("capacity_bits", &MemoryGeometry::capacity_bits)
      .def("column_of", &MemoryGeometry::column_of, py::arg("x"),
           py::arg("bit"))
      .def(py::self == py::self)
      .def("__repr__", [](const MemoryGeometry& g) {
        return "MemoryGeometry(" + std::to_string(g.rows) + "x" +
               std::to_string(g.cols) + ", B=" + std::to_string(g.word_bits) +
               ")";
      });

  py::class_<WordAddress>(m, "WordAddress")
      .def(py::init([](std::uint32_t x, std::uint32_t y) {
             return WordAddress{x, y};
           }),
           py::arg("x"), py::arg("y"))
      .def_readwrite("x", &WordAddress::x)
      .def_readwrite("y", &WordAddress::y)
      .def(py::self == py::self)
      .def("__repr__", [](const WordAddress& a) {
        return "WordAddress(x=" + std::to_string(a.x) +
               ", y=" + std::to_string(a.y) + ")";
      });

  m.def("validate_geometry", &validate_geometry, py::arg("m"), py::arg("n"),
        py::arg("b"));
  m.def("worst_case_write_address", &worst_case_write_address);
  m.def("worst_case_read_address", &worst_case_read_address);

  // --------------------------------------------------------- technology --
  py::class_<CornerProfile>(m, "CornerProfile")
      .def(py::init<>())
      .def_readwrite("name", &CornerProfile::name)
      .def_readwrite("nmos_strength", &CornerProfile::nmos_strength)
      .def_readwrite("pmos_strength", &CornerProfile::pmos_strength)
      .def_readwrite("sense_offset_extra", &CornerProfile::sense_offset_extra)
      .def(py::self == py::self);

  py::class_<TechnologyProfile>(m, "TechnologyProfile")
      .def(py::init<>())
      .def_readwrite("schema", &TechnologyProfile::schema)
      .def_readwrite("vddl", &TechnologyProfile::vddl)
      .def_readwrite("vddh", &TechnologyProfile::vddh)
      .def_readwrite("vddw", &TechnologyProfile::vddw)
      .def_readwrite("r_ref", &TechnologyProfile::r_ref)
      .def_readwrite("write_ratio_a", &TechnologyProfile::write_ratio_a)
      .def_readwrite("r_on_access", &TechnologyProfile::r_on_access)
      .def_readwrite("r_driver", &TechnologyProfile::r_driver)
      .def_readwrite("r_mux_on", &TechnologyProfile::r_mux_on)
      .def_readwrite("r_line_per_cell", &TechnologyProfile::r_line_per_cell)
      .def_readwrite("c_line_per_cell", &TechnologyProfile::c_line_per_cell)
      .def_readwrite("read_bias_frac", &TechnologyProfile::read_bias_frac)
      .def_readwrite("c_sense", &TechnologyProfile::c_sense)
      .def_readwrite("sense_offset", &TechnologyProfile::sense_offset)
      .def_readwrite("sense_min_develop",
                     &TechnologyProfile::sense_min_develop)
      .def_readwrite("level_down_delay", &TechnologyProfile::level_down_delay)
      .def_readwrite("cell_pitch_x", &TechnologyProfile::cell_pitch_x)
      .def_readwrite("cell_pitch_y", &TechnologyProfile::cell_pitch_y)
      .def_readwrite("periphery_width", &TechnologyProfile::periphery_width)
      .def_readwrite("periphery_height", &TechnologyProfile::periphery_height)
      .def_readwrite("periphery_area_overhead",
                     &TechnologyProfile::periphery_area_overhead)
      .def_readwrite("write_cycles", &TechnologyProfile::write_cycles)
      .def_readwrite("ph1_cycles", &TechnologyProfile::ph1_cycles)
      .def_readwrite("ph2_cycles", &TechnologyProfile::ph2_cycles)
      .def_readwrite("ph3_cycles", &TechnologyProfile::ph3_cycles)
      .def_readwrite("corners", &TechnologyProfile::corners)
      .def("lrs_ohms", &TechnologyProfile::lrs_ohms)
      .def("hrs_ohms", &TechnologyProfile::hrs_ohms)
      .def("corner", &TechnologyProfile::corner, py::arg("name"),
           py::return_value_policy::copy)
      .def("has_corner", &TechnologyProfile::has_corner, py::arg("name"))
      .def("validate", &TechnologyProfile::validate)
      .def(py::self == py::self);

  m.def("default_profile", &default_profile);
  m.def("parse_profile", &parse_profile, py::arg("text"));
  m.def("load_profile", &load_profile, py::arg("path"));
  m.def("profile_to_text", &profile_to_text, py::arg("profile"));
  m.def("save_profile", &save_profile, py::arg("profile"), py::arg("path"));
  m.def("corner_apply", &corner_apply, py::arg("profile"), py::arg("corner"));
  m.def("format_double", &format_double, py::arg("value"));

  // --------------------------------------------------------- controller --
  py::enum_<FsmState>(m, "FsmState")
      .value("Reset", FsmState::Reset)
      .value("Idle", FsmState::Idle)
      .value("Write", FsmState::Write)
      .value("ReadPh1", FsmState::ReadPh1)
      .value("ReadPh2", FsmState::ReadPh2)
      .value("ReadPh3", FsmState::ReadPh3);

  py::class_<ControlSignals>(m, "ControlSignals")
      .def_readonly("read", &ControlSignals::read)
      .def_readonly("write", &ControlSignals::write)
      .def_readonly("dvlp", &ControlSignals::dvlp)
      .def_readonly("pre", &ControlSignals::pre)
      .def_readonly("en_sa", &ControlSignals::en_sa)
      .def_readonly("dec_en", &ControlSignals::dec_en)
      .def_readonly("io_drive", &ControlSignals::io_drive)
      .def(py::self == py::self);

  m.def("signals_of", &signals_of, py::arg("state"));

  // ------------------------------------------------------------- analog --
  py::class_<DrivePair>(m, "DrivePair")
      .def_readonly("v_p", &DrivePair::v_p)
      .def_readonly("v_n", &DrivePair::v_n)
      .def(py::self == py::self);

  py::class_<MemristorState>(m, "MemristorState")
      .def(py::init([](double r) {
             return MemristorState{r, false};
           }),
           py::arg("resistance"))
      .def_readwrite("resistance", &MemristorState::resistance)
      .def_readonly("last_write_ok", &MemristorState::last_write_ok);

  py::class_<SettlingModel>(m, "SettlingModel")
      .def_readwrite("r_drive", &SettlingModel::r_drive)
      .def_readwrite("r_path", &SettlingModel::r_path)
      .def_readwrite("c_node", &SettlingModel::c_node)
      .def_readwrite("r_cell", &SettlingModel::r_cell);

  py::class_<SenseResult>(m, "SenseResult")
      .def_readonly("bit", &SenseResult::bit)
      .def_readonly("margin", &SenseResult::margin)
      .def_readonly("reliable", &SenseResult::reliable);

  m.def("write_driver", &write_driver, py::arg("bit"), py::arg("profile"));
  m.def("write_threshold", &write_threshold, py::arg("profile"));
  m.def("vpn_at", &vpn_at, py::arg("model"), py::arg("drive"),
        py::arg("t_elapsed"));
  m.def("address_parasitics", &address_parasitics, py::arg("geometry"),
        py::arg("profile"), py::arg("x"), py::arg("y"));
  m.def("apply_write", &apply_write, py::arg("cell"),
        py::arg("vpn_at_deadline"), py::arg("profile"), py::arg("target_bit"));
  m.def("sense", &sense, py::arg("r_cell"), py::arg("r_ref"),
        py::arg("develop_time"), py::arg("corner_offset"), py::arg("profile"));
  m.def("sense_output_level", &sense_output_level, py::arg("result"),
        py::arg("profile"));

  // ------------------------------------------------------------ netlist --
  py::enum_<CellKind>(m, "CellKind")
      .value("MemCell1T1R", CellKind::MemCell1T1R)
      .value("RefCell", CellKind::RefCell)
      .value("MuxSwitch", CellKind::MuxSwitch)
      .value("MuxBlock", CellKind::MuxBlock)
      .value("WriteDriver", CellKind::WriteDriver)
      .value("SenseAmp", CellKind::SenseAmp)
      .value("LevelDown", CellKind::LevelDown)
      .value("TriStateBuffer", CellKind::TriStateBuffer)
      .value("Controller", CellKind::Controller)
      .value("DecoderX", CellKind::DecoderX)
      .value("DecoderY", CellKind::DecoderY);

  py::enum_<NetClass>(m, "NetClass")
      .value("Supply", NetClass::Supply)
      .value("Signal", NetClass::Signal);

  py::class_<Net>(m, "Net")
      .def_readonly("name", &Net::name)
      .def_readonly("cls", &Net::cls);

  py::class_<Instance>(m, "Instance")
      .def_readonly("id", &Instance::id)
      .def_readonly("kind", &Instance::kind)
      .def_readonly("params", &Instance::params)
      .def_readonly("ports", &Instance::ports)
      .def("net_of", &Instance::net_of, py::arg("port"),
           py::return_value_policy::copy);

  py::class_<Netlist>(m, "Netlist")
      .def("design", &Netlist::design, py::return_value_policy::copy)
      .def("geometry", &Netlist::geometry, py::return_value_policy::copy)
      .def("nets", &Netlist::nets, py::return_value_policy::copy)
      .def("instances", &Netlist::instances, py::return_value_policy::copy)
      .def("net_count", &Netlist::net_count)
      .def("instance_count", &Netlist::instance_count)
      .def("count", &Netlist::count, py::arg("kind"))
      .def("has_net", &Netlist::has_net, py::arg("name"))
      .def("validate", &Netlist::validate)
      .def(py::self == py::self);

  m.def("elaborate", &elaborate, py::arg("geometry"), py::arg("profile"));
  m.def("emit_structural", &emit_structural, py::arg("netlist"));
  m.def("parse_structural", &parse_structural, py::arg("text"));
  m.def("emit_spice", &emit_spice, py::arg("netlist"), py::arg("profile"));

  // ---------------------------------------------------------- simulator --
  py::class_<FillRule>(m, "FillRule")
      .def_static("uniform", &FillRule::uniform, py::arg("ohms"))
      .def_static("checkerboard", &FillRule::checkerboard,
                  py::arg("even_ohms"), py::arg("odd_ohms"))
      .def_static("explicit_matrix", &FillRule::explicit_matrix,
                  py::arg("matrix"));

  py::class_<WriteOutcome>(m, "WriteOutcome")
      .def_readonly("all_ok", &WriteOutcome::all_ok)
      .def_readonly("vpn", &WriteOutcome::vpn)
      .def_readonly("ok", &WriteOutcome::ok)
      .def_readonly("start_cycle", &WriteOutcome::start_cycle);

  py::class_<ReadOutcome>(m, "ReadOutcome")
      .def_readonly("data", &ReadOutcome::data)
      .def_readonly("reliable_mask", &ReadOutcome::reliable_mask)
      .def_readonly("bits", &ReadOutcome::bits)
      .def_readonly("start_cycle", &ReadOutcome::start_cycle);

  py::class_<Simulator>(m, "Simulator")
      .def(py::init<const MemoryGeometry&, const TechnologyProfile&, double,
                    const FillRule&, std::string_view>(),
           py::arg("geometry"), py::arg("profile"), py::arg("clock_hz"),
           py::arg("fill") = FillRule::uniform(1e6), py::arg("corner") = "TT")
      .def("reset", &Simulator::reset)
      .def("write", &Simulator::write, py::arg("x"), py::arg("y"),
           py::arg("data"))
      .def("read", &Simulator::read, py::arg("x"), py::arg("y"))
      .def("set_cell", &Simulator::set_cell, py::arg("col"), py::arg("row"),
           py::arg("ohms"))
      .def("cell", &Simulator::cell, py::arg("col"), py::arg("row"))
      .def("cell_last_write_ok", &Simulator::cell_last_write_ok,
           py::arg("col"), py::arg("row"))
      .def("state", &Simulator::state)
      .def("cycle", &Simulator::cycle)
      .def("clock_hz", &Simulator::clock_hz)
      .def("clock_period", &Simulator::clock_period)
      .def("develop_time", &Simulator::develop_time)
      .def("access_time", &Simulator::access_time)
      .def("write_pulse", &Simulator::write_pulse)
      .def("geometry", &Simulator::geometry, py::return_value_policy::copy)
      .def("corner_name", &Simulator::corner_name,
           py::return_value_policy::copy)
      .def("vcd", &Simulator::vcd)
      .def("run_log", &Simulator::run_log);

  // ----------------------------------------------------- characterization --
  py::enum_<TestKind>(m, "TestKind")
      .value("W1", TestKind::W1)
      .value("W2", TestKind::W2)
      .value("R1", TestKind::R1)
      .value("R2", TestKind::R2);

  py::class_<TestResult>(m, "TestResult")
      .def_readonly("kind", &TestResult::kind)
      .def_readonly("passed", &TestResult::pass)
      .def_readonly("worst_margin", &TestResult::worst_margin)
      .def_readonly("bit_margins", &TestResult::bit_margins)
      .def_readonly("expected", &TestResult::expected)
      .def_readonly("got", &TestResult::got);

  py::class_<SweepConfig>(m, "SweepConfig")
      .def(py::init([](const MemoryGeometry& g, double clock_hz) {
             return SweepConfig{g, clock_hz};
           }),
           py::arg("geometry"), py::arg("clock_hz"))
      .def_readwrite("geometry", &SweepConfig::geometry)
      .def_readwrite("clock_hz", &SweepConfig::clock_hz);

  py::class_<ReportRow>(m, "ReportRow")
      .def_readonly("geometry", &ReportRow::geometry)
      .def_readonly("clock_hz", &ReportRow::clock_hz)
      .def_readonly("corner", &ReportRow::corner)
      .def_readonly("test", &ReportRow::test)
      .def_readonly("passed", &ReportRow::pass)
      .def_readonly("worst_margin", &ReportRow::worst_margin)
      .def_readonly("access_time_s", &ReportRow::access_time_s)
      .def_readonly("write_time_s", &ReportRow::write_time_s);

  py::class_<AreaEstimate>(m, "AreaEstimate")
      .def_readonly("width_m", &AreaEstimate::width_m)
      .def_readonly("height_m", &AreaEstimate::height_m)
      .def_readonly("area_m2", &AreaEstimate::area_m2)
      .def_readonly("density_mb_per_mm2", &AreaEstimate::density_mb_per_mm2);

  py::class_<CharacterizationReport>(m, "CharacterizationReport")
      .def_readonly("rows", &CharacterizationReport::rows)
      .def_readonly("areas", &CharacterizationReport::areas)
      .def("all_pass", &CharacterizationReport::all_pass)
      .def("failure_count", &CharacterizationReport::failure_count)
      .def("text", &CharacterizationReport::text)
      .def("jsonl", &CharacterizationReport::jsonl);

  m.def("w1_pattern", &w1_pattern, py::arg("word_bits"));
  m.def("w2_pattern", &w2_pattern, py::arg("word_bits"));
  m.def("run_w_test", &run_w_test, py::arg("geometry"), py::arg("profile"),
        py::arg("clock_hz"), py::arg("corner"), py::arg("complement"));
  m.def("run_w_tests", &run_w_tests, py::arg("geometry"), py::arg("profile"),
        py::arg("clock_hz"), py::arg("corner"));
  m.def("run_r_test", &run_r_test, py::arg("geometry"), py::arg("profile"),
        py::arg("clock_hz"), py::arg("corner"), py::arg("a"),
        py::arg("complement"));
  m.def("run_r_tests", &run_r_tests, py::arg("geometry"), py::arg("profile"),
        py::arg("clock_hz"), py::arg("corner"), py::arg("a") = 0.3);
  m.def("estimate_area", &estimate_area, py::arg("geometry"),
        py::arg("profile"));
  m.def("characterize_sweep", &characterize_sweep, py::arg("configs"),
        py::arg("profile"), py::arg("corners"), py::arg("a") = 0.3);
  m.def("default_suite", &default_suite);
  m.def("corner_names", &corner_names, py::arg("profile"));

  // -------------------------------------------------------- calibration --
  m.def("calibrated_profile_text", &calibrated_profile_text);
  m.def("calibrate_default_profile",
        []() { return calibrate_default_profile().profile; });
}

# SPDX-License-Identifier: Apache-2.0
"""RRAM memory compiler: netlist elaboration, behavioral simulation and
automated characterization for 1T1R resistive arrays."""

from rramc._core import (  # noqa: F401
    # errors
    Error,
    GeometryError,
    ProfileError,
    SimError,
    OverlappingOperation,
    ScriptError,
    # geometry
    MemoryGeometry,
    WordAddress,
    validate_geometry,
    worst_case_write_address,
    worst_case_read_address,
    # technology
    CornerProfile,
    TechnologyProfile,
    default_profile,
    parse_profile,
    load_profile,
    profile_to_text,
    save_profile,
    corner_apply,
    format_double,
    # controller
    FsmState,
    ControlSignals,
    signals_of,
    # analog models
    DrivePair,
    MemristorState,
    SettlingModel,
    SenseResult,
    write_driver,
    write_threshold,
    vpn_at,
    address_parasitics,
    apply_write,
    sense,
    sense_output_level,
    # netlist
    CellKind,
    NetClass,
    Net,
    Instance,
    Netlist,
    elaborate,
    emit_structural,
    parse_structural,
    emit_spice,
    # simulator
    FillRule,
    WriteOutcome,
    ReadOutcome,
    Simulator,
    # characterization
    TestKind,
    TestResult,
    SweepConfig,
    ReportRow,
    AreaEstimate,
    CharacterizationReport,
    w1_pattern,
    w2_pattern,
    run_w_test,
    run_w_tests,
    run_r_test,
    run_r_tests,
    estimate_area,
    characterize_sweep,
    default_suite,
    corner_names,
    # calibration
    calibrated_profile_text,
    calibrate_default_profile,
)

__version__ = "0.1.0"

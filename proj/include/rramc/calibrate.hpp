// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "rramc/technology.hpp"

namespace rramc {

/// Intermediate quantities of the default-profile fit, kept for reporting.
struct CalibrationInfo {
  // Write settling: feasible c_line_per_cell window [fail_bound, pass_bound].
  double c_line_lo = 0.0;
  double c_line_hi = 0.0;

  struct Window {
    double lo = 0.0;  // largest developed differential that must still fail
    double hi = 0.0;  // smallest developed differential that must pass
  };
  Window fs;  // sense offset windows, volts
  Window ff;

  double fig_width_m = 0.0;   // floorplan fit targets
  double fig_height_m = 0.0;
  double best_density = 0.0;
};

struct CalibrationResult {
  TechnologyProfile profile;
  CalibrationInfo info;
};

/// Solves the default technology profile:
///  - c_line_per_cell from the write-settling boundary: the 8 kb array must
///    pass its write tests at 12.5 MHz and fail at 25 MHz (all corners);
///    the value is the geometric mean of the two bounds.
///  - FS/FF sense offsets centered in the window between the weakest read
///    differential that must pass (suite below the boundary) and the
///    strongest that must fail (8 kb at 25 MHz).
///  - cell pitch and periphery extents from the published 64x64 macro
///    outline (524.3 x 353.5 um) and the best-density point
///    (0.024 Mb/mm^2 at 128x64), assuming square cell pitch.
/// Everything else is a stated assumption, fixed in the solver source.
CalibrationResult calibrate_default_profile();

/// Profile text as written by `rramc calibrate`: provenance comment block
/// followed by the canonical serialization.  profiles/default.profile is
/// this exact byte stream.
std::string calibrated_profile_text();

}  // namespace rramc

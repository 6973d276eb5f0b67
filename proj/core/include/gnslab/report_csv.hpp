#pragma once

#include <string>

#include "gnslab/complexity.hpp"
#include "gnslab/harness.hpp"

namespace gnslab {

/// Nine significant digits, locale-independent ("%.9g" shape).
std::string format_real(double value);

/// Header, one row per trial in index order, then '#' summary lines.
std::string write_report_csv(const SurvivalReport& report);

/// "step,value" rows.
std::string write_trajectory_csv(const FeatureTrajectory& trajectory);

}  // namespace gnslab

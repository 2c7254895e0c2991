#pragma once

// Executes a validated scenario.

#include "matho/report.hpp"
#include "matho/scenario.hpp"

namespace matho {

/// Throws ValidationError for inputs that are inconsistent with the command
/// (exit 2) and NumericError for failed internal assertions (exit 3).
Report run_command(const Scenario& s);

}  // namespace matho

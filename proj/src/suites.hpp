#pragma once

// The identity suites behind the command-line verifier.  run_suites executes
// the configured checks (each one a sampled mathematical identity with a
// residual and a tolerance) and returns the aggregated report;
// classify_input routes a parsed input document to the classifier or to the
// constraint chain and wraps the outcome as a report.

#include <string>

#include "report.hpp"

namespace kepot {

Report run_suites(const RunConfig& cfg);

Report classify_input(const std::string& json_text);

}  // namespace kepot

#pragma once

// Deterministic result reporting.  A Report is either the outcome of the
// identity suites (checks + deviations) or of a single classification /
// constraint-chain request; both render to aligned text or to a structured
// document with a stable field order.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mobius.hpp"
#include "normalize.hpp"

namespace kepot {

struct CheckResult {
  std::string suite;
  std::string name;
  std::string anchor;  // the mathematical identity being checked
  int n = 0;
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;  // optional free-form context
};

// A statement from the source text that the oracle contradicts: the check
// passes with the confirmed value and records the documented one as WARN.
struct Deviation {
  std::string suite;
  std::string check;
  int n = 0;
  std::string documented;
  std::string confirmed;
  double documented_residual = 0.0;
  double confirmed_residual = 0.0;
};

struct RunConfig {
  uint64_t seed = 1;
  int samples = 100;
  std::vector<int> dims = {1, 2, 3, 4, 5};
  std::vector<std::string> suites = {"metric",  "potential", "tables",
                                     "grading", "normalize", "mobius"};
  std::map<std::string, double> tol_overrides;
  // Optional input document (parsed JSON text) routed to the matching
  // suite: a homogeneous matrix feeds the constraint chain, a potential
  // description feeds the classifier.
  std::optional<std::string> input_json;
};

struct Report {
  enum class Kind { Run, Classify, Cayley };
  Kind kind = Kind::Run;
  std::string version;

  // Run payload.
  RunConfig config;
  std::vector<CheckResult> checks;
  std::vector<Deviation> deviations;

  // Classify payload.
  std::optional<ClassifyResult> classify;
  std::optional<std::string> classify_phi;  // generator description

  // Constraint-chain payload.
  std::optional<CayleyReport> cayley;
  int cayley_n = 0;

  bool passed() const;
  std::string render_text() const;
  std::string render_structured() const;
};

// Suite lookup used by the tolerance override mechanism: the key is
// "suite/check".
double tolerance_for(const RunConfig& cfg, const std::string& suite,
                     const std::string& check, double fallback);

}  // namespace kepot

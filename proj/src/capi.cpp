// C interface implementation: thin exception-to-status translation over the
// C++ core.  Handle structs are defined at global scope to match the opaque
// typedefs in the public header.

#include "kepot/kepot.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "errors.hpp"
#include "report.hpp"
#include "suites.hpp"
#include "version.hpp"

struct kepot_runner {
  kepot::RunConfig cfg;
};

struct kepot_report {
  kepot::Report rep;
};

namespace {

thread_local std::string t_last_error;

kepot_status status_from(kepot::Err code) {
  using kepot::Err;
  switch (code) {
    case Err::PoleAtBoundary:
      return KEPOT_E_POLE_AT_BOUNDARY;
    case Err::OutsideDomain:
      return KEPOT_E_OUTSIDE_DOMAIN;
    case Err::SingularJacobian:
      return KEPOT_E_SINGULAR_JACOBIAN;
    case Err::NotConstantNorm:
      return KEPOT_E_NOT_CONSTANT_NORM;
    case Err::NotPolynomial:
      return KEPOT_E_NOT_POLYNOMIAL;
    case Err::NotGraded:
      return KEPOT_E_NOT_GRADED;
    case Err::DegreeOverflow:
      return KEPOT_E_DEGREE_OVERFLOW;
    case Err::NotInAlgebra:
      return KEPOT_E_NOT_IN_ALGEBRA;
    case Err::SingularSystem:
      return KEPOT_E_SINGULAR_SYSTEM;
    case Err::UnsupportedTag:
      return KEPOT_E_UNSUPPORTED_TAG;
    case Err::Degenerate:
      return KEPOT_E_DEGENERATE;
    case Err::InvalidConfig:
      return KEPOT_E_INVALID_CONFIG;
  }
  return KEPOT_E_UNKNOWN;
}

// Runs `fn`, converting exceptions into status codes + last-error text.
template <typename Fn>
kepot_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return KEPOT_OK;
  } catch (const kepot::Error& e) {
    t_last_error = e.what();
    return status_from(e.code);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return KEPOT_E_UNKNOWN;
  } catch (...) {
    t_last_error = "unknown failure";
    return KEPOT_E_UNKNOWN;
  }
}

kepot_status require(bool ok, const char* what) {
  if (ok) return KEPOT_OK;
  t_last_error = std::string("null argument: ") + what;
  return KEPOT_E_NULL_ARGUMENT;
}

kepot_status copy_out(const std::string& s, char** out) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf == nullptr) {
    t_last_error = "out of memory";
    return KEPOT_E_UNKNOWN;
  }
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
  return KEPOT_OK;
}

}  // namespace

extern "C" {

const char* kepot_version(void) { return kepot::kVersion; }

const char* kepot_last_error(void) { return t_last_error.c_str(); }

const char* kepot_status_name(kepot_status status) {
  switch (status) {
    case KEPOT_OK:
      return "ok";
    case KEPOT_E_POLE_AT_BOUNDARY:
      return "pole-at-boundary";
    case KEPOT_E_OUTSIDE_DOMAIN:
      return "outside-domain";
    case KEPOT_E_SINGULAR_JACOBIAN:
      return "singular-jacobian";
    case KEPOT_E_NOT_CONSTANT_NORM:
      return "not-constant-norm";
    case KEPOT_E_NOT_POLYNOMIAL:
      return "not-polynomial";
    case KEPOT_E_NOT_GRADED:
      return "not-graded";
    case KEPOT_E_DEGREE_OVERFLOW:
      return "degree-overflow";
    case KEPOT_E_NOT_IN_ALGEBRA:
      return "not-in-algebra";
    case KEPOT_E_SINGULAR_SYSTEM:
      return "singular-system";
    case KEPOT_E_UNSUPPORTED_TAG:
      return "unsupported-tag";
    case KEPOT_E_DEGENERATE:
      return "degenerate";
    case KEPOT_E_INVALID_CONFIG:
      return "invalid-config";
    case KEPOT_E_NULL_ARGUMENT:
      return "null-argument";
    case KEPOT_E_UNKNOWN:
      return "unknown";
  }
  return "unknown";
}

kepot_runner* kepot_runner_new(void) {
  return new (std::nothrow) kepot_runner();
}

void kepot_runner_free(kepot_runner* runner) { delete runner; }

kepot_status kepot_runner_set_seed(kepot_runner* runner, uint64_t seed) {
  if (kepot_status st = require(runner != nullptr, "runner")) return st;
  runner->cfg.seed = seed;
  return KEPOT_OK;
}

kepot_status kepot_runner_set_samples(kepot_runner* runner, int samples) {
  if (kepot_status st = require(runner != nullptr, "runner")) return st;
  runner->cfg.samples = samples;
  return KEPOT_OK;
}

kepot_status kepot_runner_clear_dims(kepot_runner* runner) {
  if (kepot_status st = require(runner != nullptr, "runner")) return st;
  runner->cfg.dims.clear();
  return KEPOT_OK;
}

kepot_status kepot_runner_add_dim(kepot_runner* runner, int n) {
  if (kepot_status st = require(runner != nullptr, "runner")) return st;
  runner->cfg.dims.push_back(n);
  return KEPOT_OK;
}

kepot_status kepot_runner_clear_suites(kepot_runner* runner) {
  if (kepot_status st = require(runner != nullptr, "runner")) return st;
  runner->cfg.suites.clear();
  return KEPOT_OK;
}

kepot_status kepot_runner_add_suite(kepot_runner* runner, const char* suite) {
  if (kepot_status st = require(runner != nullptr, "runner")) return st;
  if (kepot_status st = require(suite != nullptr, "suite")) return st;
  runner->cfg.suites.emplace_back(suite);
  return KEPOT_OK;
}

kepot_status kepot_runner_set_tolerance(kepot_runner* runner, const char* check,
                                        double tolerance) {
  if (kepot_status st = require(runner != nullptr, "runner")) return st;
  if (kepot_status st = require(check != nullptr, "check")) return st;
  runner->cfg.tol_overrides[check] = tolerance;
  return KEPOT_OK;
}

kepot_status kepot_runner_set_input(kepot_runner* runner, const char* json_text) {
  if (kepot_status st = require(runner != nullptr, "runner")) return st;
  if (kepot_status st = require(json_text != nullptr, "json_text")) return st;
  runner->cfg.input_json = std::string(json_text);
  return KEPOT_OK;
}

kepot_status kepot_runner_run(kepot_runner* runner, kepot_report** out) {
  if (kepot_status st = require(runner != nullptr, "runner")) return st;
  if (kepot_status st = require(out != nullptr, "out")) return st;
  return guarded([&] { *out = new kepot_report{kepot::run_suites(runner->cfg)}; });
}

kepot_status kepot_classify_json(const char* json_text, kepot_report** out) {
  if (kepot_status st = require(json_text != nullptr, "json_text")) return st;
  if (kepot_status st = require(out != nullptr, "out")) return st;
  return guarded(
      [&] { *out = new kepot_report{kepot::classify_input(json_text)}; });
}

int kepot_report_passed(const kepot_report* report) {
  if (report == nullptr) return 0;
  return report->rep.passed() ? 1 : 0;
}

int kepot_report_check_count(const kepot_report* report) {
  if (report == nullptr) return 0;
  return static_cast<int>(report->rep.checks.size());
}

int kepot_report_deviation_count(const kepot_report* report) {
  if (report == nullptr) return 0;
  return static_cast<int>(report->rep.deviations.size());
}

kepot_status kepot_report_render(const kepot_report* report,
                                 kepot_format format, char** out) {
  if (kepot_status st = require(report != nullptr, "report")) return st;
  if (kepot_status st = require(out != nullptr, "out")) return st;
  std::string text;
  kepot_status st = guarded([&] {
    text = (format == KEPOT_FORMAT_STRUCTURED) ? report->rep.render_structured()
                                               : report->rep.render_text();
  });
  if (st != KEPOT_OK) return st;
  return copy_out(text, out);
}

void kepot_string_free(char* text) { std::free(text); }

void kepot_report_free(kepot_report* report) { delete report; }

}  // extern "C"

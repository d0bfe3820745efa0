// Command-line front end.  Talks to the library exclusively through the
// public C interface.
//
// Exit codes: 0 every check passed (or a verdict was produced), 1 at least
// one check failed, 2 invalid configuration or input.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kepot/kepot.h"

namespace {

int report_error(kepot_status st) {
  std::fprintf(stderr, "error (%s): %s\n", kepot_status_name(st),
               kepot_last_error());
  return 2;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return static_cast<bool>(in);
}

// Splits "NAME=VALUE" into a check name and a tolerance.
bool parse_tolerance(const std::string& arg, std::string& name, double& value) {
  const std::size_t eq = arg.find('=');
  if (eq == std::string::npos || eq == 0) return false;
  name = arg.substr(0, eq);
  const std::string tail = arg.substr(eq + 1);
  try {
    std::size_t used = 0;
    value = std::stod(tail, &used);
    return used == tail.size() && !tail.empty();
  } catch (const std::exception&) {
    return false;
  }
}

struct RunnerGuard {
  kepot_runner* ptr = nullptr;
  ~RunnerGuard() { kepot_runner_free(ptr); }
};

struct ReportGuard {
  kepot_report* ptr = nullptr;
  ~ReportGuard() { kepot_report_free(ptr); }
};

int emit(const kepot_report* rep, const std::string& format) {
  const kepot_format fmt = (format == "structured") ? KEPOT_FORMAT_STRUCTURED
                                                    : KEPOT_FORMAT_TEXT;
  char* text = nullptr;
  const kepot_status st = kepot_report_render(rep, fmt, &text);
  if (st != KEPOT_OK) return report_error(st);
  std::fputs(text, stdout);
  kepot_string_free(text);
  return -1;  // success sentinel; caller picks the real exit code
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("kepot ") + kepot_version() +
               " - residual checks for constant-norm potentials on the ball "
               "and half-space models"};
  app.require_subcommand(1);

  const std::vector<std::string> known_suites = {"metric",  "potential",
                                                 "tables",  "grading",
                                                 "normalize", "mobius"};

  // run
  std::vector<int> dims;
  std::vector<std::string> suites;
  std::vector<std::string> tol_args;
  std::uint64_t seed = 1;
  int samples = 100;
  std::string run_format = "text";
  std::string run_input;

  CLI::App* run = app.add_subcommand("run", "evaluate the identity suites");
  run->add_option("--n", dims, "dimension to include (repeatable; default 1..5)")
      ->check(CLI::Range(1, 8));
  run->add_option("--samples", samples, "sample points per check (default 100)");
  run->add_option("--seed", seed, "base seed of the deterministic sampler");
  run->add_option("--tol", tol_args,
                  "tolerance override NAME=VALUE (repeatable; NAME is a check "
                  "name, optionally suite-qualified as suite/check)");
  run->add_option("--suite", suites, "suite to run (repeatable; default all)")
      ->check(CLI::IsMember(known_suites));
  run->add_option("--format", run_format, "output format (default text)")
      ->check(CLI::IsMember({"text", "structured"}));
  run->add_option("--input", run_input,
                  "JSON document checked alongside the suites: a homogeneous "
                  "matrix feeds the constraint chain, a potential feeds the "
                  "classifier");

  // classify
  std::string cls_format = "text";
  std::string cls_input;

  CLI::App* classify = app.add_subcommand(
      "classify", "classify a potential document or run the constraint chain "
                  "on a homogeneous matrix");
  classify->add_option("--input", cls_input, "JSON document to classify")
      ->required();
  classify->add_option("--format", cls_format, "output format (default text)")
      ->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (run->parsed()) {
    RunnerGuard runner;
    runner.ptr = kepot_runner_new();
    if (runner.ptr == nullptr) {
      std::fprintf(stderr, "error: out of memory\n");
      return 2;
    }
    kepot_runner_set_seed(runner.ptr, seed);
    kepot_runner_set_samples(runner.ptr, samples);
    if (!dims.empty()) {
      kepot_runner_clear_dims(runner.ptr);
      for (int n : dims) kepot_runner_add_dim(runner.ptr, n);
    }
    if (!suites.empty()) {
      kepot_runner_clear_suites(runner.ptr);
      for (const std::string& s : suites)
        kepot_runner_add_suite(runner.ptr, s.c_str());
    }
    for (const std::string& arg : tol_args) {
      std::string name;
      double value = 0.0;
      if (!parse_tolerance(arg, name, value)) {
        std::fprintf(stderr,
                     "error (invalid-config): --tol expects NAME=VALUE, got "
                     "'%s'\n",
                     arg.c_str());
        return 2;
      }
      kepot_runner_set_tolerance(runner.ptr, name.c_str(), value);
    }
    if (!run_input.empty()) {
      std::string doc;
      if (!read_file(run_input, doc)) {
        std::fprintf(stderr, "error (invalid-config): cannot read '%s'\n",
                     run_input.c_str());
        return 2;
      }
      kepot_runner_set_input(runner.ptr, doc.c_str());
    }

    ReportGuard rep;
    const kepot_status st = kepot_runner_run(runner.ptr, &rep.ptr);
    if (st != KEPOT_OK) return report_error(st);
    const int emitted = emit(rep.ptr, run_format);
    if (emitted >= 0) return emitted;
    return kepot_report_passed(rep.ptr) ? 0 : 1;
  }

  // classify
  std::string doc;
  if (!read_file(cls_input, doc)) {
    std::fprintf(stderr, "error (invalid-config): cannot read '%s'\n",
                 cls_input.c_str());
    return 2;
  }
  ReportGuard rep;
  const kepot_status st = kepot_classify_json(doc.c_str(), &rep.ptr);
  if (st != KEPOT_OK) return report_error(st);
  const int emitted = emit(rep.ptr, cls_format);
  if (emitted >= 0) return emitted;
  return kepot_report_passed(rep.ptr) ? 0 : 1;
}

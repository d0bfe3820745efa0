// Exercises the shared library through the public C interface only.

#include <catch2/catch_amalgamated.hpp>
#include <cstring>
#include <string>

#include "kepot/kepot.h"

namespace {

struct Runner {
  kepot_runner* p = kepot_runner_new();
  ~Runner() { kepot_runner_free(p); }
};

struct Rep {
  kepot_report* p = nullptr;
  ~Rep() { kepot_report_free(p); }
};

std::string render(const kepot_report* rep, kepot_format fmt) {
  char* text = nullptr;
  REQUIRE(kepot_report_render(rep, fmt, &text) == KEPOT_OK);
  std::string out(text);
  kepot_string_free(text);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(kepot_version()) >= 5);
  CHECK(std::string(kepot_status_name(KEPOT_OK)) == "ok");
  CHECK(std::string(kepot_status_name(KEPOT_E_INVALID_CONFIG)) ==
        "invalid-config");
}

TEST_CASE("null arguments are reported, not crashed on") {
  CHECK(kepot_runner_set_seed(nullptr, 1) == KEPOT_E_NULL_ARGUMENT);
  CHECK(kepot_runner_run(nullptr, nullptr) == KEPOT_E_NULL_ARGUMENT);
  CHECK(kepot_classify_json(nullptr, nullptr) == KEPOT_E_NULL_ARGUMENT);
  CHECK(std::strlen(kepot_last_error()) > 0);
  CHECK(kepot_report_passed(nullptr) == 0);
}

TEST_CASE("a small configured run passes and renders both formats") {
  Runner r;
  REQUIRE(r.p != nullptr);
  CHECK(kepot_runner_set_seed(r.p, 3) == KEPOT_OK);
  CHECK(kepot_runner_set_samples(r.p, 5) == KEPOT_OK);
  CHECK(kepot_runner_clear_dims(r.p) == KEPOT_OK);
  CHECK(kepot_runner_add_dim(r.p, 2) == KEPOT_OK);
  CHECK(kepot_runner_clear_suites(r.p) == KEPOT_OK);
  CHECK(kepot_runner_add_suite(r.p, "metric") == KEPOT_OK);

  Rep rep;
  REQUIRE(kepot_runner_run(r.p, &rep.p) == KEPOT_OK);
  CHECK(kepot_report_passed(rep.p) == 1);
  CHECK(kepot_report_check_count(rep.p) > 5);
  CHECK(kepot_report_deviation_count(rep.p) == 0);

  std::string text = render(rep.p, KEPOT_FORMAT_TEXT);
  CHECK(text.find("summary:") != std::string::npos);
  std::string json = render(rep.p, KEPOT_FORMAT_STRUCTURED);
  CHECK(json.find("\"kind\": \"run\"") != std::string::npos);

  // Identical configuration, byte-identical structured output.
  Runner r2;
  kepot_runner_set_seed(r2.p, 3);
  kepot_runner_set_samples(r2.p, 5);
  kepot_runner_clear_dims(r2.p);
  kepot_runner_add_dim(r2.p, 2);
  kepot_runner_clear_suites(r2.p);
  kepot_runner_add_suite(r2.p, "metric");
  Rep rep2;
  REQUIRE(kepot_runner_run(r2.p, &rep2.p) == KEPOT_OK);
  CHECK(render(rep2.p, KEPOT_FORMAT_STRUCTURED) == json);
}

TEST_CASE("tolerance overrides travel through the interface") {
  Runner r;
  kepot_runner_set_samples(r.p, 5);
  kepot_runner_clear_dims(r.p);
  kepot_runner_add_dim(r.p, 2);
  kepot_runner_clear_suites(r.p);
  kepot_runner_add_suite(r.p, "metric");
  kepot_runner_set_tolerance(r.p, "metric/inverse-identity", 1e-30);
  Rep rep;
  REQUIRE(kepot_runner_run(r.p, &rep.p) == KEPOT_OK);
  CHECK(kepot_report_passed(rep.p) == 0);
}

TEST_CASE("invalid configurations produce the matching status") {
  Runner r;
  kepot_runner_clear_suites(r.p);
  kepot_runner_add_suite(r.p, "nonsense");
  Rep rep;
  CHECK(kepot_runner_run(r.p, &rep.p) == KEPOT_E_INVALID_CONFIG);
  CHECK(std::strlen(kepot_last_error()) > 0);
}

TEST_CASE("classification through the interface") {
  Rep rep;
  REQUIRE(kepot_classify_json(R"({"n": 2, "r": 2.0})", &rep.p) == KEPOT_OK);
  CHECK(kepot_report_passed(rep.p) == 1);
  std::string text = render(rep.p, KEPOT_FORMAT_TEXT);
  CHECK(text.find("Canonical") != std::string::npos);

  Rep bad;
  CHECK(kepot_classify_json("{ not json", &bad.p) == KEPOT_E_INVALID_CONFIG);

  Rep chain;
  REQUIRE(kepot_classify_json(R"({"n": 1, "mobius": [1, 1, -1, 1]})",
                              &chain.p) == KEPOT_OK);
  std::string json = render(chain.p, KEPOT_FORMAT_STRUCTURED);
  CHECK(json.find("constraint-chain") != std::string::npos);
}

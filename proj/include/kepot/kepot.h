#ifndef KEPOT_KEPOT_H
#define KEPOT_KEPOT_H

/* C interface to the kepot verification library.
 *
 * The library evaluates families of differential-geometric identities
 * (metric inverses, constant-norm potentials, vector-field pushforward
 * tables, grading, normalization, and homogeneous-matrix constraint
 * chains) over deterministic sample sets and reports residuals.
 *
 * Usage pattern:
 *
 *   kepot_runner* r = kepot_runner_new();
 *   kepot_runner_set_seed(r, 7);
 *   kepot_report* rep = NULL;
 *   if (kepot_runner_run(r, &rep) == KEPOT_OK) {
 *     char* text = NULL;
 *     kepot_report_render(rep, KEPOT_FORMAT_TEXT, &text);
 *     ...
 *     kepot_string_free(text);
 *     kepot_report_free(rep);
 *   }
 *   kepot_runner_free(r);
 *
 * Every fallible call returns a kepot_status; on failure,
 * kepot_last_error() returns a human-readable message for the calling
 * thread.  All handles are opaque and must be released with the matching
 * *_free function.  Handles are not thread-safe; distinct handles may be
 * used from distinct threads.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kepot_status {
  KEPOT_OK = 0,
  KEPOT_E_POLE_AT_BOUNDARY = 1,  /* evaluation at a pole of a rational map */
  KEPOT_E_OUTSIDE_DOMAIN = 2,    /* point not in the model domain */
  KEPOT_E_SINGULAR_JACOBIAN = 3, /* non-invertible derivative */
  KEPOT_E_NOT_CONSTANT_NORM = 4, /* differential norm is not constant */
  KEPOT_E_NOT_POLYNOMIAL = 5,    /* field exceeds the polynomial degree cap */
  KEPOT_E_NOT_GRADED = 6,        /* field is not a grading eigenvector */
  KEPOT_E_DEGREE_OVERFLOW = 7,   /* bracket left the coefficient space */
  KEPOT_E_NOT_IN_ALGEBRA = 8,    /* field is outside the basis span */
  KEPOT_E_SINGULAR_SYSTEM = 9,   /* shift system has no unique solution */
  KEPOT_E_UNSUPPORTED_TAG = 10,  /* no closed-form flow for this tag */
  KEPOT_E_DEGENERATE = 11,       /* degenerate geometric configuration */
  KEPOT_E_INVALID_CONFIG = 12,   /* malformed configuration or input */
  KEPOT_E_NULL_ARGUMENT = 13,    /* a required pointer was NULL */
  KEPOT_E_UNKNOWN = 14           /* unexpected internal failure */
} kepot_status;

typedef enum kepot_format {
  KEPOT_FORMAT_TEXT = 0,      /* aligned human-readable report */
  KEPOT_FORMAT_STRUCTURED = 1 /* stable machine-readable document */
} kepot_format;

/* Opaque suite configuration.  A fresh runner checks every suite at
 * dimensions 1..5 with 100 samples and seed 1. */
typedef struct kepot_runner kepot_runner;

/* Opaque result document produced by a run or a classification. */
typedef struct kepot_report kepot_report;

/* Library version string, e.g. "1.0.0".  Never NULL. */
const char* kepot_version(void);

/* Message describing the most recent failure on the calling thread, or an
 * empty string.  The pointer is valid until the next library call on the
 * same thread. */
const char* kepot_last_error(void);

/* Short identifier for a status code, e.g. "invalid-config". */
const char* kepot_status_name(kepot_status status);

kepot_runner* kepot_runner_new(void);
void kepot_runner_free(kepot_runner* runner);

kepot_status kepot_runner_set_seed(kepot_runner* runner, uint64_t seed);

/* Sample count per check (1..100000, enforced at run time). */
kepot_status kepot_runner_set_samples(kepot_runner* runner, int samples);

/* Replace the default dimension list.  Call clear, then add each value. */
kepot_status kepot_runner_clear_dims(kepot_runner* runner);
kepot_status kepot_runner_add_dim(kepot_runner* runner, int n);

/* Replace the default suite list.  Suite names: "metric", "potential",
 * "tables", "grading", "normalize", "mobius". */
kepot_status kepot_runner_clear_suites(kepot_runner* runner);
kepot_status kepot_runner_add_suite(kepot_runner* runner, const char* suite);

/* Override the tolerance of one check.  The key is either a bare check
 * name ("inverse-identity") or suite-qualified ("metric/inverse-identity"). */
kepot_status kepot_runner_set_tolerance(kepot_runner* runner, const char* check,
                                        double tolerance);

/* Attach an input document (JSON text).  A homogeneous-matrix document adds
 * a constraint-chain check; a potential document adds a classification
 * check. */
kepot_status kepot_runner_set_input(kepot_runner* runner, const char* json_text);

/* Execute the configured suites.  On KEPOT_OK, *out owns the result and
 * must be released with kepot_report_free. */
kepot_status kepot_runner_run(kepot_runner* runner, kepot_report** out);

/* Classify a single input document (JSON text) without running the suites:
 * a potential document yields a classification verdict, a homogeneous
 * matrix yields a constraint-chain verdict. */
kepot_status kepot_classify_json(const char* json_text, kepot_report** out);

/* 1 if every check in the report passed (classification and constraint
 * chain reports always count as produced, i.e. 1), else 0. */
int kepot_report_passed(const kepot_report* report);

/* Number of individual checks in the report (0 for classifications). */
int kepot_report_check_count(const kepot_report* report);

/* Number of documented deviations recorded by the report. */
int kepot_report_deviation_count(const kepot_report* report);

/* Render the report.  On KEPOT_OK, *out is a NUL-terminated string owned
 * by the caller; release it with kepot_string_free. */
kepot_status kepot_report_render(const kepot_report* report,
                                 kepot_format format, char** out);

void kepot_string_free(char* text);
void kepot_report_free(kepot_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KEPOT_KEPOT_H */

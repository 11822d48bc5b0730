/* C interface to the transition-amplitude engine. All entry points are
 * thread-compatible: handles must not be shared across threads without
 * external locking, error strings are thread local. */
#ifndef RFT_H
#define RFT_H

#include <stddef.h>

#if defined(RFT_BUILDING_SHARED)
#define RFT_API __attribute__((visibility("default")))
#else
#define RFT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rft_status {
  RFT_OK = 0,
  RFT_ERROR = 1, /* unexpected failure */
  RFT_ERR_PARSE = 2,
  RFT_ERR_INVARIANT = 3,
  RFT_ERR_NUMERIC = 4,
  RFT_ERR_IO = 5,
  RFT_ERR_INVALID_ARGUMENT = 6
} rft_status;

/* Engine version string, static storage. */
RFT_API const char* rft_version(void);

/* Message of the last failing call on this thread; empty if none. */
RFT_API const char* rft_last_error(void);

/* Opaque scenario handle. */
typedef struct rft_scenario rft_scenario;

/* Loads a scenario description from a file. On success *out owns the
 * scenario and must be released with rft_scenario_close. */
RFT_API rft_status rft_scenario_open_file(const char* path,
                                          rft_scenario** out);

/* Loads one of the scenarios compiled into the library. */
RFT_API rft_status rft_scenario_open_bundled(const char* name,
                                             rft_scenario** out);

RFT_API rft_status rft_scenario_set_output_dir(rft_scenario* s,
                                               const char* dir);

/* Nonzero silences progress lines; results and report files are written
 * either way. */
RFT_API rft_status rft_scenario_set_quiet(rft_scenario* s, int quiet);

RFT_API const char* rft_scenario_name(const rft_scenario* s);
RFT_API const char* rft_scenario_description(const rft_scenario* s);

/* Executes every task in the scenario, writing result tables, manifest.json
 * and report.txt into the output directory. */
RFT_API rft_status rft_scenario_run(rft_scenario* s);

RFT_API void rft_scenario_close(rft_scenario* s);

/* Bundled scenario registry. */
RFT_API size_t rft_bundled_count(void);
RFT_API const char* rft_bundled_name(size_t index);
RFT_API const char* rft_bundled_description(size_t index);

typedef struct rft_table_comparison {
  double relative_l2;        /* ||a-b|| / ||b|| */
  double max_abs_diff;       /* max_i |a_i - b_i| */
  long long peak_location_diff_bins; /* argmax|a| - argmax|b| */
  long long rows;
} rft_table_comparison;

/* Compares two result tables written by scenario runs; b is the reference. */
RFT_API rft_status rft_compare_table_files(const char* path_a,
                                           const char* path_b,
                                           rft_table_comparison* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RFT_H */

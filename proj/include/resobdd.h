/* C interface to the resilient OBDD engine.
 *
 * Handles are opaque and owned by the caller; free them with the matching
 * *_free function. Every fallible call returns a resobdd_status; on failure
 * resobdd_last_error() describes the problem. Strings returned through a
 * char** are heap-allocated and must be released with resobdd_string_free.
 * Handles are not synchronised: use one handle per thread or lock around it.
 */
#ifndef RESOBDD_H
#define RESOBDD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RESOBDD_BUILDING)
#    define RESOBDD_API __declspec(dllexport)
#  else
#    define RESOBDD_API __declspec(dllimport)
#  endif
#else
#  define RESOBDD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum resobdd_status {
  RESOBDD_OK = 0,
  RESOBDD_ERR_USAGE = 1,      /* null handle, bad argument, index out of range */
  RESOBDD_ERR_PARSE = 2,      /* malformed PLA text or cube */
  RESOBDD_ERR_STRUCTURE = 3,  /* diagram violates ordering or store invariants */
  RESOBDD_ERR_CONTRACT = 4,   /* operation precondition not met */
  RESOBDD_ERR_IO = 5,         /* file could not be read */
  RESOBDD_ERR_INTERNAL = 6
} resobdd_status;

typedef enum resobdd_form {
  RESOBDD_FORM_RO = 0, /* reduced */
  RESOBDD_FORM_QR = 1, /* quasi-reduced */
  RESOBDD_FORM_IR = 2  /* index-resilient reduced */
} resobdd_form;

typedef enum resobdd_dc_policy { RESOBDD_DC_ZERO = 0, RESOBDD_DC_ONE = 1 } resobdd_dc_policy;

typedef enum resobdd_format {
  RESOBDD_FORMAT_CSV = 0,
  RESOBDD_FORMAT_TEXT = 1,
  RESOBDD_FORMAT_JSON = 2
} resobdd_format;

typedef enum resobdd_campaign_mode {
  RESOBDD_MODE_INDEX_UT = 0,
  RESOBDD_MODE_INDEX_IR = 1,
  RESOBDD_MODE_EDGE = 2
} resobdd_campaign_mode;

typedef struct resobdd_pla resobdd_pla;
typedef struct resobdd_diagram resobdd_diagram;
typedef struct resobdd_stats resobdd_stats;

typedef struct resobdd_counts {
  size_t qr;
  size_t ro;
  size_t ir;
} resobdd_counts;

RESOBDD_API const char* resobdd_version(void);
/* Message of the last failed call on this thread; "" if none. */
RESOBDD_API const char* resobdd_last_error(void);
RESOBDD_API void resobdd_string_free(char* s);

/* ---- PLA files --------------------------------------------------------- */

RESOBDD_API resobdd_status resobdd_pla_parse(const char* text, resobdd_pla** out);
RESOBDD_API resobdd_status resobdd_pla_load(const char* path, resobdd_pla** out);
RESOBDD_API void resobdd_pla_free(resobdd_pla* pla);
RESOBDD_API uint32_t resobdd_pla_num_inputs(const resobdd_pla* pla);
RESOBDD_API uint32_t resobdd_pla_num_outputs(const resobdd_pla* pla);
RESOBDD_API size_t resobdd_pla_num_warnings(const resobdd_pla* pla);
/* Borrowed pointer, valid while `pla` lives. NULL when out of range. */
RESOBDD_API const char* resobdd_pla_warning(const resobdd_pla* pla, size_t i);

/* ---- Diagrams ----------------------------------------------------------- */

RESOBDD_API resobdd_status resobdd_diagram_from_pla(const resobdd_pla* pla, size_t output,
                                                    resobdd_form form, resobdd_dc_policy dc,
                                                    resobdd_diagram** out);
/* ON-set cubes over {0,1,-} of length num_vars. */
RESOBDD_API resobdd_status resobdd_diagram_from_cubes(uint32_t num_vars, const char* const* cubes,
                                                      size_t count, resobdd_form form,
                                                      resobdd_diagram** out);
RESOBDD_API void resobdd_diagram_free(resobdd_diagram* d);
RESOBDD_API resobdd_status resobdd_diagram_num_vars(const resobdd_diagram* d, uint32_t* out);
RESOBDD_API resobdd_status resobdd_diagram_node_count(const resobdd_diagram* d, size_t* out);
/* assignment[i] is x_i; len must equal the variable count. */
RESOBDD_API resobdd_status resobdd_diagram_evaluate(const resobdd_diagram* d,
                                                    const uint8_t* assignment, size_t len,
                                                    int* out);
RESOBDD_API resobdd_status resobdd_diagram_is_index_resilient(const resobdd_diagram* d, int* out);
/* Total and mean index reconstruction cost over the reachable nodes. */
RESOBDD_API resobdd_status resobdd_diagram_cost(const resobdd_diagram* d, size_t* total,
                                                double* mean);
RESOBDD_API resobdd_status resobdd_diagram_to_dot(const resobdd_diagram* d, const char* name,
                                                  char** out);

/* ---- Statistics -------------------------------------------------------- */

RESOBDD_API resobdd_status resobdd_stats_create(resobdd_stats** out);
RESOBDD_API void resobdd_stats_free(resobdd_stats* stats);
/* Appends one benchmark row; `counts` (nullable) receives its sums. */
RESOBDD_API resobdd_status resobdd_stats_add(resobdd_stats* stats, const resobdd_pla* pla,
                                             const char* benchmark, resobdd_dc_policy dc,
                                             resobdd_counts* counts);
RESOBDD_API resobdd_status resobdd_stats_render(const resobdd_stats* stats, resobdd_format format,
                                                char** out);
/* Published reference sums for a benchmark name; *found is 0 if unknown. */
RESOBDD_API resobdd_status resobdd_reference(const char* benchmark, resobdd_counts* out,
                                             int* found);
/* File stem of a path. */
RESOBDD_API resobdd_status resobdd_benchmark_name(const char* path, char** out);

/* ---- Verification ------------------------------------------------------ */

typedef struct resobdd_verify_options {
  resobdd_dc_policy dc;
  uint32_t max_exhaustive_vars;
  /* Test hook: when >= 0, the IR diagram of this output is negated before
     checking, so the run must report a violation. */
  int32_t break_output;
} resobdd_verify_options;

RESOBDD_API void resobdd_verify_options_init(resobdd_verify_options* opts);
RESOBDD_API resobdd_status resobdd_verify(const resobdd_pla* pla, const char* benchmark,
                                          const resobdd_verify_options* opts, int* passed,
                                          char** report);

/* ---- Fault campaigns --------------------------------------------------- */

typedef struct resobdd_campaign_config {
  resobdd_campaign_mode mode;
  resobdd_dc_policy dc;
  size_t trials;
  uint64_t seed;
  size_t fault_count;      /* index-ir: faults per trial */
  double fault_fraction;   /* index-ir: overrides fault_count when > 0 */
  const size_t* table_sizes;
  size_t num_table_sizes;  /* 0 selects 256, 1024, 2048 */
  int strict;
} resobdd_campaign_config;

RESOBDD_API void resobdd_campaign_config_init(resobdd_campaign_config* cfg);
/* *passed: index modes, every fault recovered within bounds; edge mode, the
   campaign ran. *trend_ok: edge mode, success non-decreasing in table size
   (always 1 otherwise). csv, summary and trend_ok are nullable. */
RESOBDD_API resobdd_status resobdd_inject_recover(const resobdd_pla* pla, const char* benchmark,
                                                  const resobdd_campaign_config* cfg,
                                                  int* passed, int* trend_ok, char** csv,
                                                  char** summary);

#ifdef __cplusplus
}
#endif

#endif /* RESOBDD_H */

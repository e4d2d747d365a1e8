/* ffdioph — exact solvers for diophantine inequalities over GF(q)((1/t)).
 *
 * Plain-C surface over the C++ core: opaque handles, integer status codes,
 * and JSON strings for every structured value.  All strings returned through
 * a char** must be released with ffd_string_free(); handles with their
 * matching *_free().  On any non-OK status, ffd_last_error() returns a
 * thread-local human-readable message.
 */
#ifndef FFDIOPH_H
#define FFDIOPH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ffd_status {
  FFD_OK = 0,              /* success; solve paths: verified certificate   */
  FFD_ERR_PARSE = 1,       /* malformed JSON or schema violation           */
  FFD_ERR_BUDGET = 2,      /* evaluation budget exhausted                  */
  FFD_ERR_HYPOTHESIS = 3,  /* instance outside a theorem's hypotheses      */
  FFD_ERR_UNSOLVED = 4,    /* search finished without a verified witness   */
  FFD_ERR_INVALID = 5,     /* invalid argument (null handle, bad field...) */
  FFD_ERR_INTERNAL = 6     /* invariant breach inside the library          */
} ffd_status;

typedef struct ffd_instance ffd_instance;
typedef struct ffd_report ffd_report;

typedef struct ffd_run_options {
  int64_t budget;   /* max solver point evaluations (default 1 << 24) */
  int32_t workers;  /* 1 = deterministic search order                 */
  int32_t refined;  /* nonzero: power-sum variable count (general)    */
} ffd_run_options;

/* Fills in the defaults; call before overriding individual fields. */
void ffd_run_options_init(ffd_run_options* opts);

/* --- problem instances ---------------------------------------------------- */

/* Parses a problem file (see the file-format section of the README). */
ffd_status ffd_instance_from_json(const char* json_text, ffd_instance** out);
ffd_status ffd_instance_from_file(const char* path, ffd_instance** out);

/* "general", "diagonal", or "distmod"; NULL on a null handle. */
const char* ffd_instance_variant(const ffd_instance* inst);

/* Canonical serialization of the instance. */
ffd_status ffd_instance_to_json(const ffd_instance* inst, char** out_json);

void ffd_instance_free(ffd_instance* inst);

/* --- end-to-end runs ------------------------------------------------------- */

/* Plan, reduce, solve, and certify.  A report is produced whenever the
 * pipeline ran (including budget exhaustion); FFD_OK requires a verified
 * certificate. */
ffd_status ffd_run(const ffd_instance* inst, const ffd_run_options* opts, ffd_report** out);

/* Constructs a sharpness instance over GF(p^e), samples `samples` kernel
 * solutions (seeded), and, when probe_max_ord >= 0, runs the exhaustive
 * minimum search under the budget. */
ffd_status ffd_lower_bound(uint64_t p, uint32_t e, int32_t d, int32_t r, int32_t s,
                           int32_t h_mult, int64_t probe_max_ord, int64_t budget,
                           int32_t samples, uint64_t seed, ffd_report** out);

/* The constructed sharpness instance as a problem file. */
ffd_status ffd_lower_bound_form_file(uint64_t p, uint32_t e, int32_t d, int32_t r,
                                     int32_t s, int32_t h_mult, char** out_json);

/* --- standalone queries ---------------------------------------------------- */

/* The anisotropic degree-d norm form in d variables over GF(p^e). */
ffd_status ffd_normic_form_json(uint64_t p, uint32_t e, int32_t d, char** out_json);

/* Monic irreducibles of the exact degree; include_list = 0 reports only the
 * count (always computed by the divisor-sum formula as a cross-check). */
ffd_status ffd_irreducibles_json(uint64_t p, uint32_t e, uint32_t degree,
                                 int32_t include_list, char** out_json);

/* --- reports ---------------------------------------------------------------- */

ffd_status ffd_report_json(const ffd_report* rep, char** out_json);

/* 1 = verified, 0 = not verified, -1 = null handle or not a solve report. */
int32_t ffd_report_verified(const ffd_report* rep);

void ffd_report_free(ffd_report* rep);

/* --- utilities -------------------------------------------------------------- */

void ffd_string_free(char* s);

/* Message for the most recent failure on this thread ("" if none). */
const char* ffd_last_error(void);

const char* ffd_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FFDIOPH_H */

#ifndef NCMINOR_H
#define NCMINOR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define NCM_API __attribute__((visibility("default")))
#else
#define NCM_API
#endif

typedef enum ncm_status {
  NCM_OK = 0,
  NCM_CHECK_FAILED = 1,
  NCM_INPUT_ERROR = 2,
  NCM_INTERNAL_ERROR = 3
} ncm_status;

typedef struct ncm_algebra ncm_algebra;
typedef struct ncm_curve ncm_curve;
typedef struct ncm_report ncm_report;

/* Message for the last failing call on this thread; "" if none. */
NCM_API const char* ncm_last_error(void);
NCM_API const char* ncm_version(void);

/* Algebras from .alg files (path) or .alg text (name is used in diagnostics). */
NCM_API ncm_status ncm_algebra_load(const char* path, ncm_algebra** out);
NCM_API ncm_status ncm_algebra_parse(const char* text, const char* name, ncm_algebra** out);
NCM_API void ncm_algebra_free(ncm_algebra* a);
NCM_API size_t ncm_algebra_dim(const ncm_algebra* a);
NCM_API const char* ncm_algebra_name(const ncm_algebra* a);
/* Writes gl.dim; *at_least is set when the resolution hit `cap`. */
NCM_API ncm_status ncm_algebra_global_dimension(const ncm_algebra* a, size_t cap, size_t* gldim, int* at_least);

NCM_API ncm_status ncm_curve_load(const char* path, ncm_curve** out);
NCM_API void ncm_curve_free(ncm_curve* c);
NCM_API size_t ncm_curve_rank(const ncm_curve* c);
NCM_API size_t ncm_curve_point_count(const ncm_curve* c);

typedef struct ncm_request {
  const char* algebra_path; /* may be NULL */
  const char* curve_path;   /* may be NULL */
  const char* idempotent;   /* may be NULL */
  size_t cap;               /* 0 selects the default */
  const char* const* modules;
  size_t module_count;
} ncm_request;

/* Runs one subcommand. *out receives a report unless the arguments are
   null; the return value equals ncm_report_exit_code. */
NCM_API ncm_status ncm_run(const char* subcommand, const ncm_request* req, ncm_report** out);
NCM_API const char* ncm_report_text(const ncm_report* r);
NCM_API int ncm_report_exit_code(const ncm_report* r);
NCM_API const char* ncm_report_diagnostic(const ncm_report* r);
NCM_API void ncm_report_free(ncm_report* r);

/* Subcommand names, NULL past the end. */
NCM_API const char* ncm_subcommand_name(size_t i);

#ifdef __cplusplus
}
#endif

#endif

#ifndef NILZETA_H
#define NILZETA_H

#include <stddef.h>
#include <stdint.h>

#if defined(NILZETA_BUILDING_LIBRARY)
#define NILZETA_API __attribute__((visibility("default")))
#else
#define NILZETA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nilzeta_status {
  NILZETA_OK = 0,
  NILZETA_VERIFICATION_FAILED = 1, /* the run completed and some check failed */
  NILZETA_ERR_INPUT = 2,
  NILZETA_ERR_SINGULAR = 3,
  NILZETA_ERR_PRECISION = 4,
  NILZETA_ERR_UNSUPPORTED = 5,
  NILZETA_ERR_INVARIANT = 6,
  NILZETA_ERR_INTERNAL = 7
} nilzeta_status;

typedef struct nilzeta_config {
  int n;
  int c;
  unsigned long prime;
  int level;
  int degree;
  unsigned long ff_order;
  uint64_t seed;
  int json;          /* nonzero: the report text is JSON */
  unsigned workers;  /* 0: available parallelism */
  const char* input; /* funceq: "zeta" or an expression in q, t; may be NULL */
  int informational; /* verify-all: also run the q = 7 classification */
} nilzeta_config;

typedef struct nilzeta_report nilzeta_report;
typedef struct nilzeta_algebra nilzeta_algebra;
typedef struct nilzeta_ratfn nilzeta_ratfn;

NILZETA_API const char* nilzeta_version(void);
/* Message of the last failed call on this thread; "" if none. */
NILZETA_API const char* nilzeta_last_error(void);
/* Strings returned through char** out-parameters are released with this. */
NILZETA_API void nilzeta_string_free(char* s);

NILZETA_API void nilzeta_config_init(nilzeta_config* cfg);
NILZETA_API size_t nilzeta_subcommand_count(void);
NILZETA_API const char* nilzeta_subcommand_name(size_t i);

/* Runs a subcommand. On NILZETA_OK or NILZETA_VERIFICATION_FAILED *out
 * holds the report; otherwise *out is NULL. */
NILZETA_API nilzeta_status nilzeta_run(const char* subcommand, const nilzeta_config* cfg, nilzeta_report** out);
NILZETA_API int nilzeta_report_passed(const nilzeta_report* r);
/* Text or JSON according to cfg->json; owned by the report. */
NILZETA_API const char* nilzeta_report_output(const nilzeta_report* r);
NILZETA_API const char* nilzeta_report_text(const nilzeta_report* r);
NILZETA_API const char* nilzeta_report_json(const nilzeta_report* r);
NILZETA_API void nilzeta_report_free(nilzeta_report* r);

/* Free nilpotent Lie ring on n generators of class c, or the rank-25 quotient. */
NILZETA_API nilzeta_status nilzeta_algebra_free_nilpotent(int n, int c, nilzeta_algebra** out);
NILZETA_API nilzeta_status nilzeta_algebra_lambda(nilzeta_algebra** out);
NILZETA_API size_t nilzeta_algebra_dimension(const nilzeta_algebra* a);
/* Owned by the handle; NULL if i is out of range. */
NILZETA_API const char* nilzeta_algebra_basis_name(const nilzeta_algebra* a, size_t i);
NILZETA_API nilzeta_status nilzeta_algebra_normal_form(const nilzeta_algebra* a, const char* expr, char** out);
NILZETA_API nilzeta_status nilzeta_algebra_export_json(const nilzeta_algebra* a, char** out);
NILZETA_API void nilzeta_algebra_free(nilzeta_algebra* a);

NILZETA_API nilzeta_status nilzeta_ratfn_parse(const char* text, nilzeta_ratfn** out);
/* The local factor in q and t = p^-s. */
NILZETA_API nilzeta_status nilzeta_ratfn_local_factor(nilzeta_ratfn** out);
NILZETA_API nilzeta_status nilzeta_ratfn_to_string(const nilzeta_ratfn* f, char** out);
NILZETA_API int nilzeta_ratfn_equal(const nilzeta_ratfn* a, const nilzeta_ratfn* b);
/* *found = 1 and (a, b, c) when f(1/q, 1/t) = (-1)^a q^b t^c f(q, t); *found = 0 otherwise. */
NILZETA_API nilzeta_status nilzeta_ratfn_functional_equation(const nilzeta_ratfn* f, int* found, int* a, int64_t* b,
                                                             int64_t* c);
NILZETA_API void nilzeta_ratfn_free(nilzeta_ratfn* f);

#ifdef __cplusplus
}
#endif

#endif

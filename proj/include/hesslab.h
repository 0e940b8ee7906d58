/* C interface to the hesslab library.
 *
 * Every fallible call returns an hl_status; on failure hl_last_error() holds
 * a message for the calling thread until its next failing call. Strings
 * returned through char** are owned by the caller and released with
 * hl_string_free. Exact scalars cross the boundary as "p/q" strings.
 */
#ifndef HESSLAB_H
#define HESSLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(HESSLAB_BUILDING)
#define HL_API __attribute__((visibility("default")))
#else
#define HL_API
#endif

typedef enum hl_status {
  HL_OK = 0,
  HL_INVALID_ARGUMENT = 1,
  HL_PARSE = 2,
  HL_PRECONDITION = 3,
  HL_GOOD_POSITION = 4,
  HL_IO = 5,
  HL_INTERNAL = 6
} hl_status;

typedef enum hl_point_class { HL_ELLIPTIC = 0, HL_PARABOLIC = 1, HL_HYPERBOLIC = 2 } hl_point_class;

typedef enum hl_family_kind { HL_FAMILY_OUTER = 0, HL_FAMILY_EVEN = 1, HL_FAMILY_ODD = 2 } hl_family_kind;

typedef struct hl_polynomial hl_polynomial;
typedef struct hl_family hl_family;
typedef struct hl_report hl_report;
typedef struct hl_trace hl_trace;

typedef struct hl_verify_options {
  int resolution; /* base tracing resolution, >= 16 */
  int max_depth;  /* saddle subdivision depth */
  uint64_t seed;  /* seeds every sampled claim */
  int threads;    /* 0: HESSLAB_THREADS, then hardware concurrency */
  int samples;    /* points per sampled claim */
} hl_verify_options;

HL_API const char* hl_version(void);
HL_API const char* hl_last_error(void);
HL_API void hl_string_free(char* text);

/* Polynomials in x, y with rational coefficients. */
HL_API hl_status hl_polynomial_parse(const char* text, hl_polynomial** out);
HL_API hl_status hl_polynomial_to_string(const hl_polynomial* p, char** out);
HL_API hl_status hl_polynomial_hessian(const hl_polynomial* p, hl_polynomial** out);
HL_API hl_status hl_polynomial_equal(const hl_polynomial* a, const hl_polynomial* b, int* equal);
HL_API void hl_polynomial_free(hl_polynomial* p);

/* Family instances, JSON form {"family":"outer"|"even"|"odd", ...}. */
HL_API hl_status hl_family_from_json(const char* json, hl_family** out);
HL_API hl_status hl_family_to_json(const hl_family* family, char** out);
HL_API hl_status hl_family_kind_of(const hl_family* family, hl_family_kind* out);
/* Text of f: a polynomial, or "(num) / (den)" for the odd family. */
HL_API hl_status hl_family_expand(const hl_family* family, char** out);
HL_API hl_status hl_family_hessian_curve(const hl_family* family, hl_polynomial** out);
/* Outer family only. *ok is 1 in good position; otherwise *witness (if
 * witness is non-null) receives "line: point". */
HL_API hl_status hl_family_check_good_position(const hl_family* family, int* ok, char** witness);
HL_API void hl_family_free(hl_family* family);

HL_API const char* hl_point_class_name(hl_point_class cls);
HL_API hl_status hl_classify_family_point(const hl_family* family, const char* x, const char* y,
                                          hl_point_class* out);
HL_API hl_status hl_classify_polynomial_point(const hl_polynomial* f, const char* x, const char* y,
                                              hl_point_class* out);

/* Theorem verification; the theorem follows from the family kind
 * (outer: 1, even: 2, odd: 3). */
HL_API void hl_verify_options_default(hl_verify_options* options);
HL_API hl_status hl_verify(const hl_family* family, const hl_verify_options* options, hl_report** out);
HL_API int hl_report_overall(const hl_report* report);
HL_API hl_status hl_report_to_json(const hl_report* report, int include_timings, char** out);
HL_API void hl_report_free(hl_report* report);

/* Curve tracing. */
HL_API hl_status hl_trace_family(const hl_family* family, int resolution, int max_depth, int threads,
                                 hl_trace** out);
HL_API hl_status hl_trace_polynomial(const hl_polynomial* p, const char* xmin, const char* xmax, const char* ymin,
                                     const char* ymax, int resolution, int max_depth, int threads, hl_trace** out);
HL_API int hl_trace_component_count(const hl_trace* trace);
HL_API int hl_trace_has_open_chains(const hl_trace* trace);
HL_API hl_status hl_trace_to_svg(const hl_trace* trace, char** out);
HL_API hl_status hl_trace_to_csv(const hl_trace* trace, char** out);
HL_API void hl_trace_free(hl_trace* trace);

/* Exact check of Hess((f o T) / J) == (Hess f) o T for T(v) = L v + t,
 * L given row-major. */
HL_API hl_status hl_affine_check(const hl_polynomial* f, const char* const linear[4], const char* const translation[2],
                                 int* holds);

#ifdef __cplusplus
}
#endif

#endif /* HESSLAB_H */

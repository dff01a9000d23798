#ifndef SYSLAB_H
#define SYSLAB_H

/* C interface to the systolic geodesics library. Handles are opaque; every
 * call returns a status code (0 on success) and leaves a message for
 * syslab_last_error() on failure. Strings returned through char** are owned by
 * the caller and released with syslab_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SYSLAB_BUILDING)
#define SYSLAB_API __declspec(dllexport)
#else
#define SYSLAB_API __declspec(dllimport)
#endif
#else
#define SYSLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 1..26 match the library's error codes. */
typedef enum {
  SYSLAB_OK = 0,
  SYSLAB_UNREACHABLE = 1,
  SYSLAB_BOUNDARY_UNSAFE = 2,
  SYSLAB_NOT_A_SIMPLEX = 3,
  SYSLAB_CONSTRUCTION_FAILED = 4,
  SYSLAB_CONDITION_VIOLATED = 5,
  SYSLAB_EMPTY_LAYER = 6,
  SYSLAB_MALFORMED_PROFILE = 7,
  SYSLAB_NO_REALIZING_CHAIN = 8,
  SYSLAB_NOT_FLAT = 9,
  SYSLAB_TIMEOUT = 10,
  SYSLAB_NO_FILLING = 11,
  SYSLAB_NOT_A_SIMPLEX_OF_DISK = 12,
  SYSLAB_DEGENERATE_DOMAIN = 13,
  SYSLAB_OUTSIDE_DOMAIN = 14,
  SYSLAB_NO_CROSSING = 15,
  SYSLAB_NO_SELECTION = 16,
  SYSLAB_INCONCLUSIVE = 17,
  SYSLAB_NOT_TRANSLATION_LIKE = 18,
  SYSLAB_NO_STABLE_SEGMENT = 19,
  SYSLAB_PARSE_ERROR = 20,
  SYSLAB_TASK_FAILED = 21,
  SYSLAB_NOT_PLANE_BACKED = 22,
  SYSLAB_PRECONDITION_VIOLATED = 23,
  SYSLAB_INVALID_ARGUMENT = 24,
  SYSLAB_IO_ERROR = 25,
  SYSLAB_OVERFLOW = 26,
  SYSLAB_INTERNAL = 99
} syslab_status;

typedef struct syslab_complex syslab_complex;
typedef struct syslab_scenario syslab_scenario;

SYSLAB_API const char* syslab_version(void);
/* Message of the last failed call on this thread; empty if none. */
SYSLAB_API const char* syslab_last_error(void);
SYSLAB_API const char* syslab_status_name(int status);
SYSLAB_API void syslab_string_free(char* s);

/* Complexes */
SYSLAB_API int syslab_complex_window(int64_t a, int64_t b, int radius, syslab_complex** out);
SYSLAB_API int syslab_complex_load(const char* path, syslab_complex** out);
/* kind: "tree-T" (parameter = depth), "disk-hex3" and the other flat disks,
 * "octahedron", "book" and "cone-plane" (ball of `radius` around the origin). */
SYSLAB_API int syslab_complex_builtin(const char* kind, int parameter, int radius, syslab_complex** out);
SYSLAB_API void syslab_complex_free(syslab_complex* c);
SYSLAB_API size_t syslab_complex_size(const syslab_complex* c);
/* ref: "a,b" on plane-backed complexes, a vertex label, or "#id". */
SYSLAB_API int syslab_vertex(const syslab_complex* c, const char* ref, uint32_t* out);
SYSLAB_API int syslab_vertex_label(const syslab_complex* c, uint32_t v, char** out);
SYSLAB_API int syslab_distance(const syslab_complex* c, uint32_t x, uint32_t y, int* out);

/* Analyses; JSON results */
SYSLAB_API int syslab_check_6_large(const syslab_complex* c, int* pass, char** json_out);
SYSLAB_API int syslab_euclidean_geodesic(const syslab_complex* c, uint32_t x, uint32_t y, char** json_out);
SYSLAB_API int syslab_goodness(const syslab_complex* c, uint32_t x, uint32_t y, int* out);
SYSLAB_API int syslab_translation_length(const char* isometry_literal, int64_t* out);
SYSLAB_API int syslab_render_svg(const syslab_complex* c, uint32_t x, uint32_t y, char** svg_out);

/* Scenarios */
typedef struct {
  int jobs;
  int has_seed;
  uint64_t seed;
  const char* constants; /* "C=..,D=.." or NULL */
  const char* out_dir;   /* NULL means "." */
  int figures_only;
  int write_files;
} syslab_run_options;

SYSLAB_API void syslab_run_options_init(syslab_run_options* opt);
SYSLAB_API int syslab_scenario_load(const char* path, syslab_scenario** out);
SYSLAB_API int syslab_scenario_parse(const char* text, const char* base_dir, syslab_scenario** out);
SYSLAB_API void syslab_scenario_free(syslab_scenario* s);
/* Runs the scenario; exit_code follows the CLI contract (0 pass, 1 failure, 2 input error). */
SYSLAB_API int syslab_scenario_run(const syslab_scenario* s, const syslab_run_options* opt, char** report_json,
                                   int* exit_code);

#ifdef __cplusplus
}
#endif

#endif

/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "syslab/syslab.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static const char* kScenario =
    "[scenario]\n"
    "name = capi\n"
    "seed = 3\n"
    "[complex plane]\n"
    "source = eplane\n"
    "radius = 8\n"
    "[task a]\n"
    "kind = geodesic-pipeline\n"
    "complex = plane\n"
    "x = 0,0\n"
    "y = 4,2\n"
    "[task sweep]\n"
    "kind = goodness-sweep\n"
    "complex = plane\n"
    "pairs = 10\n"
    "max_distance = 5\n";

static void plane(void) {
  syslab_complex* w = NULL;
  uint32_t x, y;
  int d = -1, good = -1;
  char* text = NULL;

  EXPECT(syslab_complex_window(0, 0, 10, &w) == SYSLAB_OK);
  EXPECT(syslab_complex_size(w) == 331);
  EXPECT(syslab_vertex(w, "0,0", &x) == SYSLAB_OK);
  EXPECT(syslab_vertex(w, "4,2", &y) == SYSLAB_OK);
  EXPECT(syslab_distance(w, x, y, &d) == SYSLAB_OK && d == 6);
  EXPECT(syslab_vertex_label(w, y, &text) == SYSLAB_OK);
  EXPECT(text && strstr(text, "4") != NULL);
  syslab_string_free(text);

  EXPECT(syslab_goodness(w, x, y, &good) == SYSLAB_OK && good >= 0 && good <= 1);
  text = NULL;
  EXPECT(syslab_euclidean_geodesic(w, x, y, &text) == SYSLAB_OK);
  EXPECT(text && strstr(text, "\"vertex_geodesic\"") != NULL);
  syslab_string_free(text);

  text = NULL;
  EXPECT(syslab_render_svg(w, x, y, &text) == SYSLAB_OK);
  EXPECT(text && strstr(text, "<svg") != NULL && strstr(text, "</svg>") != NULL);
  syslab_string_free(text);

  /* errors */
  EXPECT(syslab_vertex(w, "40,40", &x) != SYSLAB_OK);
  EXPECT(strlen(syslab_last_error()) > 0);
  EXPECT(syslab_distance(w, 0, 100000, &d) == SYSLAB_INVALID_ARGUMENT);
  EXPECT(syslab_distance(NULL, 0, 1, &d) == SYSLAB_INVALID_ARGUMENT);
  syslab_complex_free(w);
  syslab_complex_free(NULL);
}

static void samples(void) {
  syslab_complex* c = NULL;
  int pass = -1;
  char* report = NULL;

  EXPECT(syslab_complex_builtin("octahedron", 0, 0, &c) == SYSLAB_OK);
  EXPECT(syslab_check_6_large(c, &pass, &report) == SYSLAB_OK);
  EXPECT(pass == 0);
  EXPECT(report && strstr(report, "\"witness\"") != NULL);
  syslab_string_free(report);
  syslab_complex_free(c);

  c = NULL;
  EXPECT(syslab_complex_builtin("tree-T", 5, 0, &c) == SYSLAB_OK);
  EXPECT(syslab_check_6_large(c, &pass, NULL) == SYSLAB_OK && pass == 1);
  syslab_complex_free(c);

  c = NULL;
  EXPECT(syslab_complex_builtin("moebius", 1, 1, &c) == SYSLAB_INVALID_ARGUMENT);
  EXPECT(c == NULL);
  EXPECT(syslab_complex_load("/nonexistent/x.fc", &c) == SYSLAB_IO_ERROR);
  EXPECT(strcmp(syslab_status_name(SYSLAB_IO_ERROR), "IoError") == 0);
}

static void isometries(void) {
  int64_t len = -1;
  EXPECT(syslab_translation_length("translate(3,0)", &len) == SYSLAB_OK && len == 3);
  EXPECT(syslab_translation_length("glide(1,1)", &len) == SYSLAB_OK && len == 2);
  EXPECT(syslab_translation_length("rot60^1", &len) == SYSLAB_PRECONDITION_VIOLATED);
  EXPECT(syslab_translation_length("nonsense", &len) == SYSLAB_PARSE_ERROR);
}

static void scenarios(void) {
  syslab_scenario* s = NULL;
  syslab_run_options opt;
  char* a = NULL;
  char* b = NULL;
  int code = -1;

  EXPECT(syslab_scenario_parse("[scenario]\nname = x\n[task t]\nkind = nope\n", ".", &s) == SYSLAB_PARSE_ERROR);
  EXPECT(s == NULL);
  EXPECT(strstr(syslab_last_error(), "nope") != NULL);
  EXPECT(syslab_scenario_load("/nonexistent/x.scn", &s) == SYSLAB_IO_ERROR);

  EXPECT(syslab_scenario_parse(kScenario, ".", &s) == SYSLAB_OK);
  syslab_run_options_init(&opt);
  opt.write_files = 0;
  EXPECT(syslab_scenario_run(s, &opt, &a, &code) == SYSLAB_OK && code == 0);
  EXPECT(a && strstr(a, "\"report/1\"") != NULL);
  opt.jobs = 2;
  EXPECT(syslab_scenario_run(s, &opt, &b, &code) == SYSLAB_OK && code == 0);
  EXPECT(b != NULL);
  syslab_string_free(a);
  syslab_string_free(b);

  opt.constants = "C=oops";
  a = NULL;
  EXPECT(syslab_scenario_run(s, &opt, &a, &code) == SYSLAB_PARSE_ERROR);
  EXPECT(a == NULL);
  syslab_scenario_free(s);
}

int main(void) {
  EXPECT(syslab_version() != NULL);
  plane();
  samples();
  isometries();
  scenarios();
  if (failures) {
    fprintf(stderr, "%d failed\n", failures);
    return 1;
  }
  printf("capi ok\n");
  return 0;
}

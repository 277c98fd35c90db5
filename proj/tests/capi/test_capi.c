/* Exercises the C interface from C. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "polyherm/polyherm.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

int main(void) {
  ph_complex v;
  ph_complex one = {1.0, 0.0};
  EXPECT(ph_eval(PH_FAMILY_SQUEEZED, 1, 1, 0.6, 0.0, one, &v) == PH_OK);
  EXPECT(fabs(v.re - 0.3) < 1e-15 && fabs(v.im) < 1e-15);

  ph_family f;
  EXPECT(ph_family_from_name("phi", &f) == PH_OK && f == PH_FAMILY_PHI);
  EXPECT(ph_family_from_name("nope", &f) == PH_INVALID_ARGUMENT);
  EXPECT(strstr(ph_last_error_message(), "nope") != NULL);

  EXPECT(ph_eval(PH_FAMILY_SQUEEZED, 1, 1, 1.2, 0.0, one, &v) == PH_TAU_OUT_OF_RANGE);
  EXPECT(strcmp(ph_status_name(PH_TAU_OUT_OF_RANGE), "TauOutOfRange") == 0);
  EXPECT(strstr(ph_last_error_message(), "TauOutOfRange") != NULL);
  EXPECT(ph_eval(PH_FAMILY_COMPLEX, 1, 1, 0.0, 0.0, one, NULL) == PH_INVALID_ARGUMENT);

  ph_polynomial* p = NULL;
  EXPECT(ph_polynomial_complex_hermite(2, 1, &p) == PH_OK);
  ph_complex c;
  EXPECT(ph_polynomial_coeff(p, 1, 0, &c) == PH_OK && c.re == -2.0);
  int dz = 0, dzb = 0;
  EXPECT(ph_polynomial_degrees(p, &dz, &dzb) == PH_OK && dz == 2 && dzb == 1);
  char* js = NULL;
  EXPECT(ph_polynomial_to_json(p, &js) == PH_OK && js != NULL);
  ph_string_free(js);
  ph_polynomial_free(p);

  ph_complex z = {1.0, 0.0}, w = {0.0, 0.0};
  EXPECT(ph_kernel_closed(0.5, 1, z, w, &v) == PH_OK);
  EXPECT(fabs(v.re - 1.5 * exp(-0.25)) < 1e-15);
  double last = 0.0;
  int terms = 0;
  EXPECT(ph_kernel_series(0.5, 1, z, w, 0, &v, &last, &terms) == PH_OK && terms > 0);
  EXPECT(ph_kernel_series(0.5, 1, z, w, 2, &v, &last, &terms) == PH_TRUNCATION_TOO_SMALL);

  ph_grid* g = NULL;
  EXPECT(ph_grid_create(4, 0.5, PH_GRID_ELLIPTIC, &g) == PH_OK);
  EXPECT(ph_grid_size(g) == 16);
  double sum = 0.0, x, y, wt;
  for (size_t i = 0; i < ph_grid_size(g); ++i) {
    EXPECT(ph_grid_node(g, i, &x, &y, &wt) == PH_OK);
    sum += wt;
  }
  EXPECT(fabs(sum - sqrt(0.75)) < 1e-14);
  EXPECT(ph_grid_node(g, 16, &x, &y, &wt) == PH_INVALID_ARGUMENT);
  ph_grid_free(g);
  EXPECT(ph_grid_create(1, 0.5, PH_GRID_ELLIPTIC, &g) == PH_NODES_OUT_OF_RANGE);

  ph_spectrum* s = NULL;
  EXPECT(ph_sample_spectrum(16, 0.5, 3, 0, &s) == PH_OK);
  EXPECT(ph_spectrum_size(s) == 16);
  char* summary = NULL;
  const ph_spectrum* list[1] = {s};
  EXPECT(ph_sample_summary_json(list, 1, "sample", 0, &summary) == PH_OK);
  EXPECT(strstr(summary, "pooled") != NULL && strstr(summary, "timestamp") == NULL);
  ph_string_free(summary);
  ph_spectrum_free(s);
  EXPECT(ph_sample_spectrum(0, 0.5, 3, 0, &s) == PH_SIZE_OUT_OF_RANGE);

  ph_verify_options o = ph_verify_options_default();
  EXPECT(o.n_q == 64 && o.max_degree == 8);
  char* report = NULL;
  int ok = 0;
  EXPECT(ph_verify("poly_core", &o, "verify", 0, &report, &ok) == PH_OK && ok == 1);
  EXPECT(ph_report_check_compat(report) == PH_OK);
  EXPECT(strstr(report, ph_report_schema_version()) != NULL);
  ph_string_free(report);
  EXPECT(ph_verify("nope", &o, "verify", 0, &report, &ok) == PH_UNKNOWN_SUITE);
  EXPECT(ph_report_check_compat("{\"schema_version\": \"2.0.0\"}") == PH_SCHEMA_INCOMPATIBLE);

  EXPECT(strcmp(ph_rng_name(), "philox4x32-10") == 0);
  EXPECT(ph_set_max_threads(-1) == PH_INVALID_ARGUMENT);
  EXPECT(ph_set_max_threads(0) == PH_OK);

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("C interface: all expectations met\n");
  return failures ? 1 : 0;
}

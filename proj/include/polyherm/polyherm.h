/* C interface to the polyherm library. Every function returns a ph_status;
 * on failure ph_last_error_message() describes the error for the calling
 * thread. Strings returned through char** are released with ph_string_free. */
#ifndef POLYHERM_POLYHERM_H
#define POLYHERM_POLYHERM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(POLYHERM_BUILDING)
#define PH_API __attribute__((visibility("default")))
#else
#define PH_API
#endif

typedef enum ph_status {
  PH_OK = 0,
  PH_INVALID_ARGUMENT = 1,
  PH_DEGREE_TOO_LARGE = 2,
  PH_TAU_OUT_OF_RANGE = 3,
  PH_TRUNCATION_TOO_SMALL = 4,
  PH_SINGULAR_R = 5,
  PH_NODES_OUT_OF_RANGE = 6,
  PH_EIGENSOLVE_FAILURE = 7,
  PH_GRID_MISMATCH = 8,
  PH_SIZE_OUT_OF_RANGE = 9,
  PH_NO_CONVERGENCE = 10,
  PH_UNKNOWN_SUITE = 11,
  PH_SCHEMA_INCOMPATIBLE = 12,
  PH_IO = 13,
  PH_INTERNAL = 99
} ph_status;

typedef struct ph_complex {
  double re;
  double im;
} ph_complex;

/* Error name for a status, e.g. "TauOutOfRange". */
PH_API const char* ph_status_name(ph_status status);
PH_API const char* ph_last_error_message(void);
PH_API void ph_string_free(char* s);

PH_API const char* ph_report_schema_version(void);
PH_API const char* ph_rng_name(void);
/* Caps worker threads; 0 restores the default (hardware concurrency). */
PH_API ph_status ph_set_max_threads(int n);

/* Pointwise families. */
typedef enum ph_family {
  PH_FAMILY_HERMITE = 0,    /* H_m(z), physicists' Hermite */
  PH_FAMILY_RESCALED = 1,   /* H_m(z, tau) */
  PH_FAMILY_LAGUERRE = 2,   /* L_m^{(alpha)}(z) */
  PH_FAMILY_COMPLEX = 3,    /* H_{m,n}(z, zbar) */
  PH_FAMILY_PHI = 4,        /* H_{m,n}(z, zbar) / sqrt(m! n!) */
  PH_FAMILY_SQUEEZED = 5,   /* H_{m,n}(z, zbar; tau) */
  PH_FAMILY_SQUEEZED_2D = 6 /* the same family through the 2D-Hermite route */
} ph_family;

/* Returns PH_INVALID_ARGUMENT for unknown names. */
PH_API ph_status ph_family_from_name(const char* name, ph_family* out);
/* alpha is used by PH_FAMILY_LAGUERRE only; n and tau are ignored by the
 * families that do not take them. */
PH_API ph_status ph_eval(ph_family family, int m, int n, double tau, double alpha, ph_complex z, ph_complex* out);

/* Bivariate polynomial in z and zbar. */
typedef struct ph_polynomial ph_polynomial;
PH_API ph_status ph_polynomial_complex_hermite(int m, int n, ph_polynomial** out);
PH_API ph_status ph_polynomial_squeezed(int m, int n, double tau, ph_polynomial** out);
PH_API ph_status ph_polynomial_eval(const ph_polynomial* p, ph_complex z, ph_complex* out);
PH_API ph_status ph_polynomial_coeff(const ph_polynomial* p, int a, int b, ph_complex* out);
PH_API ph_status ph_polynomial_degrees(const ph_polynomial* p, int* deg_z, int* deg_zbar);
PH_API ph_status ph_polynomial_to_json(const ph_polynomial* p, char** out);
PH_API void ph_polynomial_free(ph_polynomial* p);

/* Kernels. K = 0 in ph_kernel_series grows the truncation automatically. */
PH_API ph_status ph_kernel_closed(double tau, int n, ph_complex z, ph_complex w, ph_complex* out);
PH_API ph_status ph_kernel_series(double tau, int n, ph_complex z, ph_complex w, int K, ph_complex* out,
                                  double* last_term, int* terms);
PH_API ph_status ph_kernel_landau(int n, ph_complex z, ph_complex w, ph_complex* out);

/* Quadrature grids. */
typedef enum ph_grid_kind {
  PH_GRID_ELLIPTIC = 0, /* nodes for the omega_tau measure */
  PH_GRID_FLAT = 1      /* nodes for the flat measure with a Gaussian density */
} ph_grid_kind;
typedef struct ph_grid ph_grid;
PH_API ph_status ph_grid_create(int n_q, double tau, ph_grid_kind kind, ph_grid** out);
PH_API size_t ph_grid_size(const ph_grid* g);
PH_API ph_status ph_grid_node(const ph_grid* g, size_t i, double* x, double* y, double* weight);
PH_API void ph_grid_free(ph_grid* g);

/* Elliptic random-matrix spectra, sorted by real then imaginary part. */
typedef struct ph_spectrum ph_spectrum;
PH_API ph_status ph_sample_spectrum(int N, double tau, uint64_t seed, int raw, ph_spectrum** out);
PH_API size_t ph_spectrum_size(const ph_spectrum* s);
PH_API ph_status ph_spectrum_eigenvalue(const ph_spectrum* s, size_t i, ph_complex* out);
PH_API void ph_spectrum_free(ph_spectrum* s);
/* Summary JSON with per-seed and pooled statistics. */
PH_API ph_status ph_sample_summary_json(const ph_spectrum* const* spectra, size_t count, const char* command,
                                        int timestamp, char** out);

/* Verification suites. */
typedef struct ph_verify_options {
  double tau;
  int max_degree;
  int n_q;
  uint64_t seed;
  int trials;
} ph_verify_options;
PH_API ph_verify_options ph_verify_options_default(void);
/* Runs a suite ("all" for every suite) and writes the JSON report. *all_pass
 * is 1 when every check passed. */
PH_API ph_status ph_verify(const char* suite, const ph_verify_options* options, const char* command, int timestamp,
                           char** report, int* all_pass);
/* PH_SCHEMA_INCOMPATIBLE when the report's major schema version differs. */
PH_API ph_status ph_report_check_compat(const char* report_json);

#ifdef __cplusplus
}
#endif

#endif

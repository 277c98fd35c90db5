#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "polyherm/complex_hermite.hpp"
#include "polyherm/error.hpp"
#include "polyherm/ginibre.hpp"
#include "polyherm/hermite.hpp"
#include "polyherm/hermite2d.hpp"
#include "polyherm/kernels.hpp"
#include "polyherm/parallel.hpp"
#include "polyherm/polyherm.h"
#include "polyherm/quadrature.hpp"
#include "polyherm/report.hpp"
#include "polyherm/squeezed.hpp"
#include "polyherm/verify.hpp"

struct ph_polynomial {
  polyherm::BivariatePolynomial p;
};
struct ph_grid {
  polyherm::QuadratureGrid g;
};
struct ph_spectrum {
  polyherm::SpectrumSample s;
};

namespace {

using polyherm::cplx;

thread_local std::string g_last_error;

cplx in(ph_complex z) { return {z.re, z.im}; }
ph_complex out_c(cplx z) { return {z.real(), z.imag()}; }

ph_status fail(ph_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
ph_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return PH_OK;
  } catch (const polyherm::Error& e) {
    return fail(static_cast<ph_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PH_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PH_INTERNAL, e.what());
  }
}

void need(const void* p, const char* what) {
  if (!p) throw polyherm::Error(polyherm::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* c = static_cast<char*>(std::malloc(s.size() + 1));
  if (!c) throw std::bad_alloc();
  std::memcpy(c, s.c_str(), s.size() + 1);
  return c;
}

}  // namespace

extern "C" {

const char* ph_status_name(ph_status status) {
  switch (status) {
    case PH_OK: return "Ok";
    case PH_INTERNAL: return "Internal";
    default:
      if (status >= PH_INVALID_ARGUMENT && status <= PH_IO)
        return polyherm::error_code_name(static_cast<polyherm::ErrorCode>(status));
      return "Unknown";
  }
}

const char* ph_last_error_message(void) { return g_last_error.c_str(); }

void ph_string_free(char* s) { std::free(s); }

const char* ph_report_schema_version(void) { return polyherm::report_schema_version(); }

const char* ph_rng_name(void) { return polyherm::Philox::kName; }

ph_status ph_set_max_threads(int n) {
  return guarded([&] {
    if (n < 0) throw polyherm::Error(polyherm::ErrorCode::InvalidArgument, "thread count must be >= 0");
    polyherm::set_max_threads(n);
  });
}

ph_status ph_family_from_name(const char* name, ph_family* out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    static const std::pair<const char*, ph_family> names[] = {
        {"hermite", PH_FAMILY_HERMITE}, {"rescaled", PH_FAMILY_RESCALED},   {"laguerre", PH_FAMILY_LAGUERRE},
        {"complex", PH_FAMILY_COMPLEX}, {"phi", PH_FAMILY_PHI},             {"squeezed", PH_FAMILY_SQUEEZED},
        {"squeezed2d", PH_FAMILY_SQUEEZED_2D}};
    for (const auto& [n, f] : names)
      if (std::strcmp(n, name) == 0) {
        *out = f;
        return;
      }
    throw polyherm::Error(polyherm::ErrorCode::InvalidArgument, std::string("unknown family '") + name + "'");
  });
}

ph_status ph_eval(ph_family family, int m, int n, double tau, double alpha, ph_complex z, ph_complex* out) {
  return guarded([&] {
    using namespace polyherm;
    need(out, "out");
    const ComplexPoint p(in(z));
    cplx v;
    switch (family) {
      case PH_FAMILY_HERMITE: v = hermite_real(m, p); break;
      case PH_FAMILY_RESCALED: v = hermite_rescaled(m, p, tau); break;
      case PH_FAMILY_LAGUERRE: v = laguerre(m, alpha, p); break;
      case PH_FAMILY_COMPLEX: v = complex_hermite(m, n)(p); break;
      case PH_FAMILY_PHI: v = phi_normalized(m, n, p); break;
      case PH_FAMILY_SQUEEZED:
        require_tau_half_open(tau);
        v = squeezed_hermite_value(m, n, tau, p);
        break;
      case PH_FAMILY_SQUEEZED_2D: v = squeezed_via_hermite2d(m, n, tau)(p); break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown family");
    }
    *out = out_c(v);
  });
}

ph_status ph_polynomial_complex_hermite(int m, int n, ph_polynomial** out) {
  return guarded([&] {
    need(out, "out");
    *out = new ph_polynomial{polyherm::complex_hermite(m, n)};
  });
}

ph_status ph_polynomial_squeezed(int m, int n, double tau, ph_polynomial** out) {
  return guarded([&] {
    need(out, "out");
    *out = new ph_polynomial{polyherm::squeezed_hermite(m, n, tau)};
  });
}

ph_status ph_polynomial_eval(const ph_polynomial* p, ph_complex z, ph_complex* out) {
  return guarded([&] {
    need(p, "polynomial");
    need(out, "out");
    *out = out_c(p->p(polyherm::ComplexPoint(in(z))));
  });
}

ph_status ph_polynomial_coeff(const ph_polynomial* p, int a, int b, ph_complex* out) {
  return guarded([&] {
    need(p, "polynomial");
    need(out, "out");
    *out = out_c(p->p.coeff(a, b));
  });
}

ph_status ph_polynomial_degrees(const ph_polynomial* p, int* deg_z, int* deg_zbar) {
  return guarded([&] {
    need(p, "polynomial");
    if (deg_z) *deg_z = p->p.deg_z();
    if (deg_zbar) *deg_zbar = p->p.deg_zbar();
  });
}

ph_status ph_polynomial_to_json(const ph_polynomial* p, char** out) {
  return guarded([&] {
    need(p, "polynomial");
    need(out, "out");
    *out = dup(p->p.to_json());
  });
}

void ph_polynomial_free(ph_polynomial* p) { delete p; }

ph_status ph_kernel_closed(double tau, int n, ph_complex z, ph_complex w, ph_complex* out) {
  return guarded([&] {
    need(out, "out");
    *out = out_c(polyherm::kernel_w_closed({tau, n}, in(z), in(w)));
  });
}

ph_status ph_kernel_series(double tau, int n, ph_complex z, ph_complex w, int K, ph_complex* out, double* last_term,
                           int* terms) {
  return guarded([&] {
    need(out, "out");
    const polyherm::KernelSpec spec{tau, n};
    const auto s = K == 0 ? polyherm::kernel_w_series_auto(spec, in(z), in(w))
                          : polyherm::kernel_w_series(spec, in(z), in(w), K);
    *out = out_c(s.value);
    if (last_term) *last_term = s.last_term;
    if (terms) *terms = s.terms;
  });
}

ph_status ph_kernel_landau(int n, ph_complex z, ph_complex w, ph_complex* out) {
  return guarded([&] {
    need(out, "out");
    *out = out_c(polyherm::kernel_k_landau(n, in(z), in(w)));
  });
}

ph_status ph_grid_create(int n_q, double tau, ph_grid_kind kind, ph_grid** out) {
  return guarded([&] {
    need(out, "out");
    if (kind != PH_GRID_ELLIPTIC && kind != PH_GRID_FLAT)
      throw polyherm::Error(polyherm::ErrorCode::InvalidArgument, "unknown grid kind");
    *out = new ph_grid{kind == PH_GRID_FLAT ? polyherm::flat_grid(n_q, tau) : polyherm::quad_grid(n_q, tau)};
  });
}

size_t ph_grid_size(const ph_grid* g) { return g ? g->g.size() : 0; }

ph_status ph_grid_node(const ph_grid* g, size_t i, double* x, double* y, double* weight) {
  return guarded([&] {
    need(g, "grid");
    if (i >= g->g.size()) throw polyherm::Error(polyherm::ErrorCode::InvalidArgument, "node index out of range");
    const cplx p = g->g.node(i);
    if (x) *x = p.real();
    if (y) *y = p.imag();
    if (weight) *weight = g->g.weight(i);
  });
}

void ph_grid_free(ph_grid* g) { delete g; }

ph_status ph_sample_spectrum(int N, double tau, uint64_t seed, int raw, ph_spectrum** out) {
  return guarded([&] {
    need(out, "out");
    *out = new ph_spectrum{polyherm::sample_spectrum(N, tau, seed, raw != 0)};
  });
}

size_t ph_spectrum_size(const ph_spectrum* s) { return s ? s->s.eigenvalues.size() : 0; }

ph_status ph_spectrum_eigenvalue(const ph_spectrum* s, size_t i, ph_complex* out) {
  return guarded([&] {
    need(s, "spectrum");
    need(out, "out");
    if (i >= s->s.eigenvalues.size())
      throw polyherm::Error(polyherm::ErrorCode::InvalidArgument, "eigenvalue index out of range");
    *out = out_c(s->s.eigenvalues[i]);
  });
}

void ph_spectrum_free(ph_spectrum* s) { delete s; }

ph_status ph_sample_summary_json(const ph_spectrum* const* spectra, size_t count, const char* command, int timestamp,
                                 char** out) {
  return guarded([&] {
    need(out, "out");
    if (count) need(spectra, "spectra");
    std::vector<polyherm::SpectrumSample> v;
    for (size_t i = 0; i < count; ++i) {
      need(spectra[i], "spectrum");
      v.push_back(spectra[i]->s);
    }
    *out = dup(polyherm::sample_summary_json({command ? command : "", timestamp != 0}, v));
  });
}

ph_verify_options ph_verify_options_default(void) {
  const polyherm::VerifyOptions o;
  return {o.tau, o.max_degree, o.n_q, o.seed, o.trials};
}

ph_status ph_verify(const char* suite, const ph_verify_options* options, const char* command, int timestamp,
                    char** report, int* all_pass) {
  return guarded([&] {
    need(suite, "suite");
    need(report, "report");
    polyherm::VerifyOptions o;
    if (options) {
      o.tau = options->tau;
      o.max_degree = options->max_degree;
      o.n_q = options->n_q;
      o.seed = options->seed;
      o.trials = options->trials;
    }
    polyherm::require_tau_half_open(o.tau);
    if (o.max_degree < 0 || o.max_degree > 12)
      throw polyherm::Error(polyherm::ErrorCode::DegreeTooLarge, "max_degree must lie in [0, 12]");
    if (o.n_q < polyherm::kMinNodes || o.n_q > polyherm::kMaxNodes)
      throw polyherm::Error(polyherm::ErrorCode::NodesOutOfRange, "n_q outside [2, 256]");
    if (o.trials < 1 || o.trials > 1000)
      throw polyherm::Error(polyherm::ErrorCode::InvalidArgument, "trials must lie in [1, 1000]");
    const auto results = polyherm::run_suite(suite, o);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.pass;
    *report = dup(polyherm::verify_report_json({command ? command : "", timestamp != 0}, suite, o, results));
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

ph_status ph_report_check_compat(const char* report_json) {
  return guarded([&] {
    need(report_json, "report");
    polyherm::check_report_compatibility(report_json);
  });
}

}  // extern "C"

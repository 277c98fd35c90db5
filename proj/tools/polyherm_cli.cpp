// Command-line front end. Talks to the library only through polyherm.h.
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyherm/polyherm.h"

namespace {

constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RunError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(ph_status s) {
  if (s == PH_OK) return;
  // The library message already starts with the error name.
  const std::string detail = ph_last_error_message();
  const std::string msg = detail.empty() ? ph_status_name(s) : detail;
  switch (s) {
    case PH_INVALID_ARGUMENT:
    case PH_DEGREE_TOO_LARGE:
    case PH_TAU_OUT_OF_RANGE:
    case PH_TRUNCATION_TOO_SMALL:
    case PH_SINGULAR_R:
    case PH_NODES_OUT_OF_RANGE:
    case PH_GRID_MISMATCH:
    case PH_SIZE_OUT_OF_RANGE:
    case PH_UNKNOWN_SUITE:
      throw UsageError(msg);
    default:
      throw RunError(msg);
  }
}

// Shortest text that reads back to the same double, never more than 17
// significant digits; independent of the locale.
std::string num(double x) {
  if (x != x) return "nan";
  if (x == 1.0 / 0.0) return "inf";
  if (x == -1.0 / 0.0) return "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

double parse_real(const std::string& s, const std::string& token) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = b + s.size();
  if (!s.empty() && *b == '+') ++b;
  const auto r = std::from_chars(b, e, v);
  if (b == e || r.ec != std::errc() || r.ptr != e) throw UsageError("cannot parse complex number '" + token + "'");
  return v;
}

// a+bi, a-bi, a, bi, i, -i.
ph_complex parse_complex(const std::string& token) {
  const std::string t = token;
  if (t.empty()) throw UsageError("cannot parse complex number ''");
  if (t.back() != 'i') return {parse_real(t, token), 0.0};
  const std::string body = t.substr(0, t.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re, token), parse_real(im, token)};
}

struct Shared {
  double tau = 0.5;
  int quad = 64;
  int max_degree = 8;
  std::string out;
  std::string format;
  std::uint64_t seed = 1;
  int trials = 20;
  int threads = 0;
  bool no_timestamp = false;
};

void add_shared(CLI::App* cmd, Shared& s) {
  cmd->add_option("--tau", s.tau, "non-Hermiticity parameter");
  cmd->add_option("--quad", s.quad, "quadrature nodes per axis");
  cmd->add_option("--max-degree", s.max_degree, "degree bound for verification sweeps");
  cmd->add_option("--out", s.out, "output file (default: standard output)");
  cmd->add_option("--format", s.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", s.seed, "base seed");
  cmd->add_option("--trials", s.trials, "number of seeds");
  cmd->add_option("--threads", s.threads, "worker cap, 0 = available parallelism")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--no-timestamp", s.no_timestamp, "omit the timestamp and timings from reports");
}

void emit(const Shared& s, const std::string& text) {
  if (s.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(s.out, std::ios::binary);
  if (!f) throw RunError("Io: cannot open '" + s.out + "' for writing");
  f << text;
  if (!f) throw RunError("Io: write to '" + s.out + "' failed");
}

struct CString {
  char* p = nullptr;
  ~CString() { ph_string_free(p); }
};

nlohmann::ordered_json cjson(ph_complex z) { return {{"re", z.re}, {"im", z.im}}; }

// ---- eval

struct EvalArgs {
  std::string family = "squeezed";
  int m = 0;
  int n = 0;
  double alpha = 0.0;
  std::vector<std::string> z;
};

int run_eval(const Shared& s, const EvalArgs& a) {
  ph_family fam;
  check(ph_family_from_name(a.family.c_str(), &fam));
  const auto zs = a.z.empty() ? std::vector<std::string>{"0"} : a.z;
  const std::string fmt = s.format.empty() ? "json" : s.format;
  std::ostringstream os;
  auto records = nlohmann::ordered_json::array();
  if (fmt == "csv") os << "family,m,n,tau,z_re,z_im,value_re,value_im\n";
  for (const auto& tok : zs) {
    const ph_complex z = parse_complex(tok);
    ph_complex v;
    check(ph_eval(fam, a.m, a.n, s.tau, a.alpha, z, &v));
    if (fmt == "csv") {
      os << a.family << ',' << a.m << ',' << a.n << ',' << num(s.tau) << ',' << num(z.re) << ',' << num(z.im) << ','
         << num(v.re) << ',' << num(v.im) << '\n';
    } else {
      nlohmann::ordered_json r;
      r["family"] = a.family;
      r["m"] = a.m;
      r["n"] = a.n;
      r["tau"] = s.tau;
      if (fam == PH_FAMILY_LAGUERRE) r["alpha"] = a.alpha;
      r["z"] = cjson(z);
      r["value"] = cjson(v);
      records.push_back(std::move(r));
    }
  }
  if (fmt == "json") os << (records.size() == 1 ? records[0] : records).dump(2) << '\n';
  emit(s, os.str());
  return 0;
}

// ---- verify

int run_verify(const Shared& s, const std::string& suite, const std::string& command) {
  if (!s.format.empty() && s.format != "json") throw UsageError("verify writes JSON only");
  ph_verify_options o = ph_verify_options_default();
  o.tau = s.tau;
  o.max_degree = s.max_degree;
  o.n_q = s.quad;
  o.seed = s.seed;
  o.trials = s.trials;
  CString report;
  int ok = 0;
  check(ph_verify(suite.c_str(), &o, command.c_str(), s.no_timestamp ? 0 : 1, &report.p, &ok));
  emit(s, report.p);
  if (ok) return 0;
  const auto j = nlohmann::json::parse(report.p);
  for (const auto& id : j["summary"]["failed_checks"]) std::cerr << "FAILED " << id.get<std::string>() << '\n';
  return kExitSuiteFailure;
}

// ---- kernel

struct KernelArgs {
  int n = 0;
  int K = 0;
  std::vector<std::string> z;
  std::vector<std::string> w;
};

int run_kernel(const Shared& s, const KernelArgs& a) {
  const std::vector<std::string> defaults = {"0", "0.5+0.5i", "-1+0.25i", "0.3-0.8i"};
  const auto zs = a.z.empty() ? defaults : a.z;
  const auto ws = a.w.empty() ? defaults : a.w;
  const std::string fmt = s.format.empty() ? "csv" : s.format;
  std::ostringstream os;
  auto rows = nlohmann::ordered_json::array();
  if (fmt == "csv") os << "z_re,z_im,w_re,w_im,closed_re,closed_im,series_re,series_im,ratio_re,ratio_im\n";
  for (const auto& zt : zs)
    for (const auto& wt : ws) {
      const ph_complex z = parse_complex(zt);
      const ph_complex w = parse_complex(wt);
      ph_complex closed, series;
      double last = 0.0;
      int terms = 0;
      check(ph_kernel_closed(s.tau, a.n, z, w, &closed));
      check(ph_kernel_series(s.tau, a.n, z, w, a.K, &series, &last, &terms));
      const double den = series.re * series.re + series.im * series.im;
      const ph_complex ratio{(closed.re * series.re + closed.im * series.im) / den,
                             (closed.im * series.re - closed.re * series.im) / den};
      if (fmt == "csv") {
        os << num(z.re) << ',' << num(z.im) << ',' << num(w.re) << ',' << num(w.im) << ',' << num(closed.re) << ','
           << num(closed.im) << ',' << num(series.re) << ',' << num(series.im) << ',' << num(ratio.re) << ','
           << num(ratio.im) << '\n';
      } else {
        rows.push_back({{"z", cjson(z)},
                        {"w", cjson(w)},
                        {"closed", cjson(closed)},
                        {"series", cjson(series)},
                        {"ratio", cjson(ratio)},
                        {"series_terms", terms},
                        {"series_last_term", last}});
      }
    }
  if (fmt == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = ph_report_schema_version();
    j["command"] = "kernel";
    j["tau"] = s.tau;
    j["n"] = a.n;
    j["rows"] = std::move(rows);
    os << j.dump(2) << '\n';
  }
  emit(s, os.str());
  return 0;
}

// ---- sample

struct SampleArgs {
  int N = 64;
  bool raw = false;
  std::string summary;
};

int run_sample(const Shared& s, const SampleArgs& a, const std::string& command) {
  if (s.trials < 1) throw UsageError("InvalidArgument: --trials must be >= 1");
  std::vector<ph_spectrum*> spectra;
  struct Release {
    std::vector<ph_spectrum*>& v;
    ~Release() {
      for (auto* p : v) ph_spectrum_free(p);
    }
  } release{spectra};
  for (int t = 0; t < s.trials; ++t) {
    ph_spectrum* sp = nullptr;
    check(ph_sample_spectrum(a.N, s.tau, s.seed + static_cast<std::uint64_t>(t), a.raw ? 1 : 0, &sp));
    spectra.push_back(sp);
  }
  CString summary;
  check(ph_sample_summary_json(spectra.data(), spectra.size(), command.c_str(), s.no_timestamp ? 0 : 1, &summary.p));
  const std::string fmt = s.format.empty() ? "csv" : s.format;
  if (fmt == "json") {
    emit(s, summary.p);
    return 0;
  }
  std::ostringstream os;
  os << "seed,index,lambda_re,lambda_im\n";
  for (int t = 0; t < s.trials; ++t)
    for (std::size_t i = 0; i < ph_spectrum_size(spectra[t]); ++i) {
      ph_complex l;
      check(ph_spectrum_eigenvalue(spectra[t], i, &l));
      os << s.seed + static_cast<std::uint64_t>(t) << ',' << i << ',' << num(l.re) << ',' << num(l.im) << '\n';
    }
  emit(s, os.str());
  if (!a.summary.empty()) {
    std::ofstream f(a.summary, std::ios::binary);
    if (!f) throw RunError("Io: cannot open '" + a.summary + "' for writing");
    f << summary.p;
  }
  return 0;
}

// ---- grid

int run_grid(const Shared& s, const std::string& kind) {
  ph_grid* g = nullptr;
  check(ph_grid_create(s.quad, s.tau, kind == "flat" ? PH_GRID_FLAT : PH_GRID_ELLIPTIC, &g));
  std::unique_ptr<ph_grid, void (*)(ph_grid*)> hold(g, ph_grid_free);
  const std::string fmt = s.format.empty() ? "csv" : s.format;
  std::ostringstream os;
  auto nodes = nlohmann::ordered_json::array();
  if (fmt == "csv") os << "x,y,weight\n";
  for (std::size_t i = 0; i < ph_grid_size(g); ++i) {
    double x, y, w;
    check(ph_grid_node(g, i, &x, &y, &w));
    if (fmt == "csv")
      os << num(x) << ',' << num(y) << ',' << num(w) << '\n';
    else
      nodes.push_back({x, y, w});
  }
  if (fmt == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = ph_report_schema_version();
    j["command"] = "grid";
    j["kind"] = kind;
    j["tau"] = s.tau;
    j["n_q"] = s.quad;
    j["nodes"] = std::move(nodes);
    os << j.dump(2) << '\n';
  }
  emit(s, os.str());
  return 0;
}

std::string joined_args(int argc, char** argv) {
  std::string c;
  for (int i = 1; i < argc; ++i) c += (i > 1 ? " " : "") + std::string(argv[i]);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squeezed complex Hermite polynomials: evaluation, verification, kernels, sampling"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("report schema ") + ph_report_schema_version());

  Shared shared;
  EvalArgs eval;
  auto* c_eval = app.add_subcommand("eval", "evaluate a polynomial family at points");
  add_shared(c_eval, shared);
  c_eval->add_option("--family", eval.family, "hermite, rescaled, laguerre, complex, phi, squeezed, squeezed2d");
  c_eval->add_option("-m", eval.m, "first index");
  c_eval->add_option("-n", eval.n, "second index");
  c_eval->add_option("--alpha", eval.alpha, "Laguerre parameter");
  c_eval->add_option("--z", eval.z, "evaluation point(s), a+bi");

  std::string suite = "all";
  auto* c_verify = app.add_subcommand("verify", "run verification suites and write a JSON report");
  add_shared(c_verify, shared);
  c_verify->add_option("--suite", suite, "poly_core, hermite, operators, quadrature, kernels, ginibre or all");

  KernelArgs kern;
  auto* c_kernel = app.add_subcommand("kernel", "tabulate the transform kernel, closed form against series");
  add_shared(c_kernel, shared);
  c_kernel->add_option("-n", kern.n, "Landau level");
  c_kernel->add_option("--K", kern.K, "series truncation, 0 = automatic");
  c_kernel->add_option("--z", kern.z, "z point(s), a+bi");
  c_kernel->add_option("--w", kern.w, "w point(s), a+bi");

  SampleArgs samp;
  auto* c_sample = app.add_subcommand("sample", "sample elliptic random-matrix spectra");
  add_shared(c_sample, shared);
  c_sample->add_option("--N", samp.N, "matrix size");
  c_sample->add_flag("--raw", samp.raw, "omit the 1/sqrt(2) entry normalization");
  c_sample->add_option("--summary", samp.summary, "also write the summary JSON here (csv format)");

  std::string kind = "elliptic";
  auto* c_grid = app.add_subcommand("grid", "write a quadrature grid");
  add_shared(c_grid, shared);
  c_grid->add_option("--kind", kind, "elliptic or flat")->check(CLI::IsMember({"elliptic", "flat"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = joined_args(argc, argv);
  try {
    check(ph_set_max_threads(shared.threads));
    if (*c_eval) return run_eval(shared, eval);
    if (*c_verify) return run_verify(shared, suite, command);
    if (*c_kernel) return run_kernel(shared, kern);
    if (*c_sample) return run_sample(shared, samp, command);
    if (*c_grid) return run_grid(shared, kind);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSuiteFailure;
  }
  return kExitUsage;
}

#include <algorithm>

#include "polyherm/ginibre.hpp"
#include "polyherm/parallel.hpp"
#include "verify/common.hpp"

namespace polyherm::verify_detail {

namespace {

constexpr int kSpectrumSize = 256;

std::vector<SpectrumSample> spectra(int N, double tau, const VerifyOptions& opt) {
  std::vector<SpectrumSample> out(opt.trials);
  parallel_for(opt.trials, [&](int i) { out[i] = sample_spectrum(N, tau, opt.seed + i); });
  return out;
}

SpectralStats pooled(const std::vector<SpectrumSample>& ss) {
  SpectralStats p{};
  for (const auto& s : ss) {
    const auto st = spectral_stats(s);
    p.mean += st.mean;
    p.second_moment_over_N += st.second_moment_over_N;
    p.ellipse_fraction += st.ellipse_fraction;
  }
  const double k = static_cast<double>(ss.size());
  p.mean /= k;
  p.second_moment_over_N /= k;
  p.ellipse_fraction /= k;
  return p;
}

double min_ellipse(const std::vector<SpectrumSample>& ss) {
  double m = 1.0;
  for (const auto& s : ss) m = std::min(m, spectral_stats(s).ellipse_fraction);
  return m;
}

CheckResult gue_structure(const VerifyOptions& opt) {
  const auto a = sample_gue(64, opt.seed);
  const auto b = sample_gue(64, opt.seed);
  const auto c = sample_gue(64, opt.seed + 1);
  double herm = 0.0;
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) herm = std::max(herm, std::abs(a(i, j) - std::conj(a(j, i))));
  const bool ok = herm == 0.0 && a == b && !(a == c);
  return flag(ok, cat("N = 64: max |M - M^*| = ", fmt(herm), a == b ? "; same seed reproduces" : "; same seed DIFFERS",
                      a == c ? "; next seed IDENTICAL" : "; next seed differs"));
}

CheckResult gue_moment(const VerifyOptions& opt) {
  double acc = 0.0;
  std::vector<double> per(opt.trials);
  parallel_for(opt.trials, [&](int i) {
    const auto ev = eigenvalues(sample_gue(kSpectrumSize, opt.seed + i));
    double s = 0.0;
    for (const auto& l : ev) s += std::norm(l);
    per[i] = s / (double(kSpectrumSize) * kSpectrumSize);
  });
  for (double p : per) acc += p;
  acc /= opt.trials;
  return at_most(std::abs(acc - 1.0), 0.05,
                 cat("(1/N^2) sum lambda^2, N = ", kSpectrumSize, ", ", opt.trials, " seeds: ", fmt(acc)));
}

CheckResult entry_covariance(const VerifyOptions& opt) {
  const int N = 448;  // ~1e5 off-diagonal pairs
  const auto J = sample_elliptic(N, opt.tau, opt.seed);
  const auto J0 = sample_elliptic(N, 0.0, opt.seed);
  const auto J1 = sample_elliptic(64, 1.0, opt.seed);
  cplx cov = 0.0;
  double var0 = 0.0;
  long pairs = 0;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      cov += J(i, j) * J(j, i);
      var0 += std::norm(J0(i, j));
      ++pairs;
    }
  cov /= static_cast<double>(pairs);
  var0 /= static_cast<double>(pairs);
  double herm = 0.0;
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) herm = std::max(herm, std::abs(J1(i, j) - std::conj(J1(j, i))));
  Worst w;
  w.add(std::abs(cov - opt.tau), "E[J_ij J_ji] - tau");
  w.add(std::abs(var0 - 1.0), "tau = 0: E|J_ij|^2 - 1");
  auto r = at_most(w.value, 0.05, cat(pairs, " pairs: E[J_ij J_ji] = ", fmt(cov.real()), " (tau = ", fmt(opt.tau),
                                      "), tau = 0 E|J_ij|^2 = ", fmt(var0), "; tau = 1 max |J - J^*| = ", fmt(herm),
                                      "; ", worst_detail(w)));
  r.pass = r.pass && herm == 0.0;
  return r;
}

CheckResult eigen_examples(const VerifyOptions&) {
  Worst w;
  ComplexMatrix D(4, 4);
  const cplx d[4] = {{3, 1}, {-2, 0}, {0.5, -0.5}, {1, 2}};
  for (int i = 0; i < 4; ++i) D(i, i) = d[i];
  auto ev = eigenvalues(D);
  std::vector<cplx> ref(d, d + 4);
  canonical_sort(ev);
  canonical_sort(ref);
  for (int i = 0; i < 4; ++i) w.add(std::abs(ev[i] - ref[i]), "diagonal");
  ComplexMatrix C(2, 2);
  C(0, 1) = 1.0;
  C(1, 0) = 1.0;
  ev = eigenvalues(C);
  canonical_sort(ev);
  w.add(std::abs(ev[0] + 1.0), "companion of lambda^2 - 1");
  w.add(std::abs(ev[1] - 1.0), "companion of lambda^2 - 1");
  ComplexMatrix R(2, 2);
  R(0, 1) = -1.0;
  R(1, 0) = 1.0;
  ev = eigenvalues(R);
  canonical_sort(ev);
  w.add(std::abs(ev[0] - cplx(0, -1)), "rotation");
  w.add(std::abs(ev[1] - cplx(0, 1)), "rotation");
  return at_most(w.value, 1e-12, worst_detail(w));
}

CheckResult eigen_residuals(const VerifyOptions& opt) {
  struct Job {
    int N;
    std::uint64_t seed;
    double tau;
  };
  std::vector<Job> jobs;
  Probes pr(opt.seed, "ginibre.eigen_residuals");
  for (int i = 0; i < 100; ++i) {
    const int N = i < 34 ? 8 : (i < 67 ? 32 : 128);
    jobs.push_back({N, opt.seed + 1000 + i, pr.uniform(0.0, 0.95)});
  }
  std::vector<double> worst(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), [&](int i) {
    const auto M = sample_elliptic(jobs[i].N, jobs[i].tau, jobs[i].seed);
    double m = 0.0;
    for (const auto& l : eigenvalues(M)) m = std::max(m, eigen_residual(M, l));
    worst[i] = m;
  });
  Worst w;
  for (std::size_t i = 0; i < jobs.size(); ++i) w.add(worst[i], cat("N = ", jobs[i].N, ", matrix ", i));
  return at_most(w.value, 1e-8, "100 matrices, N in {8, 32, 128}; " + worst_detail(w));
}

CheckResult elliptic_moments(const VerifyOptions& opt) {
  const auto ss = spectra(kSpectrumSize, opt.tau, opt);
  const auto p = pooled(ss);
  Worst w;
  w.add(std::abs(p.second_moment_over_N - opt.tau), "mean(lambda^2)/N - tau");
  w.add(std::abs(p.mean) / std::sqrt(double(kSpectrumSize)), "|mean lambda| / sqrt(N)");
  auto r = at_most(w.value, 0.05,
                   cat("N = ", kSpectrumSize, ", tau = ", fmt(opt.tau), ", pooled over ", opt.trials,
                       " seeds: mean(lambda^2)/N = ", fmt(p.second_moment_over_N.real()), (p.second_moment_over_N.imag() < 0 ? "" : "+"),
                       fmt(p.second_moment_over_N.imag()), "i, mean = ", fmt(std::abs(p.mean)),
                       ", ellipse fraction = ", fmt(p.ellipse_fraction), " (smallest single seed ",
                       fmt(min_ellipse(ss)), "); ", worst_detail(w)));
  r.pass = r.pass && p.ellipse_fraction >= 0.99;
  return r;
}

CheckResult endpoints(const VerifyOptions& opt) {
  const auto s1 = sample_spectrum(kSpectrumSize, 1.0, opt.seed);
  double imag = 0.0;
  for (const auto& l : s1.eigenvalues) imag = std::max(imag, std::abs(l.imag()));
  const auto ss = spectra(kSpectrumSize, 0.0, opt);
  const auto p = pooled(ss);
  auto r = at_most(imag, 1e-10, cat("tau = 1: max |Im lambda| = ", fmt(imag), "; tau = 0 pooled disc fraction ",
                                    fmt(p.ellipse_fraction), " (smallest single seed ", fmt(min_ellipse(ss)),
                                    "), mean(lambda^2)/N = ", fmt(std::abs(p.second_moment_over_N))));
  r.pass = r.pass && p.ellipse_fraction >= 0.99;
  return r;
}

CheckResult stats_example(const VerifyOptions&) {
  SpectrumSample s;
  s.N = 2;
  s.tau = 0.0;
  s.eigenvalues = {1.0, -1.0};
  const auto st = spectral_stats(s);
  Worst w;
  w.add(std::abs(st.second_moment_over_N - 0.5), "mean(lambda^2)/N");
  w.add(std::abs(st.mean), "mean");
  return at_most(w.value, 1e-15, cat("{1, -1}: mean(lambda^2)/N = ", fmt(st.second_moment_over_N.real()), "; ",
                                     worst_detail(w)));
}

CheckResult determinism(const VerifyOptions& opt) {
  const int prev = max_threads();
  set_max_threads(1);
  const auto a = sample_spectrum(48, opt.tau, opt.seed);
  set_max_threads(3);
  const auto b = sample_spectrum(48, opt.tau, opt.seed);
  set_max_threads(prev);
  const auto c = sample_spectrum(48, opt.tau, opt.seed + 1);
  const bool same = a.eigenvalues == b.eigenvalues;
  const bool differs = a.eigenvalues != c.eigenvalues;
  return flag(same && differs, cat(same ? "bitwise identical spectra for one seed" : "spectra DIFFER for one seed",
                                   differs ? "; next seed differs" : "; next seed IDENTICAL"));
}

}  // namespace

void register_ginibre(std::vector<CheckDef>& out) {
  const std::string s = "ginibre";
  out.push_back({"ginibre.gue_structure", s, "GUE samples are Hermitian and seed-determined", gue_structure});
  out.push_back({"ginibre.gue_second_moment", s, "GUE (1/N^2) sum lambda^2 near 1", gue_moment});
  out.push_back({"ginibre.entry_covariance", s, "elliptic entries have E[J_ij J_ji] = tau", entry_covariance});
  out.push_back({"ginibre.eigen_examples", s, "eigensolver on hand-checkable matrices", eigen_examples});
  out.push_back({"ginibre.eigen_residuals", s, "eigenpair residuals over 100 random matrices", eigen_residuals});
  out.push_back({"ginibre.elliptic_moments", s, "elliptic spectrum moments and ellipse support", elliptic_moments});
  out.push_back({"ginibre.endpoints", s, "tau = 1 real spectrum and tau = 0 disc", endpoints});
  out.push_back({"ginibre.stats_example", s, "spectral statistics on a fixed sample", stats_example});
  out.push_back({"ginibre.determinism", s, "spectra do not depend on the thread count", determinism});
}

}  // namespace polyherm::verify_detail

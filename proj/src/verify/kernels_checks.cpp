#include "polyherm/complex_hermite.hpp"
#include "polyherm/hermite.hpp"
#include "polyherm/kernels.hpp"
#include "verify/common.hpp"

namespace polyherm::verify_detail {

namespace {

cplx limit_kernel(int n, cplx z, cplx w) {
  return std::exp(std::conj(z) * w) * ipow(z - w, n) / std::sqrt(factorial(n));
}

struct RatioStats {
  cplx mean;
  double spread;  // standard deviation / |mean|
};

RatioStats ratio_stats(const std::vector<cplx>& r) {
  cplx mean = 0.0;
  for (const auto& x : r) mean += x;
  mean /= static_cast<double>(r.size());
  double var = 0.0;
  for (const auto& x : r) var += std::norm(x - mean);
  return {mean, std::sqrt(var / r.size()) / std::abs(mean)};
}

CheckResult closed_examples(const VerifyOptions& opt) {
  Probes pr(opt.seed, "kernels.closed_examples");
  Worst w, lim;
  for (int i = 0; i < 10; ++i) {
    const cplx z = pr.disc(1.5);
    const cplx x = pr.disc(1.5);
    const double tau = pr.uniform(0.05, 0.95);
    const cplx zb = std::conj(z);
    w.add(std::abs(kernel_w_closed({tau, 0}, z, x) - std::exp(zb * x - 0.5 * tau * zb * zb)), cat("n = 0, probe ", i));
    for (int n = 0; n <= 4; ++n)
      lim.add(rel_err(kernel_w_closed({1e-7, n}, z, x), limit_kernel(n, z, x), 1.0), cat("n = ", n, ", probe ", i));
  }
  w.add(std::abs(kernel_w_closed({0.5, 1}, 1.0, 0.0) - 1.5 * std::exp(-0.25)), "(0.5, 1, 1, 0)");
  auto r = at_most(w.value, 1e-13, cat("n = 0 closed form and (0.5, 1, 1, 0): ", worst_detail(w), "; tau = 1e-7 against e^{zbar w}(z-w)^n/sqrt(n!): ",
                                       fmt(lim.value), " (bound 1e-5)"));
  r.pass = r.pass && lim.value <= 1e-5;
  return r;
}

CheckResult series_examples(const VerifyOptions& opt) {
  Worst w;
  const cplx x(0.7, -0.4);
  w.add(std::abs(kernel_w_series({opt.tau, 0}, 0.0, x, 8).value - 1.0), "n = 0, z = 0");
  bool short_throws = false;
  try {
    kernel_w_series({opt.tau, 1}, cplx(1.2, 0.3), cplx(-0.9, 0.8), 3);
  } catch (const Error& e) {
    short_throws = e.code() == ErrorCode::TruncationTooSmall;
  }
  auto r = at_most(w.value, 1e-15, cat("n = 0 at z = 0 equals 1", short_throws ? "; K = 3 rejected with TruncationTooSmall"
                                                                      : "; K = 3 NOT rejected"));
  r.pass = r.pass && short_throws;
  return r;
}

CheckResult ratio_constancy(const VerifyOptions& opt) {
  Probes pr(opt.seed, "kernels.ratio_constancy");
  std::vector<std::pair<cplx, cplx>> pts;
  for (int i = 0; i < 200; ++i) pts.emplace_back(pr.disc(1.5), pr.disc(1.5));
  Worst w;
  double amin = 1e300, amax = 0.0, argmax = 0.0;
  for (double tau : {0.2, 0.5, 0.8})
    for (int n = 0; n <= 4; ++n) {
      std::vector<cplx> r;
      for (const auto& [z, x] : pts) r.push_back(kernel_w_closed({tau, n}, z, x) / kernel_w_series_auto({tau, n}, z, x).value);
      const auto st = ratio_stats(r);
      w.add(st.spread, cat("n = ", n, ", tau = ", tau));
      amin = std::min(amin, std::abs(st.mean));
      amax = std::max(amax, std::abs(st.mean));
      argmax = std::max(argmax, std::abs(std::arg(st.mean)));
    }
  return at_most(w.value, 1e-8, cat("closed / series over 200 (z, w) with |z|, |w| <= 1.5, n <= 4, tau in {0.2, 0.5, 0.8}; ",
                                    worst_detail(w), "; measured |c_n| in [", fmt(amin), ", ", fmt(amax),
                                    "], max |arg c_n| = ", fmt(argmax)));
}

CheckResult tau0_limit(const VerifyOptions& opt) {
  Probes pr(opt.seed, "kernels.tau0_limit");
  Worst w;
  std::string consts;
  for (int n = 0; n <= 4; ++n) {
    std::vector<cplx> r;
    for (int i = 0; i < 50; ++i) {
      const cplx z = pr.disc(1.5);
      const cplx x = pr.disc(1.5);
      r.push_back(kernel_w_series_auto({0.0, n}, z, x).value / limit_kernel(n, z, x));
    }
    const auto st = ratio_stats(r);
    w.add(st.spread, cat("n = ", n));
    consts += cat(n ? ", " : "", "c_", n, " = ", fmt(st.mean.real()), (st.mean.imag() < 0 ? "-" : "+"),
                  fmt(std::abs(st.mean.imag())), "i");
  }
  return at_most(w.value, 1e-8, cat("series at tau = 0 over e^{zbar w}(z-w)^n/sqrt(n!), 50 probes; ", worst_detail(w),
                                    "; ", consts));
}

CheckResult cancellation(const VerifyOptions& opt) {
  Probes pr(opt.seed, "kernels.w_cancellation");
  Worst w;
  for (int i = 0; i < 50; ++i) {
    cplx z = pr.disc(1.5);
    if (std::abs(z) < 1e-3) z = 0.5;
    const cplx x = pr.disc(1.5);
    const double tau = pr.uniform(0.05, 0.95);
    for (int n = 1; n <= 6; ++n) w.add(w_cancellation({tau, n}, z, x), cat("n = ", n, ", probe ", i));
  }
  return at_most(w.value, 1e-10, "terms k < n of the two-form split, n <= 6, 50 probes; " + worst_detail(w));
}

CheckResult landau_reproducing(const VerifyOptions& opt) {
  Probes pr(opt.seed, "kernels.landau_reproducing");
  const auto g = quad_grid(opt.n_q, 0.0);
  Worst w, lin, ex;
  for (int i = 0; i < 5; ++i) {
    const cplx z = pr.disc(1.2);
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 6; ++m) {
        const cplx ref = phi_normalized(m, n, z);
        const cplx sq = integrate([&](cplx u) { return kernel_k_landau(n, z, u) * phi_normalized(m, n, u); }, g);
        const cplx li = integrate([&](cplx u) { return kernel_k_landau_linear(n, z, u) * phi_normalized(m, n, u); }, g);
        w.add(std::abs(sq - ref), cat("(m,n)=(", m, ",", n, "), probe ", i));
        lin.add(std::abs(li - ref), cat("(m,n)=(", m, ",", n, ")"));
      }
    const cplx x = pr.disc(1.2);
    ex.add(std::abs(kernel_k_landau(0, z, x) - std::exp(z * std::conj(x))), "n = 0");
    for (int n = 0; n <= 5; ++n) ex.add(rel_err(kernel_k_landau(n, z, z), std::exp(std::norm(z))), "z = w");
  }
  auto r = at_most(w.value, 1e-7, cat("squared-distance kernel, m <= 6, n <= 3, n_q = ", opt.n_q, "; ", worst_detail(w),
                                      "; linear-distance reading misses by ", fmt(lin.value), "; examples ",
                                      fmt(ex.value)));
  r.pass = r.pass && ex.value <= 1e-13;
  return r;
}

struct TransformSetup {
  double tau;
  QuadratureGrid grid;
  std::vector<cplx> zs;
};

TransformSetup transform_setup(const VerifyOptions& opt) {
  return {opt.tau, quad_grid(opt.n_q, opt.tau), sample_disc(120, 1.0)};
}

CheckResult transform_polyanalytic(const VerifyOptions& opt) {
  const auto S = transform_setup(opt);
  Worst w;
  double lower = 1e300;
  for (int n = 0; n <= 4; ++n)
    for (int j = 0; j <= 6; ++j) {
      const auto vals = transform_T({S.tau, n}, [&](cplx x) { return h_tau(j, x, S.tau); }, S.grid, S.zs);
      w.add(fit_polyanalytic(S.zs, vals, 8, n).relative_residual, cat("n = ", n, ", h_", j));
      if (n > 0) {
        lower = std::min(lower, fit_polyanalytic(S.zs, vals, 8, n - 1).relative_residual);
      }
    }
  return at_most(w.value, 1e-7, cat("fit by z^a zbar^b, a <= 8, b <= n, on 120 points of |z| <= 1; ", worst_detail(w),
                                    "; with b <= n - 1 the smallest residual is ", fmt(lower)));
}

CheckResult transform_linearity(const VerifyOptions& opt) {
  const auto S = transform_setup(opt);
  const KernelSpec spec{S.tau, 2};
  const cplx alpha(0.7, -1.3);
  auto f = [&](cplx x) { return h_tau(3, x, S.tau) + x * std::conj(x); };
  auto g = [&](cplx x) { return std::exp(0.3 * x) - 0.5; };
  const auto a = transform_T(spec, [&](cplx x) { return alpha * f(x) + g(x); }, S.grid, S.zs);
  const auto b = transform_T(spec, f, S.grid, S.zs);
  const auto c = transform_T(spec, g, S.grid, S.zs);
  Worst w;
  for (std::size_t i = 0; i < a.size(); ++i) w.add(rel_err(a[i], alpha * b[i] + c[i], 1.0), cat("point ", i));
  return at_most(w.value, 1e-12, "T[alpha f + g] = alpha T[f] + T[g] at 120 points; " + worst_detail(w));
}

CheckResult transform_proportionality(const VerifyOptions& opt) {
  const auto S = transform_setup(opt);
  Worst w;
  double cmin = 1e300, cmax = 0.0;
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 6; ++k) {
      const auto vals = transform_T({S.tau, n}, [&](cplx x) { return h_tau(k, x, S.tau); }, S.grid, S.zs);
      std::vector<cplx> r;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        const cplx p = phi_normalized(k, n, S.zs[i]);
        if (std::abs(p) > 1e-3) r.push_back(vals[i] / p);
      }
      const auto st = ratio_stats(r);
      w.add(st.spread, cat("n = ", n, ", k = ", k));
      cmin = std::min(cmin, std::abs(st.mean));
      cmax = std::max(cmax, std::abs(st.mean));
    }
  return at_most(w.value, 1e-9, cat("T[h_{tau,k}] / phi_{k,n}, k <= 6, n <= 4; ", worst_detail(w),
                                    "; measured constants in [", fmt(cmin), ", ", fmt(cmax), "], sqrt(1-tau^2) = ",
                                    fmt(std::sqrt(1.0 - S.tau * S.tau))));
}

CheckResult transform_tau0(const VerifyOptions& opt) {
  const double tau = 1e-7;
  const auto g = quad_grid(opt.n_q, tau);
  const auto zs = sample_disc(60, 1.0);
  Worst w;
  std::string consts;
  for (int k = 0; k <= 5; ++k) {
    const auto vals = transform_T({tau, 0}, [&](cplx x) { return ipow(x, k); }, g, zs);
    std::vector<cplx> r;
    for (std::size_t i = 0; i < zs.size(); ++i)
      if (std::abs(zs[i]) >= 0.5) r.push_back(vals[i] / ipow(zs[i], k));
    const auto st = ratio_stats(r);
    w.add(st.spread, cat("k = ", k));
    consts += cat(k ? " " : "", fmt(std::abs(st.mean)));
  }
  return at_most(w.value, 1e-4, cat("n = 0, tau = 1e-7: T[z^k] / z^k, k <= 5, 0.5 <= |z| <= 1; ", worst_detail(w),
                                    "; measured |constants| ", consts));
}

CheckResult squeeze_identity(const VerifyOptions& opt) {
  Probes pr(opt.seed, "kernels.squeeze_identity");
  Worst w;
  for (int i = 0; i < 20; ++i) {
    const cplx z = pr.disc(1.0);
    const cplx x = pr.disc(1.0);
    for (int n = 0; n <= 3; ++n) {
      w.add(squeeze_identity_residual({0.4, n}, z, x, 40), cat("tau = 0.4, n = ", n, ", probe ", i));
      w.add(squeeze_identity_residual({1e-6, n}, z, x, 40), cat("tau = 1e-6, n = ", n, ", probe ", i));
    }
  }
  const double origin = squeeze_identity_residual({0.4, 0}, 0.0, cplx(0.3, 0.2), 40);
  auto r = at_most(w.value, 1e-8, cat("20 probes with |z|, |w| <= 1, n <= 3, K = 40; ", worst_detail(w),
                                      "; n = 0, z = 0: ", fmt(origin)));
  r.pass = r.pass && origin <= 1e-12;
  return r;
}

CheckResult tpcs(const VerifyOptions& opt) {
  Probes pr(opt.seed, "kernels.tpcs_identity");
  Worst w, ab, lim;
  for (int i = 0; i < 100; ++i) {
    const cplx z = pr.disc(1.5);
    const cplx x = pr.disc(1.5);
    const double tau = pr.uniform(0.01, 0.99);
    w.add(std::abs(tpcs_kernel(tau, z, x) - tpcs_reference(tau, z, x)), cat("probe ", i));
    const auto [a, b] = tpcs_ab(tau);
    ab.add(std::abs(a * a - b * b - 1.0), cat("tau = ", tau));
    lim.add(std::abs(tpcs_kernel(1e-9, z, x) -
                     std::exp(std::conj(z) * x - 0.5 * std::norm(z) - 0.5 * std::norm(x))),
            cat("probe ", i));
  }
  auto r = at_most(w.value, 1e-12, cat("100 random (z, w, tau): ", worst_detail(w), "; a^2 - b^2 - 1: ", fmt(ab.value),
                                       "; tau = 1e-9 limit: ", fmt(lim.value)));
  r.pass = r.pass && ab.value <= 1e-14 && lim.value <= 1e-8;
  return r;
}

}  // namespace

void register_kernels(std::vector<CheckDef>& out) {
  const std::string s = "kernels";
  out.push_back({"kernels.closed_examples", s, "closed-form kernel examples and tau -> 0 behaviour", closed_examples});
  out.push_back({"kernels.series_examples", s, "series kernel examples and truncation guard", series_examples});
  out.push_back({"kernels.ratio_constancy", s, "closed / series is one constant per (tau, n)", ratio_constancy});
  out.push_back({"kernels.tau0_limit", s, "tau = 0 series against the holomorphic-shift kernel", tau0_limit});
  out.push_back({"kernels.w_cancellation", s, "finite part of the split series vanishes", cancellation});
  out.push_back({"kernels.landau_reproducing", s, "K_n reproduces phi_{m,n} under omega_0", landau_reproducing});
  out.push_back({"kernels.transform_polyanalytic", s, "transform images have zbar-degree n", transform_polyanalytic});
  out.push_back({"kernels.transform_linearity", s, "transform is linear", transform_linearity});
  out.push_back({"kernels.transform_proportionality", s, "T[h_{tau,k}] is proportional to phi_{k,n}",
                 transform_proportionality});
  out.push_back({"kernels.transform_tau0", s, "n = 0 transform near tau = 0 acts as a multiple of the identity",
                 transform_tau0});
  out.push_back({"kernels.squeeze_identity", s, "kernel as squeeze-operator image of monomials", squeeze_identity});
  out.push_back({"kernels.tpcs_identity", s, "two-photon coherent state kernel", tpcs});
}

}  // namespace polyherm::verify_detail

#include "polyherm/hermite.hpp"
#include "polyherm/kernels.hpp"
#include "polyherm/parallel.hpp"
#include "polyherm/quadrature.hpp"
#include "polyherm/squeezed.hpp"
#include "verify/common.hpp"

namespace polyherm::verify_detail {

namespace {

CheckResult rule_exactness(const VerifyOptions&) {
  Worst exact, sym, flat;
  bool positive = true;
  for (int n_q : {2, 3, 5, 8, 16, 32, 64, 128, 256}) {
    const auto rule = gauss_hermite_rule(n_q);
    for (int k = 0; 2 * k + 1 <= 2 * n_q - 1 && k <= 60; ++k) {
      std::vector<double> t(n_q);
      for (int i = 0; i < n_q; ++i) t[i] = rule.weights[i] * std::pow(rule.nodes[i], 2 * k);
      const double ref = std::tgamma(k + 0.5);
      exact.add(std::abs(pairwise_sum(std::span<const double>(t)) - ref) / ref, cat("n_q = ", n_q, ", k = ", k));
    }
    for (int i = 0; i < n_q; ++i) {
      positive = positive && rule.weights[i] > 0.0 && rule.flat_weights[i] > 0.0;
      sym.add(std::abs(rule.nodes[i] + rule.nodes[n_q - 1 - i]), cat("n_q = ", n_q));
      const double x = rule.nodes[i];
      if (x * x < 600.0)
        flat.add(std::abs(rule.flat_weights[i] - rule.weights[i] * std::exp(x * x)) / rule.flat_weights[i],
                 cat("n_q = ", n_q, ", node ", i));
    }
  }
  auto r = at_most(exact.value, 1e-12,
                   cat("e^{-t^2} t^{2k} moments, 2k+1 <= 2 n_q - 1 (k <= 60), n_q in {2,...,256}: ", worst_detail(exact),
                       "; node symmetry ", fmt(sym.value), "; flat weights vs w e^{t^2} ", fmt(flat.value),
                       positive ? "; weights positive" : "; NONPOSITIVE WEIGHT"));
  r.pass = r.pass && positive && sym.value <= 1e-13 && flat.value <= 1e-12;
  return r;
}

CheckResult omega_examples(const VerifyOptions& opt) {
  Worst w;
  w.add(std::abs(omega_density(cplx(0.0), opt.tau) - 1.0 / kPi), "(0, tau)");
  const cplx z(0.6, -0.8);
  w.add(std::abs(omega_density(z, 0.0) - std::exp(-std::norm(z)) / kPi), "(z, 0)");
  w.add(std::abs(omega_density(cplx(1.0), 0.5) - std::exp(-2.0 / 3.0) / kPi), "(1, 0.5)");
  const double tau = opt.tau;
  const double alt = std::exp(-(std::norm(z) - tau * (z * z).real()) / (1.0 - tau * tau)) / kPi;
  w.add(std::abs(omega_density(z, tau) - alt), "complex form");
  return at_most(w.value, 1e-15, worst_detail(w));
}

CheckResult mass(const VerifyOptions& opt) {
  Worst w;
  for (double tau : {0.0, 0.3, 0.6, 0.9, opt.tau}) {
    const auto g = quad_grid(opt.n_q, tau);
    w.add(std::abs(integrate([](cplx) { return cplx(1.0); }, g) - std::sqrt(1.0 - tau * tau)), cat("tau = ", tau));
  }
  const auto g0 = quad_grid(opt.n_q, 0.0);
  w.add(std::abs(integrate([](cplx z) { return cplx(std::norm(z)); }, g0) - 1.0), "|z|^2 under omega_0");
  w.add(std::abs(inner_product([](cplx) { return cplx(1.0); }, [](cplx) { return cplx(1.0); }, 0.0, g0) - 1.0), "<1,1>");
  w.add(std::abs(inner_product([](cplx z) { return z; }, [](cplx z) { return z; }, 0.0, g0) - 1.0), "<z,z>");
  return at_most(w.value, 1e-12, cat("integral of omega_tau against sqrt(1-tau^2), n_q = ", opt.n_q, "; ", worst_detail(w)));
}

CheckResult moments(const VerifyOptions& opt) {
  Worst w;
  for (double tau : {0.0, 0.3, 0.6, 0.9}) {
    const auto g = quad_grid(opt.n_q, tau);
    for (int a = 0; a <= 10; ++a)
      for (int b = 0; a + b <= 10; ++b) {
        const cplx q = integrate([&](cplx z) { return cplx(std::pow(z.real(), 2 * a) * std::pow(z.imag(), 2 * b)); }, g);
        const double ref = std::pow(1.0 + tau, a + 0.5) * std::tgamma(a + 0.5) * std::pow(1.0 - tau, b + 0.5) *
                           std::tgamma(b + 0.5) / kPi;
        w.add(std::abs(q - ref) / ref, cat("(a,b)=(", a, ",", b, "), tau = ", tau));
      }
  }
  return at_most(w.value, 1e-11, cat("x^{2a} y^{2b}, a + b <= 10, n_q = ", opt.n_q, "; ", worst_detail(w)));
}

CheckResult refinement(const VerifyOptions& opt) {
  Worst w;
  const int nq = 32;
  const double tau = opt.tau;
  const auto g1 = quad_grid(nq, tau);
  const auto g2 = quad_grid(2 * nq, tau);
  std::vector<BivariatePolynomial> fam;
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) fam.push_back(squeezed_hermite(m, n, tau));
  auto ip = [&](const BivariatePolynomial& a, const BivariatePolynomial& b, const QuadratureGrid& g) {
    return inner_product([&](cplx z) { return a(z); }, [&](cplx z) { return b(z); }, tau, g);
  };
  std::vector<double> diag;
  for (const auto& p : fam) diag.push_back(std::abs(ip(p, p, g2)));
  for (std::size_t i = 0; i < fam.size(); i += 3)
    for (std::size_t j = 0; j < fam.size(); j += 2)
      w.add(std::abs(ip(fam[i], fam[j], g1) - ip(fam[i], fam[j], g2)) / std::sqrt(diag[i] * diag[j]),
            cat("pair (", i, ",", j, ")"));
  return at_most(w.value, 1e-11, cat("inner products of H_{m,n}(.;tau), m, n <= 6, n_q = ", nq, " vs ", 2 * nq,
                                     ", relative to the diagonal scale; ", worst_detail(w)));
}

CheckResult rescaled_orthogonality(const VerifyOptions& opt) {
  Worst w;
  for (double tau : {0.3, 0.6, opt.tau}) {
    const auto g = quad_grid(opt.n_q, tau);
    auto ip = [&](int a, int b) {
      return inner_product([&](cplx z) { return hermite_rescaled(a, z, tau); },
                           [&](cplx z) { return hermite_rescaled(b, z, tau); }, tau, g);
    };
    std::vector<double> d;
    for (int a = 0; a <= 10; ++a) d.push_back(std::abs(ip(a, a)));
    for (int a = 0; a <= 10; ++a)
      for (int b = a + 1; b <= 10; ++b)
        w.add(std::abs(ip(a, b)) / std::sqrt(d[a] * d[b]), cat("(", a, ",", b, "), tau = ", tau));
  }
  return at_most(w.value, 1e-9, "H_m(.,tau), m <= 10; " + worst_detail(w));
}

CheckResult h_gram(const VerifyOptions& opt) {
  Worst w;
  const double tau = opt.tau;
  const auto g = quad_grid(opt.n_q, tau);
  std::vector<std::vector<cplx>> vals(13);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto h = h_tau_sequence(12, g.node(i), tau);
    for (int k = 0; k <= 12; ++k) vals[k].push_back(h[k]);
  }
  auto ip = [&](int a, int b) {
    std::vector<cplx> t(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) t[i] = std::conj(vals[a][i]) * vals[b][i] * g.weight(i);
    return pairwise_sum(std::span<const cplx>(t));
  };
  std::vector<double> d;
  std::string diag;
  for (int k = 0; k <= 12; ++k) {
    d.push_back(ip(k, k).real());
    diag += cat(k ? " " : "", fmt(d.back()));
  }
  for (int a = 0; a <= 12; ++a)
    for (int b = a + 1; b <= 12; ++b)
      w.add(std::abs(ip(a, b)) / std::sqrt(d[a] * d[b]), cat("(", a, ",", b, ")"));
  return at_most(w.value, 1e-9, cat("h_{tau,k}, k <= 12, tau = ", tau, "; ", worst_detail(w),
                                    "; measured diagonals: ", diag, " (sqrt(1-tau^2) = ",
                                    fmt(std::sqrt(1.0 - tau * tau)), ")"));
}

template <class F>
bool throws_code(F&& f, ErrorCode code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

CheckResult error_paths(const VerifyOptions&) {
  const auto g = quad_grid(8, 0.3);
  const PlaneFunction one = [](cplx) { return cplx(1.0); };
  bool ok = throws_code([&] { inner_product(one, one, 0.4, g); }, ErrorCode::GridMismatch);
  ok = ok && throws_code([] { quad_grid(1, 0.0); }, ErrorCode::NodesOutOfRange);
  ok = ok && throws_code([] { quad_grid(257, 0.0); }, ErrorCode::NodesOutOfRange);
  ok = ok && throws_code([] { omega_density(cplx(0.0), 1.0); }, ErrorCode::TauOutOfRange);
  return flag(ok, "GridMismatch on a tau mismatch, NodesOutOfRange for n_q = 1 and 257, TauOutOfRange at tau = 1");
}

CheckResult partition_independence(const VerifyOptions& opt) {
  const double tau = opt.tau;
  const auto g = quad_grid(opt.n_q, tau);
  const auto p = squeezed_hermite(5, 3, tau);
  const auto q = squeezed_hermite(4, 3, tau);
  const PlaneFunction f = [&](cplx z) { return p(z); };
  const PlaneFunction h = [&](cplx z) { return q(z); };
  const int prev = max_threads();
  std::vector<cplx> results;
  for (int t : {1, 2, 3, 4, 7}) {
    set_max_threads(t);
    results.push_back(inner_product(f, h, tau, g));
  }
  set_max_threads(prev);
  double spread = 0.0;
  for (const auto& r : results) spread = std::max(spread, std::abs(r - results[0]) / std::max(std::abs(results[0]), 1.0));
  return at_most(spread, 1e-13, "inner product with 1, 2, 3, 4, 7 workers");
}

}  // namespace

void register_quadrature(std::vector<CheckDef>& out) {
  const std::string s = "quadrature";
  out.push_back({"quadrature.rule_exactness", s, "Gauss-Hermite exactness, symmetry, positivity", rule_exactness});
  out.push_back({"quadrature.omega_examples", s, "elliptic density examples", omega_examples});
  out.push_back({"quadrature.mass", s, "mass of omega_tau and second moments", mass});
  out.push_back({"quadrature.moments", s, "raw moments against closed-form Gaussian moments", moments});
  out.push_back({"quadrature.refinement", s, "doubling n_q leaves polynomial inner products unchanged", refinement});
  out.push_back({"quadrature.rescaled_orthogonality", s, "H_m(., tau) orthogonal under omega_tau",
                 rescaled_orthogonality});
  out.push_back({"quadrature.h_tau_gram", s, "Gram matrix of h_{tau,k} is diagonal", h_gram});
  out.push_back({"quadrature.error_paths", s, "grid and range errors", error_paths});
  out.push_back({"quadrature.partition_independence", s, "reductions independent of worker count",
                 partition_independence});
}

}  // namespace polyherm::verify_detail

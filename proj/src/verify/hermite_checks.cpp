#include "polyherm/complex_hermite.hpp"
#include "polyherm/hermite.hpp"
#include "polyherm/hermite2d.hpp"
#include "polyherm/quadrature.hpp"
#include "polyherm/squeezed.hpp"
#include "verify/common.hpp"

namespace polyherm::verify_detail {

namespace {

const cplx I(0.0, 1.0);

// |a - b| / max(|b|, 1): relative for values of size >= 1, absolute below.
double rel1(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1.0); }

CheckResult scalar_examples(const VerifyOptions& opt) {
  Worst w;
  w.add(std::abs(hermite_real(0, 1.7) - 1.0), "H_0(1.7)");
  w.add(std::abs(hermite_real(2, 1.0) - 2.0), "H_2(1)");
  w.add(std::abs(hermite_real(3, 0.5) + 5.0), "H_3(0.5)");
  const cplx z(0.7, -1.3);
  for (int m = 0; m <= 8; ++m) w.add(rel1(hermite_rescaled(m, z, 0.0), ipow(z, m)), cat("H_", m, "(z, 0)"));
  w.add(rel1(hermite_rescaled(2, z, opt.tau), z * z - opt.tau), "H_2(z, tau)");
  w.add(std::abs(hermite_rescaled(1, cplx(2.0, 1.0), 0.5) - cplx(2.0, 1.0)), "H_1(2+i, 0.5)");
  w.add(std::abs(laguerre(0, 0.7, cplx(1.3, 0.2)) - 1.0), "L_0");
  w.add(std::abs(laguerre(1, 0.0, 0.5) - 0.5), "L_1^(0)(0.5)");
  w.add(std::abs(laguerre(2, 1.0, 0.0) - 3.0), "L_2^(1)(0)");
  return at_most(w.value, 1e-13, worst_detail(w));
}

CheckResult explicit_sums(const VerifyOptions& opt) {
  Probes pr(opt.seed, "hermite.recurrence_vs_explicit_sum");
  Worst w;
  for (int i = 0; i < 20; ++i) {
    const cplx x = pr.disc(2.0);
    const double alpha = pr.uniform(-0.9, 3.0);
    for (int m = 0; m <= 20; ++m) {
      w.add(rel1(hermite_real(m, x), hermite_explicit_sum(m, x)),
            cat("H_", m, " at probe ", i));
      w.add(rel1(laguerre(m, alpha, x), laguerre_explicit_sum(m, alpha, x)), cat("L_", m, " at probe ", i));
    }
  }
  return at_most(w.value, 1e-9, "degrees <= 20, |x| <= 2; " + worst_detail(w));
}

CheckResult complex_vs_rodrigues(const VerifyOptions&) {
  Worst w;
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; n <= 10; ++n)
      w.add(rel_coeff_diff(complex_hermite(m, n), complex_hermite_rodrigues(m, n)), cat("(m,n)=(", m, ",", n, ")"));
  return at_most(w.value, 1e-10, "all m, n <= 10; " + worst_detail(w));
}

CheckResult complex_examples(const VerifyOptions&) {
  using P = BivariatePolynomial;
  bool ok = true;
  for (int m = 0; m <= 6; ++m) ok = ok && complex_hermite(m, 0) == P::monomial(m, 0);
  const auto h11 = P::monomial(1, 1) + cplx(-1.0);
  const auto h21 = P::monomial(2, 1) - P::monomial(1, 0, 2.0);
  ok = ok && complex_hermite(1, 1) == h11 && complex_hermite(2, 1) == h21;
  ok = ok && complex_hermite_rodrigues(0, 0) == P::constant(1.0);
  ok = ok && complex_hermite_rodrigues(1, 1) == h11 && complex_hermite_rodrigues(2, 1) == h21;
  return flag(ok, "H_{m,0} = z^m, H_{1,1} = z zbar - 1, H_{2,1} = z^2 zbar - 2z by both routes");
}

CheckResult phi_polar(const VerifyOptions& opt) {
  Probes pr(opt.seed, "hermite.phi_polar_vs_coefficients");
  Worst w;
  for (int i = 0; i < 20; ++i) {
    const cplx z = pr.disc(2.0);
    for (int m = 0; m <= 10; ++m)
      for (int n = 0; n <= 10; ++n) {
        const cplx ref = complex_hermite(m, n)(z) / std::sqrt(factorial(m) * factorial(n));
        w.add(rel1(phi_normalized(m, n, z), ref), cat("(", m, ",", n, ") probe ", i));
      }
  }
  const cplx z(0.4, -1.1);
  w.add(std::abs(phi_normalized(1, 0, z) - z), "phi_{1,0}");
  w.add(std::abs(phi_normalized(1, 1, z) - (std::norm(z) - 1.0)), "phi_{1,1}");
  w.add(std::abs(phi_normalized(2, 1, cplx(1.0)) + 1.0 / std::sqrt(2.0)), "phi_{2,1}(1)");
  return at_most(w.value, 1e-10, "m, n <= 10 at 20 points; " + worst_detail(w));
}

CheckResult squeezed_examples(const VerifyOptions& opt) {
  Probes pr(opt.seed, "hermite.squeezed_examples");
  Worst w;
  const double tau = opt.tau;
  const double c = std::sqrt(1.0 - tau * tau);
  for (int i = 0; i < 10; ++i) {
    const cplx z = pr.disc(1.5);
    for (int m = 0; m <= 8; ++m)
      w.add(rel1(squeezed_hermite(m, 0, tau)(z), hermite_rescaled(m, z, tau) / std::sqrt(factorial(m))),
            cat("(", m, ",0)"));
    w.add(rel1(squeezed_hermite(0, 1, tau)(z), (tau * z - std::conj(z)) / c), "(0,1)");
    for (int m = 0; m <= 8; ++m)
      for (int n = 0; n <= 8; ++n)
        w.add(rel1(squeezed_hermite_value(m, n, tau, z), squeezed_hermite(m, n, tau)(z)),
              cat("pointwise vs polynomial (", m, ",", n, ")"));
  }
  w.add(std::abs(squeezed_hermite(1, 1, 0.6)(1.0) - 0.3), "(1,1) at tau=0.6, z=1");
  return at_most(w.value, 1e-12, worst_detail(w));
}

CheckResult polyanalyticity(const VerifyOptions&) {
  int worst_excess = -100;
  std::string where;
  for (int t = 1; t <= 9; ++t)
    for (int m = 0; m <= 12; ++m)
      for (int n = 0; n <= 8; ++n) {
        const int excess = squeezed_hermite(m, n, 0.1 * t).deg_zbar() - n;
        if (excess > worst_excess) {
          worst_excess = excess;
          where = cat("(m,n,tau)=(", m, ",", n, ",", 0.1 * t, ")");
        }
      }
  return flag(worst_excess <= 0, cat("max deg_zbar - n = ", worst_excess, " at ", where,
                                     "; m <= 12, n <= 8, tau in {0.1,...,0.9}"));
}

CheckResult tau0_limit(const VerifyOptions& opt) {
  const int D = opt.max_degree;
  std::vector<double> errs;
  for (double tau : {1e-2, 1e-3, 1e-4}) {
    double e = 0.0;
    for (int m = 0; m <= D; ++m)
      for (int n = 0; n <= D; ++n) {
        const auto ref = ((n % 2 ? -1.0 : 1.0) / std::sqrt(factorial(m))) * complex_hermite(m, n);
        e = std::max(e, max_coeff_diff(squeezed_hermite(m, n, tau), ref) / std::max(ref.max_abs_coeff(), 1.0));
      }
    errs.push_back(e);
  }
  const double r1 = errs[1] / errs[0];
  const double r2 = errs[2] / errs[1];
  // First order convergence: each tenfold reduction of tau cuts the error tenfold.
  const double rate = std::max(std::abs(std::log10(r1) + 1.0), std::abs(std::log10(r2) + 1.0));
  auto r = at_most(rate, 0.1,
                   cat("errors ", fmt(errs[0]), ", ", fmt(errs[1]), ", ", fmt(errs[2]),
                       " at tau = 1e-2, 1e-3, 1e-4; value = max |log10(ratio) + 1|"));
  r.pass = r.pass && errs[2] <= 1e-2;
  return r;
}

CheckResult corollary_2d(const VerifyOptions& opt) {
  Probes pr(opt.seed, "hermite.corollary_2d");
  const int D = opt.max_degree;
  Worst w;
  double printed_order = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double tau = pr.uniform(0.05, 0.95);
    const cplx z = pr.disc(1.5);
    const double c = std::sqrt(1.0 - tau * tau);
    const auto R = SymMatrix2::r_tau(tau);
    const cplx xi1 = std::conj(z);
    const cplx xi2 = I * (tau * std::conj(z) - z) / c;
    for (int m = 0; m <= D; ++m)
      for (int n = 0; n <= D; ++n) {
        const cplx ref = squeezed_hermite_value(m, n, tau, z);
        const cplx pre = ipow(I, n) / std::sqrt(factorial(m));
        w.add(rel1(pre * hermite2d(R, m, n, xi1, xi2), ref), cat("(m,n)=(", m, ",", n, ") probe ", i));
        printed_order = std::max(printed_order, rel1(pre * hermite2d(R, n, m, xi1, xi2), ref));
      }
  }
  return at_most(w.value, 1e-9,
                 cat("100 random (z, tau), m, n <= ", D, "; 2D index order (m, n); the (n, m) order misses by up to ",
                     fmt(printed_order), "; ", worst_detail(w)));
}

CheckResult conjugation_symmetry(const VerifyOptions& opt) {
  Probes pr(opt.seed, "hermite.conjugation_symmetry");
  Worst w;
  for (int i = 0; i < 20; ++i) {
    const double tau = pr.uniform(0.05, 0.95);
    const cplx z = pr.disc(1.5);
    for (int m = 0; m <= 8; ++m)
      for (int n = 0; n <= 8; ++n) {
        const auto p = squeezed_hermite(m, n, tau);
        w.add(rel1(std::conj(p(z)), p.eval_pair(std::conj(z), z)), cat("(", m, ",", n, ") probe ", i));
      }
  }
  return at_most(w.value, 1e-10, worst_detail(w));
}

CheckResult taylor_shift(const VerifyOptions& opt) {
  Probes pr(opt.seed, "hermite.taylor_shift");
  Worst w;
  for (int i = 0; i < 50; ++i) {
    const cplx u = pr.disc(1.5);
    const cplx t = pr.disc(1.5);
    for (int n = 0; n <= 12; ++n) {
      cplx s = 0.0;
      for (int j = 0; j <= n; ++j) s += binomial(n, j) * ipow(2.0 * u, n - j) * hermite_real(j, t);
      w.add(rel1(s, hermite_real(n, u + t)), cat("n=", n, " probe ", i));
    }
  }
  return at_most(w.value, 1e-10, "n <= 12, |u|, |t| <= 1.5; " + worst_detail(w));
}

CheckResult laguerre_identity(const VerifyOptions& opt) {
  Probes pr(opt.seed, "hermite.laguerre_index_identity");
  Worst w;
  for (int i = 0; i < 20; ++i) {
    const cplx t = pr.disc(3.0);
    for (int j = 1; j <= 10; ++j)
      for (int s = 1; s <= j; ++s) {
        const cplx rhs = factorial(j - s) / factorial(j) * ipow(-t, s) * laguerre(j - s, s, t);
        w.add(rel1(laguerre(j, -s, t), rhs), cat("(j,s)=(", j, ",", s, ") probe ", i));
      }
  }
  const cplx t(0.8, 0.3);
  w.add(rel1(laguerre(2, -1, t), t * t / 2.0 - t), "hand case j=2, s=1");
  return at_most(w.value, 1e-9, "1 <= s <= j <= 10, |t| <= 3; " + worst_detail(w));
}

CheckResult hermite_sum(const VerifyOptions& opt) {
  Probes pr(opt.seed, "hermite.hermite_sum");
  Worst w;
  for (int i = 0; i < 20; ++i) {
    const cplx a = pr.disc(0.5);
    const cplx x = pr.disc(1.5);
    for (int p = 0; p <= 6; ++p) {
      cplx s = 0.0;
      cplx apow = 1.0;  // a^m / m!
      for (int m = 0; m <= 100; ++m) {
        s += apow * hermite_real(m + p, x);
        apow *= a / (m + 1.0);
      }
      w.add(rel1(s, std::exp(2.0 * a * x - a * a) * hermite_real(p, x - a)), cat("p=", p, " probe ", i));
    }
  }
  return at_most(w.value, 1e-9, "|a| <= 0.5, p <= 6, 101 terms; " + worst_detail(w));
}

CheckResult genfun_squeezed(const VerifyOptions& opt) {
  Probes pr(opt.seed, "hermite.genfun_squeezed");
  Worst w;
  w.add(genfun_residual(0.0, 0.0, cplx(0.3, 0.2), opt.tau, 24), "u = v = 0");
  w.add(genfun_residual(0.2, 0.1, cplx(1.0, 0.5), 0.4, 24), "documented probe");
  for (int i = 0; i < 20; ++i) {
    const cplx u = pr.disc(0.3);
    const cplx v = pr.disc(0.3);
    const cplx z = pr.disc(1.5);
    const double tau = pr.uniform(0.05, 0.95);
    w.add(genfun_residual(u, v, z, tau, 24), cat("probe ", i));
  }
  return at_most(w.value, 1e-10, "20 probes, |u|, |v| <= 0.3, K = 24; " + worst_detail(w));
}

CheckResult genfun_tau0(const VerifyOptions& opt) {
  Probes pr(opt.seed, "hermite.genfun_tau0");
  Worst w;
  for (int i = 0; i < 20; ++i) {
    const cplx u = pr.disc(0.3);
    const cplx v = pr.disc(0.3);
    const cplx z = pr.disc(1.5);
    w.add(genfun_residual_tau0(u, v, z, 24), cat("probe ", i));
  }
  return at_most(w.value, 1e-10, "20 probes, |u|, |v| <= 0.3, K = 24; " + worst_detail(w));
}

CheckResult hermite2d_vs_genfun(const VerifyOptions& opt) {
  Probes pr(opt.seed, "hermite.hermite2d_vs_genfun");
  Worst w;
  for (int i = 0; i < 50; ++i) {
    SymMatrix2 R{std::polar(pr.uniform(0.5, 1.5), pr.uniform(-3.0, 3.0)), pr.disc(1.0),
                 std::polar(pr.uniform(0.5, 1.5), pr.uniform(-3.0, 3.0))};
    const cplx x1 = pr.disc(1.0);
    const cplx x2 = pr.disc(1.0);
    const int n = pr.integer(0, 6);
    const int m = pr.integer(0, 6);
    w.add(rel1(hermite2d(R, n, m, x1, x2), hermite2d_genfun(R, n, m, x1, x2, n + m)),
          cat("(n,m)=(", n, ",", m, ") probe ", i));
  }
  return at_most(w.value, 1e-9, "50 random (R, xi, n, m <= 6); " + worst_detail(w));
}

CheckResult hermite2d_examples(const VerifyOptions&) {
  Worst w;
  const SymMatrix2 R{cplx(0.8, 0.3), cplx(-0.2, 0.5), cplx(1.1, -0.4)};
  const cplx x1(0.3, -0.7), x2(-1.2, 0.4);
  w.add(std::abs(hermite2d(R, 0, 0, x1, x2) - 1.0), "(0,0)");
  w.add(std::abs(hermite2d(R, 0, 1, x1, x2) - (R.r12 * x1 + R.r22 * x2)), "(0,1)");
  w.add(std::abs(hermite2d_genfun(R, 0, 0, x1, x2, 1) - 1.0), "genfun (0,0)");
  w.add(std::abs(hermite2d_genfun(R, 1, 0, x1, x2, 1) - (R.r11 * x1 + R.r12 * x2)), "genfun (1,0)");
  for (double tau : {0.1, 0.5, 0.9}) w.add(std::abs(SymMatrix2::r_tau(tau).det() - 1.0), cat("det R_tau at ", tau));
  const double tau = 0.6;
  const cplx z = 1.0;
  w.add(std::abs(hermite2d(SymMatrix2::r_tau(tau), 1, 1, std::conj(z), I * (tau * std::conj(z) - z) / 0.8) -
                 cplx(0.0, -0.3)),
        "R_tau(0.6), (1,1), z = 1");
  return at_most(w.value, 1e-12, worst_detail(w));
}

CheckResult negative_rodrigues(const VerifyOptions& opt) {
  const double tau = 0.5;
  double first = 0.0;
  double smallest = 1e300;
  for (int m = 1; m <= std::max(1, std::min(opt.max_degree, 6)); ++m) {
    const auto p = rodrigues_elliptic_candidate(m, 0, tau);
    double zbar_part = 0.0;
    for (const auto& [e, c] : p.terms())
      if (e.b > 0) zbar_part = std::max(zbar_part, std::abs(c));
    if (m == 1) first = zbar_part;
    smallest = std::min(smallest, zbar_part);
  }
  return at_least(smallest, 1e-6,
                  cat("largest zbar coefficient of the elliptic Rodrigues candidate at n = 0, tau = 0.5: ", fmt(first),
                      " for m = 1; value = minimum over m = 1..", std::max(1, std::min(opt.max_degree, 6)),
                      " (nonzero means not holomorphic)"));
}

CheckResult negative_substitution(const VerifyOptions& opt) {
  const double tau = 0.5;
  const auto grid = quad_grid(opt.n_q, tau);
  const int M = 4;
  struct Member {
    int m, n;
    BivariatePolynomial cand, sq;
  };
  std::vector<Member> fam;
  for (int n = 0; n <= 1; ++n)
    for (int m = 0; m <= M; ++m) fam.push_back({m, n, substitution_candidate(m, n, tau), squeezed_hermite(m, n, tau)});
  auto gram = [&](const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return inner_product([&](cplx z) { return a(z); }, [&](cplx z) { return b(z); }, tau, grid);
  };
  double cand_cross = 0.0, cand_within = 0.0, sq_cross = 0.0;
  std::string where;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      const auto& a = fam[i];
      const auto& b = fam[j];
      const double dc = std::sqrt(std::abs(gram(a.cand, a.cand)) * std::abs(gram(b.cand, b.cand)));
      const double ds = std::sqrt(std::abs(gram(a.sq, a.sq)) * std::abs(gram(b.sq, b.sq)));
      const double oc = std::abs(gram(a.cand, b.cand)) / dc;
      const double os = std::abs(gram(a.sq, b.sq)) / ds;
      if (a.n == b.n && a.n == 1) cand_within = std::max(cand_within, oc);
      if (a.n != b.n && oc > cand_cross) {
        cand_cross = oc;
        where = cat("<C_{", a.m, ",", a.n, "}, C_{", b.m, ",", b.n, "}>");
      }
      sq_cross = std::max(sq_cross, os);
    }
  auto r = at_least(cand_cross, 1e-3,
                    cat("substitution candidate, tau = 0.5, levels {0, 1}, m <= ", M, ": largest normalized off-diagonal ",
                        fmt(cand_cross), " at ", where, "; within level 1 it is ", fmt(cand_within),
                        "; squeezed family off-diagonal over the same index set ", fmt(sq_cross)));
  r.pass = r.pass && sq_cross <= 1e-8;
  return r;
}

}  // namespace

void register_hermite(std::vector<CheckDef>& out) {
  const std::string s = "hermite";
  out.push_back({"hermite.scalar_examples", s, "real, rescaled Hermite and Laguerre examples", scalar_examples});
  out.push_back({"hermite.recurrence_vs_explicit_sum", s, "recurrences against explicit finite sums", explicit_sums});
  out.push_back({"hermite.complex_vs_rodrigues", s, "complex Hermite expansion equals the Rodrigues route",
                 complex_vs_rodrigues});
  out.push_back({"hermite.complex_examples", s, "complex Hermite examples", complex_examples});
  out.push_back({"hermite.phi_polar_vs_coefficients", s, "polar Laguerre form of phi_{m,n}", phi_polar});
  out.push_back({"hermite.squeezed_examples", s, "squeezed Hermite examples", squeezed_examples});
  out.push_back({"hermite.polyanalyticity", s, "deg_zbar of H_{m,n}(.;tau) <= n", polyanalyticity});
  out.push_back({"hermite.tau0_limit", s, "tau -> 0 limit is (-1)^n H_{m,n}/sqrt(m!), first order", tau0_limit});
  out.push_back({"hermite.corollary_2d", s, "squeezed family through 2D-Hermite polynomials of R_tau", corollary_2d});
  out.push_back({"hermite.conjugation_symmetry", s, "conj H(z, zbar) = H(zbar, z)", conjugation_symmetry});
  out.push_back({"hermite.taylor_shift", s, "Hermite Taylor shift", taylor_shift});
  out.push_back({"hermite.laguerre_index_identity", s, "Laguerre negative-index identity", laguerre_identity});
  out.push_back({"hermite.hermite_sum", s, "Hermite shifted-index summation", hermite_sum});
  out.push_back({"hermite.genfun_squeezed", s, "generating function of the squeezed family", genfun_squeezed});
  out.push_back({"hermite.genfun_tau0", s, "tau = 0 generating function", genfun_tau0});
  out.push_back({"hermite.hermite2d_vs_genfun", s, "2D-Hermite expansion against its generating function",
                 hermite2d_vs_genfun});
  out.push_back({"hermite.hermite2d_examples", s, "2D-Hermite examples and det R_tau = 1", hermite2d_examples});
  out.push_back({"hermite.negative_rodrigues_candidate", s, "elliptic Rodrigues candidate is not holomorphic at n = 0",
                 negative_rodrigues});
  out.push_back({"hermite.negative_substitution_candidate", s,
                 "substitution candidate is not orthogonal under omega_tau", negative_substitution});
}

}  // namespace polyherm::verify_detail

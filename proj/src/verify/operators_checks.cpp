#include "polyherm/hermite.hpp"
#include "polyherm/hermite2d.hpp"
#include "polyherm/operators.hpp"
#include "polyherm/parallel.hpp"
#include "polyherm/quadrature.hpp"
#include "polyherm/squeezed.hpp"
#include "verify/common.hpp"

namespace polyherm::verify_detail {

namespace {

const std::vector<double> kLaplacianTaus = {0.1, 0.3, 0.5, 0.7, 0.9};

std::vector<cplx> values_on_grid(const PlaneFunction& f, const QuadratureGrid& grid) {
  std::vector<cplx> v(grid.size());
  parallel_for(v.size(), [&](std::size_t i) { v[i] = f(grid.node(i)); });
  return v;
}

cplx grid_pairing(const std::vector<cplx>& a, const std::vector<cplx>& b, const QuadratureGrid& grid) {
  std::vector<cplx> t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) t[i] = std::conj(a[i]) * b[i] * grid.weight(i);
  return pairwise_sum(std::span<const cplx>(t));
}

double op_distance(const LadderOperator& l, const LadderOperator& r) { return max_coeff_diff(l, r); }

CheckResult ground_annihilation(const VerifyOptions& opt) {
  Worst w;
  const auto psi0 = ground_state(0.0);
  w.add(gw_apply(make_ladder(LadderKind::A), psi0).poly.max_abs_coeff(), "A psi_0");
  w.add(gw_apply(make_ladder(LadderKind::B), psi0).poly.max_abs_coeff(), "B psi_0");
  for (double mu : {0.2, 0.8, std::atanh(opt.tau)})
    w.add(gw_apply(bogoliubov(mu).first, ground_state(mu)).poly.max_abs_coeff(), cat("B_mu psi_mu, mu = ", mu));
  return at_most(w.value, 1e-14, worst_detail(w));
}

CheckResult commutators(const VerifyOptions&) {
  const auto A = make_ladder(LadderKind::A);
  const auto As = make_ladder(LadderKind::Astar);
  const auto B = make_ladder(LadderKind::B);
  const auto Bs = make_ladder(LadderKind::Bstar);
  const auto Id = LadderOperator::identity();
  const auto Z = LadderOperator::zero();
  Worst w;
  w.add(op_distance(commutator(A, As), Id), "[A, A*] - 1");
  w.add(op_distance(commutator(B, Bs), Id), "[B, B*] - 1");
  w.add(op_distance(commutator(A, B), Z), "[A, B]");
  w.add(op_distance(commutator(A, Bs), Z), "[A, B*]");
  w.add(op_distance(commutator(As, B), Z), "[A*, B]");
  w.add(op_distance(commutator(As, Bs), Z), "[A*, B*]");
  const auto HL = make_ladder(LadderKind::HL);
  w.add(op_distance(commutator(HL, HL), Z), "[HL, HL]");
  for (double mu : {0.2, 0.8}) {
    const auto [Bm, Bms] = bogoliubov(mu);
    w.add(op_distance(commutator(Bm, Bms), Id), cat("[B_mu, B_mu*] - 1, mu = ", mu));
  }
  return at_most(w.value, 1e-14, worst_detail(w));
}

CheckResult bogoliubov_mu0(const VerifyOptions&) {
  const auto [Bm, Bms] = bogoliubov(0.0);
  const double d = std::max(op_distance(Bm, make_ladder(LadderKind::B)), op_distance(Bms, make_ladder(LadderKind::Bstar)));
  return at_most(d, 0.0, "mu = 0 gives (B, B*) exactly");
}

CheckResult ground_state_norm(const VerifyOptions& opt) {
  Worst w;
  std::string measured;
  for (double tau : {0.0, 0.3, opt.tau, 0.9}) {
    const auto psi = ground_state(std::atanh(tau));
    const auto grid = flat_grid(opt.n_q, tau);
    const double norm2 = inner_product(psi, psi, tau, grid).real();
    w.add(std::abs(norm2 * std::sqrt(1.0 - tau * tau) - 1.0), cat("tau = ", tau));
    measured += cat(" ", fmt(norm2));
  }
  return at_most(w.value, 1e-12, "squared flat norms" + measured + " against 1/sqrt(1-tau^2); " + worst_detail(w));
}

CheckResult squeezed_ground(const VerifyOptions&) {
  Worst w;
  for (double mu : {0.25, 0.7}) {
    for (int m = 0; m <= 12; ++m)
      w.add(rel_coeff_diff(squeezed_ground_ladder(m, mu).poly, squeezed_ground_closed(m, mu).poly),
            cat("m = ", m, ", mu = ", mu));
    w.add(rel_coeff_diff(squeezed_ground_ladder(1, mu).poly, BivariatePolynomial::monomial(1, 0, 1.0 / std::cosh(mu))),
          cat("m = 1 against z / cosh mu, mu = ", mu));
    w.add(rel_coeff_diff(squeezed_ground_ladder(0, mu).poly, ground_state(mu).poly), "m = 0");
  }
  return at_most(w.value, 1e-10, "m <= 12, mu in {0.25, 0.7}; " + worst_detail(w));
}

CheckResult g_closed_form_check(const VerifyOptions& opt) {
  Worst w;
  for (double tau : {0.25, 0.55, 0.9}) {
    const double mu = std::atanh(tau);
    for (int m = 0; m <= opt.max_degree; ++m)
      for (int n = 0; n <= opt.max_degree; ++n) {
        const auto lad = std::sqrt(factorial(n)) * ladder_construct(m, n, mu).poly;
        w.add(rel_coeff_diff(lad, g_closed_form(m, n, mu)), cat("(m,n)=(", m, ",", n, "), tau = ", tau));
      }
  }
  return at_most(w.value, 1e-10, cat("m, n <= ", opt.max_degree, ", mu = atanh(0.25, 0.55, 0.9); ", worst_detail(w)));
}

CheckResult three_route(const VerifyOptions& opt) {
  Worst w;
  for (double tau : {0.25, 0.55, 0.9}) {
    const double mu = std::atanh(tau);
    const double ch = std::cosh(mu);
    for (int m = 0; m <= opt.max_degree; ++m)
      for (int n = 0; n <= opt.max_degree; ++n) {
        const auto closed = squeezed_hermite(m, n, tau);
        const auto ladder = (std::sqrt(factorial(n)) * ladder_construct(m, n, mu).poly).scale_arguments(ch, ch);
        const auto twod = squeezed_via_hermite2d(m, n, tau);
        const std::string at = cat("(m,n)=(", m, ",", n, "), tau = ", tau);
        w.add(rel_coeff_diff(ladder, closed), "ladder vs closed " + at);
        w.add(rel_coeff_diff(twod, closed), "2D vs closed " + at);
        w.add(rel_coeff_diff(ladder, twod), "ladder vs 2D " + at);
      }
  }
  return at_most(w.value, 1e-9,
                 cat("closed form, ladder construction after z -> z cosh mu (times sqrt(n!)), 2D-Hermite route; m, n <= ",
                     opt.max_degree, "; ", worst_detail(w)));
}

CheckResult laplacian_examples(const VerifyOptions&) {
  bool ok = true;
  for (int m = 0; m <= 8; ++m) ok = ok && laplacian_apply(BivariatePolynomial::monomial(m, 0)).is_zero();
  ok = ok && laplacian_apply(BivariatePolynomial::zbar()) == BivariatePolynomial::zbar();
  bool tau0 = true;
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) {
      const auto h = squeezed_hermite(m, n, 0.0);
      tau0 = tau0 && rel_coeff_diff(laplacian_apply(h), static_cast<double>(n) * h) <= 1e-12;
    }
  return flag(ok && tau0, "z^m -> 0, zbar -> zbar, and H_{m,n}(.;0) -> n H_{m,n}(.;0) for m, n <= 8");
}

double worst_eigen_defect(const std::function<BivariatePolynomial(const BivariatePolynomial&, double)>& op,
                          Worst& w) {
  for (double tau : kLaplacianTaus)
    for (int m = 0; m <= 12; ++m)
      for (int n = 0; n <= 8; ++n) {
        const auto h = squeezed_hermite(m, n, tau);
        w.add(rel_coeff_diff(op(h, tau), static_cast<double>(n) * h), cat("(m,n)=(", m, ",", n, "), tau = ", tau));
      }
  return w.value;
}

CheckResult laplacian_eigen(const VerifyOptions&) {
  Worst w;
  worst_eigen_defect([](const BivariatePolynomial& p, double) { return laplacian_apply(p); }, w);
  Worst deformed;
  worst_eigen_defect([](const BivariatePolynomial& p, double tau) { return deformed_landau_apply(p, tau); }, deformed);
  return at_most(w.value, 1e-10,
                 cat("-d_z d_zbar + zbar d_zbar applied to H_{m,n}(.;tau) against n H_{m,n}(.;tau), m <= 12, n <= 8, "
                     "tau in {0.1,0.3,0.5,0.7,0.9}; ",
                     worst_detail(w), ". The transported Landau operator -(1-tau^2) d_z d_zbar + (zbar - tau z) d_zbar "
                                      "has defect ",
                     fmt(deformed.value), " on the same set"));
}

CheckResult deformed_eigen(const VerifyOptions&) {
  Worst w;
  worst_eigen_defect([](const BivariatePolynomial& p, double tau) { return deformed_landau_apply(p, tau); }, w);
  return at_most(w.value, 1e-10, "m <= 12, n <= 8, tau in {0.1,0.3,0.5,0.7,0.9}; " + worst_detail(w));
}

CheckResult ladder_identity(const VerifyOptions& opt) {
  const double mu = std::atanh(opt.tau);
  const auto A = make_ladder(LadderKind::A);
  const auto As = make_ladder(LadderKind::Astar);
  const auto HL = make_ladder(LadderKind::HL);
  Worst w;
  for (int m = 0; m <= 6; ++m) {
    const auto f = squeezed_ground_ladder(m, mu);
    for (int n = 1; n <= 4; ++n) {
      WeightedFunction lhs = f;
      for (int i = 0; i < n; ++i) lhs = gw_apply(As, lhs);
      for (int i = 0; i < n; ++i) lhs = gw_apply(A, lhs);
      LadderOperator prod = LadderOperator::identity();
      for (int k = 1; k <= n; ++k) prod = (HL + static_cast<double>(k) * LadderOperator::identity()) * prod;
      const auto rhs = gw_apply(prod, f);
      w.add(rel_coeff_diff(lhs.poly, rhs.poly), cat("m = ", m, ", n = ", n));
    }
  }
  return at_most(w.value, 1e-9, "A^n (A*)^n f = prod_{k<=n} (H_L + k) f, f = psi_m^(0), m <= 6, n <= 4; " +
                                    worst_detail(w));
}

CheckResult gram_invariance(const VerifyOptions& opt) {
  Worst rel, off;
  std::string diagonals;
  const int M = 6;
  for (double tau : {0.3, 0.6}) {
    const double mu = std::atanh(tau);
    const auto grid = flat_grid(opt.n_q, tau);
    std::vector<std::vector<cplx>> g0;
    for (int n = 0; n <= 4; ++n) {
      std::vector<std::vector<cplx>> vals;
      for (int m = 0; m <= M; ++m) {
        const auto f = ladder_construct(m, n, mu);
        vals.push_back(values_on_grid([&](cplx z) { return f(z); }, grid));
      }
      std::vector<std::vector<cplx>> g(M + 1, std::vector<cplx>(M + 1));
      for (int a = 0; a <= M; ++a)
        for (int b = 0; b <= M; ++b) g[a][b] = grid_pairing(vals[a], vals[b], grid);
      if (n == 0) {
        g0 = g;
        for (int a = 0; a <= M; ++a) diagonals += cat(a ? " " : (tau == 0.3 ? "" : "; "), fmt(g[a][a].real()));
      }
      double scale = 0.0;
      for (int a = 0; a <= M; ++a) scale = std::max(scale, std::abs(g0[a][a]));
      for (int a = 0; a <= M; ++a)
        for (int b = 0; b <= M; ++b) {
          rel.add(std::abs(g[a][b] - g0[a][b]) / scale, cat("n = ", n, ", (", a, ",", b, "), tau = ", tau));
          if (a != b)
            off.add(std::abs(g[a][b]) / std::sqrt(std::abs(g[a][a]) * std::abs(g[b][b])),
                    cat("n = ", n, ", (", a, ",", b, "), tau = ", tau));
        }
    }
  }
  auto r = at_most(rel.value, 1e-7,
                   cat("G(n) = G(0) for n <= 4, m, m' <= ", M, ", tau in {0.3, 0.6}, flat measure, n_q = ", opt.n_q,
                       "; ", worst_detail(rel), "; max normalized off-diagonal ", fmt(off.value),
                       "; measured diagonals of G(0): ", diagonals));
  r.pass = r.pass && off.value <= 1e-8;
  return r;
}

CheckResult elliptic_orthogonality(const VerifyOptions& opt) {
  Worst w;
  const int M = opt.max_degree;
  for (double tau : {0.3, 0.6}) {
    const auto grid = quad_grid(opt.n_q, tau);
    for (int n = 0; n <= 4; ++n) {
      std::vector<std::vector<cplx>> vals;
      for (int m = 0; m <= M; ++m) {
        const auto p = squeezed_hermite(m, n, tau);
        vals.push_back(values_on_grid([&](cplx z) { return p(z); }, grid));
      }
      std::vector<double> diag(M + 1);
      for (int a = 0; a <= M; ++a) diag[a] = std::abs(grid_pairing(vals[a], vals[a], grid));
      for (int a = 0; a <= M; ++a)
        for (int b = a + 1; b <= M; ++b)
          w.add(std::abs(grid_pairing(vals[a], vals[b], grid)) / std::sqrt(diag[a] * diag[b]),
                cat("n = ", n, ", (", a, ",", b, "), tau = ", tau));
    }
  }
  return at_most(w.value, 1e-8,
                 cat("off-diagonal / geometric mean of diagonals, m, m' <= ", M, ", n <= 4, tau in {0.3, 0.6}, n_q = ",
                     opt.n_q, "; ", worst_detail(w)));
}

CheckResult binomial_expansion(const VerifyOptions&) {
  Worst w;
  const auto As = make_ladder(LadderKind::Astar);
  for (int n = 0; n <= 8; ++n) w.add(max_coeff_diff(power(As, n), astar_power_binomial(n)), cat("n = ", n));
  return at_most(w.value, 1e-12, "(A*)^n by composition against the binomial sum, n <= 8; " + worst_detail(w));
}

CheckResult squeeze_monomial_examples(const VerifyOptions& opt) {
  Worst w;
  const double tau = opt.tau;
  const double c = 1.0 - tau * tau;
  const auto s0 = squeeze_monomial(0, tau);
  const auto s1 = squeeze_monomial(1, tau);
  w.add(rel_coeff_diff(s0.poly, BivariatePolynomial::constant(std::pow(c, 0.25))), "k = 0");
  w.add(rel_coeff_diff(s1.poly, BivariatePolynomial::monomial(1, 0, std::pow(c, 0.75))), "k = 1");
  w.add(std::abs(s1.env.q20 - tau / 2.0) + std::abs(s1.env.q11) + std::abs(s1.env.q02), "envelope");
  Worst limit;
  for (int k = 0; k <= 8; ++k)
    limit.add(max_coeff_diff(squeeze_monomial(k, 1e-9).poly,
                             BivariatePolynomial::monomial(k, 0, 1.0 / std::sqrt(factorial(k)))),
              cat("k = ", k));
  auto r = at_most(w.value, 1e-12, cat("k = 0, 1 closed forms: ", worst_detail(w), "; tau = 1e-9 against w^k/sqrt(k!), k <= 8: ",
                                       fmt(limit.value), " (bound 1e-7)"));
  r.pass = r.pass && limit.value <= 1e-7;
  return r;
}

}  // namespace

void register_operators(std::vector<CheckDef>& out) {
  const std::string s = "operators";
  out.push_back({"operators.ground_annihilation", s, "A psi_0 = B psi_0 = 0 and B_mu psi_mu = 0", ground_annihilation});
  out.push_back({"operators.commutators", s, "Heisenberg relations, commuting pairs, Bogoliubov invariance", commutators});
  out.push_back({"operators.bogoliubov_mu0", s, "Bogoliubov pair at mu = 0", bogoliubov_mu0});
  out.push_back({"operators.ground_state_norm", s, "flat norm of psi_mu", ground_state_norm});
  out.push_back({"operators.squeezed_ground_closed", s, "ladder and closed form of the squeezed level-0 states",
                 squeezed_ground});
  out.push_back({"operators.g_closed_form", s, "ladder construction against the closed form of G_{m,n}",
                 g_closed_form_check});
  out.push_back({"operators.three_route_agreement", s, "closed form, ladder and 2D-Hermite routes agree", three_route});
  out.push_back({"operators.laplacian_examples", s, "magnetic Laplacian examples", laplacian_examples});
  out.push_back({"operators.laplacian_eigen", s, "H_{m,n}(.;tau) are eigenfunctions of the magnetic Laplacian",
                 laplacian_eigen});
  out.push_back({"operators.deformed_landau_eigen", s, "H_{m,n}(.;tau) are eigenfunctions of the transported H_L",
                 deformed_eigen});
  out.push_back({"operators.ladder_identity", s, "A^n (A*)^n = prod (H_L + k) on level-0 states", ladder_identity});
  out.push_back({"operators.gram_invariance", s, "Gram data of psi_m^(n) independent of n", gram_invariance});
  out.push_back({"operators.elliptic_orthogonality", s, "orthogonality of H_{m,n}(.;tau) under omega_tau",
                 elliptic_orthogonality});
  out.push_back({"operators.binomial_expansion", s, "binomial expansion of (A*)^n", binomial_expansion});
  out.push_back({"operators.squeeze_monomial_examples", s, "squeeze-operator image of monomials",
                 squeeze_monomial_examples});
}

}  // namespace polyherm::verify_detail

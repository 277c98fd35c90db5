#include "polyherm/bivariate_polynomial.hpp"
#include "polyherm/operators.hpp"
#include "polyherm/weighted_function.hpp"
#include "verify/common.hpp"

namespace polyherm::verify_detail {

namespace {

BivariatePolynomial random_poly(Probes& pr, int max_deg, int terms) {
  BivariatePolynomial p;
  for (int t = 0; t < terms; ++t)
    p = p + BivariatePolynomial::monomial(pr.integer(0, max_deg), pr.integer(0, max_deg), pr.disc(1.0));
  return p;
}

CheckResult eval_examples(const VerifyOptions&) {
  using P = BivariatePolynomial;
  Worst w;
  w.add(std::abs(P::constant(1.0)(cplx(0.3, -2.0)) - 1.0), "constant");
  w.add(std::abs((P::monomial(1, 1) + cplx(-1.0))(cplx(1.0, 1.0)) - 1.0), "z zbar - 1 at 1+i");
  w.add(std::abs(P::monomial(2, 0)(cplx(0.0, 1.0)) + 1.0), "z^2 at i");
  return at_most(w.value, 1e-15, worst_detail(w));
}

CheckResult arith_examples(const VerifyOptions&) {
  using P = BivariatePolynomial;
  bool ok = true;
  for (int m = 0; m <= 6; ++m) ok = ok && d_zbar(P::monomial(m, 0)).is_zero();
  ok = ok && d_z(P::monomial(2, 1)) == P::monomial(1, 1, 2.0);
  ok = ok && (P::monomial(1, 1) + cplx(-1.0)) * P::z() == P::monomial(2, 1) - P::z();
  return flag(ok, "d_zbar(z^m) = 0 for m <= 6; d_z(z^2 zbar) = 2 z zbar; (z zbar - 1) z = z^2 zbar - z");
}

CheckResult mul_homomorphism(const VerifyOptions& opt) {
  Probes pr(opt.seed, "poly_core.mul_eval_homomorphism");
  Worst w;
  for (int i = 0; i < 100; ++i) {
    const auto p = random_poly(pr, 5, 6);
    const auto q = random_poly(pr, 5, 6);
    const cplx z = pr.disc(2.0);
    const cplx lhs = (p * q)(z);
    const cplx rhs = p(z) * q(z);
    const double scale = std::max({std::abs(rhs), std::abs(p(z)) * std::abs(q(z)), 1e-300});
    w.add(std::abs(lhs - rhs) / scale, cat("probe ", i));
  }
  return at_most(w.value, 1e-12, "100 random pairs, |z| <= 2; " + worst_detail(w));
}

CheckResult mixed_partials(const VerifyOptions& opt) {
  Probes pr(opt.seed, "poly_core.mixed_partials_commute");
  bool exact = true;
  Worst w;
  for (int i = 0; i < 50; ++i) {
    // Integer coefficients keep every product exact, so equality must be bitwise.
    BivariatePolynomial q;
    for (int t = 0; t < 8; ++t)
      q = q + BivariatePolynomial::monomial(pr.integer(0, 6), pr.integer(0, 6),
                                            cplx(pr.integer(-50, 50), pr.integer(-50, 50)));
    exact = exact && d_z(d_zbar(q)) == d_zbar(d_z(q));
    const auto p = random_poly(pr, 6, 8);
    const auto a = d_z(d_zbar(p));
    w.add(max_coeff_diff(a, d_zbar(d_z(p))) / std::max(a.max_abs_coeff(), 1e-300), cat("polynomial ", i));
  }
  auto r = at_most(w.value, 4e-16, cat(exact ? "bitwise equal on 50 integer-coefficient polynomials"
                                             : "integer-coefficient polynomials DIFFER",
                                       "; general coefficients differ by at most one rounding: ", worst_detail(w)));
  r.pass = r.pass && exact;
  return r;
}

CheckResult gw_associativity(const VerifyOptions& opt) {
  Probes pr(opt.seed, "poly_core.gw_apply_associativity");
  const double mu = std::atanh(opt.tau);
  const auto [Bm, Bms] = bogoliubov(mu);
  const std::vector<LadderOperator> ops = {make_ladder(LadderKind::A),     make_ladder(LadderKind::Astar),
                                           make_ladder(LadderKind::B),     make_ladder(LadderKind::Bstar),
                                           make_ladder(LadderKind::HL),    make_ladder(LadderKind::Laplacian),
                                           Bm,                             Bms};
  Worst w;
  for (int i = 0; i < 40; ++i) {
    const auto& L1 = ops[pr.integer(0, static_cast<int>(ops.size()) - 1)];
    const auto& L2 = ops[pr.integer(0, static_cast<int>(ops.size()) - 1)];
    WeightedFunction f = ground_state(mu);
    f.poly = random_poly(pr, 4, 5);
    const auto seq = gw_apply(L2, gw_apply(L1, f));
    const auto comp = gw_apply(L2 * L1, f);
    w.add(rel_coeff_diff(seq.poly, comp.poly), cat("pair ", i));
  }
  return at_most(w.value, 1e-12, "40 random operator pairs on psi_mu-weighted polynomials; " + worst_detail(w));
}

CheckResult gw_examples(const VerifyOptions& opt) {
  const double mu = std::atanh(opt.tau);
  const auto psi = ground_state(mu);
  bool ok = gw_apply(LadderOperator::identity(), psi).poly == psi.poly;
  ok = ok && gw_apply(make_ladder(LadderKind::A), ground_state(0.0)).poly.is_zero();
  const WeightedFunction g{BivariatePolynomial::constant(1.0), GaussianEnvelope{0.0, -0.5, 0.0, 1.0}};
  const auto dg = d_z(g);
  ok = ok && dg.poly == BivariatePolynomial::monomial(0, 1, -0.5);
  return flag(ok, "identity on psi_mu; A psi_0 = 0; d_z exp(-z zbar/2) has polynomial part -zbar/2");
}

CheckResult json_roundtrip(const VerifyOptions& opt) {
  Probes pr(opt.seed, "poly_core.json_roundtrip");
  bool ok = true;
  for (int i = 0; i < 30; ++i) {
    auto p = random_poly(pr, 8, 10);
    p = p * cplx(pr.uniform(-1e5, 1e5), pr.uniform(-1e-5, 1e-5));
    ok = ok && BivariatePolynomial::from_json(p.to_json()) == p;
  }
  return flag(ok, "30 random polynomials survive to_json/from_json bit-exactly");
}

CheckResult envelope_integrability(const VerifyOptions& opt) {
  bool ok = true;
  for (double tau : {0.0, 0.3, opt.tau, 0.9}) ok = ok && ground_state(std::atanh(tau)).env.integrable();
  ok = ok && !GaussianEnvelope{0.25, 0.0, 0.0, 1.0}.integrable();
  return flag(ok, "psi_mu envelopes are integrable; the pure e^{tau w^2/2} envelope is not");
}

}  // namespace

void register_poly_core(std::vector<CheckDef>& out) {
  const std::string s = "poly_core";
  out.push_back({"poly_core.eval_examples", s, "two-level Horner evaluation examples", eval_examples});
  out.push_back({"poly_core.arith_examples", s, "derivative and product examples", arith_examples});
  out.push_back({"poly_core.mul_eval_homomorphism", s, "eval(p q) = eval(p) eval(q) at 100 points", mul_homomorphism});
  out.push_back({"poly_core.mixed_partials_commute", s, "d_z d_zbar = d_zbar d_z in coefficient space", mixed_partials});
  out.push_back({"poly_core.gw_apply_associativity", s, "L2(L1 f) = (L2 o L1) f on weighted functions",
                 gw_associativity});
  out.push_back({"poly_core.gw_apply_examples", s, "ladder action examples", gw_examples});
  out.push_back({"poly_core.json_roundtrip", s, "JSON serialization round trip", json_roundtrip});
  out.push_back({"poly_core.envelope_integrability", s, "Gaussian envelope integrability predicate",
                 envelope_integrability});
}

}  // namespace polyherm::verify_detail

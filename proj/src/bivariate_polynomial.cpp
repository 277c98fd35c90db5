#include "polyherm/bivariate_polynomial.hpp"

#include <algorithm>

#include <json.hpp>

namespace polyherm {

BivariatePolynomial::BivariatePolynomial(Terms terms) : terms_(std::move(terms)) {
  for (const auto& [e, c] : terms_) {
    if (e.a < 0 || e.b < 0)
      throw Error(ErrorCode::InvalidArgument, "negative exponent in BivariatePolynomial");
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorCode::InvalidArgument, "non-finite coefficient in BivariatePolynomial");
  }
  trim_and_cache();
}

BivariatePolynomial BivariatePolynomial::constant(cplx c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(int a, int b, cplx c) {
  return BivariatePolynomial(Terms{{Exponent{a, b}, c}});
}

void BivariatePolynomial::trim_and_cache() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kTrimThreshold; });
  deg_z_ = -1;
  deg_zbar_ = -1;
  for (const auto& [e, c] : terms_) {
    deg_z_ = std::max(deg_z_, e.a);
    deg_zbar_ = std::max(deg_zbar_, e.b);
  }
}

cplx BivariatePolynomial::coeff(int a, int b) const {
  auto it = terms_.find(Exponent{a, b});
  return it == terms_.end() ? cplx{} : it->second;
}

double BivariatePolynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}


cplx BivariatePolynomial::eval_pair(cplx z, cplx zbar) const {
  // Terms are sorted by (a, b); walk backwards so both levels run from the
  // highest exponent down.
  cplx outer = 0.0;
  int outer_exp = -1;  // exponent of z that `outer` is currently aligned to
  auto it = terms_.rbegin();
  while (it != terms_.rend()) {
    const int a = it->first.a;
    cplx inner = 0.0;
    int inner_exp = it->first.b;
    for (; it != terms_.rend() && it->first.a == a; ++it) {
      inner = inner * ipow(zbar, inner_exp - it->first.b) + it->second;
      inner_exp = it->first.b;
    }
    inner *= ipow(zbar, inner_exp);
    outer = (outer_exp < 0) ? inner : outer * ipow(z, outer_exp - a) + inner;
    outer_exp = a;
  }
  return outer_exp < 0 ? cplx{} : outer * ipow(z, outer_exp);
}

BivariatePolynomial BivariatePolynomial::scale_arguments(cplx sz, cplx szbar) const {
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace(e, c * ipow(sz, e.a) * ipow(szbar, e.b));
  return BivariatePolynomial(std::move(out));
}

BivariatePolynomial BivariatePolynomial::swap_symbols() const {
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace(Exponent{e.b, e.a}, c);
  return BivariatePolynomial(std::move(out));
}

BivariatePolynomial BivariatePolynomial::conj_coefficients() const {
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace(e, std::conj(c));
  return BivariatePolynomial(std::move(out));
}

std::string BivariatePolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : terms_)
    arr.push_back({{"a", e.a}, {"b", e.b}, {"re", c.real()}, {"im", c.imag()}});
  return arr.dump();
}

BivariatePolynomial BivariatePolynomial::from_json(const std::string& text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidArgument, std::string("polynomial JSON: ") + ex.what());
  }
  if (!arr.is_array()) throw Error(ErrorCode::InvalidArgument, "polynomial JSON must be an array");
  Terms terms;
  try {
    for (const auto& rec : arr) {
      Exponent e{rec.at("a").get<int>(), rec.at("b").get<int>()};
      if (!terms.emplace(e, cplx(rec.at("re").get<double>(), rec.at("im").get<double>())).second)
        throw Error(ErrorCode::InvalidArgument, "duplicate exponent in polynomial JSON");
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidArgument, std::string("polynomial JSON: ") + ex.what());
  }
  return BivariatePolynomial(std::move(terms));
}

BivariatePolynomial operator+(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  auto terms = p.terms_;
  for (const auto& [e, c] : q.terms_) terms[e] += c;
  return BivariatePolynomial(std::move(terms));
}

BivariatePolynomial operator-(const BivariatePolynomial& p) {
  auto terms = p.terms_;
  for (auto& [e, c] : terms) c = -c;
  return BivariatePolynomial(std::move(terms));
}

BivariatePolynomial operator-(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  auto terms = p.terms_;
  for (const auto& [e, c] : q.terms_) terms[e] -= c;
  return BivariatePolynomial(std::move(terms));
}

BivariatePolynomial operator*(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  BivariatePolynomial::Terms terms;
  for (const auto& [e1, c1] : p.terms_)
    for (const auto& [e2, c2] : q.terms_) terms[Exponent{e1.a + e2.a, e1.b + e2.b}] += c1 * c2;
  return BivariatePolynomial(std::move(terms));
}

BivariatePolynomial operator*(cplx c, const BivariatePolynomial& p) {
  auto terms = p.terms_;
  for (auto& [e, v] : terms) v *= c;
  return BivariatePolynomial(std::move(terms));
}

BivariatePolynomial d_z(const BivariatePolynomial& p) {
  BivariatePolynomial::Terms terms;
  for (const auto& [e, c] : p.terms())
    if (e.a > 0) terms.emplace(Exponent{e.a - 1, e.b}, c * static_cast<double>(e.a));
  return BivariatePolynomial(std::move(terms));
}

BivariatePolynomial d_zbar(const BivariatePolynomial& p) {
  BivariatePolynomial::Terms terms;
  for (const auto& [e, c] : p.terms())
    if (e.b > 0) terms.emplace(Exponent{e.a, e.b - 1}, c * static_cast<double>(e.b));
  return BivariatePolynomial(std::move(terms));
}

BivariatePolynomial shift(const BivariatePolynomial& p, int a, int b) {
  BivariatePolynomial::Terms terms;
  for (const auto& [e, c] : p.terms()) terms.emplace(Exponent{e.a + a, e.b + b}, c);
  return BivariatePolynomial(std::move(terms));
}

BivariatePolynomial pow(const BivariatePolynomial& p, int k) {
  BivariatePolynomial r = BivariatePolynomial::constant(1.0);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

double max_coeff_diff(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  double m = 0.0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, std::abs(c - q.coeff(e.a, e.b)));
  for (const auto& [e, c] : q.terms())
    if (!p.terms().contains(e)) m = std::max(m, std::abs(c));
  return m;
}

double rel_coeff_diff(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  const double d = max_coeff_diff(p, q);
  const double s = std::max(p.max_abs_coeff(), q.max_abs_coeff());
  return s == 0.0 ? d : d / s;
}

}  // namespace polyherm

#include "polyherm/weighted_function.hpp"

#include <algorithm>

namespace polyherm {

bool GaussianEnvelope::integrable() const noexcept {
  // Re(q20 z^2) = Re q20 (x^2 - y^2) - 2 Im q20 xy, Re(q02 zbar^2) likewise
  // with +2 Im q02 xy, Re(q11 |z|^2) = Re q11 (x^2 + y^2).
  const double s = (q20 + q02).real();
  const double xx = s + q11.real();
  const double yy = -s + q11.real();
  const double xy = q02.imag() - q20.imag();
  return xx < 0.0 && xx * yy - xy * xy > 0.0;
}

BivariatePolynomial GaussianEnvelope::dz_exponent() const {
  return BivariatePolynomial({{Exponent{1, 0}, 2.0 * q20}, {Exponent{0, 1}, q11}});
}

BivariatePolynomial GaussianEnvelope::dzbar_exponent() const {
  return BivariatePolynomial({{Exponent{1, 0}, q11}, {Exponent{0, 1}, 2.0 * q02}});
}

cplx GaussianEnvelope::operator()(cplx z) const {
  const cplx zb = std::conj(z);
  return c * std::exp(q20 * z * z + q11 * z * zb + q02 * zb * zb);
}

WeightedFunction d_z(const WeightedFunction& f) {
  return {d_z(f.poly) + f.poly * f.env.dz_exponent(), f.env};
}

WeightedFunction d_zbar(const WeightedFunction& f) {
  return {d_zbar(f.poly) + f.poly * f.env.dzbar_exponent(), f.env};
}

LadderOperator::LadderOperator(const std::vector<OperatorTerm>& terms) {
  for (const auto& t : terms) {
    if (t.a < 0 || t.b < 0 || t.p < 0 || t.q < 0)
      throw Error(ErrorCode::InvalidArgument, "negative power in operator term");
    add({t.a, t.b, t.p, t.q}, t.coeff);
  }
  trim();
}

std::vector<OperatorTerm> LadderOperator::terms() const {
  std::vector<OperatorTerm> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back({c, k[0], k[1], k[2], k[3]});
  return out;
}

cplx LadderOperator::coeff(int a, int b, int p, int q) const {
  auto it = terms_.find({a, b, p, q});
  return it == terms_.end() ? cplx{} : it->second;
}

void LadderOperator::add(const Key& k, cplx c) { terms_[k] += c; }

void LadderOperator::trim() {
  std::erase_if(terms_, [](const auto& kv) {
    return std::abs(kv.second) < BivariatePolynomial::kTrimThreshold;
  });
}

LadderOperator operator+(const LadderOperator& l, const LadderOperator& r) {
  LadderOperator out = l;
  for (const auto& [k, c] : r.terms_) out.add(k, c);
  out.trim();
  return out;
}

LadderOperator operator-(const LadderOperator& l, const LadderOperator& r) {
  LadderOperator out = l;
  for (const auto& [k, c] : r.terms_) out.add(k, -c);
  out.trim();
  return out;
}

LadderOperator operator*(cplx c, const LadderOperator& l) {
  LadderOperator out = l;
  for (auto& [k, v] : out.terms_) v *= c;
  out.trim();
  return out;
}

namespace {

// C(p, j) * a! / (a - j)!
double reorder_weight(int p, int a, int j) {
  double w = 1.0;
  for (int i = 0; i < j; ++i) w *= static_cast<double>(p - i) / (i + 1) * (a - i);
  return w;
}

}  // namespace

LadderOperator operator*(const LadderOperator& l, const LadderOperator& r) {
  LadderOperator out;
  for (const auto& [kl, cl] : l.terms_) {
    const auto [a1, b1, p1, q1] = kl;
    for (const auto& [kr, cr] : r.terms_) {
      const auto [a2, b2, p2, q2] = kr;
      for (int j = 0; j <= std::min(p1, a2); ++j) {
        const double wz = reorder_weight(p1, a2, j);
        for (int k = 0; k <= std::min(q1, b2); ++k) {
          const double wzb = reorder_weight(q1, b2, k);
          out.add({a1 + a2 - j, b1 + b2 - k, p1 - j + p2, q1 - k + q2}, cl * cr * wz * wzb);
        }
      }
    }
  }
  out.trim();
  return out;
}

LadderOperator commutator(const LadderOperator& l, const LadderOperator& r) {
  return l * r - r * l;
}

LadderOperator power(const LadderOperator& l, int k) {
  LadderOperator out = LadderOperator::identity();
  for (int i = 0; i < k; ++i) out = l * out;
  return out;
}

double max_coeff_diff(const LadderOperator& l, const LadderOperator& r) {
  double m = 0.0;
  for (const auto& t : (l - r).terms()) m = std::max(m, std::abs(t.coeff));
  return m;
}

WeightedFunction gw_apply(const LadderOperator& op, const WeightedFunction& f) {
  BivariatePolynomial acc;
  // Derivative towers are shared between terms with equal (p, q).
  std::map<std::pair<int, int>, WeightedFunction> cache;
  for (const auto& t : op.terms()) {
    auto it = cache.find({t.p, t.q});
    if (it == cache.end()) {
      WeightedFunction g = f;
      for (int i = 0; i < t.q; ++i) g = d_zbar(g);
      for (int i = 0; i < t.p; ++i) g = d_z(g);
      it = cache.emplace(std::make_pair(t.p, t.q), std::move(g)).first;
    }
    acc = acc + t.coeff * shift(it->second.poly, t.a, t.b);
  }
  return {acc, f.env};
}

BivariatePolynomial apply(const LadderOperator& op, const BivariatePolynomial& p) {
  return gw_apply(op, WeightedFunction{p, GaussianEnvelope{}}).poly;
}

}  // namespace polyherm

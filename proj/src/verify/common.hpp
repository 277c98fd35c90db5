#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "polyherm/complex_point.hpp"
#include "polyherm/format.hpp"
#include "polyherm/ginibre.hpp"
#include "polyherm/verify.hpp"

namespace polyherm::verify_detail {

// Deterministic probe points; the stream is derived from the check id so
// adding a check never shifts another check's probes.
class Probes {
 public:
  Probes(std::uint64_t seed, const std::string& id) : rng_(seed, fnv1a(id)) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * rng_.next_uniform(); }
  // Uniform in the disc |z| <= r.
  cplx disc(double r) {
    const double rad = r * std::sqrt(rng_.next_uniform());
    return std::polar(rad, 2.0 * kPi * rng_.next_uniform());
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(rng_.next_u64() % static_cast<std::uint64_t>(hi - lo + 1)); }

  static std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  Philox rng_;
};

// Running maximum with the location where it occurred.
struct Worst {
  double value = 0.0;
  std::string where;

  void add(double v, const std::string& at) {
    if (!(v <= value)) {  // NaN always wins
      value = v;
      where = at;
    }
  }
};

inline std::string fmt(double x) { return format_double(x); }

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  ((os << args), ...);
  return os.str();
}

inline CheckResult at_most(double value, double threshold, std::string detail) {
  CheckResult r;
  r.value = value;
  r.threshold = threshold;
  r.comparison = Comparison::AtMost;
  r.pass = value <= threshold;
  r.detail = std::move(detail);
  return r;
}

inline CheckResult at_least(double value, double threshold, std::string detail) {
  CheckResult r;
  r.value = value;
  r.threshold = threshold;
  r.comparison = Comparison::AtLeast;
  r.pass = value >= threshold;
  r.detail = std::move(detail);
  return r;
}

inline CheckResult flag(bool ok, std::string detail) {
  CheckResult r;
  r.value = ok ? 1.0 : 0.0;
  r.threshold = 1.0;
  r.comparison = Comparison::Flag;
  r.pass = ok;
  r.detail = std::move(detail);
  return r;
}

inline std::string worst_detail(const Worst& w) { return w.where.empty() ? "all exact" : "worst at " + w.where; }

void register_poly_core(std::vector<CheckDef>& out);
void register_hermite(std::vector<CheckDef>& out);
void register_operators(std::vector<CheckDef>& out);
void register_quadrature(std::vector<CheckDef>& out);
void register_kernels(std::vector<CheckDef>& out);
void register_ginibre(std::vector<CheckDef>& out);

}  // namespace polyherm::verify_detail

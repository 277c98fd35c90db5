#include <doctest.h>

#include <cmath>

#include "polyherm/complex_hermite.hpp"
#include "polyherm/kernels.hpp"

using namespace polyherm;

TEST_SUITE("kernels") {
  TEST_CASE("closed-form examples") {
    CHECK(std::abs(kernel_w_closed({0.5, 1}, 1.0, 0.0) - 1.5 * std::exp(-0.25)) < 1e-15);
    const cplx z(0.3, -0.4), w(0.1, 0.7);
    const cplx zb = std::conj(z);
    CHECK(std::abs(kernel_w_closed({0.3, 0}, z, w) - std::exp(zb * w - 0.15 * zb * zb)) < 1e-15);
    CHECK_THROWS_AS(kernel_w_closed({0.0, 1}, z, w), Error);
  }

  TEST_CASE("series examples") {
    CHECK(std::abs(kernel_w_series({0.5, 0}, 0.0, cplx(0.7, -0.4), 8).value - 1.0) < 1e-15);
    CHECK_THROWS_AS(kernel_w_series({0.5, 1}, cplx(1.2, 0.3), cplx(-0.9, 0.8), 3), Error);
    const auto s = kernel_w_series_auto({0.5, 2}, cplx(0.5, 0.5), cplx(-1.0, 0.25));
    CHECK(s.last_term <= kSeriesTailTolerance * std::abs(s.value));
  }

  TEST_CASE("closed form and series agree") {
    const cplx z(0.5, 0.5), w(-1.0, 0.25);
    for (int n = 0; n <= 4; ++n) {
      const cplx c = kernel_w_closed({0.5, n}, z, w);
      const cplx s = kernel_w_series_auto({0.5, n}, z, w).value;
      CHECK(std::abs(c / s - 1.0) < 1e-12);
    }
  }

  TEST_CASE("h_tau") {
    const cplx w(0.4, -0.2);
    CHECK(std::abs(h_tau(2, w, 0.5) - (w * w - 0.5) / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(h_tau(3, w, 0.0) - w * w * w / std::sqrt(6.0)) < 1e-15);
    const auto seq = h_tau_sequence(10, w, 0.5);
    CHECK(std::abs(seq[7] - h_tau(7, w, 0.5)) < 1e-14);
  }

  TEST_CASE("Landau kernel") {
    const cplx z(0.3, 0.2), w(-0.5, 0.1);
    CHECK(std::abs(kernel_k_landau(0, z, w) - std::exp(z * std::conj(w))) < 1e-15);
    // L_1(t) = 1 - t
    CHECK(std::abs(kernel_k_landau(1, z, w) - std::exp(z * std::conj(w)) * (1.0 - std::norm(z - w))) < 1e-15);
  }

  TEST_CASE("TPCS parameters") {
    for (double tau : {0.1, 0.5, 0.9}) {
      const auto [a, b] = tpcs_ab(tau);
      CHECK(std::abs(a * a - b * b - 1.0) < 1e-14);
    }
    const cplx z(0.2, 0.6), w(-0.3, 0.1);
    CHECK(std::abs(tpcs_kernel(0.4, z, w) - tpcs_reference(0.4, z, w)) < 1e-14);
  }

  TEST_CASE("polyanalytic fit recovers coefficients") {
    const auto zs = sample_disc(60, 1.0);
    std::vector<cplx> v;
    for (const auto& z : zs) v.push_back(2.0 * z * z * std::conj(z) - cplx(0, 1) * z);
    const auto fit = fit_polyanalytic(zs, v, 3, 1);
    CHECK(fit.relative_residual < 1e-13);
    CHECK(std::abs(fit.coeffs[2 * 2 + 1] - 2.0) < 1e-12);
    CHECK(std::abs(fit.coeffs[1 * 2 + 0] - cplx(0, -1)) < 1e-12);
  }
}

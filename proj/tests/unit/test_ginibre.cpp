#include <doctest.h>

#include <cmath>

#include "polyherm/ginibre.hpp"

using namespace polyherm;

TEST_SUITE("ginibre") {
  TEST_CASE("Philox4x32-10 known answers") {
    using B = Philox::Block;
    CHECK(Philox::block({0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
  }

  TEST_CASE("streams are independent and reproducible") {
    Philox a(7, 0), b(7, 0), c(7, 1);
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    Philox u(3, 0);
    for (int i = 0; i < 1000; ++i) {
      const double v = u.next_uniform();
      CHECK((v > 0.0 && v <= 1.0));
    }
  }

  TEST_CASE("eigenvalues of small matrices") {
    ComplexMatrix C(2, 2);
    C(0, 1) = 1.0;
    C(1, 0) = 1.0;
    auto ev = eigenvalues(C);
    canonical_sort(ev);
    CHECK(std::abs(ev[0] + 1.0) < 1e-14);
    CHECK(std::abs(ev[1] - 1.0) < 1e-14);

    ComplexMatrix T(3, 3);  // upper triangular
    T(0, 0) = cplx(1, 1);
    T(1, 1) = -2.0;
    T(2, 2) = cplx(0, 3);
    T(0, 2) = 5.0;
    T(1, 2) = cplx(0.5, -1);
    ev = eigenvalues(T);
    canonical_sort(ev);
    CHECK(std::abs(ev[0] + 2.0) < 1e-13);
    CHECK(std::abs(ev[1] - cplx(0, 3)) < 1e-13);
    CHECK(std::abs(ev[2] - cplx(1, 1)) < 1e-13);
  }

  TEST_CASE("eigenpair residuals") {
    const auto M = sample_elliptic(40, 0.3, 11);
    for (const auto& l : eigenvalues(M)) CHECK(eigen_residual(M, l) < 1e-10);
  }

  TEST_CASE("non-finite input is rejected") {
    ComplexMatrix M(2, 2);
    M(0, 0) = std::nan("");
    CHECK_THROWS_AS(eigenvalues(M), Error);
  }

  TEST_CASE("tau = 1 gives a Hermitian matrix and a real spectrum") {
    const auto M = sample_elliptic(30, 1.0, 2);
    CHECK(M == M.adjoint());
    for (const auto& l : eigenvalues(M)) CHECK(std::abs(l.imag()) < 1e-10);
  }

  TEST_CASE("raw flag drops the 1/sqrt(2)") {
    const auto a = sample_elliptic(6, 0.5, 4);
    const auto b = sample_elliptic(6, 0.5, 4, true);
    CHECK(std::abs(b(2, 3) - std::sqrt(2.0) * a(2, 3)) < 1e-15);
  }

  TEST_CASE("spectral statistics example") {
    SpectrumSample s;
    s.N = 2;
    s.eigenvalues = {1.0, -1.0};
    const auto st = spectral_stats(s);
    CHECK(st.second_moment_over_N == cplx(0.5));
    CHECK(st.mean == cplx(0.0));
    CHECK(st.ellipse_fraction == 1.0);
  }

  TEST_CASE("spectra are seed-determined and sorted") {
    const auto a = sample_spectrum(24, 0.5, 9);
    const auto b = sample_spectrum(24, 0.5, 9);
    CHECK(a.eigenvalues == b.eigenvalues);
    for (std::size_t i = 1; i < a.eigenvalues.size(); ++i) CHECK(a.eigenvalues[i - 1].real() <= a.eigenvalues[i].real());
    CHECK_THROWS_AS(sample_spectrum(0, 0.5, 1), Error);
    CHECK_THROWS_AS(sample_spectrum(kMaxMatrixSize + 1, 0.5, 1), Error);
    CHECK_THROWS_AS(sample_spectrum(4, 1.5, 1), Error);
  }
}

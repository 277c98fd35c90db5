#pragma once

#include "polyherm/bivariate_polynomial.hpp"

namespace polyherm {

// H_{m,n}(z, zbar) = sum_k (-1)^k k! C(m,k) C(n,k) z^{m-k} zbar^{n-k}.
BivariatePolynomial complex_hermite(int m, int n);

// (-1)^{m+n} e^{|z|^2} d_z^n d_zbar^m e^{-|z|^2}, by repeated differentiation
// of the weighted function 1 * exp(-z zbar). Independent of complex_hermite.
BivariatePolynomial complex_hermite_rodrigues(int m, int n);

// phi_{m,n}(z) = H_{m,n}(z, zbar) / sqrt(m! n!) through the polar Laguerre
// form  (-1)^k k!/sqrt(m! n!) |z|^{|m-n|} e^{i(m-n) arg z} L_k^{(|m-n|)}(|z|^2),
// k = min(m, n). Degrees up to 200.
cplx phi_normalized(int m, int n, ComplexPoint z);

}  // namespace polyherm

#pragma once

#include <utility>

#include "polyherm/weighted_function.hpp"

namespace polyherm {

enum class LadderKind { A, Astar, B, Bstar, HL, Laplacian };

// A = -d_zbar - z/2, A* = d_z - zbar/2, B = -d_z - zbar/2, B* = d_zbar - z/2,
// HL = A* o A, Laplacian = -d_z d_zbar + zbar d_zbar.
LadderOperator make_ladder(LadderKind kind);

// (B_mu, B_mu*) = (cosh mu B - sinh mu B*, -sinh mu B + cosh mu B*).
std::pair<LadderOperator, LadderOperator> bogoliubov(double mu);

// psi_mu = pi^{-1/2} exp(-(|z|^2 - tau z^2)/2), tau = tanh mu.
WeightedFunction ground_state(double mu);

// (1/sqrt(m!)) (-B_mu*)^m psi_mu by repeated application.
WeightedFunction squeezed_ground_ladder(int m, double mu);
// (1/sqrt(m!)) (tanh mu / 2)^{m/2} H_m(z / sqrt(sinh 2mu)) psi_mu; z^m/sqrt(m!) at mu = 0.
WeightedFunction squeezed_ground_closed(int m, double mu);

// psi_m^{(n)} = (1/sqrt(n!)) (A*)^n applied to squeezed_ground_ladder(m, mu).
// Its polynomial part is G_{m,n}(z, zbar, tanh mu) including the 1/sqrt(n!).
WeightedFunction ladder_construct(int m, int n, double mu);

// Closed form of (A*)^n [level-0 state] / psi_mu, i.e. without the
// 1/sqrt(n!) of ladder_construct. Requires mu > 0.
BivariatePolynomial g_closed_form(int m, int n, double mu);

// sum_j C(n,j) (-zbar/2)^{n-j} d_z^j.
LadderOperator astar_power_binomial(int n);

// -d_z d_zbar p + zbar d_zbar p.
BivariatePolynomial laplacian_apply(const BivariatePolynomial& p);

// HL transported to polynomial parts: conjugation by psi_mu followed by the
// substitution z -> z cosh mu gives -(1-tau^2) d_z d_zbar + (zbar - tau z) d_zbar.
BivariatePolynomial deformed_landau_apply(const BivariatePolynomial& p, double tau);

// Squeeze-operator image of w^k / sqrt(k!):
// (1-tau^2)^{1/4} e^{tau w^2/2} (tau/2)^{k/2} H_k(sqrt((1-tau^2)/(2 tau)) w) / sqrt(k!).
WeightedFunction squeeze_monomial(int k, double tau);

}  // namespace polyherm

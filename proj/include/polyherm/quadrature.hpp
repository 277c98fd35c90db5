#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "polyherm/complex_point.hpp"

namespace polyherm {

// 1D Gauss-Hermite rule for the weight e^{-t^2}.
struct GaussHermiteRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // for e^{-t^2}
  // weights * e^{t^2}, computed directly from normalized Hermite functions so
  // they keep full relative accuracy at the outermost nodes.
  std::vector<double> flat_weights;
};

inline constexpr int kMinNodes = 2;
inline constexpr int kMaxNodes = 256;

GaussHermiteRule gauss_hermite_rule(int n_q);

enum class GridKind {
  // sum w f approximates the flat integral of f, where f already carries the
  // Gaussian density exp(-(1-tau) x^2 - (1+tau) y^2) of |psi_mu|^2.
  FlatWithDensity,
  // sum w f approximates the integral of f against omega_tau.
  EllipticNative,
};

struct QuadratureGrid {
  std::vector<double> nodes_x, nodes_y;
  std::vector<double> weights_x, weights_y;
  double tau = 0.0;
  GridKind kind = GridKind::EllipticNative;

  std::size_t size() const noexcept { return nodes_x.size() * nodes_y.size(); }
  // Flattened index i = ix * ny + iy.
  cplx node(std::size_t i) const;
  double weight(std::size_t i) const;
};

// pi^{-1} exp(-x^2/(1+tau) - y^2/(1-tau)), tau in [0,1).
double omega_density(ComplexPoint z, double tau);

QuadratureGrid quad_grid(int n_q, double tau);
QuadratureGrid flat_grid(int n_q, double tau);

using PlaneFunction = std::function<cplx(cplx)>;

// sum over the grid of conj(f) g w. The grid must have been built for tau.
cplx inner_product(const PlaneFunction& f, const PlaneFunction& g, double tau, const QuadratureGrid& grid);
// sum over the grid of f w.
cplx integrate(const PlaneFunction& f, const QuadratureGrid& grid);

// CSV with header x,y,weight.
void write_grid_csv(const QuadratureGrid& grid, std::ostream& out);

}  // namespace polyherm

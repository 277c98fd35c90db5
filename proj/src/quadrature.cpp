#include "polyherm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "polyherm/error.hpp"
#include "polyherm/format.hpp"
#include "polyherm/parallel.hpp"
#include "polyherm/squeezed.hpp"

namespace polyherm {

namespace {

// Eigenvalues of the symmetric tridiagonal matrix (diag d, off-diagonal e,
// e[i] couples i and i+1) by QL with implicit Wilkinson shifts.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (++iter > 30 * n) throw Error(ErrorCode::EigensolveFailure, "tridiagonal QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Orthonormal Hermite polynomials p_k (weight e^{-t^2}) at t: returns
// (p_n, p_n') and accumulates sum_{k<n} p_k^2. With `functions` the
// recurrence is started from pi^{-1/4} e^{-t^2/2}, giving Hermite functions.
struct HermiteEval {
  double pn, dpn, sum_sq;
};

HermiteEval orthonormal_hermite(int n, double t, bool functions) {
  double p0 = std::pow(kPi, -0.25) * (functions ? std::exp(-0.5 * t * t) : 1.0);
  double pm1 = 0.0;
  double sum_sq = 0.0;
  double p = p0;
  for (int k = 0; k < n; ++k) {
    sum_sq += p * p;
    // t p_k = sqrt((k+1)/2) p_{k+1} + sqrt(k/2) p_{k-1}
    const double next = (t * p - std::sqrt(0.5 * k) * pm1) / std::sqrt(0.5 * (k + 1));
    pm1 = p;
    p = next;
  }
  // p_n' = sqrt(2n) p_{n-1} for the polynomial version.
  return {p, std::sqrt(2.0 * n) * pm1, sum_sq};
}

void require_grid_tau(double tau) {
  if (!(tau >= 0.0 && tau < 1.0)) throw Error(ErrorCode::TauOutOfRange, "grid tau must lie in [0, 1)");
}

}  // namespace

GaussHermiteRule gauss_hermite_rule(int n_q) {
  if (n_q < kMinNodes || n_q > kMaxNodes)
    throw Error(ErrorCode::NodesOutOfRange,
                "n_q = " + std::to_string(n_q) + " outside [" + std::to_string(kMinNodes) + ", " +
                    std::to_string(kMaxNodes) + "]");
  std::vector<double> diag(n_q, 0.0);
  std::vector<double> off(n_q - 1);
  for (int k = 1; k < n_q; ++k) off[k - 1] = std::sqrt(0.5 * k);
  auto nodes = tridiagonal_eigenvalues(diag, off);

  GaussHermiteRule rule;
  rule.nodes.resize(n_q);
  rule.weights.resize(n_q);
  rule.flat_weights.resize(n_q);
  for (int i = 0; i < n_q; ++i) {
    double t = nodes[i];
    const auto h = orthonormal_hermite(n_q, t, false);
    if (h.dpn != 0.0) t -= h.pn / h.dpn;
    nodes[i] = t;
  }
  // Enforce exact symmetry about 0.
  for (int i = 0; i < n_q / 2; ++i) {
    const double a = 0.5 * (nodes[n_q - 1 - i] - nodes[i]);
    nodes[i] = -a;
    nodes[n_q - 1 - i] = a;
  }
  if (n_q % 2 == 1) nodes[n_q / 2] = 0.0;
  for (int i = 0; i < n_q; ++i) {
    const double t = nodes[i];
    rule.nodes[i] = t;
    rule.weights[i] = 1.0 / orthonormal_hermite(n_q, t, false).sum_sq;
    rule.flat_weights[i] = 1.0 / orthonormal_hermite(n_q, t, true).sum_sq;
  }
  return rule;
}

cplx QuadratureGrid::node(std::size_t i) const {
  const std::size_t ny = nodes_y.size();
  return {nodes_x[i / ny], nodes_y[i % ny]};
}

double QuadratureGrid::weight(std::size_t i) const {
  const std::size_t ny = nodes_y.size();
  return weights_x[i / ny] * weights_y[i % ny];
}

double omega_density(ComplexPoint z, double tau) {
  require_tau_half_open(tau);
  const double x = z.re();
  const double y = z.im();
  return std::exp(-x * x / (1.0 + tau) - y * y / (1.0 - tau)) / kPi;
}

QuadratureGrid quad_grid(int n_q, double tau) {
  require_grid_tau(tau);
  const auto rule = gauss_hermite_rule(n_q);
  QuadratureGrid g;
  g.tau = tau;
  g.kind = GridKind::EllipticNative;
  const double sx = std::sqrt(1.0 + tau);
  const double sy = std::sqrt(1.0 - tau);
  const double rp = 1.0 / std::sqrt(kPi);
  for (int i = 0; i < n_q; ++i) {
    g.nodes_x.push_back(sx * rule.nodes[i]);
    g.weights_x.push_back(sx * rp * rule.weights[i]);
    g.nodes_y.push_back(sy * rule.nodes[i]);
    g.weights_y.push_back(sy * rp * rule.weights[i]);
  }
  return g;
}

QuadratureGrid flat_grid(int n_q, double tau) {
  require_grid_tau(tau);
  const auto rule = gauss_hermite_rule(n_q);
  QuadratureGrid g;
  g.tau = tau;
  g.kind = GridKind::FlatWithDensity;
  // Density exp(-(1-tau) x^2 - (1+tau) y^2): x = s / sqrt(1-tau), y = t / sqrt(1+tau).
  const double sx = 1.0 / std::sqrt(1.0 - tau);
  const double sy = 1.0 / std::sqrt(1.0 + tau);
  for (int i = 0; i < n_q; ++i) {
    g.nodes_x.push_back(sx * rule.nodes[i]);
    g.weights_x.push_back(sx * rule.flat_weights[i]);
    g.nodes_y.push_back(sy * rule.nodes[i]);
    g.weights_y.push_back(sy * rule.flat_weights[i]);
  }
  return g;
}

cplx integrate(const PlaneFunction& f, const QuadratureGrid& grid) {
  std::vector<cplx> terms(grid.size());
  parallel_for(terms.size(), [&](std::size_t i) { terms[i] = f(grid.node(i)) * grid.weight(i); });
  return pairwise_sum(std::span<const cplx>(terms));
}

cplx inner_product(const PlaneFunction& f, const PlaneFunction& g, double tau, const QuadratureGrid& grid) {
  if (grid.tau != tau)
    throw Error(ErrorCode::GridMismatch,
                "grid built for tau = " + format_double(grid.tau) + ", requested tau = " + format_double(tau));
  return integrate([&](cplx z) { return std::conj(f(z)) * g(z); }, grid);
}

void write_grid_csv(const QuadratureGrid& grid, std::ostream& out) {
  out << "x,y,weight\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cplx z = grid.node(i);
    out << format_double(z.real()) << ',' << format_double(z.imag()) << ',' << format_double(grid.weight(i))
        << '\n';
  }
}

}  // namespace polyherm

#pragma once

// Single hyperbolic double well: potential, the four closed-form eigenvalues,
// and the two lowest normalized eigenfunctions (the sub-barrier doublet).
// The well keeps a two-state description because the next level sits far
// above the barrier.

#include <array>
#include <cmath>
#include <stdexcept>

#include "razavy/numerics.hpp"

namespace razavy {

struct PotentialParams {
  double hbar = 1.0;
  double mass = 1.0;
  double xi = 1.0;

  void validate() const {
    if (!(hbar > 0.0) || !(mass > 0.0) || !(xi > 0.0))
      throw std::invalid_argument("PotentialParams: hbar, mass, xi must be > 0");
  }

  double energy_scale() const { return hbar * hbar / (2.0 * mass); }
};

// V(x) = (hbar^2/2m) [ (xi^2/8) cosh 4x - 4 xi cosh 2x - xi^2/8 ].
// cosh overflows past |x| ~ 177; callers stay well inside that.
inline double potential(const PotentialParams& p, double x) {
  const double xi = p.xi;
  return p.energy_scale() *
         ((xi * xi / 8.0) * std::cosh(4.0 * x) - 4.0 * xi * std::cosh(2.0 * x) -
          xi * xi / 8.0);
}

// Closed-form levels eps_0 < eps_1 < eps_2 < eps_3. Only the lowest pair
// has closed-form eigenfunctions.
inline std::array<double, 4> single_well_levels(const PotentialParams& p) {
  p.validate();
  const double xi = p.xi;
  const double s = p.energy_scale();
  const double rm = std::sqrt(4.0 - 2.0 * xi + xi * xi);
  const double rp = std::sqrt(4.0 + 2.0 * xi + xi * xi);
  return {s * (-xi - 5.0 - 2.0 * rm), s * (xi - 5.0 - 2.0 * rp),
          s * (-xi - 5.0 + 2.0 * rm), s * (xi - 5.0 + 2.0 * rp)};
}

// Levels plus normalization constants for phi_0 (even) and phi_1 (odd),
// and the analytic potential geometry. Immutable after build_basis().
struct SingleWellBasis {
  PotentialParams params;
  std::array<double, 4> eps;
  double A0 = 1.0;
  double A1 = 1.0;
  double x_s = 0.0;       // well-minimum abscissa, cosh(2 x_s) = 8/xi
  double V_min = 0.0;     // V(x_s)
  double V_barrier = 0.0; // V(0)
};

// Normalized phi_n(x), n in {0,1}. Once the decaying exponential's argument
// passes 700 the value underflows to zero regardless of the polynomial
// prefactor, so return 0 there (also avoids cosh(3x) overflow for large x).
inline double eigenfunction(const SingleWellBasis& b, int n, double x) {
  const double xi = b.params.xi;
  const double u = xi * std::cosh(2.0 * x) / 4.0;
  if (u > 700.0) return 0.0;
  const double damp = std::exp(-u);
  if (n == 0) {
    const double c = 4.0 - xi + 2.0 * std::sqrt(4.0 - 2.0 * xi + xi * xi);
    return b.A0 * damp * (3.0 * xi * std::cosh(x) + c * std::cosh(3.0 * x));
  }
  if (n == 1) {
    const double c = 4.0 + xi + 2.0 * std::sqrt(4.0 + 2.0 * xi + xi * xi);
    return b.A1 * damp * (3.0 * xi * std::sinh(x) + c * std::sinh(3.0 * x));
  }
  throw std::out_of_range("eigenfunction: n must be 0 or 1");
}

// Fixes A0, A1 by quadrature so that each phi_n has unit norm, and fills in
// the analytic geometry. Rejects xi >= 8, where cosh(2 x_s) = 8/xi <= 1 and
// the double-well shape degenerates.
inline SingleWellBasis build_basis(const PotentialParams& p,
                                   const QuadratureSpec& quad = {}) {
  p.validate();
  if (p.xi >= 8.0)
    throw std::invalid_argument(
        "build_basis: xi >= 8 leaves no double well (cosh 2*x_s = 8/xi <= 1)");
  SingleWellBasis b;
  b.params = p;
  b.eps = single_well_levels(p);
  b.A0 = 1.0;
  b.A1 = 1.0;
  const double n0 = integrate(
      [&](double x) {
        const double v = eigenfunction(b, 0, x);
        return v * v;
      },
      quad);
  const double n1 = integrate(
      [&](double x) {
        const double v = eigenfunction(b, 1, x);
        return v * v;
      },
      quad);
  b.A0 = 1.0 / std::sqrt(n0);
  b.A1 = 1.0 / std::sqrt(n1);
  b.x_s = 0.5 * std::acosh(8.0 / p.xi);
  b.V_min = potential(p, b.x_s);
  b.V_barrier = potential(p, 0.0);
  return b;
}

}  // namespace razavy

#pragma once

// Two coupled wells in the truncated {phi_0, phi_1} x {phi_0, phi_1} product
// space: the dipole overlap gamma, the 4x4 energy matrix, its closed-form
// spectrum and eigenstates, and the composite potential U(x1, x2).
//
// Product-basis ordering is (phi0 phi0, phi0 phi1, phi1 phi0, phi1 phi1)
// everywhere; this ordering is part of the public contract.

#include <array>
#include <cmath>
#include <stdexcept>

#include "razavy/numerics.hpp"
#include "razavy/razavy_well.hpp"

namespace razavy {

// gamma = integral of phi_0(x) * x * phi_1(x); the only matrix element the
// coupling -g x1 x2 picks up in the truncated space.
inline double overlap_gamma(const SingleWellBasis& basis, const QuadratureSpec& quad = {}) {
  return integrate(
      [&](double x) { return eigenfunction(basis, 0, x) * x * eigenfunction(basis, 1, x); },
      quad);
}

using EnergyMatrix = std::array<std::array<double, 4>, 4>;

inline EnergyMatrix energy_matrix(const SingleWellBasis& basis, double g, double gamma) {
  const double e0 = basis.eps[0], e1 = basis.eps[1];
  const double c = g * gamma * gamma;
  return {{{2.0 * e0, 0.0, 0.0, -c},
           {0.0, e0 + e1, -c, 0.0},
           {0.0, -c, e0 + e1, 0.0},
           {-c, 0.0, 0.0, 2.0 * e1}}};
}

// Closed-form spectrum of the energy matrix. gamma is computed once and
// cached here so a whole g-sweep shares the exact same overlap value.
struct CoupledSpectrum {
  double g = 0.0;
  double gamma = 0.0;
  double hbar = 1.0;
  double eps_sum = 0.0;  // eps_1 + eps_0
  double delta = 0.0;    // eps_1 - eps_0
  double theta = 0.0;    // mixing angle, tan(2 theta) = g gamma^2 / delta
  std::array<double, 4> E{};

  double omega(int nu) const { return (E[nu] - E[0]) / hbar; }
  double coupling() const { return g * gamma * gamma; }
};

inline CoupledSpectrum coupled_spectrum_with_overlap(const SingleWellBasis& basis, double g,
                                                     double gamma) {
  CoupledSpectrum s;
  s.g = g;
  s.gamma = gamma;
  s.hbar = basis.params.hbar;
  s.eps_sum = basis.eps[0] + basis.eps[1];
  s.delta = basis.eps[1] - basis.eps[0];
  const double c = g * gamma * gamma;
  const double root = std::hypot(s.delta, c);
  s.E = {s.eps_sum - root, s.eps_sum - c, s.eps_sum + c, s.eps_sum + root};
  // atan2 keeps theta on the principal branch [-pi/4, pi/4] for delta > 0
  s.theta = 0.5 * std::atan2(c, s.delta);
  return s;
}

inline CoupledSpectrum coupled_spectrum(const SingleWellBasis& basis, double g,
                                        const QuadratureSpec& quad = {}) {
  return coupled_spectrum_with_overlap(basis, g, overlap_gamma(basis, quad));
}

// Eigenstate coefficients over the product basis. States 1 and 2 are the
// fixed cross-term combinations for every g; states 0 and 3 rotate with
// theta inside the (phi0 phi0, phi1 phi1) block.
struct CoupledEigenstate {
  int index = 0;
  std::array<double, 4> coeff{};
};

inline CoupledEigenstate eigenstate(const CoupledSpectrum& spectrum, int index) {
  constexpr double inv_sqrt2 = 0.7071067811865476;
  const double c = std::cos(spectrum.theta);
  const double s = std::sin(spectrum.theta);
  switch (index) {
    case 0: return {0, {c, 0.0, 0.0, s}};
    case 1: return {1, {0.0, inv_sqrt2, inv_sqrt2, 0.0}};
    case 2: return {2, {0.0, -inv_sqrt2, inv_sqrt2, 0.0}};
    case 3: return {3, {-s, 0.0, 0.0, c}};
    default: throw std::out_of_range("eigenstate: index must be 0..3");
  }
}

// U(x1, x2) = V(x1) + V(x2) - g x1 x2.
inline double composite_potential(const PotentialParams& params, double g, double x1,
                                  double x2) {
  return potential(params, x1) + potential(params, x2) - g * x1 * x2;
}

}  // namespace razavy

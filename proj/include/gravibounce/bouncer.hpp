#pragma once

#include <cstddef>

#include "gravibounce/constants.hpp"

namespace gravibounce {

/// Characteristic length z0 = (hbar^2 / (2 m^2 g))^(1/3) and energy e0 = m g z0.
struct BouncerScales {
  double z0;  // m
  double e0;  // J
};

BouncerScales scales(const PhysicalConstants& constants);

/// Stationary state n of the linear potential above a perfect mirror.
struct EigenState {
  std::size_t n;
  double lambda;      // n-th Airy zero magnitude
  double energy;      // J, e0 * lambda
  double norm_const;  // m^(-1/2), 1 / (sqrt(z0) |Ai'(-lambda)|)
};

/// Throws DomainError for n == 0; propagates zero-finder failures.
EigenState eigenstate(std::size_t n, const BouncerScales& scales);

/// psi_n(z) = C_n Ai(z / z0 - lambda_n) for z >= 0, and 0 below the mirror.
double wavefunction(const EigenState& state, const BouncerScales& scales, double z);

/// psi_n in units of z0: sqrt(z0) psi_n(z0 x). Unit-normalized on x in [0, inf).
double reduced_wavefunction(const EigenState& state, double x);

}  // namespace gravibounce

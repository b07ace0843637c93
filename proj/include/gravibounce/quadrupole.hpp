#pragma once

#include <cstddef>

#include "gravibounce/bouncer.hpp"
#include "gravibounce/quadrature.hpp"

namespace gravibounce {

/// Matrix element <k|z^2|n> in three unit systems.
struct QuadrupoleElement {
  std::size_t k;
  std::size_t n;
  double dimensionless;  // <k|z^2|n> / z0^2
  double physical;       // m^2
  double q_moment;       // kg m^2, mass * physical
};

/// Closed form 24 (-1)^(k-n+1) z0^2 / (lambda_k - lambda_n)^4.
/// Throws DomainError for k == n (the closed form diverges on the diagonal)
/// or a zero index.
QuadrupoleElement element_closed(std::size_t k, std::size_t n, const BouncerScales& scales,
                                 double mass);

/// Gauss-Kronrod integration of psi_k z^2 psi_n over [0, z0 (max(lambda) + 15)].
/// Valid on and off the diagonal for 1 <= k, n <= 200.
QuadrupoleElement element_quadrature(std::size_t k, std::size_t n, const BouncerScales& scales,
                                     double mass);

/// Integral of x^power psi_k psi_n in reduced units x = z / z0.
/// power 0 gives the overlap <k|n>.
quadrature::Result reduced_moment(std::size_t k, std::size_t n, int power);

/// Largest index accepted by the quadrature route.
inline constexpr std::size_t kMaxQuadratureIndex = 200;
/// Tail past the outermost turning point, in units of z0.
inline constexpr double kQuadratureTail = 15.0;

}  // namespace gravibounce

#include "gravibounce/bouncer.hpp"

#include <cmath>

#include "gravibounce/airy.hpp"
#include "gravibounce/errors.hpp"

namespace gravibounce {

BouncerScales scales(const PhysicalConstants& constants) {
  const double m = constants.m();
  const double z0 = std::cbrt(constants.hbar() * constants.hbar() / (2.0 * m * m * constants.g()));
  return {z0, m * constants.g() * z0};
}

EigenState eigenstate(std::size_t n, const BouncerScales& scales) {
  if (n == 0) throw DomainError("state index must be >= 1");
  const double lambda = airy::shared_zero_table().lambda(n);
  const double slope = std::fabs(airy::ai_prime(-lambda));
  return {n, lambda, scales.e0 * lambda, 1.0 / (std::sqrt(scales.z0) * slope)};
}

double wavefunction(const EigenState& state, const BouncerScales& scales, double z) {
  if (!std::isfinite(z)) throw DomainError("wavefunction height must be finite");
  if (z <= 0.0) return 0.0;
  return state.norm_const * airy::ai(z / scales.z0 - state.lambda);
}

double reduced_wavefunction(const EigenState& state, double x) {
  if (!std::isfinite(x)) throw DomainError("wavefunction height must be finite");
  if (x <= 0.0) return 0.0;
  return airy::ai(x - state.lambda) / std::fabs(airy::ai_prime(-state.lambda));
}

}  // namespace gravibounce

#include "gravibounce/emission.hpp"

#include <cmath>

#include "gravibounce/airy.hpp"
#include "gravibounce/errors.hpp"

namespace gravibounce {

double omega(std::size_t k, std::size_t n, const BouncerScales& scales,
             const PhysicalConstants& constants) {
  if (k == 0 || n == 0) throw DomainError("state index must be >= 1");
  if (k == n) throw DomainError("transition frequency is zero for k == n");
  const auto& zeros = airy::shared_zero_table();
  return (zeros.lambda(k) - zeros.lambda(n)) * scales.e0 / constants.hbar();
}

double rate_general(double q_moment, double omega, const PhysicalConstants& constants) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("spontaneous emission requires omega > 0");
  }
  const double mp = constants.m_planck();
  const double c2 = constants.c() * constants.c();
  const double w2 = omega * omega;
  return 4.0 / 15.0 * (w2 * w2 * omega) / (mp * mp * c2 * c2) * q_moment * q_moment;
}

RatePrefactor rate_prefactor(const BouncerScales& scales, const PhysicalConstants& constants) {
  const double mass_ratio = constants.m() / constants.m_planck();
  const double hbar_c = constants.hbar() * constants.c();
  // E0^5 z0^4 c / (hbar c)^5, grouped as (E0 z0 / hbar c)^4 E0 / hbar.
  const double x = scales.e0 * scales.z0 / hbar_c;
  const double x2 = x * x;
  return {512.0 / 5.0, mass_ratio * mass_ratio, x2 * x2 * scales.e0 / constants.hbar()};
}

double rate_reduced(std::size_t k, std::size_t n, const BouncerScales& scales,
                    const PhysicalConstants& constants) {
  if (n == 0) throw DomainError("state index must be >= 1");
  if (k <= n) throw DomainError("spontaneous emission requires k > n");
  const auto& zeros = airy::shared_zero_table();
  const double gap = zeros.lambda(k) - zeros.lambda(n);
  return rate_prefactor(scales, constants).value() / (gap * gap * gap);
}

Validity quadrupole_validity(std::size_t k, const BouncerScales& scales,
                             const PhysicalConstants& constants, double threshold) {
  if (k == 0) throw DomainError("state index must be >= 1");
  const auto& zeros = airy::shared_zero_table();
  const double lk = zeros.lambda(k);
  const double w = (lk - zeros.lambda(1)) * scales.e0 / constants.hbar();
  const double ratio = w * scales.z0 * lk / constants.c();
  return {ratio, ratio < threshold};
}

TransitionRate transition(std::size_t k, std::size_t n, const BouncerScales& scales,
                          const PhysicalConstants& constants, double threshold) {
  const double gamma = rate_reduced(k, n, scales, constants);
  const double w = omega(k, n, scales, constants);
  const double ratio = w * scales.z0 * airy::shared_zero_table().lambda(k) / constants.c();
  return {k, n, w, gamma, ratio, ratio < threshold};
}

std::size_t Lifetime::dominant_final_state() const {
  std::size_t best = 0;
  double best_rate = -1.0;
  for (const auto& p : partials) {
    if (p.gamma > best_rate) {
      best_rate = p.gamma;
      best = p.n;
    }
  }
  return best;
}

Lifetime lifetime(std::size_t n, const BouncerScales& scales, const PhysicalConstants& constants,
                  double threshold) {
  if (n == 0) throw DomainError("state index must be >= 1");
  Lifetime result{n, 0.0, {}};
  result.partials.reserve(n - 1);
  for (std::size_t f = 1; f < n; ++f) {
    result.partials.push_back(transition(n, f, scales, constants, threshold));
    result.total_rate += result.partials.back().gamma;
  }
  return result;
}

}  // namespace gravibounce

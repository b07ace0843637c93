#include "gravibounce/quadrupole.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gravibounce/airy.hpp"
#include "gravibounce/errors.hpp"

namespace gravibounce {

namespace {

void check_index(std::size_t i) {
  if (i == 0) throw DomainError("state index must be >= 1");
}

QuadrupoleElement assemble(std::size_t k, std::size_t n, double dimensionless,
                           const BouncerScales& scales, double mass) {
  const double physical = dimensionless * scales.z0 * scales.z0;
  return {k, n, dimensionless, physical, mass * physical};
}

}  // namespace

QuadrupoleElement element_closed(std::size_t k, std::size_t n, const BouncerScales& scales,
                                 double mass) {
  check_index(k);
  check_index(n);
  if (k == n) {
    throw DomainError("closed-form <k|z^2|n> diverges for k == n; use element_quadrature");
  }
  const auto& zeros = airy::shared_zero_table();
  const double gap = zeros.lambda(k) - zeros.lambda(n);
  // (-1)^(k-n+1): negative when k and n have the same parity.
  const double sign = ((k + n) % 2 == 0) ? -1.0 : 1.0;
  const double gap2 = gap * gap;
  return assemble(k, n, 24.0 * sign / (gap2 * gap2), scales, mass);
}

quadrature::Result reduced_moment(std::size_t k, std::size_t n, int power) {
  check_index(k);
  check_index(n);
  if (k > kMaxQuadratureIndex || n > kMaxQuadratureIndex) {
    throw DomainError("quadrature route supports indices up to " +
                      std::to_string(kMaxQuadratureIndex));
  }
  const auto& zeros = airy::shared_zero_table();
  const double lk = zeros.lambda(k);
  const double ln = zeros.lambda(n);
  const double scale = 1.0 / (std::fabs(airy::ai_prime(-lk)) * std::fabs(airy::ai_prime(-ln)));
  const double upper = std::max(lk, ln) + kQuadratureTail;

  const auto integrand = [=](double x) {
    return std::pow(x, power) * airy::ai(x - lk) * airy::ai(x - ln) * scale;
  };
  quadrature::Options options;
  options.initial_panels = static_cast<std::size_t>(std::ceil(upper));
  return quadrature::integrate(integrand, 0.0, upper, options);
}

QuadrupoleElement element_quadrature(std::size_t k, std::size_t n, const BouncerScales& scales,
                                     double mass) {
  return assemble(k, n, reduced_moment(k, n, 2).value, scales, mass);
}

}  // namespace gravibounce

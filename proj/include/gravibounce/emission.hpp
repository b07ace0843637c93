#pragma once

#include <cstddef>
#include <vector>

#include "gravibounce/bouncer.hpp"
#include "gravibounce/constants.hpp"

namespace gravibounce {

/// Default bound for the "much less than" in omega_kn z_k << c.
inline constexpr double kDefaultValidityThreshold = 0.1;

/// Downward transition k -> n with E_k > E_n.
struct TransitionRate {
  std::size_t k;
  std::size_t n;
  double omega;             // rad / s
  double gamma;             // 1 / s
  double quadrupole_ratio;  // omega_kn z0 lambda_k / c
  bool valid;               // quadrupole_ratio < threshold
};

/// (E_k - E_n) / hbar. Negative for upward pairs; DomainError for k == n.
double omega(std::size_t k, std::size_t n, const BouncerScales& scales,
             const PhysicalConstants& constants);

/// Semi-classical rate (4/15) omega^5 Q^2 / (M_Pl^2 c^4) for a quadrupole
/// moment Q in kg m^2. DomainError unless omega > 0.
double rate_general(double q_moment, double omega, const PhysicalConstants& constants);

/// Factors of the reduced-rate prefactor (512/5) (m/M_Pl)^2 E0^5 z0^4 c / (hbar c)^5.
struct RatePrefactor {
  double numeric;        // 512 / 5
  double mass_ratio_sq;  // (m / M_Pl)^2
  double scale_term;     // E0^5 z0^4 c / (hbar c)^5, in 1 / s
  double value() const { return numeric * mass_ratio_sq * scale_term; }
};

RatePrefactor rate_prefactor(const BouncerScales& scales, const PhysicalConstants& constants);

/// prefactor / (lambda_k - lambda_n)^3. DomainError unless k > n >= 1.
double rate_reduced(std::size_t k, std::size_t n, const BouncerScales& scales,
                    const PhysicalConstants& constants);

struct Validity {
  double ratio;
  bool valid;
};

/// Worst case over final states: omega_{k,1} z0 lambda_k / c against threshold.
Validity quadrupole_validity(std::size_t k, const BouncerScales& scales,
                             const PhysicalConstants& constants,
                             double threshold = kDefaultValidityThreshold);

/// Full record for k -> n, gamma from the reduced formula.
TransitionRate transition(std::size_t k, std::size_t n, const BouncerScales& scales,
                          const PhysicalConstants& constants,
                          double threshold = kDefaultValidityThreshold);

struct Lifetime {
  std::size_t n;
  double total_rate;                     // 1 / s, sum over all lower states
  std::vector<TransitionRate> partials;  // final state ascending
  /// Final state of the largest partial rate, 0 for the ground state.
  std::size_t dominant_final_state() const;
};

/// Ground state (n == 1) yields a zero rate with no partials.
Lifetime lifetime(std::size_t n, const BouncerScales& scales, const PhysicalConstants& constants,
                  double threshold = kDefaultValidityThreshold);

}  // namespace gravibounce

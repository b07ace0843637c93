#pragma once

#include <cstddef>
#include <shared_mutex>
#include <unordered_map>

namespace gravibounce::airy {

struct AiryValue {
  double ai;
  double ai_prime;
};

/// Ai(x) on the real line. Throws DomainError for non-finite x.
double ai(double x);
/// Ai'(x) on the real line. Throws DomainError for non-finite x.
double ai_prime(double x);
/// Both at once; same cost as either alone.
AiryValue evaluate(double x);

/// Semiclassical estimate (3 pi (4n - 1) / 8)^(2/3) of the n-th zero magnitude.
/// Throws DomainError for n == 0.
double bs_zero(std::size_t n);

/// The n-th negative zero of Ai, stored as its magnitude lambda > 0.
struct AiryZero {
  std::size_t n;
  double lambda;
};

/// Newton refinement of bs_zero(n) on Ai with analytic Ai', falling back to
/// bisection on the bracket between neighbouring bs_zero midpoints. Accuracy
/// is guaranteed for n <= 1e6.
/// Throws DomainError for n == 0 and NumericalError when neither converges.
AiryZero airy_zero(std::size_t n);

/// Bracket [lo, hi] holding exactly the n-th zero magnitude: the midpoints
/// between bs_zero(n - 1), bs_zero(n) and bs_zero(n + 1) (0 below n = 1).
struct Bracket {
  double lo;
  double hi;
};
Bracket zero_bracket(std::size_t n);

/// Memoized zero lookup. Safe for concurrent use: readers see either no
/// entry or a fully refined one.
class ZeroTable {
 public:
  double lambda(std::size_t n) const;
  AiryZero zero(std::size_t n) const { return {n, lambda(n)}; }
  std::size_t cached() const;

 private:
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::size_t, double> zeros_;
};

/// Process-wide table shared by the higher-level modules.
const ZeroTable& shared_zero_table();

/// Individual evaluation schemes, exposed for cross-method verification.
namespace method {

/// Asymptotic expansion of the exponentially decaying branch, x > 0.
/// Truncated at the smallest term.
AiryValue asymptotic_positive(double x);
/// Oscillatory asymptotic expansion, x < 0.
AiryValue asymptotic_negative(double x);
/// Taylor continuation of the Airy ODE y'' = x y from (x0, y0, y0') to x.
AiryValue taylor(double x0, double y0, double yp0, double x);
/// Two-series Maclaurin representation about 0.
AiryValue maclaurin(double x);

}  // namespace method

}  // namespace gravibounce::airy

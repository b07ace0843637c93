#include "gravibounce/airy.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "gravibounce/errors.hpp"

namespace gravibounce::airy {

namespace {

using real = long double;

constexpr real kPi = 3.141592653589793238462643383279502884L;
// Ai(0) = 3^(-2/3) / Gamma(2/3) and -Ai'(0) = 3^(-1/3) / Gamma(1/3).
constexpr real kAi0 = 0.355028053887817239260063186004183176L;
constexpr real kMinusAiPrime0 = 0.258819403792806798405183560189203963L;

constexpr real kEps = std::numeric_limits<real>::epsilon();

// Region boundaries of the evaluation scheme.
constexpr double kMaclaurinLo = -1.0;
constexpr double kMaclaurinHi = 2.0;
constexpr double kPositiveAsymptotic = 12.0;
constexpr double kNegativeAsymptotic = -10.0;
constexpr double kCheckpointStep = 0.5;
constexpr int kPositiveCheckpoints = 21;  // 2.0, 2.5, ..., 12.0
constexpr int kNegativeCheckpoints = 21;  // 0.0, -0.5, ..., -10.0

struct Value {
  real ai;
  real ai_prime;
};

Value taylor_l(real x0, real y0, real yp0, real h) {
  if (h == 0) return {y0, yp0};
  // y = sum a_j h^j with a_{j+2} = (x0 a_j + a_{j-1}) / ((j+2)(j+1)).
  real a_prev = y0;           // a_{j-1}
  real a_cur = yp0;           // a_j
  real a_next = x0 * y0 / 2;  // a_{j+1}
  real hj = h;                // h^{j}
  real y = y0 + yp0 * h + a_next * h * h;
  real yp = yp0 + 2 * a_next * h;
  int quiet = 0;
  for (int j = 1; j < 400; ++j) {
    const real a_new = (x0 * a_cur + a_prev) / static_cast<real>((j + 2) * (j + 1));
    a_prev = a_cur;
    a_cur = a_next;
    a_next = a_new;
    hj *= h;                                // h^{j+1}
    const real dterm = (j + 2) * a_new * hj;
    const real term = a_new * hj * h;
    y += term;
    yp += dterm;
    const bool small = std::fabs(term) <= kEps * 1e-2L * std::fabs(y) &&
                       std::fabs(dterm) <= kEps * 1e-2L * std::fabs(yp);
    // Recurrence couples three coefficients; require a full cycle of small terms.
    quiet = small ? quiet + 1 : 0;
    if (quiet >= 3) break;
  }
  return {y, yp};
}

Value maclaurin_l(real x) {
  // Ai = c1 f - c2 g, f = sum a_{3k} x^{3k}, g = sum b_{3k+1} x^{3k+1}.
  const real x3 = x * x * x;
  real f = 1, fp = 0, g = x, gp = 1;
  real tfp = x * x / 6;  // a_{3k} x^{3k-1}, k = 1
  real tgp = 1;          // b_{3k+1} x^{3k},  k = 0
  for (int k = 1; k < 200; ++k) {
    if (k > 1) tfp *= x3 / static_cast<real>((3 * k - 1) * (3 * k));
    tgp *= x3 / static_cast<real>((3 * k) * (3 * k + 1));
    const real tf = tfp * x;
    const real tg = tgp * x;
    f += tf;
    g += tg;
    fp += 3 * k * tfp;
    gp += (3 * k + 1) * tgp;
    const real tol = kEps * 1e-2L;
    if (std::fabs(tf) <= tol * std::fabs(f) && std::fabs(tg) <= tol * std::fabs(g) &&
        std::fabs(3 * k * tfp) <= tol * std::fabs(fp) &&
        std::fabs((3 * k + 1) * tgp) <= tol * std::fabs(gp)) {
      break;
    }
  }
  return {kAi0 * f - kMinusAiPrime0 * g, kAi0 * fp - kMinusAiPrime0 * gp};
}

// u_k of the Airy asymptotic expansions: u_0 = 1,
// u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1)); v_k = -(6k+1)/(6k-1) u_k.
struct SeriesCoefficients {
  static constexpr int kTerms = 60;
  std::array<real, kTerms> u{};
  std::array<real, kTerms> v{};
  SeriesCoefficients() {
    u[0] = 1;
    v[0] = 1;
    for (int k = 1; k < kTerms; ++k) {
      u[k] = u[k - 1] * static_cast<real>((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) /
             static_cast<real>(216 * k * (2 * k - 1));
      v[k] = -static_cast<real>(6 * k + 1) / static_cast<real>(6 * k - 1) * u[k];
    }
  }
};

const SeriesCoefficients& coefficients() {
  static const SeriesCoefficients c;
  return c;
}

// Number of leading terms of sum c_k zeta^-k to keep: stop before the first
// term that grows or once terms fall below working precision.
int truncation(const std::array<real, SeriesCoefficients::kTerms>& c, real zeta) {
  real prev = std::numeric_limits<real>::infinity();
  real zk = 1;
  for (int k = 0; k < SeriesCoefficients::kTerms; ++k) {
    const real t = std::fabs(c[k]) * zk;
    if (t > prev) return k;
    if (t < kEps * 1e-2L) return k + 1;
    prev = t;
    zk /= zeta;
  }
  return SeriesCoefficients::kTerms;
}

Value asymptotic_positive_l(real x) {
  const auto& co = coefficients();
  const real zeta = 2 * x * std::sqrt(x) / 3;
  const int nu = truncation(co.u, zeta);
  const int nv = truncation(co.v, zeta);
  real su = 0, sv = 0;
  for (int k = nu - 1; k >= 0; --k) su = co.u[k] - su / zeta;
  for (int k = nv - 1; k >= 0; --k) sv = co.v[k] - sv / zeta;
  const real q = std::pow(x, 0.25L);
  const real e = std::exp(-zeta) / (2 * std::sqrt(kPi));
  return {e / q * su, -q * e * sv};
}

Value asymptotic_negative_l(real x) {
  const auto& co = coefficients();
  const real t = -x;
  const real zeta = 2 * t * std::sqrt(t) / 3;
  // Even and odd parts with alternating signs in k; each series stops at its
  // smallest term.
  real pu = 0, qu = 0, pv = 0, qv = 0;
  real zk = 1;
  real last_u = std::numeric_limits<real>::infinity();
  real last_v = last_u;
  bool open_u = true, open_v = true;
  for (int j = 0; j < SeriesCoefficients::kTerms && (open_u || open_v); ++j) {
    const real sign = ((j / 2) % 2 == 0) ? 1 : -1;
    if (open_u) {
      const real term = co.u[j] * zk;
      if (std::fabs(term) > last_u) {
        open_u = false;
      } else {
        (j % 2 == 0 ? pu : qu) += sign * term;
        last_u = std::fabs(term);
        open_u = last_u >= kEps * 1e-2L;
      }
    }
    if (open_v) {
      const real term = co.v[j] * zk;
      if (std::fabs(term) > last_v) {
        open_v = false;
      } else {
        (j % 2 == 0 ? pv : qv) += sign * term;
        last_v = std::fabs(term);
        open_v = last_v >= kEps * 1e-2L;
      }
    }
    zk /= zeta;
  }
  real s, c;
  ::sincosl(zeta - kPi / 4, &s, &c);
  const real q = std::sqrt(std::sqrt(t));
  const real rs = 1 / std::sqrt(kPi);
  return {rs / q * (c * pu + s * qu), rs * q * (s * pv - c * qv)};
}

struct Checkpoints {
  std::array<Value, kPositiveCheckpoints> positive{};  // x = 2 + 0.5 i
  std::array<Value, kNegativeCheckpoints> negative{};  // x = -0.5 i

  Checkpoints() {
    // Downward continuation is stable for the decaying solution.
    const real top = kMaclaurinHi + kCheckpointStep * (kPositiveCheckpoints - 1);
    positive.back() = asymptotic_positive_l(top);
    for (int i = kPositiveCheckpoints - 2; i >= 0; --i) {
      const real x0 = kMaclaurinHi + kCheckpointStep * (i + 1);
      const Value& v = positive[i + 1];
      positive[i] = taylor_l(x0, v.ai, v.ai_prime, -static_cast<real>(kCheckpointStep));
    }
    negative[0] = {kAi0, -kMinusAiPrime0};
    for (int i = 1; i < kNegativeCheckpoints; ++i) {
      const real x0 = -kCheckpointStep * (i - 1);
      const Value& v = negative[i - 1];
      negative[i] = taylor_l(x0, v.ai, v.ai_prime, -static_cast<real>(kCheckpointStep));
    }
  }
};

const Checkpoints& checkpoints() {
  static const Checkpoints cp;
  return cp;
}

Value evaluate_l(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("Airy function argument must be finite");
  }
  if (x > kPositiveAsymptotic) return asymptotic_positive_l(x);
  if (x < kNegativeAsymptotic) return asymptotic_negative_l(x);
  if (x >= kMaclaurinLo && x <= kMaclaurinHi) return maclaurin_l(x);
  const auto& cp = checkpoints();
  if (x > kMaclaurinHi) {
    const int i = static_cast<int>(std::lround((x - kMaclaurinHi) / kCheckpointStep));
    const real x0 = kMaclaurinHi + kCheckpointStep * i;
    return taylor_l(x0, cp.positive[i].ai, cp.positive[i].ai_prime, x - x0);
  }
  const int i = static_cast<int>(std::lround(-x / kCheckpointStep));
  const real x0 = -kCheckpointStep * i;
  return taylor_l(x0, cp.negative[i].ai, cp.negative[i].ai_prime, x - x0);
}

AiryValue to_double(Value v) {
  return {static_cast<double>(v.ai), static_cast<double>(v.ai_prime)};
}

int sign_of_ai_at(double lambda) {
  const double a = ai(-lambda);
  return (a > 0) - (a < 0);
}

}  // namespace

AiryValue evaluate(double x) { return to_double(evaluate_l(x)); }
double ai(double x) { return static_cast<double>(evaluate_l(x).ai); }
double ai_prime(double x) { return static_cast<double>(evaluate_l(x).ai_prime); }

namespace method {

AiryValue asymptotic_positive(double x) {
  if (!(x > 0) || !std::isfinite(x)) throw DomainError("asymptotic_positive requires finite x > 0");
  return to_double(asymptotic_positive_l(x));
}

AiryValue asymptotic_negative(double x) {
  if (!(x < 0) || !std::isfinite(x)) throw DomainError("asymptotic_negative requires finite x < 0");
  return to_double(asymptotic_negative_l(x));
}

AiryValue taylor(double x0, double y0, double yp0, double x) {
  return to_double(taylor_l(x0, y0, yp0, static_cast<real>(x) - x0));
}

AiryValue maclaurin(double x) { return to_double(maclaurin_l(x)); }

}  // namespace method

double bs_zero(std::size_t n) {
  if (n == 0) throw DomainError("Airy zero index must be >= 1");
  return std::pow(3.0 * M_PI / 8.0 * (4.0 * static_cast<double>(n) - 1.0), 2.0 / 3.0);
}

Bracket zero_bracket(std::size_t n) {
  const double here = bs_zero(n);
  const double below = (n == 1) ? 0.0 : bs_zero(n - 1);
  return {0.5 * (below + here), 0.5 * (here + bs_zero(n + 1))};
}

AiryZero airy_zero(std::size_t n) {
  const double seed = bs_zero(n);
  const Bracket bracket = zero_bracket(n);

  constexpr int kMaxNewton = 50;
  constexpr double kStepTol = 1e-13;
  double lambda = seed;
  for (int it = 0; it < kMaxNewton; ++it) {
    const AiryValue v = evaluate(-lambda);
    // d/dlambda Ai(-lambda) = -Ai'(-lambda)
    const double step = v.ai / v.ai_prime;
    const double next = lambda + step;
    if (!std::isfinite(next) || next <= bracket.lo || next >= bracket.hi) break;
    lambda = next;
    const double tol = std::max(kStepTol, 4.0 * std::nextafter(lambda, INFINITY) - 4.0 * lambda);
    if (std::fabs(step) <= tol) return {n, lambda};
  }

  // Bisection on the bracket.
  double lo = bracket.lo;
  double hi = bracket.hi;
  const int sign_lo = sign_of_ai_at(lo);
  const int sign_hi = sign_of_ai_at(hi);
  if (sign_lo == 0) return {n, lo};
  if (sign_hi == 0) return {n, hi};
  if (sign_lo == sign_hi) {
    throw NumericalError("Airy zero " + std::to_string(n) + " failed to converge: bracket [" +
                             std::to_string(lo) + ", " + std::to_string(hi) +
                             "] has no sign change",
                         lambda, hi - lo);
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int s = sign_of_ai_at(mid);
    if (s == 0) return {n, mid};
    (s == sign_lo ? lo : hi) = mid;
  }
  return {n, 0.5 * (lo + hi)};
}

double ZeroTable::lambda(std::size_t n) const {
  {
    std::shared_lock lock(mutex_);
    if (const auto it = zeros_.find(n); it != zeros_.end()) return it->second;
  }
  const double value = airy_zero(n).lambda;
  std::unique_lock lock(mutex_);
  return zeros_.emplace(n, value).first->second;
}

std::size_t ZeroTable::cached() const {
  std::shared_lock lock(mutex_);
  return zeros_.size();
}

const ZeroTable& shared_zero_table() {
  static const ZeroTable table;
  return table;
}

}  // namespace gravibounce::airy

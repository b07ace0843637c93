#include "gravibounce/quadrature.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <tuple>
#include <utility>

#include "gravibounce/errors.hpp"

namespace gravibounce::quadrature {

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Weights for the Gauss nodes kNodes[1], [3], [5], [7].
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double magnitude;  // integral of |f|
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel apply_rule(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  double magnitude = std::fabs(fc) * kKronrodWeights[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const double lo = f(center - dx);
    const double hi = f(center + dx);
    kronrod += kKronrodWeights[j] * (lo + hi);
    magnitude += kKronrodWeights[j] * (std::fabs(lo) + std::fabs(hi));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (lo + hi);
  }
  return {a, b, kronrod * half, std::fabs((kronrod - gauss) * half), magnitude * std::fabs(half)};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& options) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw DomainError("quadrature interval must be finite with b > a");
  }
  const std::size_t initial = std::max<std::size_t>(1, options.initial_panels);

  std::priority_queue<Panel> queue;
  const double width = (b - a) / static_cast<double>(initial);
  for (std::size_t i = 0; i < initial; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = (i + 1 == initial) ? b : a + width * static_cast<double>(i + 1);
    queue.push(apply_rule(f, lo, hi));
  }

  const auto totals = [&queue]() {
    // Copy keeps the heap intact; panel counts stay small enough for this.
    auto copy = queue;
    double value = 0.0;
    double error = 0.0;
    double magnitude = 0.0;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      magnitude += copy.top().magnitude;
      copy.pop();
    }
    return std::tuple{value, error, magnitude};
  };

  auto [value, error, magnitude] = totals();
  // Below the rounding noise of summing |f| no estimate is meaningful.
  const auto floor_of = [](double m) { return 50.0 * std::numeric_limits<double>::epsilon() * m; };
  const auto tolerance = [&](double v) {
    return std::max({options.rel_tol * std::fabs(v), options.abs_tol, floor_of(magnitude)});
  };
  while (true) {
    if (error <= tolerance(value)) {
      // Confirm against a fresh sum; running updates drift.
      std::tie(value, error, magnitude) = totals();
      if (error <= tolerance(value)) break;
    }
    if (queue.size() >= options.max_panels) {
      throw NumericalError("quadrature did not converge: error estimate " +
                               std::to_string(error) + " after " +
                               std::to_string(queue.size()) + " panels",
                           value, error);
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw NumericalError("quadrature panel collapsed below machine resolution", value, error);
    }
    const Panel left = apply_rule(f, worst.a, mid);
    const Panel right = apply_rule(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    magnitude += left.magnitude + right.magnitude - worst.magnitude;
    queue.push(left);
    queue.push(right);
  }
  return {value, error, floor_of(magnitude), queue.size()};
}

}  // namespace gravibounce::quadrature

#pragma once

#include <cstddef>
#include <functional>

namespace gravibounce::quadrature {

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  /// Uniform panels laid down before adaptive refinement starts.
  std::size_t initial_panels = 1;
  std::size_t max_panels = 50000;
};

struct Result {
  double value;
  double error;           // sum of per-panel |K15 - G7| estimates
  double roundoff_floor;  // 50 eps * integral of |f|
  std::size_t panels;
};

/// Globally adaptive 15-point Gauss-Kronrod integration on [a, b]: the panel
/// with the largest embedded-rule error is bisected until the total error
/// estimate is below max(rel_tol |value|, abs_tol, roundoff_floor).
/// Throws NumericalError (carrying the achieved estimate) when max_panels is
/// reached first, DomainError for a non-finite or empty interval.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& options = {});

}  // namespace gravibounce::quadrature

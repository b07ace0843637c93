#include <cmath>

#include "doctest.h"
#include "gravibounce/errors.hpp"
#include "gravibounce/quadrature.hpp"
#include "oracles.hpp"

using namespace gravibounce;

TEST_CASE("single panel is exact for polynomials through degree 22") {
  // 15-point Kronrod rule; the embedded 7-point Gauss rule is exact through
  // degree 13, so the error estimate vanishes there too.
  for (int degree = 0; degree <= 22; ++degree) {
    quadrature::Options opt;
    opt.rel_tol = 1e-300;
    opt.abs_tol = 1e300;  // accept the first pass
    const auto r = quadrature::integrate([degree](double x) { return std::pow(x, degree); }, -1.0,
                                         1.0, opt);
    const double exact = degree % 2 ? 0.0 : 2.0 / (degree + 1);
    CAPTURE(degree);
    CHECK(std::fabs(r.value - exact) <= 1e-15);
    CHECK(r.panels == 1);
    if (degree <= 13) CHECK(r.error <= 1e-15);
  }
}

TEST_CASE("adaptive refinement on smooth and peaked integrands") {
  SUBCASE("exp on [0, 3]") {
    const auto r = quadrature::integrate([](double x) { return std::exp(x); }, 0.0, 3.0);
    CHECK(r.value == doctest::Approx(std::exp(3.0) - 1.0).epsilon(1e-13));
    CHECK(r.error <= 1e-10 * r.value);
  }
  SUBCASE("narrow Lorentzian") {
    const double w = 1e-3;
    const auto r = quadrature::integrate([w](double x) { return w / (x * x + w * w); }, -1.0, 1.0);
    CHECK(r.value == doctest::Approx(2.0 * std::atan(1.0 / w)).epsilon(1e-10));
    CHECK(r.panels > 1);
  }
  SUBCASE("oscillatory, against Simpson") {
    const auto f = [](double x) { return std::sin(20.0 * x) * std::exp(-x); };
    const auto r = quadrature::integrate(f, 0.0, 5.0);
    CHECK(r.value == doctest::Approx(oracle::simpson(f, 0.0, 5.0, 200000)).epsilon(1e-9));
  }
}

TEST_CASE("failure modes") {
  CHECK_THROWS_AS((void)quadrature::integrate([](double) { return 1.0; }, 1.0, 1.0),
                  DomainError);
  CHECK_THROWS_AS((void)quadrature::integrate([](double) { return 1.0; }, 0.0, INFINITY),
                  DomainError);
  quadrature::Options opt;
  opt.max_panels = 4;
  try {
    (void)quadrature::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
    FAIL("expected NumericalError");
  } catch (const NumericalError& e) {
    CHECK(e.error_estimate() > 0.0);
    CHECK(std::isfinite(e.last_value()));
  }
}

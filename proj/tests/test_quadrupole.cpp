#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "gravibounce/airy.hpp"
#include "gravibounce/errors.hpp"
#include "gravibounce/quadrupole.hpp"
#include "oracles.hpp"

using namespace gravibounce;

TEST_CASE("closed-form element for the lowest pair") {
  const auto k = default_constants();
  const auto s = scales(k);
  const double gap = oracle::bisect_zero_n(2) - oracle::bisect_zero_n(1);
  const double expected = 24.0 / std::pow(gap, 4);
  const auto e = element_closed(1, 2, s, k.m());
  CHECK(e.dimensionless == doctest::Approx(expected).epsilon(1e-12));
  CHECK(e.dimensionless == doctest::Approx(2.560).epsilon(1e-3));
  CHECK(e.dimensionless > 0.0);
  CHECK(element_closed(1, 3, s, k.m()).dimensionless < 0.0);
  CHECK(element_closed(2, 1, s, k.m()).dimensionless == e.dimensionless);
  CHECK(e.k == 1);
  CHECK(e.n == 2);
}

TEST_CASE("diagonal and invalid indices") {
  const auto k = default_constants();
  const auto s = scales(k);
  CHECK_THROWS_AS((void)element_closed(3, 3, s, k.m()), DomainError);
  CHECK_THROWS_AS((void)element_closed(0, 3, s, k.m()), DomainError);
  CHECK_THROWS_AS((void)element_quadrature(1, 201, s, k.m()), DomainError);
  CHECK_THROWS_AS((void)reduced_moment(0, 1, 0), DomainError);

  const double lambda3 = airy::airy_zero(3).lambda;
  const double diag = element_quadrature(3, 3, s, k.m()).dimensionless;
  CHECK(diag > 0.0);
  CHECK(diag > 0.1 * lambda3 * lambda3);
  CHECK(diag < lambda3 * lambda3);
  CHECK(reduced_moment(1, 1, 0).value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("closed form against quadrature for k < n <= 20") {
  const auto k = default_constants();
  const auto s = scales(k);
  double worst = 0.0;
  for (std::size_t i = 1; i <= 20; ++i) {
    for (std::size_t j = i + 1; j <= 20; ++j) {
      const auto closed = element_closed(i, j, s, k.m());
      const auto quad = element_quadrature(i, j, s, k.m());
      worst = std::max(worst, std::fabs(closed.dimensionless - quad.dimensionless) /
                                  std::fabs(closed.dimensionless));
      // sign (-1)^(k-n+1)
      const double sign = ((j - i + 1) % 2 == 0) ? 1.0 : -1.0;
      CHECK(closed.dimensionless * sign > 0.0);
      CHECK(quad.dimensionless * sign > 0.0);
    }
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("magnitude decays with the zero gap") {
  const auto s = scales(default_constants());
  std::vector<std::pair<double, double>> closed;  // (gap, |element|)
  std::vector<std::pair<double, double>> quad;
  for (std::size_t i = 1; i <= 20; ++i) {
    for (std::size_t j = i + 1; j <= 20; ++j) {
      const double gap = airy::airy_zero(j).lambda - airy::airy_zero(i).lambda;
      closed.emplace_back(gap, std::fabs(element_closed(i, j, s, 1.0).dimensionless));
      quad.emplace_back(gap, std::fabs(reduced_moment(i, j, 2).value));
    }
  }
  std::sort(closed.begin(), closed.end());
  std::sort(quad.begin(), quad.end());
  for (std::size_t i = 1; i < closed.size(); ++i) {
    CAPTURE(closed[i].first);
    CHECK(closed[i].second < closed[i - 1].second);
    // Gaps closer than the 1e-6 quadrature agreement are not resolvable.
    if (quad[i].first - quad[i - 1].first > 1e-5 * quad[i].first) {
      CHECK(quad[i].second < quad[i - 1].second);
    }
  }
}

TEST_CASE("dimensional consistency") {
  const auto k = default_constants();
  const auto s = scales(k);
  for (auto [i, j] : {std::pair{1, 2}, {2, 7}, {5, 3}}) {
    const auto e = element_closed(i, j, s, k.m());
    CHECK(std::fabs(e.physical - e.dimensionless * s.z0 * s.z0) <= 1e-12 * std::fabs(e.physical));
    CHECK(std::fabs(e.q_moment / (k.m() * s.z0 * s.z0) - e.dimensionless) <=
          1e-12 * std::fabs(e.dimensionless));
    const auto q = element_quadrature(i, j, s, k.m());
    CHECK(std::fabs(q.q_moment / (k.m() * s.z0 * s.z0) - q.dimensionless) <=
          1e-12 * std::fabs(q.dimensionless));
  }
}

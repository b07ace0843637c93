#include <cmath>
#include <sstream>

#include "doctest.h"
#include "gravibounce/bouncer.hpp"
#include "gravibounce/constants.hpp"
#include "gravibounce/errors.hpp"

using namespace gravibounce;

TEST_CASE("default constants") {
  const auto k = default_constants();
  CHECK(k.hbar() == 1.054571817e-34);
  CHECK(k.c() == 2.99792458e8);
  CHECK(k.G() == 6.67430e-11);
  CHECK(k.m() == 1.67492750e-27);
  CHECK(k.g() == 9.81);
  // sqrt(hbar c / G) evaluated independently: 2.176434342e-8 kg
  CHECK(k.m_planck() == doctest::Approx(2.176434342051127e-08).epsilon(1e-12));
  CHECK(k.m() / k.m_planck() < 1.0);
}

TEST_CASE("planck mass scales as G^(-1/2)") {
  const auto k = default_constants();
  const auto doubled = k.with_G(2.0 * k.G());
  CHECK(doubled.m_planck() == doctest::Approx(k.m_planck() / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::fabs(doubled.m_planck() - std::sqrt(doubled.hbar() * doubled.c() / doubled.G())) <=
        1e-12 * doubled.m_planck());
}

TEST_CASE("invalid constants are rejected by name") {
  const auto k = default_constants();
  for (double bad : {0.0, -1.0, std::nan(""), double(INFINITY)}) {
    try {
      (void)k.with_m(bad);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.key() == "m");
    }
  }
  CHECK_THROWS_AS((void)k.with_hbar(-1e-34), ConfigError);
  // super-Planckian particle
  CHECK_THROWS_AS((void)k.with_m(1e-7), ConfigError);
}

TEST_CASE("parsing") {
  SUBCASE("empty input equals defaults") {
    std::istringstream in("");
    CHECK(parse_constants(in) == default_constants());
  }
  SUBCASE("comments and blank lines") {
    std::istringstream in("# header\n\n  g = 4.905   # half gravity\n");
    const auto k = parse_constants(in);
    CHECK(k.g() == 4.905);
    CHECK(k.hbar() == default_constants().hbar());
    const double ratio = scales(k).z0 / scales(default_constants()).z0;
    CHECK(ratio == doctest::Approx(std::cbrt(2.0)).epsilon(1e-13));
  }
  SUBCASE("non-positive value names the key and line") {
    std::istringstream in("hbar = 1.054571817e-34\nm=-1\n");
    try {
      (void)parse_constants(in);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.key() == "m");
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("malformed lines") {
    std::istringstream missing_eq("c 3e8\n");
    CHECK_THROWS_AS((void)parse_constants(missing_eq), ConfigError);
    std::istringstream bad_number("# x\nc = 3e8x\n");
    try {
      (void)parse_constants(bad_number);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.line() == 2);
    }
    std::istringstream unknown("k_B = 1.38e-23\n");
    CHECK_THROWS_AS((void)parse_constants(unknown), ConfigError);
    std::istringstream empty_value("G =\n");
    CHECK_THROWS_AS((void)parse_constants(empty_value), ConfigError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS((void)load_constants("/nonexistent/constants.txt"), ConfigError);
  }
}

TEST_CASE("serialize then parse is bit-exact") {
  // Awkward mantissas that need all 17 digits.
  const PhysicalConstants samples[] = {
      default_constants(),
      PhysicalConstants(1.0 / 3.0 * 1e-33, 2.9979245800000003e8, 6.6743e-11 * (1 + 1e-15),
                        std::nextafter(1.67492750e-27, 1.0), 9.80665),
      default_constants().with_g(0.1 + 0.2).with_m(1e-30 / 7.0),
  };
  for (const auto& k : samples) {
    std::istringstream in(serialize_constants(k));
    const auto back = parse_constants(in);
    CHECK(back == k);
    CHECK(back.m_planck() == k.m_planck());
  }
}

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "wedge/errors.hpp"
#include "wedge/geometry.hpp"

using namespace wedge;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("derived scene constants") {
  const WedgeScene s = derive(kPi / 2.0, kPi / 4.0, 1.0);
  CHECK(s.Phi == doctest::Approx(1.5 * kPi).epsilon(1e-15));
  CHECK(s.q == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(s.theta1 == doctest::Approx(0.75 * kPi).epsilon(1e-15));
  CHECK(s.theta2 == doctest::Approx(1.75 * kPi).epsilon(1e-15));
  CHECK(s.admissible);
}

TEST_CASE("half-plane scene wraps the first critical ray") {
  const WedgeScene s = derive(0.0, kPi, 1.0);
  CHECK(s.Phi == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(s.q == doctest::Approx(0.25).epsilon(1e-15));
  // theta1 = 2*phi - alpha = -pi, shifted once by 2*pi into range.
  CHECK(s.theta1 == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(s.theta2 == doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("scene rejects bad parameters") {
  CHECK_THROWS_AS(derive(-0.1, 0.5, 1.0), ConfigError);
  CHECK_THROWS_AS(derive(kPi + 0.1, 0.5, 1.0), ConfigError);
  CHECK_THROWS_AS(derive(1.0, 0.5, 0.0), ConfigError);
  CHECK_THROWS_AS(derive(1.0, 0.5, -2.0), ConfigError);
}

TEST_CASE("admissibility window") {
  CHECK(derive(kPi / 2.0, 0.3, 1.0).admissible);
  CHECK_FALSE(derive(kPi / 2.0, 1.6, 1.0).admissible);   // above pi/2
  CHECK_FALSE(derive(0.3, 0.4, 1.0).admissible);         // above phi
  CHECK_FALSE(derive(2.0, 0.35, 1.0).admissible);        // below phi - pi/2
}

TEST_CASE("sector classification") {
  const WedgeScene s = derive(kPi / 2.0, kPi / 4.0, 1.0);
  const double band = 1e-6;
  CHECK(classify(s, kPi / 2.0 + 0.1, band) == Sector::I);
  CHECK(classify(s, kPi, band) == Sector::II);
  CHECK(classify(s, 1.9 * kPi, band) == Sector::III);
  CHECK(classify(s, s.theta1 + 0.5 * band, band) == Sector::Critical1);
  CHECK(classify(s, s.theta2 - 0.5 * band, band) == Sector::Critical2);
  CHECK_THROWS_AS(classify(s, 0.1, band), ConfigError);
  CHECK_THROWS_AS(classify(s, 2.0 * kPi + 0.1, band), ConfigError);
}

TEST_CASE("causal window function") {
  CHECK(ac(0.5) == 0.0);
  CHECK(ac(1.0) == 0.0);
  CHECK(ac(2.0) == doctest::Approx(1.3169578969248166).epsilon(1e-15));
  CHECK(std::cosh(ac(7.3)) == doctest::Approx(7.3).epsilon(1e-14));
}

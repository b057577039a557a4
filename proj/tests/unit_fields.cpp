#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "wedge/amplitude.hpp"
#include "wedge/errors.hpp"
#include "wedge/fields.hpp"

using namespace wedge;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

WedgeScene reference() { return derive(kPi / 2.0, kPi / 4.0, 1.0); }
}

TEST_CASE("causality of the diffracted wave") {
  const WedgeScene s = reference();
  QuadratureSpec spec;
  for (const Profile& prof : {Profile::heaviside(), Profile::ramp(0.5)}) {
    const QuadResult r = u_d(s, prof, {2.0, kPi}, 1.5, spec);
    CHECK(std::abs(r.value) < 1e-14);
  }
}

TEST_CASE("before onset the total field is the incident wave") {
  const WedgeScene s = reference();
  QuadratureSpec spec;
  const Profile prof = Profile::ramp(1.0);
  const FieldValue v = u_total(s, prof, {1.0, kPi}, -0.5, spec);
  CHECK(std::abs(v.value - v.in) < 1e-15);
  CHECK(std::abs(v.r) == 0.0);
  CHECK(std::abs(v.d) < 1e-14);
}

TEST_CASE("reflected wave sector dispatch") {
  const WedgeScene s = reference();
  const Profile prof = Profile::heaviside();
  const double t = 10.0;
  CHECK(std::abs(u_r(s, prof, {1.0, s.phi + 0.05}, t)) > 0.5);   // sector I
  CHECK(u_r(s, prof, {1.0, kPi}, t) == Complex{0.0, 0.0});       // sector II
  CHECK(std::abs(u_r(s, prof, {1.0, 1.95 * kPi}, t)) > 0.5);     // sector III
}

TEST_CASE("critical band raises") {
  const WedgeScene s = reference();
  QuadratureSpec spec;
  CHECK_THROWS_AS(u_d(s, Profile::heaviside(), {1.0, s.theta1}, 5.0, spec),
                  CriticalRayError);
  CHECK_THROWS_AS(u_d(s, Profile::heaviside(), {1.0, s.theta2 + 1e-8}, 5.0,
                      spec),
                  CriticalRayError);
}

TEST_CASE("edge point stays bounded") {
  const WedgeScene s = reference();
  QuadratureSpec spec;
  const FieldValue v = u_total(s, Profile::ramp(0.5), {0.0, kPi}, 3.0, spec);
  CHECK(std::isfinite(v.value.real()));
  CHECK(std::isfinite(v.value.imag()));
  CHECK(std::abs(v.value) < 10.0);
}

TEST_CASE("two representations of the spectral integral") {
  const WedgeScene s = reference();
  QuadratureSpec spec;
  const PolarPoint p{1.4, kPi};
  const Complex omega{1.2, 0.8};
  const QuadResult line = j_d(s, p, omega, Representation::RealLine, spec);
  const QuadResult loop = j_d(s, p, omega, Representation::ContourC0, spec);
  CHECK(std::abs(line.value - loop.value) < 1e-8);
}

TEST_CASE("scattered and diffracted transforms agree in the shadow sector") {
  const WedgeScene s = reference();
  QuadratureSpec spec;
  const Profile prof = Profile::ramp(1.0);
  const PolarPoint p{1.0, kPi};
  const Complex omega{1.5, 0.4};
  const Complex us = u_hat_s(s, prof, p, omega, spec);
  const Complex ud = u_hat_d(s, prof, p, omega, Representation::RealLine, spec);
  CHECK(std::abs(us - ud) < 1e-9);
}

TEST_CASE("time derivative relation between the two diffraction integrals") {
  const WedgeScene s = reference();
  QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  const Profile prof = Profile::ramp(1.0);
  const PolarPoint p{1.0, kPi};
  const double t = 1.6;
  const double h = 1e-4;
  auto a_scaled = [&](double tt) {
    return 4.0 * s.Phi * u_d(s, prof, p, tt, spec).value *
           std::exp(kI * s.omega0 * tt);
  };
  const Complex fd = (a_scaled(t + h) - a_scaled(t - h)) / (2.0 * h);
  const Complex wd =
      w_d(s, prof, p, t, spec).value * std::exp(kI * s.omega0 * t);
  CHECK(std::abs(fd - wd) < 1e-5);
}

TEST_CASE("limiting amplitude routes agree") {
  const WedgeScene s = reference();
  QuadratureSpec spec;
  const PolarPoint p{1.0, kPi};
  const AmplitudeSet sum = a_components(s, p, spec);
  const QuadResult loop = a_inf_contour(s, p, spec);
  CHECK(std::abs(sum.a_inf - loop.value) < 1e-8);
}

TEST_CASE("residual tail matches the amplitude difference") {
  const WedgeScene s = reference();
  QuadratureSpec spec;
  const PolarPoint p{1.0, kPi};
  const double t = 12.0;
  const AmplitudeSet amps = a_components(s, p, spec);
  const QuadResult at = a_d_time(s, Profile::heaviside(), p, t, spec);
  const QuadResult tail = r_d(s, p, t, spec);
  CHECK(std::abs((amps.a_d - at.value) - tail.value) < 1e-8);
}

TEST_CASE("half-plane comparison at oblique and grazing incidence") {
  QuadratureSpec spec;
  const HalfplaneReport oblique =
      halfplane_compare(2.6, {1.0, 4.0}, 4.0, 1.0, spec);
  CHECK(oblique.factor == 1.0);
  CHECK(oblique.deviation < 1e-8);
  const HalfplaneReport grazing =
      halfplane_compare(kPi, {1.0, 4.0}, 4.0, 1.0, spec);
  CHECK(grazing.factor == 2.0);
  CHECK(grazing.deviation < 1e-8);
}

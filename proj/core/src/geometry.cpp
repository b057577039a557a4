#include "wedge/geometry.hpp"

#include <numbers>

#include "wedge/errors.hpp"

namespace wedge {

namespace {
constexpr double kPi = std::numbers::pi;
}

WedgeScene derive(double phi, double alpha, double omega0) {
  if (!(phi >= 0.0 && phi <= kPi)) {
    throw ConfigError("phi must lie in [0, pi], got " + std::to_string(phi));
  }
  if (!(omega0 > 0.0)) {
    throw ConfigError("omega0 must be positive, got " + std::to_string(omega0));
  }
  WedgeScene s{};
  s.phi = phi;
  s.alpha = alpha;
  s.omega0 = omega0;
  s.Phi = 2.0 * kPi - phi;
  s.q = kPi / (2.0 * s.Phi);
  s.theta1 = 2.0 * phi - alpha;
  s.theta2 = 2.0 * kPi - alpha;
  if (s.theta1 < phi) s.theta1 += 2.0 * kPi;  // half-plane reduction
  const double lo = std::max(phi - kPi / 2.0, 0.0);
  const double hi = std::min(kPi / 2.0, phi);
  s.admissible = (lo < alpha) && (alpha < hi);
  return s;
}

Sector classify(const WedgeScene& scene, double theta, double band) {
  if (theta < scene.phi - 1e-15 || theta > 2.0 * kPi + 1e-15) {
    throw ConfigError("theta=" + std::to_string(theta) + " outside [phi, 2*pi]");
  }
  if (std::abs(theta - scene.theta1) <= band) return Sector::Critical1;
  if (std::abs(theta - scene.theta2) <= band) return Sector::Critical2;
  if (theta < scene.theta1) return Sector::I;
  if (theta < scene.theta2) return Sector::II;
  return Sector::III;
}

double ac(double x) {
  if (x < 1.0) return 0.0;
  return std::acosh(x);
}

}  // namespace wedge

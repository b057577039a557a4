#pragma once

#include <cmath>

namespace wedge {

/// Wedge/incidence configuration together with every derived constant the
/// field and kernel formulas need. Immutable after construction via derive().
///
/// phi is the wedge magnitude, Phi = 2*pi - phi the exterior angle,
/// q = pi/(2*Phi), theta1 = 2*phi - alpha and theta2 = 2*pi - alpha the
/// critical ray directions. For phi = 0 theta1 is brought back into
/// [phi, 2*pi] by a single 2*pi shift so the sector map covers the
/// half-plane case.
struct WedgeScene {
  double phi;     ///< wedge magnitude, radians, [0, pi]
  double alpha;   ///< incidence direction, radians
  double omega0;  ///< carrier frequency, > 0
  double Phi;     ///< exterior angle 2*pi - phi, in (pi, 2*pi]
  double q;       ///< pi / (2*Phi)
  double theta1;  ///< critical ray from the Q2 face
  double theta2;  ///< critical ray from the Q1 face
  bool admissible;  ///< max{phi - pi/2, 0} < alpha < min{pi/2, phi}
};

/// Evaluation location in polar coordinates, theta in [phi, 2*pi].
struct PolarPoint {
  double rho;
  double theta;
};

enum class Sector {
  I,          ///< phi <= theta < theta1 (reflected wave from Q1 present)
  II,         ///< theta1 < theta < theta2 (shadow of both reflections)
  III,        ///< theta2 < theta <= 2*pi (reflected wave from Q2 present)
  Critical1,  ///< |theta - theta1| <= band
  Critical2,  ///< |theta - theta2| <= band
};

/// Builds a scene from (phi, alpha, omega0). Throws ConfigError on
/// phi outside [0, pi] or omega0 <= 0.
WedgeScene derive(double phi, double alpha, double omega0);

/// Sector of theta relative to the critical rays; Critical1/2 win whenever
/// |theta - theta_l| <= band. Throws ConfigError for theta outside [phi, 2*pi].
Sector classify(const WedgeScene& scene, double theta, double band);

/// ac(x) = arcosh(x) for x >= 1, 0 otherwise. Sets the causal integration
/// window of the diffracted wave.
double ac(double x);

}  // namespace wedge

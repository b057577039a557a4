#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace wedge {

/// Evaluation requested too close to a critical ray theta_1 or theta_2.
class CriticalRayError : public std::domain_error {
 public:
  CriticalRayError(double theta, double critical, double band)
      : std::domain_error("theta=" + std::to_string(theta) +
                          " lies within band " + std::to_string(band) +
                          " of critical ray " + std::to_string(critical)),
        theta(theta),
        critical(critical) {}
  double theta;
  double critical;
};

/// Kernel evaluation requested too close to a pole in the beta plane.
class PoleProximityError : public std::domain_error {
 public:
  explicit PoleProximityError(std::complex<double> pole)
      : std::domain_error("kernel argument within pole-proximity threshold of pole (" +
                          std::to_string(pole.real()) + ", " +
                          std::to_string(pole.imag()) + "i)"),
        pole(pole) {}
  std::complex<double> pole;
};

/// Adaptive quadrature failed to meet the requested tolerances.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid run configuration (CLI or programmatic).
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wedge

#pragma once

#include <complex>

namespace wedge {

enum class ProfileKind { SmoothRamp, Heaviside };

/// Incident-wave profile f. The smooth ramp is f(s) = h(s/s0) with
/// h(x) = e(x)/(e(x) + e(1-x)), e(x) = exp(-1/x) for x > 0 and 0 otherwise:
/// identically 0 for s <= 0, identically 1 for s >= s0, C-infinity and
/// monotone in between. Heaviside takes the value 1 at s = 0.
struct Profile {
  ProfileKind kind = ProfileKind::SmoothRamp;
  double s0 = 1.0;  ///< ramp width; ignored for Heaviside

  static Profile ramp(double s0) { return Profile{ProfileKind::SmoothRamp, s0}; }
  static Profile heaviside() { return Profile{ProfileKind::Heaviside, 0.0}; }
};

double f_eval(const Profile& p, double s);

/// Analytic derivative of the smooth ramp; support in [0, s0] and unit mass.
/// Throws ConfigError for a Heaviside profile.
double f_prime_eval(const Profile& p, double s);

/// g1(s) = i * exp(-i*omega0*s) * f'(s).
std::complex<double> g1_eval(const Profile& p, double omega0, double s);

/// Fourier-Laplace transform of g1: integral over [0, s0] of
/// exp(i*omega*s) * g1(s) ds. Entire in omega.
std::complex<double> g1_hat(const Profile& p, double omega0,
                            std::complex<double> omega);

/// g_hat(omega) = g1_hat(omega) / (omega - omega0); the transform of
/// exp(-i*omega0*s) f(s). Only meaningful away from omega = omega0 on the
/// real axis.
std::complex<double> g_hat(const Profile& p, double omega0,
                           std::complex<double> omega);

}  // namespace wedge

#include "wedge/profiles.hpp"

#include <cmath>

#include "wedge/errors.hpp"
#include "wedge/quadrature.hpp"

namespace wedge {

namespace {

// e(x) = exp(-1/x) for x > 0, 0 otherwise; e'(x) = e(x)/x^2.
double bump_e(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
double bump_e_prime(double x) { return x > 0.0 ? std::exp(-1.0 / x) / (x * x) : 0.0; }

double ramp_h(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = bump_e(x);
  const double b = bump_e(1.0 - x);
  return a / (a + b);
}

double ramp_h_prime(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double a = bump_e(x);
  const double b = bump_e(1.0 - x);
  const double ap = bump_e_prime(x);
  const double bp = bump_e_prime(1.0 - x);
  const double denom = a + b;
  return (ap * b + a * bp) / (denom * denom);
}

}  // namespace

double f_eval(const Profile& p, double s) {
  if (p.kind == ProfileKind::Heaviside) return s >= 0.0 ? 1.0 : 0.0;
  if (!(p.s0 > 0.0)) throw ConfigError("ramp profile needs s0 > 0");
  return ramp_h(s / p.s0);
}

double f_prime_eval(const Profile& p, double s) {
  if (p.kind == ProfileKind::Heaviside) {
    throw ConfigError("f_prime_eval: Heaviside profile has no pointwise derivative");
  }
  if (!(p.s0 > 0.0)) throw ConfigError("ramp profile needs s0 > 0");
  return ramp_h_prime(s / p.s0) / p.s0;
}

std::complex<double> g1_eval(const Profile& p, double omega0, double s) {
  const std::complex<double> i{0.0, 1.0};
  return i * std::exp(-i * omega0 * s) * f_prime_eval(p, s);
}

std::complex<double> g1_hat(const Profile& p, double omega0,
                            std::complex<double> omega) {
  const std::complex<double> i{0.0, 1.0};
  if (p.kind == ProfileKind::Heaviside) {
    // f' = delta at 0, so g1 integrates to i regardless of omega.
    return i;
  }
  QuadratureSpec spec;
  spec.rel_tol = 1e-13;
  spec.abs_tol = 1e-15;
  auto integrand = [&](double s) {
    return std::exp(i * omega * s) * g1_eval(p, omega0, s);
  };
  return integrate_adaptive(integrand, 0.0, p.s0, spec).value;
}

std::complex<double> g_hat(const Profile& p, double omega0,
                           std::complex<double> omega) {
  return g1_hat(p, omega0, omega) / (omega - omega0);
}

}  // namespace wedge

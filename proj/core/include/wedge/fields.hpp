#pragma once

#include "wedge/geometry.hpp"
#include "wedge/profiles.hpp"
#include "wedge/quadrature.hpp"

namespace wedge {

/// Total field value with the incident/reflected/diffracted split.
struct FieldValue {
  Complex value{};
  Complex in{}, r{}, d{};
  double error_estimate = 0.0;
};

/// Which representation a frequency-domain object is evaluated through.
enum class Representation {
  ContourC0,  ///< two horizontal lines at Im beta = -pi/2, -5pi/2 (Im omega > 0)
  RealLine,   ///< real-axis integral of the Z_N kernel (Im omega >= 0)
  ContourC,   ///< Sommerfeld loop contour (Im omega > 0)
};

/// Incident plane wave e^{i omega0 (rho cos(theta-alpha) - t)} f(t - rho cos(theta-alpha)).
Complex u_in(const WedgeScene& s, const Profile& prof, PolarPoint p, double t);

/// Reflected wave: the Q1-face plane wave on [phi, theta1], zero strictly
/// between the critical rays, the Q2-face plane wave on [theta2, 2*pi]
/// (endpoints included in the reflected sectors).
Complex u_r(const WedgeScene& s, const Profile& prof, PolarPoint p, double t);

/// Diffracted wave
///   u_d = (i e^{-i omega0 t} / (4 Phi)) *
///         Int e^{i omega0 rho cosh(beta)} Z_N(beta+i theta) f(t - rho cosh(beta)) dbeta.
/// The integrand is supported on |beta| <= ac(t/rho) and further truncated by
/// the kernel decay. Throws CriticalRayError when theta sits within spec.band
/// of a critical ray.
QuadResult u_d(const WedgeScene& s, const Profile& prof, PolarPoint p, double t,
               const QuadratureSpec& spec);

/// u = u_in + u_r + u_d with the breakdown populated.
FieldValue u_total(const WedgeScene& s, const Profile& prof, PolarPoint p,
                   double t, const QuadratureSpec& spec);

/// J_d(rho, theta, omega):
///   RealLine:  Int_R e^{i rho omega cosh(beta)} Z_N(beta + i theta) dbeta,
///   ContourC0: the same object as a contour integral of
///              e^{-rho omega sinh(beta)} H_N(beta + i theta) over the two
///              horizontal lines Im beta = -pi/2 (right to left) and
///              Im beta = -5pi/2 (left to right); needs Im omega > 0.
QuadResult j_d(const WedgeScene& s, PolarPoint p, Complex omega,
               Representation rep, const QuadratureSpec& spec);

/// Frequency-domain diffracted wave
///   (i/(4 Phi)) * g1_hat(omega)/(omega - omega0) * J_d.
/// Real omega must differ from omega0.
Complex u_hat_d(const WedgeScene& s, const Profile& prof, PolarPoint p,
                Complex omega, Representation rep, const QuadratureSpec& spec);

/// Frequency-domain scattered wave for Im omega > 0:
///   -g_hat(omega) e^{i rho omega cos(theta-alpha)}
///   + (i g_hat(omega)/(4 Phi)) Int_C e^{-rho omega sinh(beta)} H_N(beta+i theta) dbeta
/// over the Sommerfeld loop contour C.
Complex u_hat_s(const WedgeScene& s, const Profile& prof, PolarPoint p,
                Complex omega, const QuadratureSpec& spec);

/// w_d = i e^{-i omega0 t} Int e^{i rho omega0 cosh(beta)} Z_N(beta+i theta)
///       f'(t - rho cosh(beta)) dbeta  (smooth ramp only).
QuadResult w_d(const WedgeScene& s, const Profile& prof, PolarPoint p, double t,
               const QuadratureSpec& spec);

/// Analytic theta-derivatives used by the jump-compensation checks
/// (smooth ramp only for the derivative of the profile argument).
Complex u_in_dtheta(const WedgeScene& s, const Profile& prof, PolarPoint p,
                    double t);
Complex u_r_dtheta(const WedgeScene& s, const Profile& prof, PolarPoint p,
                   double t);
QuadResult u_d_dtheta(const WedgeScene& s, const Profile& prof, PolarPoint p,
                      double t, const QuadratureSpec& spec);

}  // namespace wedge

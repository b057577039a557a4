#pragma once

#include "wedge/fields.hpp"
#include "wedge/geometry.hpp"
#include "wedge/profiles.hpp"
#include "wedge/quadrature.hpp"

namespace wedge {

/// Limiting amplitudes at a point: A_inf = A_in + A_r + A_d by construction
/// (the independent contour route is a_inf_contour).
struct AmplitudeSet {
  Complex a_in{}, a_r{}, a_d{}, a_inf{};
  double error_estimate = 0.0;
};

/// Leading-order convergence law of the residual R_d = A_d - A_d(t):
///   Im[e^{-i omega0 t} R_d] ~ im_coeff * t^{im_exponent},
///   Re[e^{-i omega0 t} R_d] ~ re_coeff * t^{re_exponent},
/// with im_exponent = -(2q+1), re_exponent = -(2q+2).
struct RatePrediction {
  double re_coeff = 0.0;
  double re_exponent = 0.0;
  double im_coeff = 0.0;
  double im_exponent = 0.0;
};

/// Route used by the half-plane comparison field.
enum class HewettRoute {
  SIntegral,    ///< the s-integral form, evaluated after s = rho cosh(beta)
  BetaIntegral  ///< the symmetric beta-integral with the B kernel
};

/// Sum route: A_in = e^{i omega0 rho cos(theta-alpha)}, A_r sector-dispatched
/// (zero on the closed band [theta1, theta2]), A_d by kernel quadrature.
AmplitudeSet a_components(const WedgeScene& s, PolarPoint p,
                          const QuadratureSpec& spec);

/// Contour route for the limiting amplitude:
///   (i/(4 Phi)) Int_{C1+} e^{-omega0 rho sinh(beta)} H_N(beta + i theta) dbeta
/// over the steepest-descent-shifted Sommerfeld contour.
QuadResult a_inf_contour(const WedgeScene& s, PolarPoint p,
                         const QuadratureSpec& spec);

/// Time-dependent diffracted amplitude A_d(rho, theta, t) = u_d * e^{i omega0 t}.
QuadResult a_d_time(const WedgeScene& s, const Profile& prof, PolarPoint p,
                    double t, const QuadratureSpec& spec);

/// Residual R_d = A_d - A_d(t) for the Heaviside profile, evaluated as the
/// tail integral (i/(4 Phi)) Int_{|beta| >= ac(t/rho)} e^{i omega0 rho cosh}
/// Z_N dbeta.
QuadResult r_d(const WedgeScene& s, PolarPoint p, double t,
               const QuadratureSpec& spec);

/// E_p(rho, t) = Int_{ac(t/rho)}^{inf} e^{i omega0 rho cosh(beta) - p beta} dbeta.
QuadResult e_p(double rho, double t, double pexp, double omega0,
               const QuadratureSpec& spec);

/// Closed-form leading coefficients/exponents of the residual decay.
RatePrediction rate_prediction(const WedgeScene& s, PolarPoint p);

/// Half-plane diffracted field of the comparison literature, for a Heaviside
/// profile on the Phi = 2*pi scene with incidence offset theta0 = alpha - pi.
Complex hewett_phi_d(double rho, double theta, double t, double theta0,
                     double omega0, HewettRoute route,
                     const QuadratureSpec& spec);

/// Comparison result between the wedge evaluator at phi = 0 and the
/// half-plane reference field.
struct HalfplaneReport {
  Complex ud{};       ///< diffracted wave from the wedge representation
  Complex phi_d{};    ///< reference half-plane field
  double factor = 1;  ///< expected ratio ud / phi_d (2 at grazing incidence)
  double deviation = 0.0;  ///< |ud - factor * phi_d|
};

HalfplaneReport halfplane_compare(double alpha, PolarPoint p, double t,
                                  double omega0, const QuadratureSpec& spec);

}  // namespace wedge

#pragma once

#include <string>
#include <vector>

#include "wedge/fields.hpp"
#include "wedge/geometry.hpp"
#include "wedge/profiles.hpp"
#include "wedge/quadrature.hpp"

namespace wedge {

/// One numerical verification outcome. For order-of-convergence checks the
/// observed/expected pair holds the measured and targeted ratio or slope.
struct CheckReport {
  std::string name;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string details;
};

/// Discrete wave-operator residual of the total field at an interior point:
/// compares the centered second-order residual at steps h0 and h0/2 and
/// passes on a ratio in [3.4, 4.6] (second order) or both residuals tiny.
CheckReport check_pde(const WedgeScene& s, const Profile& prof, PolarPoint p,
                      double t, double h0, const QuadratureSpec& spec);

enum class Face { Q1, Q2 };  ///< Q1: theta = 2*pi face; Q2: theta = phi face

/// One-sided second-order normal-derivative residual on a wedge face.
CheckReport check_neumann(const WedgeScene& s, const Profile& prof, Face side,
                          double rho, double t, double h0,
                          const QuadratureSpec& spec);

/// Jump compensation across a critical ray: the mismatch of
/// d^k(u_r + u_d)/dtheta^k at theta_l +- eps must extrapolate to zero
/// linearly in eps over the ladder {1e-2, 5e-3, 2.5e-3}.
CheckReport check_jump(const WedgeScene& s, const Profile& prof, int ray,
                       double rho, double t, int k, const QuadratureSpec& spec);

/// Representation equivalences: J_d contour vs real line, limiting amplitude
/// sum vs contour, two transform routes for the frequency-domain diffracted
/// wave, and the half-plane comparison when Phi = 2*pi.
std::vector<CheckReport> check_equivalences(const WedgeScene& s,
                                            const Profile& prof,
                                            const QuadratureSpec& spec);

/// Log-log slope fits of the residual decay (Heaviside profile), compared to
/// the predicted exponents -(2q+1) and -(2q+2) and the predicted leading
/// Im coefficient magnitude.
std::vector<CheckReport> check_rates(const WedgeScene& s, PolarPoint p,
                                     const QuadratureSpec& spec);

/// Least-squares slope of log|v| against log t; points with |v| below
/// discard_below are skipped. Returns NaN when fewer than 3 points survive.
double loglog_slope(const std::vector<double>& t, const std::vector<double>& v,
                    double discard_below);

}  // namespace wedge

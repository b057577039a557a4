#pragma once

#include <array>
#include <complex>
#include <vector>

#include "wedge/geometry.hpp"
#include "wedge/quadrature.hpp"

namespace wedge {

/// Overflow-safe hyperbolic cotangent: evaluated through exp(-2z) in the
/// half-plane Re z > 0 and extended by oddness, saturating to +-1 for
/// |Re z| > 20.
Complex coth_safe(Complex z);

/// Overflow-safe 1/sinh, same evaluation strategy as coth_safe.
Complex inv_sinh_safe(Complex z);

/// Distance below which a kernel argument counts as sitting on a pole
/// (measured as |sinh(q * arg)|).
inline constexpr double kPoleProximity = 1e-9;

/// Sound-hard (both faces) wedge kernel
/// H_N(b) = coth[q(b + i pi/2 - i alpha)] + coth[q(b - i 3pi/2 + i alpha)].
Complex h_nn(const WedgeScene& s, Complex beta);

/// Sound-soft counterpart: same coth pair joined by a minus sign.
Complex h_dd(const WedgeScene& s, Complex beta);

/// Mixed soft/hard kernel: 1/sinh at the same two arguments, joined by plus.
Complex h_dn(const WedgeScene& s, Complex beta);

/// Diffraction kernel Z_N(beta + i theta) with
/// Z_N(b) = H_N(b - i 5pi/2) - H_N(b - i pi/2).
/// Throws PoleProximityError when any coth argument is within kPoleProximity
/// of a pole of coth.
Complex z_nn(const WedgeScene& s, Complex beta, double theta);

/// Analytic d/dbeta of z_nn (each coth contributes -q/sinh^2).
Complex z_nn_dbeta(const WedgeScene& s, Complex beta, double theta);

/// Analytic d/dtheta of z_nn; equals i * z_nn_dbeta.
Complex z_nn_dtheta(const WedgeScene& s, Complex beta, double theta);

/// Analytic d/dbeta of h_nn.
Complex h_nn_dbeta(const WedgeScene& s, Complex beta);

/// Purely imaginary poles of beta -> Z_N(beta + i theta), listed for
/// Im(beta) in [im_lo, im_hi]: the union of the four progressions
/// i(alpha - theta) + 2ik Phi, i(alpha - theta + 2 pi) + 2ik Phi,
/// i(2 pi - alpha - theta) + 2ik Phi, i(4 pi - alpha - theta) + 2ik Phi,
/// one per coth factor of the kernel, k integer.
std::vector<Complex> zn_poles(const WedgeScene& s, double theta, double im_lo,
                              double im_hi);

/// Large-|beta| expansion of the diffraction kernel:
///   Z_N(beta + i theta) = i*b1 * [ sum_k zk^{+-} exp(-+ 2 k q beta) + tail ],
/// with b1 = 4 sin(pi^2 / Phi), the upper signs for beta -> +inf and the
/// lower for beta -> -inf, and the tail of order exp(-14 q |beta|).
/// Coefficients are exact closed forms, not fitted. zsum[k] = zk^+ + zk^-
/// is real and drives the residual decay rates.
struct ZnExpansion {
  double b1 = 0.0;
  std::array<Complex, 6> zp{};  ///< coefficients for beta -> +infinity
  std::array<Complex, 6> zm{};  ///< coefficients for beta -> -infinity
  std::array<double, 6> zsum{};
};

ZnExpansion zn_expansion(const WedgeScene& s, double theta);

/// Evaluates the truncated expansion (1..6 terms) at real beta, picking the
/// branch by the sign of beta. Requires |beta| >= ln2/q, the region where the
/// remainder bound applies.
Complex zn_series_eval(const ZnExpansion& e, const WedgeScene& s, double beta,
                       int terms = 6);

/// Half-plane kernel in Malyuzhinets form:
/// A(b) = -sinh(i a/2)/2 * [ cosh((b+it)/2) /
///        (sinh((b+it+ia)/2) sinh((b+it-ia)/2)) + (t -> -t) ].
Complex a_halfplane(double alpha, Complex beta, double theta);

/// Half-plane kernel in the comparison literature's form:
/// B(b) = [ sinh(i(t-a)/2)/(cosh b - cos(t-a))
///        - sinh(i(t+a)/2)/(cosh b - cos(t+a)) ] cosh(b/2).
Complex b_halfplane(double alpha, Complex beta, double theta);

}  // namespace wedge

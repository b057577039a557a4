#pragma once

#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace wedge {

using Complex = std::complex<double>;
using RealFn = std::function<Complex(double)>;

/// Tolerances and budgets shared by every integral evaluation.
struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  std::size_t max_panels = std::size_t{1} << 20;
  double osc_panel_phase = std::numbers::pi / 4.0;  ///< max phase change per panel
  double band = 1e-6;  ///< critical-ray exclusion half-width, radians
};

/// Integral value together with the accumulated error estimate.
struct QuadResult {
  Complex value{};
  double error = 0.0;
};

/// Adaptive Gauss-Kronrod 7/15 on a finite interval.
QuadResult integrate_adaptive(const RealFn& f, double a, double b,
                              const QuadratureSpec& spec);

/// Integral over the whole real line of an integrand bounded by
/// M * exp(-decay_rate*|x|) outside a core. The truncation radius is chosen
/// from the sampled envelope; a non-decreasing envelope raises QuadratureError.
QuadResult integrate_decaying(const RealFn& f, double decay_rate,
                              const QuadratureSpec& spec);

/// Finite-interval integral of an oscillatory integrand. local_freq bounds
/// |d phase/dx|; panels are capped at osc_panel_phase / local_freq before
/// adaptive refinement.
QuadResult integrate_oscillatory_finite(const RealFn& f, double a, double b,
                                        const std::function<double(double)>& local_freq,
                                        const QuadratureSpec& spec);

/// Piecewise-linear path in the complex plane, with optional semi-infinite
/// rays attached at either end. Rays must point into a decay region of the
/// integrand (caller-asserted via ray_decay).
struct ContourPath {
  struct Segment {
    Complex start;
    Complex end;
  };
  struct Ray {
    Complex anchor;
    Complex direction;  ///< unit complex
  };
  std::vector<Segment> segments;
  std::vector<Ray> rays;
  bool reversed = false;

  static ContourPath polyline(std::vector<Complex> pts);
  ContourPath& add_ray(Complex anchor, Complex direction);
};

/// Contour integral of an analytic f along path. Rays are truncated where the
/// sampled envelope falls below abs_tol; a growing ray envelope raises
/// QuadratureError.
QuadResult integrate_contour(const std::function<Complex(Complex)>& f,
                             const ContourPath& path, double ray_decay,
                             const QuadratureSpec& spec);

/// Integral over [a, +infinity), a > 0, of exp(i*rho*omega*cosh(beta))*g(beta)
/// for Im(omega) >= 0, where g is analytic between the real axis and
/// Im(beta) = +-pi/2 for Re(beta) >= a and satisfies
/// |g| <= M*exp(-g_decay*Re(beta)). Naive truncation fails here: the phase
/// grows like e^beta while the envelope decays only geometrically. When the
/// cosh-decay from Im(omega) reaches tolerance within an affordable phase
/// budget, the real line is integrated directly; otherwise the tail is
/// deformed onto Im(beta) = sign(Re omega)*pi/2, where the oscillation turns
/// into pure exponential decay.
QuadResult integrate_cosh_phase_tail(const std::function<Complex(Complex)>& g,
                                     double a, double rho, Complex omega,
                                     double g_decay, const QuadratureSpec& spec);

}  // namespace wedge

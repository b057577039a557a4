#include "wedge/amplitude.hpp"

#include <cmath>
#include <numbers>

#include "wedge/errors.hpp"
#include "wedge/kernels.hpp"

namespace wedge {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// Tail of e^{i omega0 rho cosh(beta)} g(beta) over [a, inf) for any a >= 0:
// a short oscillatory core up to 1 when a < 1, then the deformed-tail
// integrator which is only valid for a > 0.
QuadResult cosh_tail_from(const std::function<Complex(Complex)>& g, double a,
                          double rho, double omega0, double g_decay,
                          const QuadratureSpec& spec) {
  QuadResult out{};
  double start = a;
  if (a < 1.0) {
    auto f = [&](double x) {
      return std::exp(kI * omega0 * rho * std::cosh(x)) * g(Complex{x, 0.0});
    };
    auto freq = [&](double x) { return omega0 * rho * std::sinh(x); };
    const QuadResult core = integrate_oscillatory_finite(f, a, 1.0, freq, spec);
    out.value += core.value;
    out.error += core.error;
    start = 1.0;
  }
  const QuadResult tail = integrate_cosh_phase_tail(
      g, start, rho, Complex{omega0, 0.0}, g_decay, spec);
  out.value += tail.value;
  out.error += tail.error;
  return out;
}

}  // namespace

AmplitudeSet a_components(const WedgeScene& s, PolarPoint p,
                          const QuadratureSpec& spec) {
  AmplitudeSet a;
  a.a_in = std::exp(kI * s.omega0 * p.rho * std::cos(p.theta - s.alpha));
  if (p.theta < s.theta1) {
    a.a_r = std::exp(kI * s.omega0 * p.rho * std::cos(p.theta - s.theta1));
  } else if (p.theta > s.theta2) {
    a.a_r = std::exp(kI * s.omega0 * p.rho * std::cos(p.theta - s.theta2));
  }
  const QuadResult jd =
      j_d(s, p, Complex{s.omega0, 0.0}, Representation::RealLine, spec);
  a.a_d = kI / (4.0 * s.Phi) * jd.value;
  a.error_estimate = jd.error / (4.0 * s.Phi);
  a.a_inf = a.a_in + a.a_r + a.a_d;
  return a;
}

QuadResult a_inf_contour(const WedgeScene& s, PolarPoint p,
                         const QuadratureSpec& spec) {
  if (!(p.rho > 0.0)) throw ConfigError("a_inf_contour requires rho > 0");
  const Sector sec = classify(s, p.theta, spec.band);
  if (sec == Sector::Critical1) {
    throw CriticalRayError(p.theta, s.theta1, spec.band);
  }
  if (sec == Sector::Critical2) {
    throw CriticalRayError(p.theta, s.theta2, spec.band);
  }
  auto f = [&](Complex b) {
    return std::exp(-s.omega0 * p.rho * std::sinh(b)) *
           h_nn(s, b + kI * p.theta);
  };
  // Ray envelope: |exp| = e^{-omega0 rho sinh(x) cos(level)} with
  // cos(level) = +-sqrt(2)/2 on all four rays.
  double m_est = 2.0;
  for (double x : {1.0, 2.0, -1.0, -2.0}) {
    for (double lvl : {-kPi / 4.0, -3.0 * kPi / 4.0}) {
      m_est = std::max(m_est, std::abs(h_nn(s, Complex{x, lvl} + kI * p.theta)));
    }
  }
  const double root2 = std::numbers::sqrt2;
  const double budget =
      std::log(m_est / std::max(spec.abs_tol, 1e-300)) * root2 /
      (s.omega0 * p.rho);
  const double b_cut = std::max(2.0, std::asinh(budget) + 1.0);
  auto freq = [&](double x) {
    return s.omega0 * p.rho * std::cosh(x) / root2;
  };
  auto hleg = [&](double level, double xa, double xb) {
    auto fr = [&](double x) { return f(Complex{x, level}); };
    return integrate_oscillatory_finite(fr, xa, xb, freq, spec);
  };
  auto vleg = [&](Complex from, Complex to) {
    const Complex d = to - from;
    auto fv = [&](double u) { return f(from + u * d) * d; };
    return integrate_adaptive(fv, 0.0, 1.0, spec);
  };
  QuadResult total{};
  auto add = [&](QuadResult r, double sign) {
    total.value += sign * r.value;
    total.error += r.error;
  };
  // Right loop: shifted C1 with rays at Im = -pi/4 and -9pi/4.
  add(hleg(-kPi / 4.0, 1.0, b_cut), -1.0);  // +inf -> 1
  add(vleg(Complex{1.0, -kPi / 4.0}, Complex{1.0, -9.0 * kPi / 4.0}), 1.0);
  add(hleg(-9.0 * kPi / 4.0, 1.0, b_cut), 1.0);  // 1 -> +inf
  // Left loop: mirror with rays at Im = -11pi/4 and -3pi/4.
  add(hleg(-11.0 * kPi / 4.0, -b_cut, -1.0), 1.0);  // -inf -> -1
  add(vleg(Complex{-1.0, -11.0 * kPi / 4.0}, Complex{-1.0, -3.0 * kPi / 4.0}),
      1.0);
  add(hleg(-3.0 * kPi / 4.0, -b_cut, -1.0), -1.0);  // -1 -> -inf
  total.value *= kI / (4.0 * s.Phi);
  total.error /= 4.0 * s.Phi;
  return total;
}

QuadResult a_d_time(const WedgeScene& s, const Profile& prof, PolarPoint p,
                    double t, const QuadratureSpec& spec) {
  QuadResult r = u_d(s, prof, p, t, spec);
  r.value *= std::exp(kI * s.omega0 * t);
  return r;
}

QuadResult r_d(const WedgeScene& s, PolarPoint p, double t,
               const QuadratureSpec& spec) {
  if (!(p.rho > 0.0)) throw ConfigError("r_d requires rho > 0");
  const Sector sec = classify(s, p.theta, spec.band);
  if (sec == Sector::Critical1) {
    throw CriticalRayError(p.theta, s.theta1, spec.band);
  }
  if (sec == Sector::Critical2) {
    throw CriticalRayError(p.theta, s.theta2, spec.band);
  }
  const double a = ac(t / p.rho);
  auto gp = [&](Complex b) { return z_nn(s, b, p.theta); };
  auto gm = [&](Complex b) { return z_nn(s, -b, p.theta); };
  const QuadResult rp =
      cosh_tail_from(gp, a, p.rho, s.omega0, 2.0 * s.q, spec);
  const QuadResult rm =
      cosh_tail_from(gm, a, p.rho, s.omega0, 2.0 * s.q, spec);
  QuadResult out;
  out.value = kI / (4.0 * s.Phi) * (rp.value + rm.value);
  out.error = (rp.error + rm.error) / (4.0 * s.Phi);
  return out;
}

QuadResult e_p(double rho, double t, double pexp, double omega0,
               const QuadratureSpec& spec) {
  if (!(pexp > 0.0)) throw ConfigError("e_p requires a positive exponent");
  if (!(rho > 0.0)) throw ConfigError("e_p requires rho > 0");
  const double a = ac(t / rho);
  auto g = [&](Complex b) { return std::exp(-pexp * b); };
  return cosh_tail_from(g, a, rho, omega0, pexp, spec);
}

RatePrediction rate_prediction(const WedgeScene& s, PolarPoint p) {
  const ZnExpansion e = zn_expansion(s, p.theta);
  const double z1 = e.zsum[0];
  const double scale = std::pow(p.rho / 2.0, 2.0 * s.q);
  RatePrediction r;
  r.im_exponent = -(2.0 * s.q + 1.0);
  r.re_exponent = -(2.0 * s.q + 2.0);
  r.im_coeff = -e.b1 * z1 / (4.0 * s.Phi * s.omega0) * scale;
  r.re_coeff =
      -e.b1 * z1 * (2.0 * s.q + 1.0) / (4.0 * s.Phi * s.omega0 * s.omega0) *
      scale;
  return r;
}

Complex hewett_phi_d(double rho, double theta, double t, double theta0,
                     double omega0, HewettRoute route,
                     const QuadratureSpec& spec) {
  if (!(rho > 0.0)) throw ConfigError("hewett_phi_d requires rho > 0");
  if (t <= rho) return Complex{0.0, 0.0};
  const double w = ac(t / rho);
  const bool grazing = std::abs(theta0) < 1e-14;
  auto freq = [&](double x) { return omega0 * rho * std::abs(std::sinh(x)); };

  if (route == HewettRoute::BetaIntegral) {
    const double alpha = theta0 + kPi;
    for (double gamma : {theta - alpha, theta + alpha}) {
      if (std::abs(std::cos(gamma / 2.0)) < 1e-6) {
        throw ConfigError("hewett_phi_d: theta in the sgn-flip band");
      }
    }
    auto f = [&](double beta) {
      return std::exp(kI * omega0 * rho * std::cosh(beta)) *
             b_halfplane(alpha, Complex{beta, 0.0}, theta);
    };
    const QuadResult r = integrate_oscillatory_finite(f, -w, w, freq, spec);
    const Complex v = kI * std::exp(-kI * omega0 * t) / (2.0 * kPi) * r.value;
    return grazing ? v / 2.0 : v;
  }

  // s-integral form after the substitution s = rho cosh(beta):
  //   -sgn(pi-gamma) sqrt(rho (1+cos gamma)) *
  //     Int_0^w e^{i omega0 rho cosh b} (2/sqrt(2 rho)) cosh(b/2) /
  //       (cosh b + cos gamma) db
  // summed over gamma = theta -+ theta0 (a single term at grazing incidence).
  auto term = [&](double gamma) {
    if (std::abs(std::cos(gamma / 2.0)) < 1e-6) {
      throw ConfigError("hewett_phi_d: theta in the sgn-flip band");
    }
    const double sgn = (kPi - gamma) >= 0.0 ? 1.0 : -1.0;
    const double amp = std::sqrt(rho * (1.0 + std::cos(gamma)));
    auto f = [&](double b) {
      return std::exp(kI * omega0 * rho * std::cosh(b)) * 2.0 /
             std::sqrt(2.0 * rho) * std::cosh(b / 2.0) /
             (std::cosh(b) + std::cos(gamma));
    };
    const QuadResult r = integrate_oscillatory_finite(f, 0.0, w, freq, spec);
    return -sgn * amp * r.value;
  };
  Complex sum;
  if (grazing) {
    sum = term(theta);
  } else {
    sum = term(theta - theta0) + term(theta + theta0);
  }
  // Overall orientation fixed to the symmetric beta-kernel form, which both
  // routes must reproduce; the raw s-form carries the opposite global sign.
  return -std::exp(-kI * omega0 * t) / (2.0 * kPi) * sum;
}

HalfplaneReport halfplane_compare(double alpha, PolarPoint p, double t,
                                  double omega0, const QuadratureSpec& spec) {
  const WedgeScene s = derive(0.0, alpha, omega0);
  HalfplaneReport rep;
  rep.ud = u_d(s, Profile::heaviside(), p, t, spec).value;
  const double theta0 = alpha - kPi;
  const bool grazing = std::abs(theta0) < 1e-14;
  rep.phi_d = hewett_phi_d(p.rho, p.theta, t, grazing ? 0.0 : theta0, omega0,
                           HewettRoute::SIntegral, spec);
  rep.factor = grazing ? 2.0 : 1.0;
  rep.deviation = std::abs(rep.ud - rep.factor * rep.phi_d);
  return rep;
}

}  // namespace wedge

#include "wedge/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wedge/errors.hpp"
#include "wedge/kernels.hpp"

namespace wedge {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

Complex plane_wave(const Profile& prof, double omega0, double rho, double rel,
                   double t) {
  // e^{i omega0 (rho cos(rel) - t)} f(t - rho cos(rel)), rel = theta - dir.
  const double c = rho * std::cos(rel);
  return std::exp(kI * omega0 * (c - t)) * f_eval(prof, t - c);
}

Complex plane_wave_dtheta(const Profile& prof, double omega0, double rho,
                          double rel, double t) {
  const double c = rho * std::cos(rel);
  const double dc = -rho * std::sin(rel);
  return std::exp(kI * omega0 * (c - t)) *
         (kI * omega0 * f_eval(prof, t - c) - f_prime_eval(prof, t - c)) * dc;
}

void require_off_critical(const WedgeScene& s, double theta, double band) {
  const Sector sec = classify(s, theta, band);
  if (sec == Sector::Critical1) throw CriticalRayError(theta, s.theta1, band);
  if (sec == Sector::Critical2) throw CriticalRayError(theta, s.theta2, band);
}

// Truncation radius where C * e^{-2q|beta|} reaches abs_tol, with C sampled
// from the kernel itself.
double kernel_truncation(const WedgeScene& s, double theta, double abs_tol) {
  double c_est = 1e-30;
  for (double b : {0.5, 1.0, 2.0}) {
    c_est = std::max({c_est,
                      std::abs(z_nn(s, Complex{b, 0.0}, theta)) *
                          std::exp(2.0 * s.q * b),
                      std::abs(z_nn(s, Complex{-b, 0.0}, theta)) *
                          std::exp(2.0 * s.q * b)});
  }
  return std::max(3.0, std::log(c_est / std::max(abs_tol, 1e-300)) /
                           (2.0 * s.q));
}

}  // namespace

Complex u_in(const WedgeScene& s, const Profile& prof, PolarPoint p, double t) {
  return plane_wave(prof, s.omega0, p.rho, p.theta - s.alpha, t);
}

Complex u_r(const WedgeScene& s, const Profile& prof, PolarPoint p, double t) {
  if (p.theta <= s.theta1) {
    return plane_wave(prof, s.omega0, p.rho, p.theta - s.theta1, t);
  }
  if (p.theta >= s.theta2) {
    return plane_wave(prof, s.omega0, p.rho, p.theta - s.theta2, t);
  }
  return Complex{0.0, 0.0};
}

Complex u_in_dtheta(const WedgeScene& s, const Profile& prof, PolarPoint p,
                    double t) {
  return plane_wave_dtheta(prof, s.omega0, p.rho, p.theta - s.alpha, t);
}

Complex u_r_dtheta(const WedgeScene& s, const Profile& prof, PolarPoint p,
                   double t) {
  if (p.theta <= s.theta1) {
    return plane_wave_dtheta(prof, s.omega0, p.rho, p.theta - s.theta1, t);
  }
  if (p.theta >= s.theta2) {
    return plane_wave_dtheta(prof, s.omega0, p.rho, p.theta - s.theta2, t);
  }
  return Complex{0.0, 0.0};
}

namespace {

// Shared core of u_d / u_d_dtheta / w_d: the diffraction integral
//   Int e^{i omega0 rho cosh(beta)} K(beta) g(t - rho cosh(beta)) dbeta
// with K either Z_N or its theta-derivative and g either f or f'.
QuadResult diffraction_integral(const WedgeScene& s, PolarPoint p, double t,
                                const std::function<Complex(double)>& kernel,
                                const std::function<double(double)>& weight,
                                double support_lo, const Profile& prof,
                                const QuadratureSpec& spec) {
  (void)prof;
  const double w = ac(t / p.rho);
  const double lo = support_lo;  // inner edge of the |beta| support
  if (w <= lo) return {Complex{0.0, 0.0}, 0.0};
  const double b_cut = kernel_truncation(s, p.theta, spec.abs_tol);
  const double hi = std::min(w, std::max(b_cut, lo + 1e-12));
  if (hi <= lo) return {Complex{0.0, 0.0}, spec.abs_tol};
  auto f = [&](double beta) {
    const double c = p.rho * std::cosh(beta);
    return std::exp(kI * s.omega0 * c) * kernel(beta) * weight(t - c);
  };
  auto freq = [&](double x) {
    return s.omega0 * p.rho * std::abs(std::sinh(x));
  };
  QuadResult r;
  if (lo == 0.0) {
    r = integrate_oscillatory_finite(f, -hi, hi, freq, spec);
  } else {
    const QuadResult rp = integrate_oscillatory_finite(f, lo, hi, freq, spec);
    const QuadResult rn = integrate_oscillatory_finite(f, -hi, -lo, freq, spec);
    r.value = rp.value + rn.value;
    r.error = rp.error + rn.error;
  }
  if (hi < w) r.error += 2.0 * spec.abs_tol * (w - hi);
  return r;
}

}  // namespace

QuadResult u_d(const WedgeScene& s, const Profile& prof, PolarPoint p, double t,
               const QuadratureSpec& spec) {
  require_off_critical(s, p.theta, spec.band);
  const Complex pref = kI * std::exp(-kI * s.omega0 * t) / (4.0 * s.Phi);
  if (p.rho == 0.0) {
    if (t <= 0.0) return {Complex{0.0, 0.0}, 0.0};
    auto f = [&](double beta) { return z_nn(s, Complex{beta, 0.0}, p.theta); };
    QuadResult r = integrate_decaying(f, 2.0 * s.q, spec);
    r.value *= pref * f_eval(prof, t);
    return r;
  }
  if (t <= p.rho) return {Complex{0.0, 0.0}, 0.0};
  auto kernel = [&](double beta) {
    return z_nn(s, Complex{beta, 0.0}, p.theta);
  };
  auto weight = [&](double sarg) { return f_eval(prof, sarg); };
  QuadResult r =
      diffraction_integral(s, p, t, kernel, weight, 0.0, prof, spec);
  r.value *= pref;
  r.error *= std::abs(pref);
  return r;
}

QuadResult u_d_dtheta(const WedgeScene& s, const Profile& prof, PolarPoint p,
                      double t, const QuadratureSpec& spec) {
  require_off_critical(s, p.theta, spec.band);
  const Complex pref = kI * std::exp(-kI * s.omega0 * t) / (4.0 * s.Phi);
  if (p.rho == 0.0 || t <= p.rho) return {Complex{0.0, 0.0}, 0.0};
  auto kernel = [&](double beta) {
    return z_nn_dtheta(s, Complex{beta, 0.0}, p.theta);
  };
  auto weight = [&](double sarg) { return f_eval(prof, sarg); };
  QuadResult r =
      diffraction_integral(s, p, t, kernel, weight, 0.0, prof, spec);
  r.value *= pref;
  r.error *= std::abs(pref);
  return r;
}

QuadResult w_d(const WedgeScene& s, const Profile& prof, PolarPoint p, double t,
               const QuadratureSpec& spec) {
  if (prof.kind != ProfileKind::SmoothRamp) {
    throw ConfigError("w_d requires the smooth ramp profile");
  }
  require_off_critical(s, p.theta, spec.band);
  const Complex pref = kI * std::exp(-kI * s.omega0 * t);
  if (p.rho == 0.0) {
    if (t <= 0.0 || t >= prof.s0) return {Complex{0.0, 0.0}, 0.0};
    auto f = [&](double beta) { return z_nn(s, Complex{beta, 0.0}, p.theta); };
    QuadResult r = integrate_decaying(f, 2.0 * s.q, spec);
    r.value *= pref * f_prime_eval(prof, t);
    return r;
  }
  if (t <= p.rho) return {Complex{0.0, 0.0}, 0.0};
  // f' is supported on [0, s0]: rho cosh(beta) must lie in [t - s0, t].
  const double lo = ac((t - prof.s0) / p.rho);
  auto kernel = [&](double beta) {
    return z_nn(s, Complex{beta, 0.0}, p.theta);
  };
  auto weight = [&](double sarg) { return f_prime_eval(prof, sarg); };
  QuadResult r = diffraction_integral(s, p, t, kernel, weight, lo, prof, spec);
  r.value *= pref;
  r.error *= std::abs(pref);
  return r;
}

FieldValue u_total(const WedgeScene& s, const Profile& prof, PolarPoint p,
                   double t, const QuadratureSpec& spec) {
  FieldValue v;
  v.in = u_in(s, prof, p, t);
  v.r = u_r(s, prof, p, t);
  const QuadResult d = u_d(s, prof, p, t, spec);
  v.d = d.value;
  v.error_estimate = d.error;
  v.value = v.in + v.r + v.d;
  return v;
}

QuadResult j_d(const WedgeScene& s, PolarPoint p, Complex omega,
               Representation rep, const QuadratureSpec& spec) {
  require_off_critical(s, p.theta, spec.band);
  if (rep == Representation::RealLine) {
    if (omega.imag() < 0.0) {
      throw ConfigError("j_d RealLine requires Im(omega) >= 0");
    }
    if (p.rho == 0.0) {
      auto f = [&](double x) { return z_nn(s, Complex{x, 0.0}, p.theta); };
      return integrate_decaying(f, 2.0 * s.q, spec);
    }
    const double a = 1.0;
    auto core = [&](double x) {
      return std::exp(kI * p.rho * omega * std::cosh(x)) *
             z_nn(s, Complex{x, 0.0}, p.theta);
    };
    auto freq = [&](double x) {
      return p.rho * std::abs(omega) * std::abs(std::sinh(x));
    };
    QuadResult rc = integrate_oscillatory_finite(core, -a, a, freq, spec);
    auto gp = [&](Complex b) { return z_nn(s, b, p.theta); };
    auto gm = [&](Complex b) { return z_nn(s, -b, p.theta); };
    QuadResult rp =
        integrate_cosh_phase_tail(gp, a, p.rho, omega, 2.0 * s.q, spec);
    QuadResult rm =
        integrate_cosh_phase_tail(gm, a, p.rho, omega, 2.0 * s.q, spec);
    return {rc.value + rp.value + rm.value, rc.error + rp.error + rm.error};
  }
  if (rep != Representation::ContourC0) {
    throw ConfigError("j_d supports RealLine and ContourC0 only");
  }
  if (!(omega.imag() > 0.0)) {
    throw ConfigError("j_d ContourC0 requires Im(omega) > 0");
  }
  if (!(p.rho > 0.0)) {
    throw ConfigError("j_d ContourC0 requires rho > 0");
  }
  // gamma1 = R - i pi/2 traversed right to left, gamma2 = R - i 5pi/2 left to
  // right, integrand e^{-rho omega sinh(beta)} H_N(beta + i theta). On both
  // lines sinh(x + i Im) = -i cosh(x), so the envelope is e^{-rho Im(omega)
  // cosh x}.
  double m_est = 2.0;
  for (double x : {0.0, 1.0, -1.0}) {
    m_est = std::max({m_est,
                      std::abs(h_nn(s, Complex{x, -kPi / 2.0 + 0.0} +
                                           kI * p.theta)),
                      std::abs(h_nn(s, Complex{x, -5.0 * kPi / 2.0} +
                                           kI * p.theta))});
  }
  const double c =
      std::log(m_est / std::max(spec.abs_tol, 1e-300)) / (p.rho * omega.imag());
  const double b_cut = std::acosh(std::max(1.0, c)) + 1.0;
  auto freq = [&](double x) {
    return p.rho * std::abs(omega) * std::cosh(x);
  };
  auto leg = [&](double level) {
    auto f = [&](double x) {
      const Complex b{x, level};
      return std::exp(-p.rho * omega * std::sinh(b)) *
             h_nn(s, b + kI * p.theta);
    };
    return integrate_oscillatory_finite(f, -b_cut, b_cut, freq, spec);
  };
  const QuadResult g1 = leg(-kPi / 2.0);
  const QuadResult g2 = leg(-5.0 * kPi / 2.0);
  return {g2.value - g1.value, g1.error + g2.error};
}

Complex u_hat_d(const WedgeScene& s, const Profile& prof, PolarPoint p,
                Complex omega, Representation rep, const QuadratureSpec& spec) {
  if (omega.imag() == 0.0 && omega.real() == s.omega0) {
    throw ConfigError("u_hat_d: real omega must differ from omega0");
  }
  const Complex jd = j_d(s, p, omega, rep, spec).value;
  return kI / (4.0 * s.Phi) * g1_hat(prof, s.omega0, omega) /
         (omega - s.omega0) * jd;
}

Complex u_hat_s(const WedgeScene& s, const Profile& prof, PolarPoint p,
                Complex omega, const QuadratureSpec& spec) {
  if (!(omega.imag() > 0.0)) {
    throw ConfigError("u_hat_s requires Im(omega) > 0");
  }
  const double w2 = omega.imag();
  auto f = [&](Complex b) {
    return std::exp(-p.rho * omega * std::sinh(b)) * h_nn(s, b + kI * p.theta);
  };
  double m_est = 2.0;
  for (double x : {1.0, 2.0, -1.0, -2.0}) {
    for (double lvl : {-kPi / 2.0, -5.0 * kPi / 2.0}) {
      m_est = std::max(m_est, std::abs(h_nn(s, Complex{x, lvl} + kI * p.theta)));
    }
  }
  const double c =
      std::log(m_est / std::max(spec.abs_tol, 1e-300)) / (p.rho * w2);
  const double b_cut = std::max(2.0, std::acosh(std::max(1.0, c)) + 1.0);
  auto freq = [&](double x) {
    return p.rho * std::abs(omega) * std::cosh(x);
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
  // Loop C1 around Re beta >= 1 and its mirror C2, counter-clockwise.
  QuadResult total{};
  auto add = [&](QuadResult r, double sign) {
    total.value += sign * r.value;
    total.error += r.error;
  };
  add(hleg(-kPi / 2.0, 1.0, b_cut), -1.0);  // +inf -> 1 on Im = -pi/2
  add(vleg(Complex{1.0, -kPi / 2.0}, Complex{1.0, -5.0 * kPi / 2.0}), 1.0);
  add(hleg(-5.0 * kPi / 2.0, 1.0, b_cut), 1.0);  // 1 -> +inf on Im = -5pi/2
  add(hleg(-5.0 * kPi / 2.0, -b_cut, -1.0), 1.0);  // -inf -> -1
  add(vleg(Complex{-1.0, -5.0 * kPi / 2.0}, Complex{-1.0, -kPi / 2.0}), 1.0);
  add(hleg(-kPi / 2.0, -b_cut, -1.0), -1.0);  // -1 -> -inf on Im = -pi/2
  const Complex gh = g_hat(prof, s.omega0, omega);
  return -gh * std::exp(kI * p.rho * omega * std::cos(p.theta - s.alpha)) +
         kI * gh / (4.0 * s.Phi) * total.value;
}

}  // namespace wedge

#include "wedge/validation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "wedge/amplitude.hpp"
#include "wedge/errors.hpp"
#include "wedge/kernels.hpp"

namespace wedge {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

QuadratureSpec tightened(QuadratureSpec spec) {
  // Finite-difference residuals divide by h^2; quadrature noise must sit well
  // below the truncation error being measured.
  spec.rel_tol = std::min(spec.rel_tol, 1e-11);
  spec.abs_tol = std::min(spec.abs_tol, 1e-14);
  return spec;
}

Complex field_at(const WedgeScene& s, const Profile& prof, double x, double y,
                 double t, const QuadratureSpec& spec) {
  const double rho = std::hypot(x, y);
  double theta = std::atan2(y, x);
  if (theta < s.phi) theta += 2.0 * kPi;
  return u_total(s, prof, PolarPoint{rho, theta}, t, spec).value;
}

double box_residual(const WedgeScene& s, const Profile& prof, PolarPoint p,
                    double t, double h, const QuadratureSpec& spec) {
  const double x = p.rho * std::cos(p.theta);
  const double y = p.rho * std::sin(p.theta);
  const Complex c = field_at(s, prof, x, y, t, spec);
  const Complex utt =
      (field_at(s, prof, x, y, t + h, spec) - 2.0 * c +
       field_at(s, prof, x, y, t - h, spec)) /
      (h * h);
  const Complex uxx =
      (field_at(s, prof, x + h, y, t, spec) - 2.0 * c +
       field_at(s, prof, x - h, y, t, spec)) /
      (h * h);
  const Complex uyy =
      (field_at(s, prof, x, y + h, t, spec) - 2.0 * c +
       field_at(s, prof, x, y - h, t, spec)) /
      (h * h);
  return std::abs(utt - uxx - uyy);
}

CheckReport ratio_report(std::string name, double r_h, double r_half,
                         double floor) {
  CheckReport rep;
  rep.name = std::move(name);
  rep.expected = 4.0;
  rep.tolerance = 0.6;
  if (r_h < floor && r_half < floor) {
    rep.observed = 0.0;
    rep.passed = true;
    rep.details = "both residuals below noise floor";
    return rep;
  }
  rep.observed = r_h / r_half;
  // [3.4, 4.6]: clean second-order decay. [6.8, 9.2]: third order, which the
  // one-sided boundary stencil reaches when every odd tangential derivative
  // vanishes on a sound-hard face.
  rep.passed = (rep.observed >= 3.4 && rep.observed <= 4.6) ||
               (rep.observed >= 6.8 && rep.observed <= 9.2);
  std::ostringstream os;
  os << "residual(h)=" << r_h << " residual(h/2)=" << r_half;
  rep.details = os.str();
  return rep;
}

}  // namespace

CheckReport check_pde(const WedgeScene& s, const Profile& prof, PolarPoint p,
                      double t, double h0, const QuadratureSpec& spec) {
  const QuadratureSpec q = tightened(spec);
  const double r1 = box_residual(s, prof, p, t, h0, q);
  const double r2 = box_residual(s, prof, p, t, h0 / 2.0, q);
  return ratio_report("pde_residual", r1, r2, 1e-8);
}

CheckReport check_neumann(const WedgeScene& s, const Profile& prof, Face side,
                          double rho, double t, double h0,
                          const QuadratureSpec& spec) {
  const QuadratureSpec q = tightened(spec);
  const double theta_b = (side == Face::Q1) ? 2.0 * kPi : s.phi;
  const double into = (side == Face::Q1) ? -1.0 : 1.0;  // interior direction
  auto deriv = [&](double h) {
    const Complex u0 = u_total(s, prof, PolarPoint{rho, theta_b}, t, q).value;
    const Complex u1 =
        u_total(s, prof, PolarPoint{rho, theta_b + into * h}, t, q).value;
    const Complex u2 =
        u_total(s, prof, PolarPoint{rho, theta_b + into * 2.0 * h}, t, q).value;
    // one-sided second-order d/dtheta pointing into the domain
    return std::abs((-3.0 * u0 + 4.0 * u1 - u2) / (2.0 * h));
  };
  const double r1 = deriv(h0);
  const double r2 = deriv(h0 / 2.0);
  return ratio_report(side == Face::Q1 ? "neumann_q1" : "neumann_q2", r1, r2,
                      1e-8);
}

CheckReport check_jump(const WedgeScene& s, const Profile& prof, int ray,
                       double rho, double t, int k,
                       const QuadratureSpec& spec) {
  if (ray != 1 && ray != 2) throw ConfigError("check_jump: ray must be 1 or 2");
  if (k != 0 && k != 1) throw ConfigError("check_jump: k must be 0 or 1");
  const double theta_l = (ray == 1) ? s.theta1 : s.theta2;
  const double eps[3] = {1e-2, 5e-3, 2.5e-3};
  QuadratureSpec q = spec;
  q.band = 1e-4;  // probes approach the ray closer than the default band
  auto us_k = [&](double theta) -> Complex {
    const PolarPoint p{rho, theta};
    if (k == 0) {
      return u_r(s, prof, p, t) + u_d(s, prof, p, t, q).value;
    }
    return u_r_dtheta(s, prof, p, t) + u_d_dtheta(s, prof, p, t, q).value;
  };
  Complex m[3];
  for (int i = 0; i < 3; ++i) {
    m[i] = us_k(theta_l + eps[i]) - us_k(theta_l - eps[i]);
  }
  // linear-in-eps extrapolation from the two finest probes
  const Complex extrap = 2.0 * m[2] - m[1];
  CheckReport rep;
  std::ostringstream name;
  name << "jump_theta" << ray << "_k" << k;
  rep.name = name.str();
  rep.observed = std::abs(extrap);
  rep.expected = 0.0;
  rep.tolerance = 1e-5;
  rep.passed = rep.observed <= rep.tolerance;
  std::ostringstream os;
  os << "mismatch(eps)=" << std::abs(m[0]) << "," << std::abs(m[1]) << ","
     << std::abs(m[2]);
  rep.details = os.str();
  return rep;
}

std::vector<CheckReport> check_equivalences(const WedgeScene& s,
                                            const Profile& prof,
                                            const QuadratureSpec& spec) {
  std::vector<CheckReport> out;
  auto push = [&](std::string name, double observed, double tol,
                  std::string details = "") {
    CheckReport r;
    r.name = std::move(name);
    r.observed = observed;
    r.expected = 0.0;
    r.tolerance = tol;
    r.passed = observed <= tol;
    r.details = std::move(details);
    out.push_back(std::move(r));
  };

  // Two representations of the frequency-domain diffraction factor.
  {
    const PolarPoint p{1.3, s.theta1 + 0.45 * (s.theta2 - s.theta1)};
    const Complex omega{0.7, 1.0};
    const QuadResult a = j_d(s, p, omega, Representation::ContourC0, spec);
    const QuadResult b = j_d(s, p, omega, Representation::RealLine, spec);
    push("jd_contour_vs_realline", std::abs(a.value - b.value),
         std::max(1e-6, 10.0 * (a.error + b.error)));
  }

  // Limiting amplitude: sum of parts vs the contour representation.
  {
    const PolarPoint p{0.9, s.theta1 + 0.3 * (s.theta2 - s.theta1)};
    const AmplitudeSet a = a_components(s, p, spec);
    const QuadResult c = a_inf_contour(s, p, spec);
    push("ainf_sum_vs_contour", std::abs(a.a_inf - c.value),
         std::max(1e-6, 10.0 * (a.error_estimate + c.error)));
  }

  // u_hat_d via g1_hat/(omega-omega0) against the direct transform of
  // e^{-i omega0 s} f(s) (valid for Im omega > 0).
  {
    const PolarPoint p{1.1, s.theta1 + 0.6 * (s.theta2 - s.theta1)};
    const Complex omega{1.4, 0.8};
    const Complex via_g1 =
        u_hat_d(s, prof, p, omega, Representation::RealLine, spec);
    const Complex nu = omega - s.omega0;
    Complex ghat_direct;
    if (prof.kind == ProfileKind::Heaviside) {
      ghat_direct = kI / nu;  // transform of the unit step
    } else {
      QuadratureSpec qs = spec;
      qs.rel_tol = std::min(qs.rel_tol, 1e-12);
      auto f = [&](double u) {
        return std::exp(kI * nu * u) * f_eval(prof, u);
      };
      ghat_direct = integrate_adaptive(f, 0.0, prof.s0, qs).value +
                    std::exp(kI * nu * prof.s0) * kI / nu;
    }
    const Complex via_direct =
        kI / (4.0 * s.Phi) * ghat_direct *
        j_d(s, p, omega, Representation::RealLine, spec).value;
    push("uhatd_transform_routes", std::abs(via_g1 - via_direct), 1e-6);
  }

  // Half-plane reference comparison (only meaningful at Phi = 2*pi).
  if (s.phi == 0.0) {
    const PolarPoint p{1.0, 0.8 * kPi};
    const HalfplaneReport hp =
        halfplane_compare(s.alpha, p, 3.5, s.omega0, spec);
    std::ostringstream os;
    os << "expected factor " << hp.factor;
    push("halfplane_reference", hp.deviation, 1e-6, os.str());
  }
  return out;
}

double loglog_slope(const std::vector<double>& t, const std::vector<double>& v,
                    double discard_below) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(v[i] > discard_below)) continue;
    const double x = std::log(t[i]);
    const double y = std::log(v[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 3) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<CheckReport> check_rates(const WedgeScene& s, PolarPoint p,
                                     const QuadratureSpec& spec) {
  std::vector<CheckReport> out;
  const RatePrediction pred = rate_prediction(s, p);
  std::vector<double> ts, im_vals, re_vals;
  const double t_lo = 10.0 * p.rho;
  const double t_hi = 1000.0 * p.rho;
  const int per_decade = 16;
  const int npts =
      static_cast<int>(std::ceil(std::log10(t_hi / t_lo) * per_decade)) + 1;
  for (int i = 0; i < npts; ++i) {
    const double t =
        t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / (npts - 1));
    const Complex rd =
        std::exp(-kI * s.omega0 * t) * r_d(s, p, t, spec).value;
    ts.push_back(t);
    im_vals.push_back(std::abs(rd.imag()));
    re_vals.push_back(std::abs(rd.real()));
  }
  const double discard = 1e3 * spec.abs_tol;
  const double slope_im = loglog_slope(ts, im_vals, discard);
  const double slope_re = loglog_slope(ts, re_vals, discard);

  CheckReport rim;
  rim.name = "rate_slope_im";
  rim.observed = slope_im;
  rim.expected = pred.im_exponent;
  rim.tolerance = 0.05;
  rim.passed = std::abs(slope_im - pred.im_exponent) <= rim.tolerance;
  out.push_back(rim);

  CheckReport rre;
  rre.name = "rate_slope_re";
  rre.observed = slope_re;
  rre.expected = pred.re_exponent;
  rre.tolerance = 0.1;
  rre.passed = std::abs(slope_re - pred.re_exponent) <= rre.tolerance;
  out.push_back(rre);

  // Leading Im coefficient magnitude: fit |Im| ~ c * t^{im_exponent}.
  double csum = 0.0;
  int n = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(im_vals[i] > discard)) continue;
    csum += im_vals[i] / std::pow(ts[i], pred.im_exponent);
    ++n;
  }
  CheckReport rc;
  rc.name = "rate_coeff_im";
  rc.observed = (n > 0) ? csum / n : std::numeric_limits<double>::quiet_NaN();
  rc.expected = std::abs(pred.im_coeff);
  rc.tolerance = 0.1 * std::abs(pred.im_coeff);
  rc.passed = std::abs(rc.observed - rc.expected) <= rc.tolerance;
  out.push_back(rc);
  return out;
}

}  // namespace wedge

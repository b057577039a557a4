#include "wedge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "wedge/errors.hpp"

namespace wedge {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr double kXgk[15] = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

constexpr double kWgk[15] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

constexpr double kWg[7] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct Panel {
  double a, b;
  Complex value;
  double error;
};

Panel gk15(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Complex ik{0.0, 0.0}, ig{0.0, 0.0};
  for (int i = 0; i < 15; ++i) {
    const Complex fx = f(c + h * kXgk[i]);
    ik += kWgk[i] * fx;
    if (i % 2 == 1) ig += kWg[i / 2] * fx;
  }
  ik *= h;
  ig *= h;
  // scaled error per QUADPACK practice
  const double diff = std::abs(ik - ig);
  return Panel{a, b, ik, diff};
}

}  // namespace

QuadResult integrate_adaptive(const RealFn& f, double a, double b,
                              const QuadratureSpec& spec) {
  if (a == b) return {Complex{0.0, 0.0}, 0.0};
  auto cmp = [](const Panel& p, const Panel& q) { return p.error < q.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);
  heap.push(gk15(f, a, b));
  Complex total = heap.top().value;
  double toterr = heap.top().error;
  std::size_t panels = 1;
  std::vector<Panel> done;
  while (toterr > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (panels >= spec.max_panels) {
      throw QuadratureError("integrate_adaptive: panel budget exhausted, error=" +
                            std::to_string(toterr));
    }
    Panel worst = heap.top();
    heap.pop();
    if (worst.b - worst.a < 1e-15 * (std::abs(worst.a) + 1.0)) {
      // cannot refine further; accept as-is
      done.push_back(worst);
      if (heap.empty()) break;
      continue;
    }
    const double m = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, m);
    Panel right = gk15(f, m, worst.b);
    total += left.value + right.value - worst.value;
    toterr += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  // deterministic final sum in interval order
  while (!heap.empty()) {
    done.push_back(heap.top());
    heap.pop();
  }
  std::sort(done.begin(), done.end(),
            [](const Panel& p, const Panel& q) { return p.a < q.a; });
  Complex sum{0.0, 0.0};
  double err = 0.0;
  for (const Panel& p : done) {
    sum += p.value;
    err += p.error;
  }
  return {sum, err};
}

QuadResult integrate_decaying(const RealFn& f, double decay_rate,
                              const QuadratureSpec& spec) {
  if (!(decay_rate > 0.0)) {
    throw QuadratureError("integrate_decaying: decay_rate must be positive");
  }
  // Estimate the envelope scale by sampling, then place the truncation radius
  // where M * exp(-decay_rate * B) <= abs_tol.
  double m_est = 0.0;
  for (double x = 0.0; x <= 4.0; x += 0.5) {
    m_est = std::max({m_est, std::abs(f(x)), std::abs(f(-x))});
  }
  if (m_est == 0.0) m_est = 1.0;
  double radius = std::max(5.0, std::log(m_est / spec.abs_tol) / decay_rate);
  // Envelope sanity: samples past the core must not grow.
  const double e1 = std::abs(f(0.5 * radius)) + std::abs(f(-0.5 * radius));
  const double e2 = std::abs(f(0.9 * radius)) + std::abs(f(-0.9 * radius));
  if (e2 > 10.0 * (e1 + m_est)) {
    throw QuadratureError("integrate_decaying: sampled envelope is not decaying");
  }
  return integrate_adaptive(f, -radius, radius, spec);
}

QuadResult integrate_oscillatory_finite(const RealFn& f, double a, double b,
                                        const std::function<double(double)>& local_freq,
                                        const QuadratureSpec& spec) {
  if (!(a <= b)) throw QuadratureError("integrate_oscillatory_finite: a > b");
  if (a == b) return {Complex{0.0, 0.0}, 0.0};
  // Phase-bounded pre-partition: panel width <= osc_panel_phase / local_freq.
  std::vector<double> knots{a};
  double x = a;
  while (x < b) {
    const double fr = std::max(local_freq(x), local_freq(std::min(b, x + 1e-3)));
    double step = (fr > 0.0) ? spec.osc_panel_phase / fr : (b - a);
    step = std::clamp(step, (b - a) / static_cast<double>(spec.max_panels), b - a);
    x = std::min(b, x + step);
    knots.push_back(x);
    if (knots.size() > spec.max_panels) {
      throw QuadratureError("integrate_oscillatory_finite: panel budget exhausted");
    }
  }
  Complex sum{0.0, 0.0};
  double err = 0.0;
  QuadratureSpec local = spec;
  local.abs_tol = spec.abs_tol / static_cast<double>(knots.size());
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    QuadResult r = integrate_adaptive(f, knots[i], knots[i + 1], local);
    sum += r.value;
    err += r.error;
  }
  return {sum, err};
}

ContourPath ContourPath::polyline(std::vector<Complex> pts) {
  ContourPath p;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    p.segments.push_back({pts[i], pts[i + 1]});
  }
  return p;
}

ContourPath& ContourPath::add_ray(Complex anchor, Complex direction) {
  rays.push_back({anchor, direction / std::abs(direction)});
  return *this;
}

QuadResult integrate_contour(const std::function<Complex(Complex)>& f,
                             const ContourPath& path, double ray_decay,
                             const QuadratureSpec& spec) {
  Complex sum{0.0, 0.0};
  double err = 0.0;
  for (const auto& seg : path.segments) {
    const Complex d = seg.end - seg.start;
    auto g = [&](double s) { return f(seg.start + s * d) * d; };
    QuadResult r = integrate_adaptive(g, 0.0, 1.0, spec);
    sum += r.value;
    err += r.error;
  }
  for (const auto& ray : path.rays) {
    if (!(ray_decay > 0.0)) {
      throw QuadratureError("integrate_contour: ray present but ray_decay <= 0");
    }
    // Sample the envelope along the ray to confirm decay and pick truncation.
    double m_est = 0.0;
    for (double s = 0.0; s <= 3.0; s += 0.5) {
      m_est = std::max(m_est, std::abs(f(ray.anchor + s * ray.direction)));
    }
    if (m_est == 0.0) m_est = 1.0;
    const double cut = std::max(5.0, std::log(m_est / spec.abs_tol) / ray_decay);
    const double far = std::abs(f(ray.anchor + 0.9 * cut * ray.direction));
    if (far > 10.0 * m_est) {
      throw QuadratureError("integrate_contour: ray envelope is not decaying");
    }
    auto g = [&](double s) { return f(ray.anchor + s * ray.direction) * ray.direction; };
    QuadResult r = integrate_adaptive(g, 0.0, cut, spec);
    // three-point tail extrapolation folded into the error estimate
    const double tail =
        std::abs(f(ray.anchor + cut * ray.direction)) / ray_decay;
    sum += r.value;
    err += r.error + tail;
  }
  if (path.reversed) sum = -sum;
  return {sum, err};
}

QuadResult integrate_cosh_phase_tail(const std::function<Complex(Complex)>& g,
                                     double a, double rho, Complex omega,
                                     double g_decay, const QuadratureSpec& spec) {
  if (!(a > 0.0)) throw QuadratureError("integrate_cosh_phase_tail: need a > 0");
  if (!(g_decay > 0.0)) {
    throw QuadratureError("integrate_cosh_phase_tail: need g_decay > 0");
  }
  if (omega.imag() < 0.0) {
    throw QuadratureError("integrate_cosh_phase_tail: need Im(omega) >= 0");
  }
  const Complex iunit{0.0, 1.0};
  const double w1 = omega.real();
  const double w2 = omega.imag();
  const double aw = std::abs(omega);

  // Envelope scale of g on the real tail: M such that |g| ~ M exp(-g_decay x).
  double m_est = 0.0;
  for (double x : {a, a + 1.0, a + 2.0}) {
    m_est = std::max(m_est, std::abs(g(Complex{x, 0.0})) * std::exp(g_decay * x));
  }
  if (m_est == 0.0) return {Complex{0.0, 0.0}, 0.0};
  const double tol = std::max(spec.abs_tol, 1e-300);
  // Point past which the plain envelope alone is below tolerance.
  const double x_star =
      std::max(a + 3.0, std::log(m_est / tol) / g_decay);

  if (rho == 0.0 || omega == Complex{0.0, 0.0}) {
    auto f = [&](double x) { return g(Complex{x, 0.0}); };
    QuadResult r = integrate_adaptive(f, a, x_star, spec);
    r.error += m_est * std::exp(-g_decay * x_star) / g_decay;
    return r;
  }

  // Direct route: cosh decay from Im(omega) kills the tail quickly enough.
  if (w2 > 0.0) {
    const double c = std::log(m_est / tol) / (rho * w2);
    const double b_dir = std::acosh(std::max(1.0, c)) + 1.0;
    const double phase_budget = rho * std::abs(w1) * std::sinh(b_dir);
    if (phase_budget < 1e5) {
      const double b = std::max(b_dir, a + 1.0);
      auto f = [&](double x) {
        return std::exp(iunit * rho * omega * std::cosh(x)) * g(Complex{x, 0.0});
      };
      auto freq = [&](double x) { return rho * aw * std::sinh(x); };
      QuadResult r = integrate_oscillatory_finite(f, a, b, freq, spec);
      r.error += m_est * std::exp(-g_decay * b - rho * w2 * (std::cosh(b) - 1.0));
      return r;
    }
  }

  // Deformed route: climb to Im(beta) = sigma*pi/2, where
  // cosh(x + i sigma pi/2) = i sigma sinh(x) turns the phase into decay.
  const double sigma = (w1 >= 0.0) ? 1.0 : -1.0;
  const double half_pi = std::numbers::pi / 2.0;

  auto fv = [&](double y) {
    const Complex b{a, sigma * y};
    return std::exp(iunit * rho * omega * std::cosh(b)) * g(b) *
           Complex{0.0, sigma};
  };
  auto freq_v = [&](double) { return rho * aw * std::cosh(a); };
  QuadResult rv = integrate_oscillatory_finite(fv, 0.0, half_pi, freq_v, spec);

  const double rate_h = g_decay + rho * std::abs(w1);
  const double xh_end = std::max(
      a + 3.0, std::log(std::max(m_est, 1.0) / tol) / rate_h + a);
  auto fh = [&](double x) {
    const Complex b{x, sigma * half_pi};
    return std::exp(iunit * rho * omega * std::cosh(b)) * g(b);
  };
  auto freq_h = [&](double x) { return rho * w2 * std::cosh(x); };
  QuadResult rh = integrate_oscillatory_finite(fh, a, xh_end, freq_h, spec);

  QuadResult out;
  out.value = rv.value + rh.value;
  out.error = rv.error + rh.error +
              m_est * std::exp(-g_decay * xh_end) / rate_h;
  return out;
}

}  // namespace wedge

#include "wedge/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wedge/errors.hpp"

namespace wedge {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

void require_off_pole(Complex q_arg) {
  if (std::abs(std::sinh(q_arg)) < kPoleProximity) {
    throw PoleProximityError(q_arg);
  }
}

// Arguments of the two coth/1-sinh factors shared by all three H kernels.
Complex arg1(const WedgeScene& s, Complex beta) {
  return s.q * (beta + kI * (kPi / 2.0 - s.alpha));
}
Complex arg2(const WedgeScene& s, Complex beta) {
  return s.q * (beta - kI * (3.0 * kPi / 2.0 - s.alpha));
}

}  // namespace

Complex coth_safe(Complex z) {
  if (z.real() < 0.0) return -coth_safe(-z);
  if (z.real() > 20.0) return Complex{1.0, 0.0};
  const Complex e = std::exp(-2.0 * z);
  return (1.0 + e) / (1.0 - e);
}

Complex inv_sinh_safe(Complex z) {
  if (z.real() < 0.0) return -inv_sinh_safe(-z);
  if (z.real() > 350.0) return Complex{0.0, 0.0};
  const Complex e = std::exp(-z);
  return 2.0 * e / (1.0 - e * e);
}

Complex h_nn(const WedgeScene& s, Complex beta) {
  return coth_safe(arg1(s, beta)) + coth_safe(arg2(s, beta));
}

Complex h_dd(const WedgeScene& s, Complex beta) {
  return coth_safe(arg1(s, beta)) - coth_safe(arg2(s, beta));
}

Complex h_dn(const WedgeScene& s, Complex beta) {
  return inv_sinh_safe(arg1(s, beta)) + inv_sinh_safe(arg2(s, beta));
}

Complex z_nn(const WedgeScene& s, Complex beta, double theta) {
  const Complex w = beta + kI * theta;
  const Complex a[4] = {arg1(s, w - kI * 5.0 * kPi / 2.0),
                        arg2(s, w - kI * 5.0 * kPi / 2.0),
                        arg1(s, w - kI * kPi / 2.0),
                        arg2(s, w - kI * kPi / 2.0)};
  for (const Complex& ai : a) require_off_pole(ai);
  return coth_safe(a[0]) + coth_safe(a[1]) - coth_safe(a[2]) - coth_safe(a[3]);
}

Complex z_nn_dbeta(const WedgeScene& s, Complex beta, double theta) {
  const Complex w = beta + kI * theta;
  const Complex a[4] = {arg1(s, w - kI * 5.0 * kPi / 2.0),
                        arg2(s, w - kI * 5.0 * kPi / 2.0),
                        arg1(s, w - kI * kPi / 2.0),
                        arg2(s, w - kI * kPi / 2.0)};
  for (const Complex& ai : a) require_off_pole(ai);
  // d/dbeta coth(q(..)) = -q / sinh^2(q(..))
  auto term = [&](Complex qa) {
    const Complex is = inv_sinh_safe(qa);
    return -s.q * is * is;
  };
  return term(a[0]) + term(a[1]) - term(a[2]) - term(a[3]);
}

Complex z_nn_dtheta(const WedgeScene& s, Complex beta, double theta) {
  return kI * z_nn_dbeta(s, beta, theta);
}

Complex h_nn_dbeta(const WedgeScene& s, Complex beta) {
  auto term = [&](Complex qa) {
    const Complex is = inv_sinh_safe(qa);
    return -s.q * is * is;
  };
  return term(arg1(s, beta)) + term(arg2(s, beta));
}

std::vector<Complex> zn_poles(const WedgeScene& s, double theta, double im_lo,
                              double im_hi) {
  std::vector<Complex> out;
  auto harvest = [&](double base, double step) {
    // base + k*step for all integers k landing in [im_lo, im_hi]
    const long k0 = static_cast<long>(std::floor((im_lo - base) / step));
    for (long k = k0; ; ++k) {
      const double y = base + static_cast<double>(k) * step;
      if (y > im_hi) break;
      if (y >= im_lo) out.push_back(Complex{0.0, y});
    }
  };
  // One progression per coth factor: sinh(q(beta + i c)) = 0 at
  // beta = i(-c + 2 k Phi), with c = theta - alpha - 2pi, theta + alpha - 4pi,
  // theta - alpha, theta + alpha - 2pi for the four factors.
  harvest(s.alpha - theta, 2.0 * s.Phi);
  harvest(s.alpha - theta + 2.0 * kPi, 2.0 * s.Phi);
  harvest(2.0 * kPi - s.alpha - theta, 2.0 * s.Phi);
  harvest(4.0 * kPi - s.alpha - theta, 2.0 * s.Phi);
  std::sort(out.begin(), out.end(),
            [](Complex a, Complex b) { return a.imag() < b.imag(); });
  out.erase(std::unique(out.begin(), out.end(),
                        [](Complex a, Complex b) {
                          return std::abs(a.imag() - b.imag()) < 1e-12;
                        }),
            out.end());
  return out;
}

ZnExpansion zn_expansion(const WedgeScene& s, double theta) {
  ZnExpansion e;
  e.b1 = 4.0 * std::sin(kPi * kPi / s.Phi);
  // Z_N(beta + i theta) = sum over faces k of
  //   sinh(2 i q pi) / ( sinh[q(beta + a1_k)] sinh[q(beta + a2_k)] ),
  // a1_k = i(theta + (-1)^k alpha - 2(k-1) pi), a2_k = a1_k - 2 i pi.
  // Expanding each 1/(sinh sinh) in exp(-+2q beta) gives, at order j,
  //   4 sinh(2 i q pi) * sum_{m+n=j-1} exp(-+ q((1+2m) a1 + (1+2n) a2)),
  // and 4 sinh(2 i q pi) = i b1.
  for (int face = 1; face <= 2; ++face) {
    const double sign_a = (face == 1) ? -1.0 : 1.0;
    const Complex a1 = kI * (theta + sign_a * s.alpha - 2.0 * (face - 1) * kPi);
    const Complex a2 = kI * (theta + sign_a * s.alpha - 2.0 * face * kPi);
    for (int j = 1; j <= 6; ++j) {
      Complex cp{0.0, 0.0}, cm{0.0, 0.0};
      for (int m = 0; m < j; ++m) {
        const int n = j - 1 - m;
        const Complex w = s.q * ((1.0 + 2.0 * m) * a1 + (1.0 + 2.0 * n) * a2);
        cp += std::exp(-w);
        cm += std::exp(w);
      }
      e.zp[j - 1] += cp;
      e.zm[j - 1] += cm;
    }
  }
  for (int j = 0; j < 6; ++j) {
    e.zsum[j] = (e.zp[j] + e.zm[j]).real();
  }
  return e;
}

Complex zn_series_eval(const ZnExpansion& e, const WedgeScene& s, double beta,
                       int terms) {
  if (terms < 1 || terms > 6) throw ConfigError("zn_series_eval: terms in 1..6");
  if (std::abs(beta) < std::log(2.0) / s.q) {
    throw ConfigError("zn_series_eval: |beta| below the expansion core ln2/q");
  }
  Complex acc{0.0, 0.0};
  if (beta >= 0.0) {
    for (int k = 1; k <= terms; ++k) {
      acc += e.zp[k - 1] * std::exp(-2.0 * k * s.q * beta);
    }
  } else {
    for (int k = 1; k <= terms; ++k) {
      acc += e.zm[k - 1] * std::exp(2.0 * k * s.q * beta);
    }
  }
  return kI * e.b1 * acc;
}

Complex a_halfplane(double alpha, Complex beta, double theta) {
  auto half = [&](double th) {
    const Complex w = beta + kI * th;
    return std::cosh(w / 2.0) /
           (std::sinh((w + kI * alpha) / 2.0) * std::sinh((w - kI * alpha) / 2.0));
  };
  return -std::sinh(kI * alpha / 2.0) / 2.0 * (half(theta) + half(-theta));
}

Complex b_halfplane(double alpha, Complex beta, double theta) {
  const Complex cb = std::cosh(beta);
  return (std::sinh(kI * (theta - alpha) / 2.0) / (cb - std::cos(theta - alpha)) -
          std::sinh(kI * (theta + alpha) / 2.0) / (cb - std::cos(theta + alpha))) *
         std::cosh(beta / 2.0);
}

}  // namespace wedge

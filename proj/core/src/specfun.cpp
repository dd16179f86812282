// Copyright 2026 The isq-scatter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isq/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace isq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr cplx kI{0.0, 1.0};

// Lanczos approximation, g = 7, nine coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Gamma on [0.5, 3].
double lanczos_gamma(double x) {
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

struct SeriesValue {
  double value;
  double derivative;
};

// J_mu(x) and J_mu'(x) by the ascending series. mu may be negative as long
// as mu + 1 > 0. Terms grow to about e^x / x before cancelling, so the sum
// is carried in extended precision.
SeriesValue j_series(double mu, double x) {
  const double half = 0.5 * x;
  const long double q = -static_cast<long double>(half) * half;
  double lead;
  if (mu + 1.0 <= 30.0) {
    lead = std::pow(half, mu) / gamma_real(mu + 1.0);
  } else {
    lead = std::exp(mu * std::log(half) - std::lgamma(mu + 1.0));
  }
  long double term = 1.0L;
  long double sum = term;
  long double dsum = mu;
  for (int m = 1; m < 500; ++m) {
    term *= q / (static_cast<long double>(m) * (m + static_cast<long double>(mu)));
    sum += term;
    dsum += (2.0L * m + mu) * term;
    if (std::abs(term) <= 1e-20L * std::abs(sum) && m > half) break;
  }
  return {lead * static_cast<double>(sum), lead * static_cast<double>(dsum) / x};
}

// Sum_{k} i^k a_k(nu) t^{-k} and its t-derivative, truncated at the
// smallest term. a_k = prod_{j<=k} (4 nu^2 - (2j-1)^2) / (k! 8^k).
struct AsymptoticSum {
  cplx value;
  cplx derivative;
};

AsymptoticSum hankel_series(double nu, double t) {
  const double mu4 = 4.0 * nu * nu;
  cplx value{1.0, 0.0};
  cplx deriv{0.0, 0.0};
  cplx term{1.0, 0.0};
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= kI * ((mu4 - odd * odd) / (8.0 * k * t));
    const double mag = std::abs(term);
    if (mag > last) break;
    value += term;
    deriv += -static_cast<double>(k) / t * term;
    last = mag;
    if (mag < 1e-17) break;
  }
  return {value, deriv};
}

struct KPair {
  double k;   // e^x K_nu(x)
  double dk;  // e^x K_nu'(x)
};

// Scaled K_nu and K_nu' for 0 < nu < 1.
KPair bessel_k_pair_scaled(double nu, double x) {
  if (x <= 2.0) {
    const SeriesValue im = [&] {
      // I_mu has the same series as J_mu with the sign of q flipped.
      const double half = 0.5 * x;
      const double q = half * half;
      double term = std::pow(half, -nu) / gamma_real(1.0 - nu);
      double sum = term;
      double dsum = -nu * term;
      for (int m = 1; m < 200; ++m) {
        term *= q / (m * (m - nu));
        sum += term;
        dsum += (2.0 * m - nu) * term;
        if (term <= 1e-17 * sum) break;
      }
      return SeriesValue{sum, dsum / x};
    }();
    const SeriesValue ip = [&] {
      const double half = 0.5 * x;
      const double q = half * half;
      double term = std::pow(half, nu) / gamma_real(1.0 + nu);
      double sum = term;
      double dsum = nu * term;
      for (int m = 1; m < 200; ++m) {
        term *= q / (m * (m + nu));
        sum += term;
        dsum += (2.0 * m + nu) * term;
        if (term <= 1e-17 * sum) break;
      }
      return SeriesValue{sum, dsum / x};
    }();
    const double pref = 0.5 * kPi / std::sin(nu * kPi);
    const double scale = std::exp(x);
    return {pref * (im.value - ip.value) * scale,
            pref * (im.derivative - ip.derivative) * scale};
  }

  // Steed's continued fraction (Temme's CF2) for x > 2, order reduced to
  // |mu| <= 1/2 and recurred upward once when nu > 1/2.
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu2;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i < 10000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  h = a1 * h;
  double kmu = std::sqrt(kPi / (2.0 * x)) / s;
  double k1 = kmu * (mu + x + 0.5 - h) * xi;
  for (int i = 1; i <= nl; ++i) {
    const double next = (mu + i) * 2.0 * xi * k1 + kmu;
    kmu = k1;
    k1 = next;
  }
  return {kmu, nu * xi * kmu - k1};
}

}  // namespace

OrderNu::OrderNu(double nu) : nu_(nu) {
  if (!(nu > 0.0 && nu < 1.0)) {
    throw std::domain_error("order nu must lie strictly inside (0, 1), got " +
                            std::to_string(nu));
  }
}

double gamma_real(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma_real: argument must be positive");
  }
  if (std::isinf(x)) return x;
  double scale = 1.0;
  while (x < 0.5) {
    scale /= x;
    x += 1.0;
  }
  while (x > 3.0) {
    x -= 1.0;
    scale *= x;
  }
  return scale * lanczos_gamma(x);
}

BoundaryCoeffs coeffs(OrderNu order) {
  const double nu = order.value();
  const double s = std::sin(nu * kPi);
  const double root_pi = std::sqrt(kPi);
  return {root_pi / (std::pow(2.0, 0.5 - nu) * gamma_real(1.0 - nu) * s),
          root_pi / (std::pow(2.0, 0.5 + nu) * gamma_real(1.0 + nu) * s)};
}

double bessel_j_series(double nu, double x) { return j_series(nu, x).value; }

double bessel_j_asymptotic(double nu, double x) {
  const AsymptoticSum p = hankel_series(nu, x);
  const double chi = x - (0.5 * nu + 0.25) * kPi;
  const cplx h = std::sqrt(2.0 / (kPi * x)) * std::exp(kI * chi) * p.value;
  return h.real();
}

double bessel_j(double nu, double x) {
  if (!(nu >= 0.0) || !(x > 0.0)) {
    throw std::domain_error("bessel_j: requires nu >= 0 and x > 0");
  }
  if (x <= kHankelCrossover) return j_series(nu, x).value;

  // Large x: the asymptotic expansion is accurate only for small orders, so
  // fix the normalization at orders mu and mu + 1 (mu = frac(nu)) and reach
  // nu by Miller's backward recurrence, which is stable for J at any order.
  const double fl = std::floor(nu);
  const double mu = nu - fl;
  const int target = static_cast<int>(fl);
  if (target == 0) return bessel_j_asymptotic(mu, x);

  const int top = static_cast<int>(std::max(nu, x)) + 40;
  double above = 0.0;
  double here = 1.0;
  double at_target = 0.0;
  double at_one = 0.0;
  double at_zero = 0.0;
  for (int m = top; m >= 1; --m) {
    // here = J_{mu+m}, above = J_{mu+m+1}; step to J_{mu+m-1}.
    const double below = 2.0 * (mu + m) / x * here - above;
    above = here;
    here = below;
    if (m - 1 == target) at_target = here;
    if (m - 1 == 1) at_one = here;
    if (m - 1 == 0) at_zero = here;
    if (std::abs(here) > 1e250) {
      above *= 1e-250;
      here *= 1e-250;
      at_target *= 1e-250;
      at_one *= 1e-250;
      at_zero *= 1e-250;
    }
  }
  // Rescale before squaring so the least-squares fit cannot underflow.
  const double big = std::max(std::abs(at_zero), std::abs(at_one));
  at_zero /= big;
  at_one /= big;
  at_target /= big;
  const double j0 = bessel_j_asymptotic(mu, x);
  const double j1 = bessel_j_asymptotic(mu + 1.0, x);
  const double scale =
      (j0 * at_zero + j1 * at_one) / (at_zero * at_zero + at_one * at_one);
  return at_target * scale;
}

double bessel_k_scaled(double nu, double x) {
  return bessel_k_pair_scaled(nu, x).k;
}

cplx jost_f_real_series(OrderNu order, double t) {
  const double nu = order.value();
  const SeriesValue jm = j_series(-nu, t);
  const SeriesValue jp = j_series(nu, t);
  const cplx phase = std::exp(kI * (0.5 * nu * kPi + 0.25 * kPi));
  const cplx h1 = (jm.value - std::exp(-kI * nu * kPi) * jp.value) /
                  (kI * std::sin(nu * kPi));
  return std::sqrt(0.5 * kPi * t) * phase * h1;
}

cplx jost_f_real_asymptotic(OrderNu order, double t) {
  return std::exp(kI * t) * hankel_series(order.value(), t).value;
}

namespace {

struct JostPair {
  cplx value;
  cplx derivative;
  bool flushed;
};

JostPair jost_pair(OrderNu order, Ray ray, double t) {
  if (!(t > 0.0)) {
    throw std::domain_error("jost_f: ray parameter must be positive");
  }
  const double nu = order.value();
  if (ray == Ray::kPositiveReal) {
    if (t <= kHankelCrossover) {
      const SeriesValue jm = j_series(-nu, t);
      const SeriesValue jp = j_series(nu, t);
      const cplx phase = std::exp(kI * (0.5 * nu * kPi + 0.25 * kPi)) /
                         (kI * std::sin(nu * kPi));
      const cplx rot = std::exp(-kI * nu * kPi);
      const cplx h = jm.value - rot * jp.value;
      const cplx dh = jm.derivative - rot * jp.derivative;
      const double pref = std::sqrt(0.5 * kPi * t);
      return {phase * pref * h, phase * (pref / (2.0 * t) * h + pref * dh),
              false};
    }
    const AsymptoticSum p = hankel_series(nu, t);
    const cplx e = std::exp(kI * t);
    return {e * p.value, e * (kI * p.value + p.derivative), false};
  }

  // f_nu(i y) = sqrt(2y/pi) K_nu(y).
  if (t > kJostUnderflowArgument) return {0.0, 0.0, true};
  const KPair kp = bessel_k_pair_scaled(nu, t);
  const double decay = std::exp(-t);
  const double root = std::sqrt(2.0 * t / kPi);
  const double value = root * kp.k * decay;
  const double deriv = (kp.k / (2.0 * t) + kp.dk) * root * decay;
  return {value, deriv, false};
}

}  // namespace

JostResult jost_f(OrderNu nu, Ray ray, double t) {
  const JostPair p = jost_pair(nu, ray, t);
  return {p.value, p.flushed};
}

JostResult jost_f_derivative(OrderNu nu, Ray ray, double t) {
  const JostPair p = jost_pair(nu, ray, t);
  return {p.derivative, p.flushed};
}

}  // namespace isq

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

#ifndef ISQ_SPECFUN_HPP_
#define ISQ_SPECFUN_HPP_

#include <complex>

namespace isq {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Order of an intermediate-window channel, strictly inside (0, 1).
class OrderNu {
 public:
  /// Throws std::domain_error unless 0 < nu < 1.
  explicit OrderNu(double nu);

  double value() const noexcept { return nu_; }

  friend bool operator==(OrderNu a, OrderNu b) noexcept { return a.nu_ == b.nu_; }

 private:
  double nu_;
};

/// Small-argument coefficients of the Jost-like solution:
/// f_nu(z) ~ (-iz)^{1/2-nu} a_nu - (-iz)^{1/2+nu} b_nu as |z| -> 0.
struct BoundaryCoeffs {
  double a_nu;
  double b_nu;
};

/// The two rays on which the Jost-like solution is evaluated.
enum class Ray { kPositiveReal, kPositiveImaginary };

/// Value of f_nu (or its derivative) on a ray. `flushed` is set when the
/// imaginary-ray value underflowed and was replaced by zero.
struct JostResult {
  cplx value;
  bool flushed = false;
};

/// Imaginary-ray arguments above this are flushed to zero.
inline constexpr double kJostUnderflowArgument = 700.0;

/// Real-ray crossover between the ascending series and the Hankel
/// asymptotic expansion.
inline constexpr double kHankelCrossover = 12.0;

/// Gamma function for x > 0; throws std::domain_error otherwise.
double gamma_real(double x);

BoundaryCoeffs coeffs(OrderNu nu);

/// Bessel function of the first kind J_nu(x), nu >= 0, x > 0.
double bessel_j(double nu, double x);

/// Ascending-series J_nu(x); exposed so the crossover band can be tested.
double bessel_j_series(double nu, double x);

/// Hankel asymptotic J_nu(x), truncated at the smallest term.
double bessel_j_asymptotic(double nu, double x);

/// Modified Bessel function K_nu(x) for 0 < nu < 1, scaled by e^{x}.
double bessel_k_scaled(double nu, double x);

/// f_nu(t) on the positive real ray, or f_nu(i t) on the positive
/// imaginary ray, for t > 0.
JostResult jost_f(OrderNu nu, Ray ray, double t);

/// d/dt of jost_f(nu, ray, t) along the ray.
JostResult jost_f_derivative(OrderNu nu, Ray ray, double t);

/// Both branches of the real-ray evaluation, for crossover checks.
cplx jost_f_real_series(OrderNu nu, double t);
cplx jost_f_real_asymptotic(OrderNu nu, double t);

}  // namespace isq

#endif  // ISQ_SPECFUN_HPP_

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

#include "isq/smatrix.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace isq {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};
constexpr double kPoleThreshold = 1e-300;

const cplx kNaN{std::numeric_limits<double>::quiet_NaN(),
                std::numeric_limits<double>::quiet_NaN()};

// (z/kappa0)^{1/2-nu} - sgn (z/kappa0)^{1/2+nu}
cplx bracket(const IntermediateChannel& ch, const SheetPoint& z) {
  const double nu = ch.nu().value();
  const SheetPoint w = scale(z, 1.0 / ch.kappa0());
  return mv_pow(w, 0.5 - nu) - static_cast<double>(ch.sgn_g()) *
                                   mv_pow(w, 0.5 + nu);
}

SValue ratio(const cplx& num, const cplx& den) {
  if (std::abs(den) < kPoleThreshold) return {kNaN, true};
  return {-num / den, false};
}

}  // namespace

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::kCSI:
      return "CSI";
    case Phase::kDPI:
      return "DPI";
    case Phase::kDSI:
      return "DSI";
    case Phase::kCriticalLower:
      return "CRITICAL_LOWER";
    case Phase::kCriticalUpper:
      return "CRITICAL_UPPER";
  }
  return "UNKNOWN";
}

PhaseClass classify(Coupling coupling) {
  const double lambda = coupling.lambda;
  if (lambda == kLowerCritical) return {Phase::kCriticalLower, std::nullopt};
  if (lambda == kUpperCritical) return {Phase::kCriticalUpper, std::nullopt};
  if (lambda > kUpperCritical) return {Phase::kCSI, std::nullopt};
  if (lambda > kLowerCritical) {
    return {Phase::kDPI, std::sqrt(lambda - kLowerCritical)};
  }
  return {Phase::kDSI, std::sqrt(kLowerCritical - lambda)};
}

IntermediateChannel::IntermediateChannel(OrderNu nu, int sgn_g, double kappa0)
    : nu_(nu), sgn_g_(sgn_g), kappa0_(kappa0) {
  if (sgn_g != 1 && sgn_g != -1) {
    throw std::invalid_argument("IntermediateChannel: sgn_g must be +1 or -1");
  }
  if (!(kappa0 > 0.0) || !std::isfinite(kappa0)) {
    throw std::invalid_argument("IntermediateChannel: kappa0 must be positive");
  }
}

double IntermediateChannel::g() const {
  const BoundaryCoeffs c = coeffs(nu_);
  const double nu = nu_.value();
  return sgn_g_ * c.a_nu / (2.0 * nu * c.b_nu * std::pow(kappa0_, 2.0 * nu));
}

IntermediateChannel kappa0_from_g(OrderNu nu, double g) {
  if (g == 0.0 || !std::isfinite(g)) {
    throw std::invalid_argument(
        "kappa0_from_g: g must be finite and nonzero (g = 0 is the Dirichlet "
        "limit)");
  }
  const BoundaryCoeffs c = coeffs(nu);
  const double n = nu.value();
  const double kappa0 =
      std::pow(c.a_nu / (2.0 * n * c.b_nu * std::abs(g)), 1.0 / (2.0 * n));
  return IntermediateChannel(nu, g > 0.0 ? 1 : -1, kappa0);
}

SValue s_eval(const IntermediateChannel& ch, const SheetPoint& k) {
  return ratio(bracket(ch, rotate(k, 0.5 * kPi)),
               bracket(ch, rotate(k, -0.5 * kPi)));
}

SValue s_eval_trig_form(const IntermediateChannel& ch, const SheetPoint& k) {
  const double nu = ch.nu().value();
  const SheetPoint plus = scale(rotate(k, 0.5 * kPi), 1.0 / ch.kappa0());
  const SheetPoint minus = scale(rotate(k, -0.5 * kPi), 1.0 / ch.kappa0());
  const cplx arg_plus = kI * nu * plus.log();
  const cplx arg_minus = kI * nu * minus.log();
  const cplx root_ratio = mv_pow(plus, 0.5) / mv_pow(minus, 0.5);
  if (ch.sgn_g() > 0) {
    const cplx den = std::sin(arg_minus);
    if (std::abs(den) < kPoleThreshold) return {kNaN, true};
    return {-root_ratio * std::sin(arg_plus) / den, false};
  }
  const cplx den = std::cos(arg_minus);
  if (std::abs(den) < kPoleThreshold) return {kNaN, true};
  return {-root_ratio * std::cos(arg_plus) / den, false};
}

SValue s_eval_reflected(const IntermediateChannel& ch, const SheetPoint& q) {
  // With q = e^{i pi} k: +iq -> e^{-i pi/2} k and -iq -> e^{i pi/2} k.
  return ratio(bracket(ch, rotate(q, -1.5 * kPi)),
               bracket(ch, rotate(q, -0.5 * kPi)));
}

double norm_squared(OrderNu nu, double kappa) {
  return kappa * std::sin(nu.value() * kPi) / nu.value();
}

PoleLadder pole_ladder_k(const IntermediateChannel& ch, int n_min, int n_max) {
  if (n_min > n_max) {
    throw std::invalid_argument("pole_ladder_k: n_min > n_max");
  }
  const double nu = ch.nu().value();
  const double shift = ch.sgn_g() > 0 ? 0.0 : 0.5;
  const double n2 = norm_squared(ch.nu(), ch.kappa0());
  PoleLadder ladder{Plane::kMomentum, {}};
  ladder.entries.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) {
    const double phase = (n + shift) * kPi / nu;
    const SheetPoint k(ch.kappa0(), 0.5 * kPi + phase);
    ladder.entries.push_back(
        {k, kI * n2 * std::polar(1.0, phase), sheet_of(k), n});
  }
  return ladder;
}

PoleLadder pole_ladder_E(const PhaseClass& phase, std::complex<double> e0,
                         int n_min, int n_max) {
  if (n_min > n_max) {
    throw std::invalid_argument("pole_ladder_E: n_min > n_max");
  }
  if (phase.tag != Phase::kDSI && phase.tag != Phase::kDPI) {
    throw std::invalid_argument(
        "pole_ladder_E: only DSI and DPI phases carry a pole ladder");
  }
  if (!phase.exponent || !(*phase.exponent > 0.0)) {
    throw std::invalid_argument("pole_ladder_E: missing phase exponent");
  }
  if (e0 == cplx{0.0, 0.0}) {
    throw std::invalid_argument("pole_ladder_E: E0 must be nonzero");
  }
  double arg0 = std::arg(e0);
  if (arg0 < 0.0) arg0 += 2.0 * kPi;
  const SheetPoint base(std::abs(e0), arg0);
  const double x = *phase.exponent;

  PoleLadder ladder{Plane::kEnergy, {}};
  for (int n = n_min; n <= n_max; ++n) {
    const double step = 2.0 * n * kPi / x;
    SheetPoint e = phase.tag == Phase::kDSI ? scale(base, std::exp(-step))
                                            : rotate(base, step);
    const cplx rel = phase.tag == Phase::kDSI ? cplx{std::exp(-step), 0.0}
                                              : std::polar(1.0, step);
    ladder.entries.push_back({e, rel, energy_sheet_of(e), n});
  }
  return ladder;
}

PoleSearch find_pole_numeric(const IntermediateChannel& ch,
                             const SheetPoint& seed) {
  // In u = log k the denominator is D(u) = e^{a v} - s e^{b v} with
  // v = u - i pi/2 - log kappa0, a = 1/2 - nu, b = 1/2 + nu.
  const double nu = ch.nu().value();
  const double a = 0.5 - nu;
  const double b = 0.5 + nu;
  const double s = ch.sgn_g();
  const cplx offset{std::log(ch.kappa0()), 0.5 * kPi};
  cplx u = seed.log();
  constexpr int kMaxIterations = 60;
  for (int it = 1; it <= kMaxIterations; ++it) {
    const cplx v = u - offset;
    const cplx ea = std::exp(a * v);
    const cplx eb = std::exp(b * v);
    const cplx d = ea - s * eb;
    const cplx dd = a * ea - s * b * eb;
    const cplx step = d / dd;
    u -= step;
    // |dk| ~ |k| |du|
    if (std::abs(step) * std::exp(u.real()) <= 1e-13 * ch.kappa0()) {
      return {SheetPoint(std::exp(u.real()), u.imag()), true, it};
    }
  }
  return {SheetPoint(std::exp(u.real()), u.imag()), false, kMaxIterations};
}

std::complex<double> residue_numeric(const IntermediateChannel& ch,
                                     const SheetPoint& pole) {
  constexpr int kNodes = 256;
  const double radius = 1e-3 * ch.kappa0();
  const cplx centre = pole.value();
  cplx sum{0.0, 0.0};
  for (int j = 0; j < kNodes; ++j) {
    const cplx step = std::polar(radius, 2.0 * kPi * j / kNodes);
    const SheetPoint k = SheetPoint::near(pole, centre + step);
    const SValue sv = s_eval(ch, k);
    sum += sv.value * step;
  }
  // dk = i step dt, (1 / 2 pi i) * sum * i * (2 pi / N)
  return sum / static_cast<double>(kNodes);
}

}  // namespace isq

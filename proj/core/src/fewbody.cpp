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

#include "isq/fewbody.hpp"

#include <cmath>
#include <stdexcept>

namespace isq {

namespace {

void require_mass(double m, const char* what) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

std::vector<double> apply(const Matrix& m, std::span<const double> v) {
  std::vector<double> out(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw std::invalid_argument("apply: size mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  Matrix out(a.size(), std::vector<double>(cols, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("multiply: size mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

ReductionResult reduce_two_body(const TwoBodyMasses& m) {
  require_mass(m.m1, "m1");
  require_mass(m.m2, "m2");
  const double total = m.m1 + m.m2;
  const double mu1 = m.m1 * m.m2 / total;
  ReductionResult r;
  r.system = "two-body";
  r.reduced_masses = {mu1, total};
  r.jacobi_forward = {{1.0, -1.0}, {m.m1 / total, m.m2 / total}};
  r.jacobi_backward = {{m.m2 / total, 1.0}, {-m.m1 / total, 1.0}};
  r.relative_scales = {1.0};
  r.mu0 = mu1;
  r.mu0_defaulted = false;
  r.kinetic_prefactor = 0.5 / mu1;
  return r;
}

ReductionResult reduce_three_body(const ThreeBodyMasses& m) {
  require_mass(m.m1, "m1");
  require_mass(m.m2, "m2");
  require_mass(m.m3, "m3");
  if (m.mu0) require_mass(*m.mu0, "mu0");
  const double m12 = m.m1 + m.m2;
  const double total = m12 + m.m3;
  const double mu1 = m.m1 * m.m2 / m12;
  const double mu2 = m12 * m.m3 / total;
  ReductionResult r;
  r.system = "three-body";
  r.reduced_masses = {mu1, mu2, total};
  r.jacobi_forward = {{1.0, -1.0, 0.0},
                      {m.m1 / m12, m.m2 / m12, -1.0},
                      {m.m1 / total, m.m2 / total, m.m3 / total}};
  // x3 = xi3 - (m12/M) xi2, and the pair center X12 = xi3 + (m3/M) xi2.
  r.jacobi_backward = {{m.m2 / m12, m.m3 / total, 1.0},
                       {-m.m1 / m12, m.m3 / total, 1.0},
                       {0.0, -m12 / total, 1.0}};
  r.mu0 = m.mu0.value_or(mu1);
  r.mu0_defaulted = !m.mu0.has_value();
  r.relative_scales = {std::sqrt(r.mu0 / mu1), std::sqrt(r.mu0 / mu2)};
  r.kinetic_prefactor = 0.5 / r.mu0;
  return r;
}

Matrix isotropic_kinetic_form(const ReductionResult& r,
                              std::span<const double> masses) {
  const std::size_t n = masses.size();
  if (r.jacobi_forward.size() != n) {
    throw std::invalid_argument("isotropic_kinetic_form: mass count mismatch");
  }
  Matrix inv_mass(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv_mass[i][i] = 1.0 / masses[i];
  Matrix jt(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) jt[i][j] = r.jacobi_forward[j][i];
  }
  Matrix form = multiply(multiply(r.jacobi_forward, inv_mass), jt);
  // xi_i = scale_i y_i, so d/dxi_i = (1 / scale_i) d/dy_i.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double si = i < r.relative_scales.size() ? r.relative_scales[i] : 1.0;
      const double sj = j < r.relative_scales.size() ? r.relative_scales[j] : 1.0;
      form[i][j] /= si * sj;
    }
  }
  return form;
}

std::complex<double> winding_phase(long n_wind, double alpha) {
  // Reduce n alpha mod 1 first so large windings keep full accuracy.
  const double frac_alpha = alpha - std::floor(alpha);
  const double turns = std::fmod(static_cast<double>(n_wind) * frac_alpha, 1.0);
  return std::polar(1.0, 2.0 * kPi * turns);
}

EffectiveChannel effective_channel(const TwoBodyMasses& m, double alpha,
                                   ChannelBoundary first, ChannelBoundary second) {
  ReductionResult r = reduce_two_body(m);
  const double e = r.kinetic_prefactor;
  return {make_flux_config(alpha, first, second), std::move(r), e};
}

EffectiveChannel effective_channel(const ThreeBodyMasses& m, double alpha,
                                   ChannelBoundary first, ChannelBoundary second) {
  ReductionResult r = reduce_three_body(m);
  const double e = r.kinetic_prefactor;
  return {make_flux_config(alpha, first, second), std::move(r), e};
}

}  // namespace isq

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

#ifndef ISQ_SPECTRAL_HPP_
#define ISQ_SPECTRAL_HPP_

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "isq/quadrature.hpp"
#include "isq/smatrix.hpp"

namespace isq {

/// A radial wavefunction value and its r-derivative.
struct RadialSample {
  std::complex<double> value;
  std::complex<double> derivative;
};

using RadialEvaluator = std::function<RadialSample(double)>;

/// |N_kappa| = sqrt(kappa sin(nu pi) / nu); throws std::domain_error for
/// kappa <= 0.
double norm_constant(OrderNu nu, double kappa);

/// The normalized bound state N f_nu(i kappa0 r) of a g > 0 channel.
class BoundState {
 public:
  /// Throws std::invalid_argument if the channel has g < 0 (no bound state).
  explicit BoundState(const IntermediateChannel& channel);

  const IntermediateChannel& channel() const noexcept { return channel_; }
  double norm() const noexcept { return norm_; }

  /// Throws std::domain_error for r <= 0.
  RadialSample sample(double r) const;

 private:
  IntermediateChannel channel_;
  double norm_;
};

/// The scattering state f_nu(-kr) + S(k) f_nu(kr) for real k > 0.
class ScatteringState {
 public:
  ScatteringState(const IntermediateChannel& channel, double k);

  const IntermediateChannel& channel() const noexcept { return channel_; }
  double k() const noexcept { return k_; }
  std::complex<double> s() const noexcept { return s_; }

  /// Throws std::domain_error for r <= 0.
  RadialSample sample(double r) const;

 private:
  IntermediateChannel channel_;
  double k_;
  std::complex<double> s_;
};

std::complex<double> psi_bound(const BoundState& state, double r);
std::complex<double> psi_scatt(const ScatteringState& state, double r);

/// psi / r^{1/2-nu} + g r^{1-2nu} d/dr (psi / r^{1/2-nu}) at radius r.
/// Vanishes as r -> 0 for states obeying the boundary condition with this g.
std::complex<double> boundary_residual(const RadialEvaluator& psi, double g,
                                       OrderNu nu, double r);

/// Default radial grid for integrals against the bound state:
/// graded toward 0, r_max = 40 / kappa0.
QuadratureGrid bound_state_grid(double kappa0);

struct NormReport {
  double norm_squared;  // quadrature over [r_min, r_max] plus head and tail
  double head;          // analytic [0, r_min] contribution
  double tail;          // analytic bound on [r_max, infinity)
};

NormReport bound_state_norm(const BoundState& state);
NormReport bound_state_norm(const BoundState& state, const QuadratureGrid& grid);

/// <psi_bound, psi_k> with the oscillatory tail beyond the grid integrated
/// analytically from the large-r asymptotics.
std::complex<double> bound_scatt_overlap(const BoundState& bound,
                                         const ScatteringState& scatt);

struct OverlapSample {
  double k;
  std::complex<double> overlap;
};

struct OrthogonalityReport {
  std::vector<OverlapSample> samples;
  double max_abs;
};

/// Orthogonality of psi_kappa0 and psi_k at k = factor * kappa0 for each
/// factor (default {0.3, 1, 3}).
OrthogonalityReport verify_orthogonality_bound_scatt(
    const IntermediateChannel& channel,
    std::span<const double> k_factors = {});

struct PacketReport {
  std::complex<double> overlap;   // <phi_1, phi_2>
  std::complex<double> expected;  // 2 pi int conj(w_1) w_2 dk
  double diagonal_1;              // <phi_1, phi_1>
  double diagonal_2;              // <phi_2, phi_2>
  double ratio;                   // |overlap / expected| when k1 == k2
  double relative_offdiagonal;    // |overlap| / sqrt(diag_1 diag_2)
  bool cross_delta_absent;        // k1 + k2 > 0, so delta(k + k') drops out
  bool ill_conditioned;
};

/// Gaussian wave-packet test of <psi_k, psi_k'> = 2 pi delta(k - k'):
/// phi_i(r) = int dk w_i(k) psi_k(r), w_i = exp(-(k - k_i)^2 / (2 width^2)).
PacketReport verify_scatt_orthonormality(const IntermediateChannel& channel,
                                         double k1, double k2,
                                         double packet_width);

/// Test-function support and grid densities for the completeness check.
struct CompletenessGrid {
  double r_lo = 1e-9;
  double r_hi = 7.0;
  int r_panels = 16;
  int r_nodes = 32;
  double k_panel_width = 0.5;
  int k_nodes = 24;
};

struct CompletenessReport {
  double error;                // ||f - f_hat|| / ||f||
  double error_without_bound;  // same, bound-state term dropped
  double bound_coefficient;    // <psi_kappa0, f> (0 when g < 0)
  double tail_estimate;        // |c(k_max)| relative to max |c|
  bool has_bound_state;
};

/// Weak completeness: reconstruct f from <psi_kappa0, f> and
/// int_0^{k_max} dk/2pi <psi_k, f> psi_k and report the L2 error.
CompletenessReport verify_completeness(const IntermediateChannel& channel,
                                       const std::function<double(double)>& f,
                                       double k_max,
                                       const CompletenessGrid& grid = {});

}  // namespace isq

#endif  // ISQ_SPECTRAL_HPP_

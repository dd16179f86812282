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

#include "isq/abscatter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "isq/parallel.hpp"

namespace isq {

namespace {

const cplx kI(0.0, 1.0);

double inv_sqrt_2pi() { return 1.0 / std::sqrt(2.0 * kPi); }

void require_positive_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::domain_error("wavenumber must be positive and finite");
  }
}

// e^{i(|n| + 1/2) pi}
cplx channel_phase(int n) { return std::polar(1.0, (std::abs(n) + 0.5) * kPi); }

double anomalous_intensity(const FluxConfig& cfg, double k) {
  double sum = 0.0;
  for (const auto& a : cfg.anomalous) sum += std::norm(partial_amp(cfg, a.n, k));
  return sum;
}

}  // namespace

std::array<AnomalousIndex, 2> anomalous_channels(double alpha) {
  if (!std::isfinite(alpha) || alpha == std::floor(alpha)) {
    throw std::invalid_argument(
        "anomalous_channels: integer flux has no channel with 0 < |n + alpha| < 1");
  }
  const int fl = static_cast<int>(std::floor(alpha));
  const double frac = alpha - fl;
  return {AnomalousIndex{-fl, frac}, AnomalousIndex{-fl - 1, 1.0 - frac}};
}

FluxConfig make_flux_config(double alpha, ChannelBoundary first,
                            ChannelBoundary second) {
  const auto idx = anomalous_channels(alpha);
  return FluxConfig{
      alpha,
      {AnomalousChannel{idx[0].n, IntermediateChannel(OrderNu(idx[0].nu),
                                                      first.sgn_g, first.kappa)},
       AnomalousChannel{idx[1].n, IntermediateChannel(OrderNu(idx[1].nu),
                                                      second.sgn_g, second.kappa)}}};
}

std::optional<IntermediateChannel> find_anomalous(const FluxConfig& cfg, int n) {
  for (const auto& a : cfg.anomalous) {
    if (a.n == n) return a.channel;
  }
  return std::nullopt;
}

cplx trivial_smatrix(double alpha, int n) {
  return -kI * std::polar(1.0, -std::abs(n + alpha) * kPi);
}

cplx channel_smatrix(const FluxConfig& cfg, int n, double k) {
  require_positive_k(k);
  return channel_smatrix(cfg, n, SheetPoint(k, 0.0));
}

cplx channel_smatrix(const FluxConfig& cfg, int n, const SheetPoint& k) {
  if (const auto ch = find_anomalous(cfg, n)) return s_eval(*ch, k).value;
  return trivial_smatrix(cfg.alpha, n);
}

cplx partial_amp(const FluxConfig& cfg, int n, double k) {
  require_positive_k(k);
  return partial_amp(cfg, n, SheetPoint(k, 0.0));
}

cplx partial_amp(const FluxConfig& cfg, int n, const SheetPoint& k) {
  const cplx s = channel_smatrix(cfg, n, k);
  return (s * channel_phase(n) - 1.0) / (kI * mv_pow(k, 0.5));
}

cplx trivial_partial_amp(double alpha, int n, double k) {
  require_positive_k(k);
  return (trivial_smatrix(alpha, n) * channel_phase(n) - 1.0) /
         (kI * std::sqrt(k));
}

PartialWaveTable partial_wave_table(const FluxConfig& cfg, double k, int n_min,
                                    int n_max) {
  require_positive_k(k);
  PartialWaveTable table{k, {}};
  for (int n = n_min; n <= n_max; ++n) {
    table.rows.push_back({n, channel_smatrix(cfg, n, k), partial_amp(cfg, n, k)});
  }
  return table;
}

// For n >= n_plus both n and n + alpha are nonnegative, so the trivial value
// is the constant c_plus = (e^{-i alpha pi} - 1)/(i sqrt k); for n <= n_minus
// both are nonpositive and c_minus = (e^{i alpha pi} - 1)/(i sqrt k). The
// Abel sums of the two tails are
//   sum_{n >= N} e^{in theta} = e^{iN theta} / (1 - e^{i theta}),
//   sum_{n <= M} e^{in theta} = e^{iM theta} / (1 - e^{-i theta}),
// and the finitely many indices in between are added directly.
cplx background_amplitude(double alpha, double k, double theta) {
  require_positive_k(k);
  const cplx q = std::polar(1.0, theta);
  if (std::abs(1.0 - q) < 1e-12) {
    throw std::domain_error("background_amplitude: forward direction theta = 0");
  }
  const int n_plus = std::max(0, static_cast<int>(std::ceil(-alpha)));
  const int n_minus = std::min(0, static_cast<int>(std::floor(-alpha)));
  const double root = std::sqrt(k);
  const cplx c_plus = (std::polar(1.0, -alpha * kPi) - 1.0) / (kI * root);
  const cplx c_minus = (std::polar(1.0, alpha * kPi) - 1.0) / (kI * root);
  cplx sum = c_plus * std::polar(1.0, n_plus * theta) / (1.0 - q) +
             c_minus * std::polar(1.0, n_minus * theta) / (1.0 - std::conj(q));
  for (int n = n_minus + 1; n < n_plus; ++n) {
    sum += trivial_partial_amp(alpha, n, k) * std::polar(1.0, n * theta);
  }
  return sum * inv_sqrt_2pi();
}

cplx total_amplitude(const FluxConfig& cfg, double k, double theta) {
  cplx sum = background_amplitude(cfg.alpha, k, theta);
  for (const auto& a : cfg.anomalous) {
    const cplx correction =
        partial_amp(cfg, a.n, k) - trivial_partial_amp(cfg.alpha, a.n, k);
    sum += correction * std::polar(1.0, a.n * theta) * inv_sqrt_2pi();
  }
  return sum;
}

double cross_section(const FluxConfig& cfg, double k, double theta) {
  return std::norm(total_amplitude(cfg, k, theta));
}

std::vector<ResonanceCandidate> resonance_candidates(const FluxConfig& cfg,
                                                     double cos_threshold) {
  std::vector<ResonanceCandidate> out;
  for (const auto& a : cfg.anomalous) {
    const double nu = a.channel.nu().value();
    const double shift = a.channel.sgn_g() > 0 ? 0.0 : 0.5;
    // Only |phi| < pi can be on the physical sheet; pi / nu > pi bounds ell.
    const int reach = static_cast<int>(std::ceil(nu)) + 1;
    for (int ell = -reach; ell <= reach; ++ell) {
      const double phi = (ell + shift) * kPi / nu;
      if (sheet_of(SheetPoint(1.0, 0.5 * kPi + phi)) != 0) continue;
      const double s = std::sin(phi);
      const double c = std::cos(phi);
      if (!(s < -1e-12) || !(std::abs(c) < cos_threshold)) continue;
      const double kappa = a.channel.kappa0();
      out.push_back({a.n, ell, nu, kappa, phi, -kappa * s, kappa * std::abs(c)});
    }
  }
  return out;
}

std::vector<ResonancePeak> resonance_scan(const FluxConfig& cfg, double k_min,
                                          double k_max, int samples,
                                          double cos_threshold) {
  if (!(k_min > 0.0) || !(k_max > k_min) || samples < 3) {
    throw std::invalid_argument("resonance_scan: need 0 < k_min < k_max, samples >= 3");
  }
  const auto candidates = resonance_candidates(cfg, cos_threshold);
  if (candidates.empty()) return {};

  const auto count = static_cast<std::size_t>(samples);
  const double step = (k_max - k_min) / (samples - 1);
  std::vector<double> h(count);
  parallel_for(count, [&](std::size_t i) {
    h[i] = anomalous_intensity(cfg, k_min + static_cast<double>(i) * step);
  });

  std::vector<ResonancePeak> peaks;
  for (std::size_t i = 1; i + 1 < count; ++i) {
    if (!(h[i] > h[i - 1] && h[i] >= h[i + 1])) continue;
    // Golden-section refinement inside the bracketing samples.
    double a = k_min + static_cast<double>(i - 1) * step;
    double b = a + 2.0 * step;
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - ratio * (b - a);
    double x2 = a + ratio * (b - a);
    double f1 = anomalous_intensity(cfg, x1);
    double f2 = anomalous_intensity(cfg, x2);
    for (int it = 0; it < 80 && b - a > 1e-12 * b; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + ratio * (b - a);
        f2 = anomalous_intensity(cfg, x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - ratio * (b - a);
        f1 = anomalous_intensity(cfg, x1);
      }
    }
    const double k_peak = 0.5 * (a + b);
    const auto nearest = std::min_element(
        candidates.begin(), candidates.end(), [&](const auto& l, const auto& r) {
          return std::abs(l.predicted_k - k_peak) < std::abs(r.predicted_k - k_peak);
        });
    peaks.push_back({k_peak, anomalous_intensity(cfg, k_peak), *nearest,
                     std::abs(nearest->predicted_k - k_peak)});
  }
  return peaks;
}

}  // namespace isq

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

#ifndef ISQ_ABSCATTER_HPP_
#define ISQ_ABSCATTER_HPP_

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "isq/riemann.hpp"
#include "isq/smatrix.hpp"

namespace isq {

/// Partial-wave index n with |n + alpha| in (0, 1).
struct AnomalousIndex {
  int n;
  double nu;
};

/// The two window channels n = -floor(alpha) and n = -floor(alpha) - 1, in
/// that order. Throws std::invalid_argument for integer alpha.
std::array<AnomalousIndex, 2> anomalous_channels(double alpha);

/// Boundary data of one anomalous channel.
struct ChannelBoundary {
  int sgn_g = 1;
  double kappa = 1.0;
};

struct AnomalousChannel {
  int n;
  IntermediateChannel channel;
};

struct FluxConfig {
  double alpha;
  std::array<AnomalousChannel, 2> anomalous;
};

/// `first` configures n = -floor(alpha), `second` n = -floor(alpha) - 1.
FluxConfig make_flux_config(double alpha, ChannelBoundary first = {},
                            ChannelBoundary second = {});

/// The anomalous channel with index n, if n is one of the two.
std::optional<IntermediateChannel> find_anomalous(const FluxConfig& cfg, int n);

/// -i exp(-i |n + alpha| pi): the S-matrix of every non-window channel.
std::complex<double> trivial_smatrix(double alpha, int n);

std::complex<double> channel_smatrix(const FluxConfig& cfg, int n, double k);
std::complex<double> channel_smatrix(const FluxConfig& cfg, int n,
                                     const SheetPoint& k);

/// f_n(k) = (S_n(k) exp(i(|n| + 1/2) pi) - 1) / (i sqrt(k)).
std::complex<double> partial_amp(const FluxConfig& cfg, int n, double k);
std::complex<double> partial_amp(const FluxConfig& cfg, int n,
                                 const SheetPoint& k);

/// partial_amp evaluated with the trivial S-matrix, for any n.
std::complex<double> trivial_partial_amp(double alpha, int n, double k);

struct PartialWaveRow {
  int n;
  std::complex<double> s;
  std::complex<double> f;
};

struct PartialWaveTable {
  double k;
  std::vector<PartialWaveRow> rows;
};

PartialWaveTable partial_wave_table(const FluxConfig& cfg, double k, int n_min,
                                    int n_max);

/// Abel sum over all n of trivial_partial_amp(alpha, n, k) e^{in theta} /
/// sqrt(2 pi). Throws std::domain_error when theta = 0 (mod 2 pi).
std::complex<double> background_amplitude(double alpha, double k, double theta);

/// Background plus the two anomalous corrections.
std::complex<double> total_amplitude(const FluxConfig& cfg, double k,
                                     double theta);

/// |total_amplitude|^2.
double cross_section(const FluxConfig& cfg, double k, double theta);

/// A ladder pole close enough to the positive real axis to show up as a peak.
struct ResonanceCandidate {
  int n;
  int ell;
  double nu;
  double kappa;
  double angle;          // phi with k_pole = i kappa e^{i phi}
  double predicted_k;    // -kappa sin(phi)
  double predicted_hwhm; // kappa |cos(phi)|
};

/// Physical-sheet poles with sin(phi) < 0 and |cos(phi)| < cos_threshold.
std::vector<ResonanceCandidate> resonance_candidates(const FluxConfig& cfg,
                                                     double cos_threshold = 0.2);

struct ResonancePeak {
  double k_peak;
  double height;
  ResonanceCandidate matched;
  double match_distance;
};

/// Local maxima of sum over anomalous n of |f_n(k)|^2 on [k_min, k_max],
/// each matched to the nearest candidate pole. Empty when there is none.
std::vector<ResonancePeak> resonance_scan(const FluxConfig& cfg, double k_min,
                                          double k_max, int samples,
                                          double cos_threshold = 0.2);

}  // namespace isq

#endif  // ISQ_ABSCATTER_HPP_

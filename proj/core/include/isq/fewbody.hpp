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

#ifndef ISQ_FEWBODY_HPP_
#define ISQ_FEWBODY_HPP_

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isq/abscatter.hpp"

namespace isq {

struct TwoBodyMasses {
  double m1;
  double m2;
};

struct ThreeBodyMasses {
  double m1;
  double m2;
  double m3;
  /// Reference mass of the isotropic polar map; defaults to mu_1.
  std::optional<double> mu0;
};

/// Dense row-major matrix.
using Matrix = std::vector<std::vector<double>>;

std::vector<double> apply(const Matrix& m, std::span<const double> v);
Matrix multiply(const Matrix& a, const Matrix& b);

/// Units: hbar = 1, lengths and masses in the caller's units.
struct ReductionResult {
  std::string system;                  // "two-body" or "three-body"
  std::vector<double> reduced_masses;  // mu_1, mu_2 (, mu_3)
  Matrix jacobi_forward;               // particle coordinates -> xi
  Matrix jacobi_backward;              // xi -> particle coordinates
  /// Relative coordinates are xi_i = scale_i * (isotropic coordinate).
  std::vector<double> relative_scales;
  double mu0;
  bool mu0_defaulted;
  /// Coefficient of the radial operator: 1 / (2 mu0).
  double kinetic_prefactor;
};

/// Throws std::invalid_argument unless both masses are positive and finite.
ReductionResult reduce_two_body(const TwoBodyMasses& m);

/// Throws std::invalid_argument unless all masses (and mu0 if given) are
/// positive and finite.
ReductionResult reduce_three_body(const ThreeBodyMasses& m);

/// Inverse-mass quadratic form J M^{-1} J^T expressed in the isotropic
/// relative coordinates (center-of-mass coordinate left unscaled). The
/// relative block equals (1 / mu0) times the identity.
Matrix isotropic_kinetic_form(const ReductionResult& r,
                              std::span<const double> masses);

/// e^{i 2 pi n alpha}: phase picked up by the relative wavefunction after
/// winding n times around the coincidence point.
std::complex<double> winding_phase(long n_wind, double alpha);

struct EffectiveChannel {
  FluxConfig flux;
  ReductionResult reduction;
  /// E = energy_per_k2 * k^2 converts the dimensionless wavenumber.
  double energy_per_k2;
};

EffectiveChannel effective_channel(const TwoBodyMasses& m, double alpha,
                                   ChannelBoundary first = {},
                                   ChannelBoundary second = {});
EffectiveChannel effective_channel(const ThreeBodyMasses& m, double alpha,
                                   ChannelBoundary first = {},
                                   ChannelBoundary second = {});

}  // namespace isq

#endif  // ISQ_FEWBODY_HPP_

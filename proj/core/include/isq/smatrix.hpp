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

#ifndef ISQ_SMATRIX_HPP_
#define ISQ_SMATRIX_HPP_

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "isq/riemann.hpp"
#include "isq/specfun.hpp"

namespace isq {

/// Coupling lambda of the lambda / r^2 potential, in the natural units where
/// the kinetic term is -d^2/dr^2.
struct Coupling {
  double lambda;
};

inline constexpr double kLowerCritical = -0.25;
inline constexpr double kUpperCritical = 0.75;

enum class Phase { kCSI, kDPI, kDSI, kCriticalLower, kCriticalUpper };

std::string_view phase_name(Phase phase);

struct PhaseClass {
  Phase tag;
  /// sqrt(lambda + 1/4) for DPI, sqrt(-1/4 - lambda) for DSI.
  std::optional<double> exponent;
};

PhaseClass classify(Coupling coupling);

/// One intermediate-window channel: order nu, sign of the boundary
/// parameter g and the inverse length kappa0 it induces.
class IntermediateChannel {
 public:
  /// Throws std::invalid_argument unless sgn_g is +1 or -1 and kappa0 > 0.
  IntermediateChannel(OrderNu nu, int sgn_g, double kappa0);

  OrderNu nu() const noexcept { return nu_; }
  int sgn_g() const noexcept { return sgn_g_; }
  double kappa0() const noexcept { return kappa0_; }

  /// The boundary parameter g reproducing this channel.
  double g() const;

 private:
  OrderNu nu_;
  int sgn_g_;
  double kappa0_;
};

/// kappa0 = (A / (2 nu B |g|))^{1/(2 nu)}; throws std::invalid_argument for
/// g == 0 (the Dirichlet limit is outside this family).
IntermediateChannel kappa0_from_g(OrderNu nu, double g);

/// S-matrix value. A pole hit leaves `value` as NaN.
struct SValue {
  std::complex<double> value;
  bool pole_hit = false;
};

/// Exact S-matrix with +-ik formed as rotate(k, +-pi/2).
SValue s_eval(const IntermediateChannel& ch, const SheetPoint& k);

/// Same S-matrix written through sin / cos of i nu log(+-ik/kappa0).
SValue s_eval_trig_form(const IntermediateChannel& ch, const SheetPoint& k);

/// S at q = rotate(k, pi), with the two factors continued back through
/// opposite half-planes: +iq is rotate(k, -pi/2) and -iq is rotate(k, +pi/2).
/// This is the branch bookkeeping under which conj S(k) = S(-k).
SValue s_eval_reflected(const IntermediateChannel& ch, const SheetPoint& q);

enum class Plane { kMomentum, kEnergy };

struct PoleEntry {
  /// k_n in the k-plane, or E_n in the E-plane.
  SheetPoint location;
  /// k-plane: residue of S. E-plane: residue relative to the n = 0 pole.
  std::complex<double> residue;
  int sheet;
  int n;
};

struct PoleLadder {
  Plane plane;
  std::vector<PoleEntry> entries;
};

/// |N_kappa|^2 = kappa sin(nu pi) / nu.
double norm_squared(OrderNu nu, double kappa);

/// Analytic ladder k_n = i kappa0 e^{i n pi / nu} (g > 0) or
/// i kappa0 e^{i (n + 1/2) pi / nu} (g < 0) with residue i |N|^2 e^{...}.
PoleLadder pole_ladder_k(const IntermediateChannel& ch, int n_min, int n_max);

/// Energy-plane ladder. DSI: E_n = E0 exp(-2 n pi / x); DPI:
/// E_n = E0 exp(2 i n pi / x) with x the phase exponent. E0 is placed at its
/// argument in [0, 2pi). Throws std::invalid_argument for other phases or
/// E0 == 0.
PoleLadder pole_ladder_E(const PhaseClass& phase, std::complex<double> e0,
                         int n_min, int n_max);

struct PoleSearch {
  SheetPoint location;
  bool converged;
  int iterations;
};

/// Newton iteration on the denominator of S in log-k coordinates, so the
/// argument stays continuous with the seed. Converges for seeds within
/// about 0.3 kappa0 of a ladder member.
PoleSearch find_pole_numeric(const IntermediateChannel& ch,
                             const SheetPoint& seed);

/// (1 / 2 pi i) times the contour integral of S around `pole` on a circle of
/// radius 1e-3 kappa0, 256-node trapezoid rule.
std::complex<double> residue_numeric(const IntermediateChannel& ch,
                                     const SheetPoint& pole);

}  // namespace isq

#endif  // ISQ_SMATRIX_HPP_

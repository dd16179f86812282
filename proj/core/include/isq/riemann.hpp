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

#ifndef ISQ_RIEMANN_HPP_
#define ISQ_RIEMANN_HPP_

#include <complex>

namespace isq {

/// A point on the logarithmic Riemann surface: modulus and an unwrapped
/// argument. Branch points 0 and infinity are excluded.
///
/// The branch cut sits on the negative imaginary axis. Sheet 0 (the
/// physical sheet) covers arguments in (-pi/2, 3pi/2), so it contains both
/// the positive real axis and the positive imaginary axis.
class SheetPoint {
 public:
  /// Throws std::domain_error unless modulus is finite and positive and the
  /// argument is finite.
  SheetPoint(double modulus, double argument);

  /// Point with the principal argument of z, in (-pi, pi].
  static SheetPoint from_complex(std::complex<double> z);

  /// Point at z whose argument is the representative closest to
  /// `reference.argument()`. Used to follow a path without crossing a cut.
  static SheetPoint near(const SheetPoint& reference, std::complex<double> z);

  double modulus() const noexcept { return modulus_; }
  double argument() const noexcept { return argument_; }

  /// modulus * e^{i argument}.
  std::complex<double> value() const;

  /// ln(modulus) + i argument.
  std::complex<double> log() const;

 private:
  double modulus_;
  double argument_;
};

/// z^p = exp(p (ln|z| + i arg z)) with the argument kept unreduced.
std::complex<double> mv_pow(const SheetPoint& z, double p);

SheetPoint rotate(const SheetPoint& z, double dtheta);

/// Multiply the modulus by factor > 0.
SheetPoint scale(const SheetPoint& z, double factor);

/// k -> k^2 on the surface: modulus squared, argument doubled.
SheetPoint square(const SheetPoint& z);

/// k-plane sheet index floor((arg + pi/2) / 2pi).
int sheet_of(const SheetPoint& z);

/// E-plane sheet index floor(arg / 2pi); sheet 0 is arg E in [0, 2pi).
int energy_sheet_of(const SheetPoint& e);

}  // namespace isq

#endif  // ISQ_RIEMANN_HPP_

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

#include "isq/riemann.hpp"

#include <cmath>
#include <stdexcept>

#include "isq/specfun.hpp"

namespace isq {

SheetPoint::SheetPoint(double modulus, double argument)
    : modulus_(modulus), argument_(argument) {
  if (!(modulus > 0.0) || !std::isfinite(modulus) ||
      !std::isfinite(argument)) {
    throw std::domain_error(
        "SheetPoint: modulus must be finite and positive, argument finite");
  }
}

SheetPoint SheetPoint::from_complex(std::complex<double> z) {
  return SheetPoint(std::abs(z), std::arg(z));
}

SheetPoint SheetPoint::near(const SheetPoint& reference,
                            std::complex<double> z) {
  const double principal = std::arg(z);
  const double turns =
      std::round((reference.argument() - principal) / (2.0 * kPi));
  return SheetPoint(std::abs(z), principal + 2.0 * kPi * turns);
}

std::complex<double> SheetPoint::value() const {
  return std::polar(modulus_, argument_);
}

std::complex<double> SheetPoint::log() const {
  return {std::log(modulus_), argument_};
}

std::complex<double> mv_pow(const SheetPoint& z, double p) {
  return std::exp(p * z.log());
}

SheetPoint rotate(const SheetPoint& z, double dtheta) {
  return SheetPoint(z.modulus(), z.argument() + dtheta);
}

SheetPoint scale(const SheetPoint& z, double factor) {
  return SheetPoint(z.modulus() * factor, z.argument());
}

SheetPoint square(const SheetPoint& z) {
  return SheetPoint(z.modulus() * z.modulus(), 2.0 * z.argument());
}

int sheet_of(const SheetPoint& z) {
  return static_cast<int>(
      std::floor((z.argument() + 0.5 * kPi) / (2.0 * kPi)));
}

int energy_sheet_of(const SheetPoint& e) {
  return static_cast<int>(std::floor(e.argument() / (2.0 * kPi)));
}

}  // namespace isq

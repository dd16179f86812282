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

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "isq/smatrix.hpp"
#include "oracles/oracle_values.hpp"

using namespace isq;

namespace {

cplx closed_form_half(double k, double kappa0) {
  const cplx x(0.0, k / kappa0);
  return -(1.0 - x) / (1.0 + x);
}

}  // namespace

TEST_CASE("classify") {
  CHECK(classify({1.0}).tag == Phase::kCSI);
  CHECK_FALSE(classify({1.0}).exponent.has_value());
  const PhaseClass dpi = classify({0.0});
  CHECK(dpi.tag == Phase::kDPI);
  CHECK(*dpi.exponent == 0.5);
  const PhaseClass dsi = classify({-1.0});
  CHECK(dsi.tag == Phase::kDSI);
  CHECK(*dsi.exponent == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(classify({-0.25}).tag == Phase::kCriticalLower);
  CHECK(classify({0.75}).tag == Phase::kCriticalUpper);
  CHECK(phase_name(Phase::kCriticalLower) == "CRITICAL_LOWER");
  CHECK(classify({std::nextafter(0.75, 1.0)}).tag == Phase::kCSI);
  CHECK(classify({std::nextafter(-0.25, 0.0)}).tag == Phase::kDPI);
}

TEST_CASE("kappa0_from_g") {
  const IntermediateChannel pos = kappa0_from_g(OrderNu(0.5), 2.0);
  CHECK(pos.sgn_g() == 1);
  CHECK(pos.kappa0() == doctest::Approx(0.5).epsilon(1e-14));
  const IntermediateChannel neg = kappa0_from_g(OrderNu(0.5), -2.0);
  CHECK(neg.sgn_g() == -1);
  CHECK(neg.kappa0() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(kappa0_from_g(OrderNu(0.5), 0.0), std::invalid_argument);

  double previous = kappa0_from_g(OrderNu(0.3), 1.0).kappa0();
  for (double g : {10.0, 1e3, 1e6}) {
    const double kappa = kappa0_from_g(OrderNu(0.3), g).kappa0();
    CHECK(kappa < previous);
    previous = kappa;
  }
  CHECK(previous < 1e-8);

  // g() inverts the construction.
  const IntermediateChannel ch = kappa0_from_g(OrderNu(0.37), -4.2);
  CHECK(ch.g() == doctest::Approx(-4.2).epsilon(1e-13));
  CHECK_THROWS_AS(IntermediateChannel(OrderNu(0.3), 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(IntermediateChannel(OrderNu(0.3), 1, 0.0), std::invalid_argument);
}

TEST_CASE("s_eval against high-precision values") {
  for (const auto& c : oracle::kSMatrix) {
    CAPTURE(c.nu);
    CAPTURE(c.argument);
    const IntermediateChannel ch(OrderNu(c.nu), c.sgn_g, c.kappa);
    const SValue got = s_eval(ch, SheetPoint(c.modulus, c.argument));
    CHECK_FALSE(got.pole_hit);
    CHECK(std::abs(got.value - c.value) <= 1e-12 * std::max(1.0, std::abs(c.value)));
  }
}

TEST_CASE("s_eval closed form at nu = 1/2 and unitarity") {
  const IntermediateChannel ch(OrderNu(0.5), 1, 0.8);
  for (double k : {0.01, 0.3, 1.0, 7.0}) {
    CAPTURE(k);
    const cplx s = s_eval(ch, SheetPoint(k, 0.0)).value;
    CHECK(std::abs(s - closed_form_half(k, 0.8)) <= 1e-14);
    CHECK(std::abs(std::abs(s) - 1.0) <= 1e-14);
    CHECK(std::abs(s_eval_trig_form(ch, SheetPoint(k, 0.0)).value - s) <= 1e-13);
  }
}

TEST_CASE("discrete phase invariance at the documented sample") {
  const IntermediateChannel ch(OrderNu(0.7), 1, 0.9);
  const SheetPoint k(1.3, 0.0);
  const cplx s = s_eval(ch, k).value;
  CHECK(std::abs(s_eval(ch, rotate(k, kPi / 0.7)).value - s) <= 1e-12);
}

TEST_CASE("trig form agrees for both signs") {
  for (int sg : {1, -1}) {
    const IntermediateChannel ch(OrderNu(0.3), sg, 1.0);
    for (double k = 0.05; k < 20.0; k *= 1.3) {
      const SheetPoint p(k, 0.0);
      CHECK(std::abs(s_eval(ch, p).value - s_eval_trig_form(ch, p).value) <= 1e-11);
    }
  }
}

TEST_CASE("s_eval signals pole hits") {
  const IntermediateChannel ch(OrderNu(0.5), 1, 1.0);
  const SValue hit = s_eval(ch, SheetPoint(1.0, 0.5 * kPi));
  CHECK(hit.pole_hit);
  CHECK(std::isnan(hit.value.real()));
}

TEST_CASE("s_eval_reflected realizes conj S(k) on the real line") {
  for (int sg : {1, -1}) {
    const IntermediateChannel ch(OrderNu(0.3), sg, 1.0);
    for (double k : {0.1, 1.0, 4.0}) {
      const SheetPoint p(k, 0.0);
      CHECK(std::abs(std::conj(s_eval(ch, p).value) -
                     s_eval_reflected(ch, rotate(p, kPi)).value) <= 1e-12);
    }
  }
}

TEST_CASE("pole_ladder_k") {
  const double nu = 1.0 / std::sqrt(2.0);
  const IntermediateChannel ch(OrderNu(nu), 1, 1.0);
  const PoleLadder ladder = pole_ladder_k(ch, -3, 3);
  CHECK(ladder.plane == Plane::kMomentum);
  REQUIRE(ladder.entries.size() == 7);
  for (const PoleEntry& e : ladder.entries) {
    CAPTURE(e.n);
    CHECK(e.location.modulus() == doctest::Approx(1.0));
    CHECK(std::abs(e.location.argument() - (0.5 + std::sqrt(2.0) * e.n) * kPi) <= 1e-12);
    CHECK(e.sheet == sheet_of(e.location));
    const cplx expected = cplx(0.0, std::sin(nu * kPi) / nu) * std::polar(1.0, e.n * kPi / nu);
    CHECK(std::abs(e.residue - expected) <= 1e-14);
  }

  // nu = 1/2: every member sits at i kappa0, on successive sheets.
  const PoleLadder half = pole_ladder_k(IntermediateChannel(OrderNu(0.5), 1, 2.0), -2, 2);
  for (const PoleEntry& e : half.entries) {
    CHECK(std::abs(e.location.value() - cplx(0.0, 2.0)) <= 1e-13);
    CHECK(e.sheet == e.n);
  }

  // g < 0: nothing at arg pi/2 on the physical sheet.
  const PoleLadder neg = pole_ladder_k(IntermediateChannel(OrderNu(0.6), -1, 1.0), -5, 5);
  for (const PoleEntry& e : neg.entries) {
    CHECK_FALSE((e.sheet == 0 && std::abs(e.location.argument() - 0.5 * kPi) < 1e-9));
  }
}

TEST_CASE("pole_ladder_E") {
  const PhaseClass dsi = classify({-1.0});
  const PoleLadder ladder = pole_ladder_E(dsi, cplx(-1.0, 0.0), 0, 3);
  for (const PoleEntry& e : ladder.entries) {
    const double expected = -std::exp(-4.0 * e.n * kPi / std::sqrt(3.0));
    CHECK(std::abs(e.location.value().real() / expected - 1.0) <= 1e-12);
  }
  CHECK(std::abs(ladder.entries[0].location.value() - cplx(-1.0, 0.0)) <= 1e-15);

  const PoleLadder dpi = pole_ladder_E(classify({0.0}), cplx(-1.0, 0.0), -2, 2);
  for (const PoleEntry& e : dpi.entries) {
    CHECK(e.location.modulus() == doctest::Approx(1.0));
    CHECK(e.location.argument() == doctest::Approx(kPi + 4.0 * kPi * e.n));
    CHECK(e.sheet == 2 * e.n);
  }
  CHECK_THROWS_AS(pole_ladder_E(classify({1.0}), cplx(-1.0, 0.0), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(pole_ladder_E(dsi, cplx(0.0, 0.0), 0, 1), std::invalid_argument);
}

TEST_CASE("find_pole_numeric") {
  const IntermediateChannel ch(OrderNu(0.7), 1, 1.0);
  const PoleLadder ladder = pole_ladder_k(ch, 1, 1);
  const SheetPoint k1 = ladder.entries[0].location;
  const PoleSearch found = find_pole_numeric(ch, scale(k1, 1.05));
  CHECK(found.converged);
  CHECK(std::abs(found.location.value() - k1.value()) <= 1e-10);
  CHECK(std::abs(found.location.argument() - k1.argument()) <= 1e-10);

  // A seed on another sheet converges to that sheet's member.
  const SheetPoint seed = rotate(k1, 2.0 * kPi / 0.7 + 0.05);
  const PoleSearch other = find_pole_numeric(ch, seed);
  CHECK(other.converged);
  CHECK(std::abs(other.location.argument() - seed.argument()) < 2.0 * kPi);

  const PoleSearch bound = find_pole_numeric(ch, SheetPoint(1.1, 0.5 * kPi + 0.1));
  CHECK(std::abs(bound.location.value() - cplx(0.0, 1.0)) <= 1e-10);
}

TEST_CASE("residue_numeric") {
  const IntermediateChannel pos(OrderNu(0.6), 1, 1.3);
  const double n2 = 1.3 * std::sin(0.6 * kPi) / 0.6;
  const cplx r0 = residue_numeric(pos, SheetPoint(1.3, 0.5 * kPi));
  CHECK(std::abs(r0 - cplx(0.0, n2)) <= 1e-6 * n2);
  CHECK(norm_squared(OrderNu(0.6), 1.3) == doctest::Approx(n2).epsilon(1e-15));

  const PoleLadder ladder = pole_ladder_k(pos, 1, 1);
  const cplx r1 = residue_numeric(pos, ladder.entries[0].location);
  CHECK(std::abs(r1 - cplx(0.0, n2) * std::polar(1.0, kPi / 0.6)) <= 1e-6 * n2);

  const IntermediateChannel neg(OrderNu(0.6), -1, 1.3);
  const PoleLadder nl = pole_ladder_k(neg, 0, 0);
  const cplx rn = residue_numeric(neg, nl.entries[0].location);
  CHECK(std::abs(rn - cplx(0.0, n2) * std::polar(1.0, kPi / 1.2)) <= 1e-6 * n2);
}

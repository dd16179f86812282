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

#include "isq/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "isq/parallel.hpp"

namespace isq {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_positive_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::domain_error("radial coordinate must be positive and finite");
  }
}

// Graded rule from r_min to r_join, then uniform panels of at most
// `width` up to r_max.
QuadratureRule radial_rule(double r_min, double r_join, double r_max,
                           double width, int nodes) {
  QuadratureGrid grid;
  grid.r_min = r_min;
  grid.r_join = r_join;
  grid.r_max = r_max;
  grid.nodes_per_panel = nodes;
  grid.panels = std::max(1, static_cast<int>(std::ceil((r_max - r_join) / width)));
  return grid.rule();
}

// Geometric panels toward 0 below k_join, uniform panels above.
QuadratureRule momentum_rule(double k_max, double width, int nodes) {
  const double join = std::min(width, k_max);
  QuadratureRule rule;
  double lo = join * 1e-10;
  for (int p = 0; p < 10; ++p) {
    rule.append(gauss_legendre(static_cast<std::size_t>(nodes), lo, lo * 10.0));
    lo *= 10.0;
  }
  if (join < k_max) {
    const int count = static_cast<int>(std::ceil((k_max - join) / width));
    const double step = (k_max - join) / count;
    for (int p = 0; p < count; ++p) {
      rule.append(gauss_legendre(static_cast<std::size_t>(nodes),
                                 join + p * step, join + (p + 1) * step));
    }
  }
  return rule;
}

}  // namespace

double norm_constant(OrderNu nu, double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::domain_error("norm_constant: kappa must be positive and finite");
  }
  return std::sqrt(norm_squared(nu, kappa));
}

BoundState::BoundState(const IntermediateChannel& channel)
    : channel_(channel), norm_(0.0) {
  if (channel.sgn_g() < 0) {
    throw std::invalid_argument("BoundState: channel with g < 0 has no bound state");
  }
  norm_ = norm_constant(channel.nu(), channel.kappa0());
}

RadialSample BoundState::sample(double r) const {
  require_positive_radius(r);
  const double kappa = channel_.kappa0();
  const double t = kappa * r;
  const JostResult f = jost_f(channel_.nu(), Ray::kPositiveImaginary, t);
  const JostResult df = jost_f_derivative(channel_.nu(), Ray::kPositiveImaginary, t);
  return {norm_ * f.value, norm_ * kappa * df.value};
}

ScatteringState::ScatteringState(const IntermediateChannel& channel, double k)
    : channel_(channel), k_(k), s_() {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::domain_error("ScatteringState: k must be positive and finite");
  }
  s_ = s_eval(channel, SheetPoint(k, 0.0)).value;
}

RadialSample ScatteringState::sample(double r) const {
  require_positive_radius(r);
  const double t = k_ * r;
  const cplx f = jost_f(channel_.nu(), Ray::kPositiveReal, t).value;
  const cplx df = jost_f_derivative(channel_.nu(), Ray::kPositiveReal, t).value;
  return {std::conj(f) + s_ * f, k_ * (std::conj(df) + s_ * df)};
}

cplx psi_bound(const BoundState& state, double r) { return state.sample(r).value; }

cplx psi_scatt(const ScatteringState& state, double r) {
  return state.sample(r).value;
}

cplx boundary_residual(const RadialEvaluator& psi, double g, OrderNu nu,
                       double r) {
  require_positive_radius(r);
  const double a = 0.5 - nu.value();
  const RadialSample s = psi(r);
  const double ra = std::pow(r, -a);
  const cplx reduced = s.value * ra;
  const cplx reduced_derivative = s.derivative * ra - a * s.value * ra / r;
  return reduced + g * std::pow(r, 1.0 - 2.0 * nu.value()) * reduced_derivative;
}

QuadratureGrid bound_state_grid(double kappa0) {
  QuadratureGrid grid;
  grid.r_min = 1e-30 / kappa0;
  grid.r_join = 1.0 / kappa0;
  grid.r_max = 40.0 / kappa0;
  return grid;
}

NormReport bound_state_norm(const BoundState& state) {
  return bound_state_norm(state, bound_state_grid(state.channel().kappa0()));
}

NormReport bound_state_norm(const BoundState& state, const QuadratureGrid& grid) {
  const QuadratureRule rule = grid.rule();
  std::vector<double> terms(rule.size());
  parallel_for(rule.size(), [&](std::size_t i) {
    terms[i] = rule.weights[i] * std::norm(state.sample(rule.nodes[i]).value);
  });
  double body = 0.0;
  for (double t : terms) body += t;
  // psi^2 ~ c r^{1 - 2 nu} below r_min and ~ N^2 exp(-2 kappa r) past r_max.
  const double nu = state.channel().nu().value();
  const double head =
      std::norm(state.sample(grid.r_min).value) * grid.r_min / (2.0 - 2.0 * nu);
  const double kappa = state.channel().kappa0();
  const double tail = state.norm() * state.norm() *
                      std::exp(-2.0 * kappa * grid.r_max) / (2.0 * kappa);
  return {body + head + tail, head, tail};
}

cplx bound_scatt_overlap(const BoundState& bound, const ScatteringState& scatt) {
  const double kappa = bound.channel().kappa0();
  const double k = scatt.k();
  const double r_max = 40.0 / kappa;
  const double width = std::min(1.0 / kappa, 4.0 / k);
  const QuadratureRule rule = radial_rule(1e-30 / kappa, 1.0 / kappa, r_max, width, 64);
  std::vector<cplx> terms(rule.size());
  parallel_for(rule.size(), [&](std::size_t i) {
    const double r = rule.nodes[i];
    terms[i] = rule.weights[i] * std::conj(bound.sample(r).value) *
               scatt.sample(r).value;
  });
  cplx sum = 0.0;
  for (const cplx& t : terms) sum += t;
  // Large-r forms: psi_bound ~ N exp(-kappa r), psi_k ~ exp(-ikr) + S exp(ikr).
  const cplx ik(0.0, k);
  const cplx tail =
      bound.norm() * (std::exp(-(kappa + ik) * r_max) / (kappa + ik) +
                      scatt.s() * std::exp(-(kappa - ik) * r_max) / (kappa - ik));
  return sum + tail;
}

OrthogonalityReport verify_orthogonality_bound_scatt(
    const IntermediateChannel& channel, std::span<const double> k_factors) {
  static constexpr std::array<double, 3> kDefaultFactors{0.3, 1.0, 3.0};
  if (k_factors.empty()) k_factors = kDefaultFactors;
  const BoundState bound(channel);
  OrthogonalityReport report{{}, 0.0};
  for (double factor : k_factors) {
    const double k = factor * channel.kappa0();
    const cplx overlap = bound_scatt_overlap(bound, ScatteringState(channel, k));
    report.samples.push_back({k, overlap});
    report.max_abs = std::max(report.max_abs, std::abs(overlap));
  }
  return report;
}

PacketReport verify_scatt_orthonormality(const IntermediateChannel& channel,
                                         double k1, double k2,
                                         double packet_width) {
  if (!(packet_width > 0.0) || !(k1 > 0.0) || !(k2 > 0.0)) {
    throw std::invalid_argument(
        "verify_scatt_orthonormality: momenta and width must be positive");
  }
  const double sigma = packet_width;
  const double kappa = channel.kappa0();
  const double dk = k1 - k2;
  PacketReport report{};
  report.expected = 2.0 * kPi * sigma * std::sqrt(kPi) *
                    std::exp(-dk * dk / (4.0 * sigma * sigma));
  report.cross_delta_absent = k1 + k2 > 0.0;

  // Packets must stay clear of k = 0, and the radial extent ~ 1/sigma must
  // remain tractable.
  const double k_top = std::max(k1, k2) + 8.0 * sigma;
  const double r_max = 12.0 / sigma + 40.0 / kappa;
  const double width = std::min(4.0 / k_top, 2.0 / kappa);
  constexpr double kMaxPanels = 20000.0;
  if (std::min(k1, k2) - 8.0 * sigma <= 0.0 || r_max / width > kMaxPanels) {
    report.ill_conditioned = true;
    report.overlap = kNaN;
    report.diagonal_1 = report.diagonal_2 = kNaN;
    report.ratio = report.relative_offdiagonal = kNaN;
    return report;
  }

  struct Packet {
    std::vector<ScatteringState> states;
    std::vector<double> weights;
  };
  auto make_packet = [&](double kc) {
    Packet p;
    for (int panel = 0; panel < 3; ++panel) {
      const double lo = kc - 8.0 * sigma + panel * (16.0 * sigma / 3.0);
      const QuadratureRule rule = gauss_legendre(32, lo, lo + 16.0 * sigma / 3.0);
      for (std::size_t j = 0; j < rule.size(); ++j) {
        const double x = (rule.nodes[j] - kc) / sigma;
        p.states.emplace_back(channel, rule.nodes[j]);
        p.weights.push_back(rule.weights[j] * std::exp(-0.5 * x * x));
      }
    }
    return p;
  };
  const Packet p1 = make_packet(k1);
  const Packet p2 = make_packet(k2);

  const QuadratureRule rule = radial_rule(1e-30 / kappa, 1.0 / kappa, r_max, width, 24);
  auto phi = [](const Packet& p, double r) {
    cplx sum = 0.0;
    for (std::size_t j = 0; j < p.states.size(); ++j) {
      sum += p.weights[j] * p.states[j].sample(r).value;
    }
    return sum;
  };
  std::vector<cplx> cross(rule.size());
  std::vector<double> d1(rule.size());
  std::vector<double> d2(rule.size());
  parallel_for(rule.size(), [&](std::size_t i) {
    const double r = rule.nodes[i];
    const cplx a = phi(p1, r);
    const cplx b = phi(p2, r);
    cross[i] = rule.weights[i] * std::conj(a) * b;
    d1[i] = rule.weights[i] * std::norm(a);
    d2[i] = rule.weights[i] * std::norm(b);
  });
  for (std::size_t i = 0; i < rule.size(); ++i) {
    report.overlap += cross[i];
    report.diagonal_1 += d1[i];
    report.diagonal_2 += d2[i];
  }
  report.ratio = std::abs(report.overlap / report.expected);
  report.relative_offdiagonal =
      std::abs(report.overlap) / std::sqrt(report.diagonal_1 * report.diagonal_2);
  return report;
}

CompletenessReport verify_completeness(const IntermediateChannel& channel,
                                       const std::function<double(double)>& f,
                                       double k_max,
                                       const CompletenessGrid& grid) {
  if (!(k_max > 0.0) || !(grid.r_lo > 0.0) || !(grid.r_hi > grid.r_lo) ||
      grid.r_panels < 1 || grid.r_nodes < 1 || grid.k_nodes < 1 ||
      !(grid.k_panel_width > 0.0)) {
    throw std::invalid_argument("verify_completeness: inconsistent grid");
  }
  QuadratureRule rr;
  const double rw = (grid.r_hi - grid.r_lo) / grid.r_panels;
  const auto r_nodes = static_cast<std::size_t>(grid.r_nodes);
  // First panel split in decades toward r_lo, where psi ~ r^{1/2 - nu}.
  double inner = rw;
  int decades = 0;
  while (decades < 12 && inner * 0.1 > grid.r_lo) {
    inner *= 0.1;
    ++decades;
  }
  rr.append(gauss_legendre(r_nodes, grid.r_lo, grid.r_lo + inner));
  for (int d = 0; d < decades; ++d) {
    rr.append(gauss_legendre(r_nodes, grid.r_lo + inner, grid.r_lo + inner * 10.0));
    inner *= 10.0;
  }
  for (int p = 1; p < grid.r_panels; ++p) {
    rr.append(gauss_legendre(r_nodes, grid.r_lo + p * rw, grid.r_lo + (p + 1) * rw));
  }
  const QuadratureRule kr = momentum_rule(k_max, grid.k_panel_width, grid.k_nodes);
  const std::size_t nr = rr.size();
  const std::size_t nk = kr.size();

  std::vector<double> fv(nr);
  double f_norm2 = 0.0;
  for (std::size_t i = 0; i < nr; ++i) {
    fv[i] = f(rr.nodes[i]);
    f_norm2 += rr.weights[i] * fv[i] * fv[i];
  }

  // Psi[j * nr + i] = psi_{k_j}(r_i); coefficients c_j = <psi_{k_j}, f>.
  std::vector<cplx> psi(nk * nr);
  std::vector<cplx> c(nk);
  parallel_for(nk, [&](std::size_t j) {
    const ScatteringState state(channel, kr.nodes[j]);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < nr; ++i) {
      const cplx v = state.sample(rr.nodes[i]).value;
      psi[j * nr + i] = v;
      acc += rr.weights[i] * std::conj(v) * fv[i];
    }
    c[j] = acc;
  });

  CompletenessReport report{};
  report.has_bound_state = channel.sgn_g() > 0;
  std::vector<double> bound_values(nr, 0.0);
  if (report.has_bound_state) {
    const BoundState bound(channel);
    for (std::size_t i = 0; i < nr; ++i) {
      bound_values[i] = bound.sample(rr.nodes[i]).value.real();
      report.bound_coefficient += rr.weights[i] * bound_values[i] * fv[i];
    }
  }

  double err_with = 0.0;
  double err_without = 0.0;
  for (std::size_t i = 0; i < nr; ++i) {
    cplx continuum = 0.0;
    for (std::size_t j = 0; j < nk; ++j) {
      continuum += kr.weights[j] / (2.0 * kPi) * c[j] * psi[j * nr + i];
    }
    const cplx with = report.bound_coefficient * bound_values[i] + continuum;
    err_with += rr.weights[i] * std::norm(fv[i] - with);
    err_without += rr.weights[i] * std::norm(fv[i] - continuum);
  }
  report.error = std::sqrt(err_with / f_norm2);
  report.error_without_bound = std::sqrt(err_without / f_norm2);

  double c_max = 0.0;
  for (const cplx& v : c) c_max = std::max(c_max, std::abs(v));
  report.tail_estimate = c_max > 0.0 ? std::abs(c.back()) / c_max : 0.0;
  return report;
}

}  // namespace isq

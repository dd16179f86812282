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

#include "isq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "isq/abscatter.hpp"
#include "isq/fewbody.hpp"
#include "isq/parallel.hpp"
#include "isq/smatrix.hpp"
#include "isq/spectral.hpp"
#include "json.hpp"

namespace isq::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kThetaClamp = 1e-3;

// ---------------------------------------------------------------- formatting

std::string format_number(double v, int digits) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return std::isfinite(v) ? format_number(v, 17) : "null";
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return nlohmann::json(v).dump();
        }
      },
      c);
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_number(v, 12);
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      c);
}

// ---------------------------------------------------------------- parameters

double need(const std::optional<double>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required parameter ") + flag);
  return *v;
}

OrderNu resolve_nu(const RunConfig& cfg) {
  if (cfg.nu) return OrderNu(*cfg.nu);
  if (cfg.lambda) {
    const PhaseClass pc = classify(Coupling{*cfg.lambda});
    if (pc.tag != Phase::kDPI) {
      throw UsageError("--lambda lies outside the intermediate window (phase " +
                       std::string(phase_name(pc.tag)) + ")");
    }
    return OrderNu(*pc.exponent);
  }
  throw UsageError("missing required parameter --nu (or --lambda)");
}

IntermediateChannel resolve_channel(const RunConfig& cfg) {
  return kappa0_from_g(resolve_nu(cfg), cfg.g.value_or(1.0));
}

FluxConfig resolve_flux(const RunConfig& cfg) {
  const double alpha = need(cfg.alpha, "--alpha");
  if (cfg.kappa.size() > 2 || cfg.sgn.size() > 2) {
    throw UsageError("--kappa and --sgn accept at most two values (one per anomalous channel)");
  }
  std::array<ChannelBoundary, 2> b{};
  for (std::size_t i = 0; i < 2; ++i) {
    if (!cfg.kappa.empty()) b[i].kappa = cfg.kappa[std::min(i, cfg.kappa.size() - 1)];
    if (!cfg.sgn.empty()) b[i].sgn_g = cfg.sgn[std::min(i, cfg.sgn.size() - 1)];
  }
  return make_flux_config(alpha, b[0], b[1]);
}

std::vector<double> k_grid(const RunConfig& cfg, double lo, double hi, int steps) {
  if (cfg.k) return {*cfg.k};
  lo = cfg.k_min.value_or(lo);
  hi = cfg.k_max.value_or(hi);
  steps = cfg.k_steps.value_or(steps);
  if (!(lo > 0.0) || !(hi >= lo) || steps < 1) {
    throw UsageError("k grid needs 0 < --k-min <= --k-max and --k-steps >= 1");
  }
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  }
  return grid;
}

std::map<std::string, Cell> record_params(const RunConfig& cfg) {
  std::map<std::string, Cell> p;
  auto put = [&](const char* name, const auto& opt) {
    if (opt) p[name] = Cell(*opt);
  };
  auto put_int = [&](const char* name, const std::optional<int>& opt) {
    if (opt) p[name] = Cell(static_cast<long long>(*opt));
  };
  put("nu", cfg.nu);
  put("g", cfg.g);
  put("lambda", cfg.lambda);
  put("alpha", cfg.alpha);
  put("k", cfg.k);
  put("k-min", cfg.k_min);
  put("k-max", cfg.k_max);
  put("mismatch-g", cfg.mismatch_g);
  put("mu0", cfg.mu0);
  put("e0", cfg.e0);
  put_int("k-steps", cfg.k_steps);
  put_int("theta-steps", cfg.theta_steps);
  put_int("sheet", cfg.sheet);
  put_int("n-min", cfg.n_min);
  put_int("n-max", cfg.n_max);
  put("plane", cfg.plane);
  put("system", cfg.system);
  for (std::size_t i = 0; i < cfg.kappa.size(); ++i) {
    p["kappa[" + std::to_string(i) + "]"] = cfg.kappa[i];
  }
  for (std::size_t i = 0; i < cfg.sgn.size(); ++i) {
    p["sgn[" + std::to_string(i) + "]"] = static_cast<long long>(cfg.sgn[i]);
  }
  for (std::size_t i = 0; i < cfg.masses.size(); ++i) {
    p["masses[" + std::to_string(i) + "]"] = cfg.masses[i];
  }
  return p;
}

void add_check(Output& out, std::string name, double value, double tolerance) {
  out.checks.push_back({std::move(name), value, tolerance, value <= tolerance});
}

// ---------------------------------------------------------------- commands

void cmd_classify(const RunConfig& cfg, Output& out) {
  const double lambda = need(cfg.lambda, "--lambda");
  const PhaseClass pc = classify(Coupling{lambda});
  out.columns = {"lambda", "phase", "exponent"};
  out.rows.push_back({lambda, std::string(phase_name(pc.tag)), pc.exponent.value_or(kNaN)});
}

void cmd_smatrix(const RunConfig& cfg, Output& out) {
  const IntermediateChannel ch = resolve_channel(cfg);
  const int sheet = cfg.sheet.value_or(0);
  const std::vector<double> ks = k_grid(cfg, 0.1, 5.0, 50);
  std::vector<SValue> s(ks.size());
  std::vector<SValue> trig(ks.size());
  parallel_for(ks.size(), [&](std::size_t i) {
    const SheetPoint k(ks[i], 2.0 * kPi * sheet);
    s[i] = s_eval(ch, k);
    trig[i] = s_eval_trig_form(ch, k);
  });
  out.columns = {"k", "re_S", "im_S", "abs_S", "arg_S", "pole_hit"};
  double unitarity = 0.0;
  double agreement = 0.0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const cplx v = s[i].value;
    out.rows.push_back({ks[i], v.real(), v.imag(), std::abs(v), std::arg(v), s[i].pole_hit});
    if (s[i].pole_hit) continue;
    unitarity = std::max(unitarity, std::abs(std::abs(v) - 1.0));
    agreement = std::max(agreement, std::abs(v - trig[i].value));
  }
  if (sheet == 0) add_check(out, "unitarity", unitarity, 1e-11);
  add_check(out, "trig_form_agreement", agreement, 1e-11);
}

void cmd_poles(const RunConfig& cfg, Output& out) {
  const std::string plane = cfg.plane.value_or("k");
  if (plane != "k" && plane != "E") throw UsageError("--plane must be k or E");
  const int n_min = cfg.n_min.value_or(-3);
  const int n_max = cfg.n_max.value_or(3);
  if (n_min > n_max) throw UsageError("--n-min must not exceed --n-max");

  if (cfg.lambda && !cfg.nu) {
    const PhaseClass pc = classify(Coupling{*cfg.lambda});
    if (pc.tag == Phase::kDSI) {
      if (plane != "E") throw UsageError("the DSI phase has an E-plane ladder only; use --plane E");
      const PoleLadder ladder =
          pole_ladder_E(pc, cplx(cfg.e0.value_or(-1.0), 0.0), n_min, n_max);
      out.columns = {"n", "re", "im", "modulus", "argument", "sheet", "residue_ratio"};
      for (const PoleEntry& e : ladder.entries) {
        const cplx v = e.location.value();
        out.rows.push_back({static_cast<long long>(e.n), v.real(), v.imag(),
                            e.location.modulus(), e.location.argument(),
                            static_cast<long long>(e.sheet), e.residue.real()});
      }
      return;
    }
    if (pc.tag != Phase::kDPI) {
      throw UsageError("no pole ladder exists in phase " + std::string(phase_name(pc.tag)));
    }
  }

  const IntermediateChannel ch = resolve_channel(cfg);
  const PoleLadder ladder = pole_ladder_k(ch, n_min, n_max);
  out.columns = {"n", "re", "im", "modulus", "argument", "sheet", "re_residue", "im_residue"};
  if (plane == "k") {
    std::vector<double> newton(ladder.entries.size());
    std::vector<double> contour(ladder.entries.size());
    parallel_for(ladder.entries.size(), [&](std::size_t i) {
      const PoleEntry& e = ladder.entries[i];
      const PoleSearch found = find_pole_numeric(ch, scale(e.location, 1.05));
      newton[i] = found.converged
                      ? std::abs(found.location.value() - e.location.value()) / ch.kappa0()
                      : std::numeric_limits<double>::infinity();
      contour[i] = std::abs(residue_numeric(ch, e.location) - e.residue) / std::abs(e.residue);
    });
    for (const PoleEntry& e : ladder.entries) {
      const cplx v = e.location.value();
      out.rows.push_back({static_cast<long long>(e.n), v.real(), v.imag(),
                          e.location.modulus(), e.location.argument(),
                          static_cast<long long>(e.sheet), e.residue.real(),
                          e.residue.imag()});
    }
    add_check(out, "newton_refinement", *std::max_element(newton.begin(), newton.end()), 1e-10);
    add_check(out, "contour_residue", *std::max_element(contour.begin(), contour.end()), 1e-6);
    return;
  }

  // E = k^2: arguments double and residues pick up dE/dk = 2k.
  const PhaseClass pc{Phase::kDPI, ch.nu().value()};
  const auto& first = ladder.entries.front();
  const PoleLadder reference =
      pole_ladder_E(pc, square(first.location).value(), 0, n_max - n_min);
  double consistency = 0.0;
  for (std::size_t i = 0; i < ladder.entries.size(); ++i) {
    const PoleEntry& e = ladder.entries[i];
    const SheetPoint en = square(e.location);
    const cplx res = 2.0 * e.location.value() * e.residue;
    const cplx v = en.value();
    out.rows.push_back({static_cast<long long>(e.n), v.real(), v.imag(), en.modulus(),
                        en.argument(), static_cast<long long>(energy_sheet_of(en)),
                        res.real(), res.imag()});
    consistency = std::max(consistency, std::abs(reference.entries[i].location.value() - v) /
                                            en.modulus());
  }
  add_check(out, "energy_ladder_consistency", consistency, 1e-12);
}

void cmd_spectrum_verify(const RunConfig& cfg, Output& out) {
  const IntermediateChannel ch = resolve_channel(cfg);
  const double kappa = ch.kappa0();
  const bool bound = ch.sgn_g() > 0;
  out.columns = {"quantity", "value"};
  auto row = [&](const char* name, double v) { out.rows.push_back({std::string(name), v}); };

  if (bound) {
    const NormReport norm = bound_state_norm(BoundState(ch));
    row("bound_norm_squared", norm.norm_squared);
    add_check(out, "bound_norm", std::abs(norm.norm_squared - 1.0), 1e-6);
  } else {
    out.notes.push_back("g < 0: no bound state; bound-state checks omitted, "
                        "completeness uses the continuum alone");
  }

  if (bound || cfg.mismatch_g) {
    double worst = 0.0;
    if (cfg.mismatch_g) {
      const IntermediateChannel other = kappa0_from_g(ch.nu(), *cfg.mismatch_g);
      const BoundState b(other);
      for (double f : {0.3, 1.0, 3.0}) {
        worst = std::max(worst, std::abs(bound_scatt_overlap(b, ScatteringState(ch, f * kappa))));
      }
      out.notes.push_back("negative control: bound state taken from --mismatch-g");
    } else {
      worst = verify_orthogonality_bound_scatt(ch).max_abs;
    }
    row("max_bound_scatt_overlap", worst);
    add_check(out, "orthogonality", worst, 1e-6);
  }

  const PacketReport diag = verify_scatt_orthonormality(ch, kappa, kappa, 0.05 * kappa);
  const PacketReport off = verify_scatt_orthonormality(ch, kappa, 2.0 * kappa, 0.05 * kappa);
  row("packet_diagonal_ratio", diag.ratio);
  row("packet_relative_offdiagonal", off.relative_offdiagonal);
  add_check(out, "packet_diagonal", std::abs(diag.ratio - 1.0), 1e-4);
  add_check(out, "packet_offdiagonal", off.relative_offdiagonal, 1e-6);

  CompletenessGrid grid;
  grid.r_lo = 1e-9 / kappa;
  grid.r_hi = 7.0 / kappa;
  grid.k_panel_width = 0.5 * kappa;
  const auto bump = [kappa](double r) {
    const double x = kappa * r - 3.0;
    return std::exp(-x * x / 0.5);
  };
  const CompletenessReport comp = verify_completeness(ch, bump, 20.0 * kappa, grid);
  row("completeness_error", comp.error);
  row("completeness_error_without_bound", comp.error_without_bound);
  row("bound_coefficient", comp.bound_coefficient);
  row("completeness_tail_estimate", comp.tail_estimate);
  add_check(out, "completeness", comp.error, 1e-4);
}

void cmd_ab_amplitude(const RunConfig& cfg, Output& out) {
  const FluxConfig flux = resolve_flux(cfg);
  const double k = cfg.k.value_or(1.0);
  const int n_min = cfg.n_min.value_or(-5);
  const int n_max = cfg.n_max.value_or(5);
  if (n_min > n_max) throw UsageError("--n-min must not exceed --n-max");
  const PartialWaveTable table = partial_wave_table(flux, k, n_min, n_max);
  out.columns = {"n", "anomalous", "nu", "re_S", "im_S", "abs_S", "re_f", "im_f"};
  double unitarity = 0.0;
  for (const PartialWaveRow& r : table.rows) {
    const auto ch = find_anomalous(flux, r.n);
    out.rows.push_back({static_cast<long long>(r.n), ch.has_value(),
                        std::abs(r.n + flux.alpha), r.s.real(), r.s.imag(), std::abs(r.s),
                        r.f.real(), r.f.imag()});
    unitarity = std::max(unitarity, std::abs(std::abs(r.s) - 1.0));
  }
  add_check(out, "channel_unitarity", unitarity, 1e-11);
}

void cmd_ab_cross_section(const RunConfig& cfg, Output& out) {
  const FluxConfig flux = resolve_flux(cfg);
  const double k = cfg.k.value_or(1.0);
  const int steps = cfg.theta_steps.value_or(180);
  if (steps < 2) throw UsageError("--theta-steps must be at least 2");
  out.notes.push_back("theta grid clamped to [1e-3, 2pi - 1e-3]: the forward direction is singular");
  const double lo = kThetaClamp;
  const double hi = 2.0 * kPi - kThetaClamp;
  std::vector<cplx> amp(static_cast<std::size_t>(steps));
  parallel_for(amp.size(), [&](std::size_t i) {
    amp[i] = total_amplitude(flux, k, lo + (hi - lo) * static_cast<double>(i) / (steps - 1));
  });
  out.columns = {"theta", "re_f", "im_f", "dsigma"};
  double most_negative = 0.0;
  for (std::size_t i = 0; i < amp.size(); ++i) {
    const double theta = lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
    const double ds = std::norm(amp[i]);
    out.rows.push_back({theta, amp[i].real(), amp[i].imag(), ds});
    most_negative = std::max(most_negative, -ds);
  }
  add_check(out, "nonnegative", most_negative, 0.0);
}

void cmd_resonance_scan(const RunConfig& cfg, Output& out) {
  const FluxConfig flux = resolve_flux(cfg);
  const double lo = cfg.k_min.value_or(0.05);
  const double hi = cfg.k_max.value_or(3.0);
  const int steps = cfg.k_steps.value_or(600);
  const auto peaks = resonance_scan(flux, lo, hi, steps);
  out.columns = {"k_peak", "height", "n", "ell", "predicted_k", "relative_offset",
                 "predicted_hwhm"};
  for (const ResonancePeak& p : peaks) {
    out.rows.push_back({p.k_peak, p.height, static_cast<long long>(p.matched.n),
                        static_cast<long long>(p.matched.ell), p.matched.predicted_k,
                        p.match_distance / p.matched.predicted_k, p.matched.predicted_hwhm});
  }
  if (peaks.empty()) {
    out.notes.push_back("no physical-sheet pole lies close enough to the real axis");
  }
}

void cmd_reduce(const RunConfig& cfg, Output& out) {
  std::string system = cfg.system.value_or(cfg.masses.size() == 3 ? "three-body" : "two-body");
  ReductionResult red;
  std::optional<EffectiveChannel> eff;
  if (system == "two-body") {
    if (cfg.masses.size() != 2) throw UsageError("two-body reduction needs --masses m1,m2");
    const TwoBodyMasses m{cfg.masses[0], cfg.masses[1]};
    red = reduce_two_body(m);
    if (cfg.alpha) eff = effective_channel(m, *cfg.alpha);
  } else if (system == "three-body") {
    if (cfg.masses.size() != 3) throw UsageError("three-body reduction needs --masses m1,m2,m3");
    const ThreeBodyMasses m{cfg.masses[0], cfg.masses[1], cfg.masses[2], cfg.mu0};
    red = reduce_three_body(m);
    if (cfg.alpha) eff = effective_channel(m, *cfg.alpha);
  } else {
    throw UsageError("--system must be two-body or three-body");
  }

  out.columns = {"quantity", "value"};
  auto row = [&](std::string name, Cell v) { out.rows.push_back({std::move(name), std::move(v)}); };
  row("system", red.system);
  for (std::size_t i = 0; i < red.reduced_masses.size(); ++i) {
    row("mu" + std::to_string(i + 1), red.reduced_masses[i]);
  }
  row("mu0", red.mu0);
  row("mu0_defaulted", red.mu0_defaulted);
  row("kinetic_prefactor", red.kinetic_prefactor);
  const std::size_t n = red.jacobi_forward.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::string idx = "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      row("jacobi_forward" + idx, red.jacobi_forward[i][j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::string idx = "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      row("jacobi_backward" + idx, red.jacobi_backward[i][j]);
    }
  }

  const Matrix prod = multiply(red.jacobi_forward, red.jacobi_backward);
  double roundtrip = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      roundtrip = std::max(roundtrip, std::abs(prod[i][j] - (i == j ? 1.0 : 0.0)));
    }
  }
  add_check(out, "jacobi_roundtrip", roundtrip, 1e-14);

  const Matrix form = isotropic_kinetic_form(red, cfg.masses);
  const std::size_t rel = red.relative_scales.size();
  double congruence = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double expected = 0.0;
      if (i == j) expected = i < rel ? 1.0 / red.mu0 : 1.0 / red.reduced_masses.back();
      congruence = std::max(congruence, std::abs(form[i][j] - expected) * red.mu0);
    }
  }
  add_check(out, "isotropic_congruence", congruence, 1e-14);

  if (eff) {
    row("energy_per_k2", eff->energy_per_k2);
    const FluxConfig one_body = make_flux_config(*cfg.alpha);
    double mismatch = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& a = eff->flux.anomalous[i];
      row("anomalous_n[" + std::to_string(i) + "]", static_cast<long long>(a.n));
      row("anomalous_nu[" + std::to_string(i) + "]", a.channel.nu().value());
      const auto& b = one_body.anomalous[i];
      if (a.n != b.n || !(a.channel.nu() == b.channel.nu())) mismatch = 1.0;
    }
    add_check(out, "flux_matches_one_body", mismatch, 0.0);
  }
}

// ---------------------------------------------------------------- config file

void merge_config_file(RunConfig& cfg) {
  if (!cfg.config) return;
  std::ifstream in(*cfg.config);
  if (!in) throw UsageError("cannot read config file " + *cfg.config);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  using Setter = std::function<void(const nlohmann::json&)>;
  auto scalar = [](auto& dst) {
    return Setter([&dst](const nlohmann::json& v) {
      using T = typename std::decay_t<decltype(dst)>::value_type;
      if (!dst) dst = v.get<T>();
    });
  };
  auto list = [](auto& dst) {
    return Setter([&dst](const nlohmann::json& v) {
      using T = typename std::decay_t<decltype(dst)>::value_type;
      if (!dst.empty()) return;
      dst = v.is_array() ? v.get<std::vector<T>>() : std::vector<T>{v.get<T>()};
    });
  };
  const std::map<std::string, Setter> setters = {
      {"nu", scalar(cfg.nu)},           {"g", scalar(cfg.g)},
      {"lambda", scalar(cfg.lambda)},   {"alpha", scalar(cfg.alpha)},
      {"k", scalar(cfg.k)},             {"k-min", scalar(cfg.k_min)},
      {"k-max", scalar(cfg.k_max)},     {"mismatch-g", scalar(cfg.mismatch_g)},
      {"mu0", scalar(cfg.mu0)},         {"e0", scalar(cfg.e0)},
      {"k-steps", scalar(cfg.k_steps)}, {"theta-steps", scalar(cfg.theta_steps)},
      {"sheet", scalar(cfg.sheet)},     {"n-min", scalar(cfg.n_min)},
      {"n-max", scalar(cfg.n_max)},     {"plane", scalar(cfg.plane)},
      {"system", scalar(cfg.system)},   {"format", scalar(cfg.format)},
      {"out", scalar(cfg.out)},         {"kappa", list(cfg.kappa)},
      {"masses", list(cfg.masses)},     {"sgn", list(cfg.sgn)},
  };
  try {
    for (const auto& [key, value] : j.items()) {
      const auto it = setters.find(key);
      if (it == setters.end()) throw UsageError("unknown config key '" + key + "'");
      it->second(value);
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config value has the wrong type: " + std::string(e.what()));
  }
  if (cfg.format && *cfg.format != "json" && *cfg.format != "csv") {
    throw UsageError("format must be json or csv");
  }
}

}  // namespace

// ---------------------------------------------------------------- public API

Output execute(const RunConfig& config) {
  static const std::map<std::string, std::function<void(const RunConfig&, Output&)>> kCommands = {
      {"classify", cmd_classify},
      {"smatrix", cmd_smatrix},
      {"poles", cmd_poles},
      {"spectrum-verify", cmd_spectrum_verify},
      {"ab-amplitude", cmd_ab_amplitude},
      {"ab-cross-section", cmd_ab_cross_section},
      {"resonance-scan", cmd_resonance_scan},
      {"reduce", cmd_reduce},
  };
  const auto it = kCommands.find(config.command);
  if (it == kCommands.end()) throw UsageError("unknown command '" + config.command + "'");
  for (int s : config.sgn) {
    if (s != 1 && s != -1) throw UsageError("--sgn values must be +1 or -1");
  }
  Output out;
  out.command = config.command;
  out.params = record_params(config);
  try {
    it->second(config, out);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  return out;
}

std::string render_json(const Output& output) {
  std::ostringstream os;
  os << "{\"command\":" << nlohmann::json(output.command).dump() << ",\"params\":{";
  bool first = true;
  for (const auto& [key, value] : output.params) {
    os << (first ? "" : ",") << nlohmann::json(key).dump() << ':' << json_cell(value);
    first = false;
  }
  os << "},\"rows\":[";
  for (std::size_t r = 0; r < output.rows.size(); ++r) {
    os << (r ? ",\n" : "\n") << '{';
    for (std::size_t c = 0; c < output.columns.size(); ++c) {
      os << (c ? "," : "") << nlohmann::json(output.columns[c]).dump() << ':'
         << json_cell(output.rows[r][c]);
    }
    os << '}';
  }
  os << "],\"checks\":[";
  for (std::size_t i = 0; i < output.checks.size(); ++i) {
    const Check& c = output.checks[i];
    os << (i ? ",\n" : "\n") << "{\"name\":" << nlohmann::json(c.name).dump()
       << ",\"value\":" << json_cell(c.value) << ",\"tolerance\":" << json_cell(c.tolerance)
       << ",\"pass\":" << (c.pass ? "true" : "false") << '}';
  }
  os << "]}\n";
  return os.str();
}

std::string render_csv(const Output& output) {
  std::ostringstream os;
  for (std::size_t c = 0; c < output.columns.size(); ++c) {
    os << (c ? "," : "") << output.columns[c];
  }
  os << '\n';
  for (const auto& row : output.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_cell(row[c]);
    os << '\n';
  }
  return os.str();
}

int exit_code(const Output& output) {
  for (std::size_t i = 0; i < output.checks.size(); ++i) {
    if (!output.checks[i].pass) return static_cast<int>(std::min<std::size_t>(i + 1, 63));
  }
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverse-square potential scattering: S-matrix, poles, spectra, "
               "Aharonov-Bohm amplitudes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
    sub->add_option("--config", cfg.config, "JSON file with parameter defaults");
  };
  auto add_channel = [&](CLI::App* sub) {
    sub->add_option("--nu", cfg.nu, "Order nu in (0, 1)");
    sub->add_option("--lambda", cfg.lambda, "Coupling lambda (alternative to --nu)");
    sub->add_option("--g", cfg.g, "Boundary parameter g (nonzero, default 1)");
  };
  auto add_flux = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "Flux parameter (non-integer)");
    sub->add_option("--kappa", cfg.kappa, "kappa of each anomalous channel (repeatable)");
    sub->add_option("--sgn", cfg.sgn, "sign of g of each anomalous channel (repeatable)");
  };
  auto add_kgrid = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "Single wavenumber");
    sub->add_option("--k-min", cfg.k_min, "Grid start");
    sub->add_option("--k-max", cfg.k_max, "Grid end");
    sub->add_option("--k-steps", cfg.k_steps, "Grid points");
  };

  CLI::App* c = app.add_subcommand("classify", "Phase of a coupling lambda");
  c->add_option("--lambda", cfg.lambda, "Coupling lambda");
  add_common(c);

  c = app.add_subcommand("smatrix", "S-matrix on a real k grid");
  add_channel(c);
  add_kgrid(c);
  c->add_option("--sheet", cfg.sheet, "Riemann sheet of the grid (default 0)");
  add_common(c);

  c = app.add_subcommand("poles", "Pole ladder and residues");
  add_channel(c);
  c->add_option("--n-min", cfg.n_min, "First ladder index (default -3)");
  c->add_option("--n-max", cfg.n_max, "Last ladder index (default 3)");
  c->add_option("--plane", cfg.plane, "k or E")->check(CLI::IsMember({"k", "E"}));
  c->add_option("--e0", cfg.e0, "Reference energy for a DSI ladder (default -1)");
  add_common(c);

  c = app.add_subcommand("spectrum-verify", "Normalization, orthogonality, completeness");
  add_channel(c);
  c->add_option("--mismatch-g", cfg.mismatch_g, "Take the bound state from this g instead");
  add_common(c);

  c = app.add_subcommand("ab-amplitude", "Aharonov-Bohm partial-wave table");
  add_flux(c);
  c->add_option("--k", cfg.k, "Wavenumber (default 1)");
  c->add_option("--n-min", cfg.n_min, "First partial wave (default -5)");
  c->add_option("--n-max", cfg.n_max, "Last partial wave (default 5)");
  add_common(c);

  c = app.add_subcommand("ab-cross-section", "Differential cross section over theta");
  add_flux(c);
  c->add_option("--k", cfg.k, "Wavenumber (default 1)");
  c->add_option("--theta-steps", cfg.theta_steps, "Angular grid points (default 180)");
  add_common(c);

  c = app.add_subcommand("resonance-scan", "Peaks of the anomalous partial waves");
  add_flux(c);
  add_kgrid(c);
  add_common(c);

  c = app.add_subcommand("reduce", "Few-body reduction to the one-body problem");
  c->add_option("--system", cfg.system, "two-body or three-body")
      ->check(CLI::IsMember({"two-body", "three-body"}));
  c->add_option("--masses", cfg.masses, "Particle masses")->delimiter(',');
  c->add_option("--mu0", cfg.mu0, "Reference mass (three-body; default mu1)");
  c->add_option("--alpha", cfg.alpha, "Flux parameter for the effective channel");
  add_common(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageExit;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  Output result;
  try {
    merge_config_file(cfg);
    result = execute(cfg);
  } catch (const UsageError& e) {
    err << "isq-scatter: " << e.what() << '\n';
    return kUsageExit;
  }

  const std::string text =
      cfg.format.value_or("json") == "csv" ? render_csv(result) : render_json(result);
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) {
      err << "isq-scatter: cannot write " << *cfg.out << '\n';
      return kUsageExit;
    }
    file << text;
  } else {
    out << text;
  }
  for (const std::string& note : result.notes) err << "note: " << note << '\n';
  for (const Check& ch : result.checks) {
    if (!ch.pass) {
      err << "check failed: " << ch.name << " = " << format_number(ch.value, 6)
          << " (tolerance " << format_number(ch.tolerance, 6) << ")\n";
    }
  }
  return exit_code(result);
}

}  // namespace isq::cli

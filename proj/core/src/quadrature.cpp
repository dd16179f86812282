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

#include "isq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "isq/specfun.hpp"

namespace isq {

namespace {

struct Reference {
  std::vector<double> x;
  std::vector<double> w;
};

// Legendre roots by Newton iteration from the Tricomi initial guess.
Reference compute_reference(std::size_t n) {
  Reference ref{std::vector<double>(n), std::vector<double>(n)};
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 =
            ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    ref.x[i] = -x;
    ref.w[i] = w;
    ref.x[n - 1 - i] = x;
    ref.w[n - 1 - i] = w;
  }
  return ref;
}

const Reference& reference(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, Reference> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_reference(n)).first;
  return it->second;
}

}  // namespace

void QuadratureRule::append(const QuadratureRule& other) {
  nodes.insert(nodes.end(), other.nodes.begin(), other.nodes.end());
  weights.insert(weights.end(), other.weights.begin(), other.weights.end());
}

QuadratureRule gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  const Reference& ref = reference(n);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * ref.x[i];
    rule.weights[i] = half * ref.w[i];
  }
  return rule;
}

QuadratureRule QuadratureGrid::rule() const {
  if (!(r_min > 0.0) || !(r_min < r_max) || panels < 0 ||
      nodes_per_panel < 1 || !(grading_ratio > 1.0)) {
    throw std::invalid_argument("QuadratureGrid: inconsistent parameters");
  }
  const auto n = static_cast<std::size_t>(nodes_per_panel);
  const double join = std::min(std::max(r_join, r_min), r_max);
  QuadratureRule out;
  double lo = r_min;
  while (lo < join) {
    const double hi = std::min(lo * grading_ratio, join);
    out.append(gauss_legendre(n, lo, hi));
    lo = hi;
  }
  if (join < r_max) {
    const int count = std::max(panels, 1);
    const double width = (r_max - join) / count;
    for (int p = 0; p < count; ++p) {
      out.append(gauss_legendre(n, join + p * width, join + (p + 1) * width));
    }
  }
  return out;
}

}  // namespace isq

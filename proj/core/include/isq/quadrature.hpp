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

#ifndef ISQ_QUADRATURE_HPP_
#define ISQ_QUADRATURE_HPP_

#include <cstddef>
#include <vector>

namespace isq {

/// Nodes and weights of a quadrature rule on a fixed interval.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
  void append(const QuadratureRule& other);
};

/// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree
/// 2n - 1.
QuadratureRule gauss_legendre(std::size_t n, double a, double b);

/// Composite rule on [r_min, r_max]: geometric panels (ratio
/// `grading_ratio`) from r_min up to r_join, then `panels` uniform panels
/// from r_join to r_max. Integrands behaving like r^{1-2 nu} near 0 are
/// integrated to full precision on the graded part.
struct QuadratureGrid {
  double r_min = 1e-30;
  double r_max = 40.0;
  int panels = 40;
  int nodes_per_panel = 64;
  double r_join = 1.0;
  double grading_ratio = 10.0;

  /// Throws std::invalid_argument on inconsistent fields.
  QuadratureRule rule() const;
};

}  // namespace isq

#endif  // ISQ_QUADRATURE_HPP_

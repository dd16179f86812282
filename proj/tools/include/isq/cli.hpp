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

#ifndef ISQ_CLI_HPP_
#define ISQ_CLI_HPP_

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace isq::cli {

/// Exit status for malformed invocations and invalid physical parameters.
inline constexpr int kUsageExit = 64;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<double, long long, bool, std::string>;

struct Check {
  std::string name;
  double value;
  double tolerance;
  bool pass;
};

/// One command's result, rendered to JSON or CSV.
struct Output {
  std::string command;
  std::map<std::string, Cell> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<Check> checks;
  std::vector<std::string> notes;  // human-oriented, written to stderr
};

/// Every flag of every subcommand. Unset values fall back to the config
/// file, then to per-command defaults.
struct RunConfig {
  std::string command;
  std::optional<double> nu, g, lambda, alpha, k, k_min, k_max, mismatch_g, mu0, e0;
  std::vector<double> kappa;
  std::vector<int> sgn;
  std::vector<double> masses;
  std::optional<int> k_steps, theta_steps, sheet, n_min, n_max;
  std::optional<std::string> plane, system;
  std::optional<std::string> format;  // json (default) or csv
  std::optional<std::string> out, config;
};

/// Runs one subcommand and returns the result. Throws UsageError for
/// invalid parameters.
Output execute(const RunConfig& config);

/// {"command", "params", "rows", "checks"}, numbers at 17 significant digits.
std::string render_json(const Output& output);

/// Header row plus one line per row, numbers at 12 significant digits.
std::string render_csv(const Output& output);

/// 0 when every check passes, otherwise 1 + index of the first failure.
int exit_code(const Output& output);

/// Full command-line entry point: parses argv, merges the config file,
/// executes, writes the rendered result and returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isq::cli

#endif  // ISQ_CLI_HPP_

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

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "isq/cli.hpp"

using namespace isq::cli;

namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "isq-scatter");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool all_pass(const Output& o) {
  for (const Check& c : o.checks) {
    if (!c.pass) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("classify") {
  RunConfig cfg;
  cfg.command = "classify";
  cfg.lambda = -1.0;
  const Output o = execute(cfg);
  REQUIRE(o.rows.size() == 1);
  const std::string json = render_json(o);
  CHECK(json.find("\"DSI\"") != std::string::npos);
  CHECK(exit_code(o) == 0);
}

TEST_CASE("smatrix grid and checks") {
  RunConfig cfg;
  cfg.command = "smatrix";
  cfg.nu = 0.3;
  cfg.k_min = 0.1;
  cfg.k_max = 2.0;
  cfg.k_steps = 7;
  const Output o = execute(cfg);
  CHECK(o.rows.size() == 7);
  CHECK(all_pass(o));
  CHECK_FALSE(o.checks.empty());

  cfg.sheet = 1;
  const Output off = execute(cfg);
  for (const Check& c : off.checks) CHECK(c.name != "unitarity");
}

TEST_CASE("poles in both planes") {
  RunConfig cfg;
  cfg.command = "poles";
  cfg.nu = 0.7;
  const Output k = execute(cfg);
  CHECK(k.rows.size() == 7);
  CHECK(all_pass(k));

  cfg.plane = "E";
  const Output e = execute(cfg);
  CHECK(e.rows.size() == 7);
  CHECK(all_pass(e));

  RunConfig dsi;
  dsi.command = "poles";
  dsi.lambda = -1.0;
  CHECK_THROWS_AS(execute(dsi), UsageError);
  dsi.plane = "E";
  CHECK(execute(dsi).rows.size() == 7);
}

TEST_CASE("spectrum-verify passes and its negative control fails") {
  RunConfig cfg;
  cfg.command = "spectrum-verify";
  cfg.nu = 0.4;
  const Output good = execute(cfg);
  CHECK(all_pass(good));
  CHECK(exit_code(good) == 0);

  cfg.mismatch_g = 3.0;
  const Output bad = execute(cfg);
  CHECK_FALSE(all_pass(bad));
  CHECK(exit_code(bad) > 0);
  CHECK(exit_code(bad) < kUsageExit);
}

TEST_CASE("Aharonov-Bohm commands") {
  RunConfig amp;
  amp.command = "ab-amplitude";
  amp.alpha = 0.3;
  const Output a = execute(amp);
  CHECK(a.rows.size() == 11);
  CHECK(all_pass(a));

  RunConfig xs;
  xs.command = "ab-cross-section";
  xs.alpha = 0.3;
  xs.theta_steps = 20;
  const Output x = execute(xs);
  CHECK(x.rows.size() == 20);
  CHECK(all_pass(x));

  RunConfig scan;
  scan.command = "resonance-scan";
  scan.alpha = 0.1;
  scan.sgn = {-1, -1};
  const Output s = execute(scan);
  CHECK_FALSE(s.rows.empty());

  amp.alpha = 1.0;
  CHECK_THROWS_AS(execute(amp), UsageError);
}

TEST_CASE("reduce") {
  RunConfig cfg;
  cfg.command = "reduce";
  cfg.system = "three-body";
  cfg.masses = {1.0, 2.0, 3.0};
  cfg.alpha = 0.3;
  const Output o = execute(cfg);
  CHECK(all_pass(o));
  CHECK(o.checks.size() == 3);

  cfg.masses = {1.0, 2.0};
  CHECK_THROWS_AS(execute(cfg), UsageError);
}

TEST_CASE("rendering is deterministic and exact") {
  RunConfig cfg;
  cfg.command = "smatrix";
  cfg.nu = 0.25;
  const std::string a = render_json(execute(cfg));
  const std::string b = render_json(execute(cfg));
  CHECK(a == b);
  CHECK(render_csv(execute(cfg)) == render_csv(execute(cfg)));
  CHECK(a.find("0.25") != std::string::npos);
}

TEST_CASE("exit codes") {
  Output o;
  CHECK(exit_code(o) == 0);
  o.checks.push_back({"a", 0.0, 1.0, true});
  o.checks.push_back({"b", 2.0, 1.0, false});
  CHECK(exit_code(o) == 2);
  for (int i = 0; i < 100; ++i) o.checks.insert(o.checks.begin(), {"p", 0.0, 1.0, true});
  CHECK(exit_code(o) == 63);
}

TEST_CASE("command-line entry point") {
  const Captured ok = invoke({"smatrix", "--nu", "0.3", "--k-steps", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"unitarity\"") != std::string::npos);

  const Captured csv = invoke({"smatrix", "--nu", "0.3", "--k-steps", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') >= 4);

  CHECK(invoke({"smatrix", "--nu", "1.5"}).code == kUsageExit);
  CHECK(invoke({"smatrix"}).code == kUsageExit);
  CHECK(invoke({"bogus"}).code == kUsageExit);
  CHECK(invoke({"smatrix", "--nu", "0.3", "--sgn", "2"}).code == kUsageExit);
  CHECK(invoke({"classify", "--lambda", "abc"}).code == kUsageExit);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("config file merging") {
  {
    std::ofstream f("cli_test_config.json");
    f << R"({"nu": 0.3, "k-steps": 4, "k-min": 0.5})";
  }
  const Captured file_only = invoke({"smatrix", "--config", "cli_test_config.json"});
  CHECK(file_only.code == 0);
  const Captured direct =
      invoke({"smatrix", "--nu", "0.3", "--k-steps", "4", "--k-min", "0.5", "--config",
              "cli_test_config.json"});
  CHECK(direct.out.size() > 0);
  CHECK(file_only.out == direct.out);

  const Captured override_ =
      invoke({"smatrix", "--config", "cli_test_config.json", "--k-steps", "2"});
  CHECK(override_.code == 0);
  CHECK(override_.out != file_only.out);

  {
    std::ofstream f("cli_test_bad.json");
    f << R"({"nu": 0.3, "colour": 1})";
  }
  CHECK(invoke({"smatrix", "--config", "cli_test_bad.json"}).code == kUsageExit);
  CHECK(invoke({"smatrix", "--config", "does_not_exist.json"}).code == kUsageExit);
}

TEST_CASE("output file") {
  const Captured c = invoke({"classify", "--lambda", "0.1", "--out", "cli_test_out.json"});
  CHECK(c.code == 0);
  CHECK(c.out.empty());
  std::ifstream in("cli_test_out.json");
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == invoke({"classify", "--lambda", "0.1"}).out);
}

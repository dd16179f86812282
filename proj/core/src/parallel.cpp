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

#include "isq/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace isq {

namespace {

std::atomic<std::size_t> g_override{0};

std::size_t environment_default() {
  std::size_t hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("ISQ_SCATTER_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) hw = std::min(hw, static_cast<std::size_t>(cap));
    } catch (...) {
      // Unparseable values leave the hardware default in place.
    }
  }
  return hw;
}

}  // namespace

std::size_t max_threads() {
  const std::size_t o = g_override.load();
  return o != 0 ? o : environment_default();
}

void set_max_threads(std::size_t threads) { g_override.store(threads); }

}  // namespace isq

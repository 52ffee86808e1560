// Copyright 2026 The mbprice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbprice/tree_engine.hpp"

// Seeded cross-checks of the closed forms against the exact LP and the
// exponential tree algorithm.
namespace mbprice::verify {

struct VerifyConfig {
  int max_m = 3;
  int max_n = 4;
  int cases = 100;
  std::uint64_t seed = 42;
  int cap_bits = tree::default_oracle_cap_bits();
  // Test hook: replaces q* by the midpoint of q* and the uniform density in
  // the maximality check, which must then produce a counterexample.
  bool corrupt_supervertex = false;
};

struct CheckTally {
  std::string name;
  int count = 0;
  int passed = 0;
};

struct Counterexample {
  std::string check;
  std::vector<std::string> b;
  std::vector<std::string> u;  // objective entries or basket data
  int n = 0;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<CheckTally> checks;
  std::optional<Counterexample> counterexample;

  bool ok() const { return !counterexample.has_value(); }
};

// Stops at the first failing check. Throws std::invalid_argument for
// max_m outside 1..8, max_n < 1 or cases < 0.
VerifyReport run(const VerifyConfig& config);

}  // namespace mbprice::verify

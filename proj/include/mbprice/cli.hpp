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
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "mbprice/pricing.hpp"
#include "mbprice/verify.hpp"

// Command implementations behind the mbprice executable. Each returns the
// process exit code: 0 success, 1 verification failure, 2 invalid input.
// Results go to `out` (or to the --out file), diagnostics to `err`.
namespace mbprice::cli {

using Json = nlohmann::ordered_json;

// Rationals travel as strings ("p/q", integers or decimals). Integral JSON
// numbers are accepted on input; floating point numbers are rejected.
Rational rational_from_json(const Json& value, const std::string& field);
Json rational_to_json(const Rational& value);

// {"n": 3, "R": "1", "C": "100", "assets": [{"S0": "100", "D": "1/2",
//  "U": "2"}], "weights": ["1"], "discount": false}
pricing::MarketModel model_from_json(const Json& config);

Json price_to_json(const pricing::PriceInterval& interval);
Json polytope_to_json(const polytope::PolytopeSpec& spec);
Json report_to_json(const verify::VerifyReport& report);

struct PriceOptions {
  std::string config_path;
  bool discount = false;
  std::optional<std::string> out;
};

struct PolytopeOptions {
  std::string b;
  std::optional<std::string> out;
};

struct VerifyOptions {
  verify::VerifyConfig config;
  std::optional<std::string> out;
};

struct ExpectOptions {
  std::string config_path;
  std::string policy = "constant";
  std::string density;
  bool discount = false;
  std::optional<std::string> out;
};

int cmd_price(const PriceOptions& options, std::ostream& out, std::ostream& err);
int cmd_polytope(const PolytopeOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_expect(const ExpectOptions& options, std::ostream& out, std::ostream& err);

}  // namespace mbprice::cli

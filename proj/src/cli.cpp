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

#include "mbprice/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mbprice/polytope.hpp"
#include "mbprice/tree_engine.hpp"

namespace mbprice::cli {
namespace {

// Bad input: reported with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("config '" + path + "' is not valid JSON: " + e.what());
  }
}

void emit(const Json& result, const std::optional<std::string>& path, std::ostream& out) {
  const std::string text = result.dump(2) + "\n";
  if (path) {
    std::ofstream file(*path);
    if (!file) throw std::runtime_error("cannot write '" + *path + "'");
    file << text;
  } else {
    out << text;
  }
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json array = Json::array();
  for (const auto& v : values) array.push_back(rational_to_json(v));
  return array;
}

Json vertex_to_json(const polytope::VertexDensity& vertex) {
  Json object = Json::object();
  for (const auto& [element, weight] : vertex.support) object[element.to_bits()] = rational_to_json(weight);
  return object;
}

const Json& require(const Json& object, const std::string& field) {
  if (!object.is_object() || !object.contains(field)) throw InputError("missing field '" + field + "'");
  return object.at(field);
}

// Runs a command body, mapping input problems to exit code 2.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    err << "error: malformed config: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace

Rational rational_from_json(const Json& value, const std::string& field) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError("field '" + field + "': " + e.what());
    }
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(Integer(std::to_string(value.get<std::uint64_t>())))
                                      : Rational(Integer(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_number_float()) {
    throw InputError("field '" + field + "': floating point numbers are not accepted; quote the value, e.g. \"1/3\" or \"0.25\"");
  }
  throw InputError("field '" + field + "' must be a rational string");
}

Json rational_to_json(const Rational& value) { return to_string(value); }

pricing::MarketModel model_from_json(const Json& config) {
  if (!config.is_object()) throw InputError("config must be a JSON object");
  pricing::MarketModel model;
  const Json& steps = require(config, "n");
  if (!steps.is_number_integer()) throw InputError("field 'n' must be an integer");
  model.steps = steps.get<int>();
  model.growth = rational_from_json(require(config, "R"), "R");
  model.strike = rational_from_json(require(config, "C"), "C");
  const Json& assets = require(config, "assets");
  if (!assets.is_array() || assets.empty()) throw InputError("field 'assets' must be a nonempty array");
  for (std::size_t i = 0; i < assets.size(); ++i) {
    const std::string prefix = "assets[" + std::to_string(i) + "].";
    pricing::Asset a;
    a.spot = rational_from_json(require(assets[i], "S0"), prefix + "S0");
    a.down = rational_from_json(require(assets[i], "D"), prefix + "D");
    a.up = rational_from_json(require(assets[i], "U"), prefix + "U");
    model.assets.push_back(a);
  }
  if (config.contains("weights")) {
    const Json& weights = config.at("weights");
    if (!weights.is_array()) throw InputError("field 'weights' must be an array");
    for (std::size_t i = 0; i < weights.size(); ++i) {
      model.weights.push_back(rational_from_json(weights[i], "weights[" + std::to_string(i) + "]"));
    }
  }
  if (config.contains("discount")) {
    if (!config.at("discount").is_boolean()) throw InputError("field 'discount' must be a boolean");
    model.discount = config.at("discount").get<bool>();
  }
  model.validate();
  return model;
}

Json price_to_json(const pricing::PriceInterval& interval) {
  Json result;
  result["b"] = rationals_to_json(interval.spec.b());
  result["b_prime"] = rationals_to_json(interval.spec.b_prime());
  result["b_dprime"] = rationals_to_json(interval.spec.b_dprime());
  result["supervertex"] = vertex_to_json(interval.supervertex);
  result["subvertex"] = vertex_to_json(interval.subvertex);
  result["criterion_met"] = interval.criterion_met;
  result["f_max"] = rational_to_json(interval.f_max);
  result["f_min"] = rational_to_json(interval.f_min);
  result["f_min_kind"] = pricing::to_string(interval.f_min_kind);
  result["discounted"] = interval.discounted;
  return result;
}

Json polytope_to_json(const polytope::PolytopeSpec& spec) {
  Json result;
  result["m"] = spec.m();
  result["b"] = rationals_to_json(spec.b());
  result["empty"] = spec.empty();
  if (spec.empty()) return result;
  result["b_prime"] = rationals_to_json(spec.b_prime());
  result["b_dprime"] = rationals_to_json(spec.b_dprime());
  result["supervertex"] = vertex_to_json(polytope::supervertex(spec));
  result["subvertex"] = vertex_to_json(polytope::subvertex(spec));
  result["criterion_met"] = polytope::subvertex_in_polytope(spec);
  return result;
}

Json report_to_json(const verify::VerifyReport& report) {
  Json result;
  result["seed"] = report.config.seed;
  result["cases"] = report.config.cases;
  result["max_m"] = report.config.max_m;
  result["max_n"] = report.config.max_n;
  Json checks = Json::array();
  for (const auto& tally : report.checks) {
    Json entry;
    entry["name"] = tally.name;
    entry["count"] = tally.count;
    entry["passed"] = tally.passed;
    checks.push_back(entry);
  }
  result["checks"] = checks;
  result["ok"] = report.ok();
  if (report.counterexample) {
    const auto& witness = *report.counterexample;
    Json ce;
    ce["check"] = witness.check;
    ce["b"] = witness.b;
    ce["u"] = witness.u;
    ce["n"] = witness.n;
    ce["expected"] = witness.expected;
    ce["actual"] = witness.actual;
    result["counterexample"] = ce;
  }
  return result;
}

int cmd_price(const PriceOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    pricing::MarketModel model = model_from_json(read_json_file(options.config_path));
    if (options.discount) model.discount = true;
    emit(price_to_json(pricing::price_interval(model)), options.out, out);
    return 0;
  });
}

int cmd_polytope(const PolytopeOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<Rational> b;
    try {
      b = parse_rational_list(options.b);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--b: ") + e.what());
    }
    if (b.empty()) throw InputError("--b must list at least one value");
    emit(polytope_to_json(polytope::PolytopeSpec(std::move(b))), options.out, out);
    return 0;
  });
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const verify::VerifyReport report = verify::run(options.config);
    emit(report_to_json(report), options.out, out);
    if (!report.ok()) {
      err << "verification failed: " << report.counterexample->check << "\n";
      return 1;
    }
    return 0;
  });
}

int cmd_expect(const ExpectOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.policy != "constant") throw InputError("unsupported policy '" + options.policy + "' (only 'constant')");
    pricing::MarketModel model = model_from_json(read_json_file(options.config_path));
    if (options.discount) model.discount = true;
    std::vector<Rational> entries;
    try {
      entries = parse_rational_list(options.density);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--density: ") + e.what());
    }
    const int m = model.m();
    if (entries.size() != (std::size_t{1} << m)) {
      throw InputError("--density needs 2^m = " + std::to_string(std::size_t{1} << m) + " entries");
    }
    const lattice::LatticeVector q(m, entries);
    if (!tree::is_density(q)) throw InputError("--density must be nonnegative and sum to 1");
    const polytope::PolytopeSpec spec(pricing::b_from_market(model));
    const tree::Payoff f = pricing::payoff(model);
    Rational value = tree::extend(f, tree::TreePolicy::constant(q), model.steps).front();
    if (model.discount) value /= mbprice::pow(model.growth, static_cast<unsigned long>(model.steps));
    Json result;
    result["density"] = rationals_to_json(entries);
    result["in_polytope"] = polytope::contains(spec, q);
    result["expectation"] = rational_to_json(value);
    result["discounted"] = model.discount;
    emit(result, options.out, out);
    return 0;
  });
}

}  // namespace mbprice::cli

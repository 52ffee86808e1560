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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mbprice/cli.hpp"
#include "mbprice/execution.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact no-arbitrage price bounds for basket options on multi-asset binomial trees"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads for parallel kernels (0: runtime default)")->check(CLI::NonNegativeNumber);

  mbprice::cli::PriceOptions price;
  std::string price_out;
  auto* price_cmd = app.add_subcommand("price", "Price interval [f_min, f_max] for a market config");
  price_cmd->add_option("--config", price.config_path, "Market JSON file")->required();
  price_cmd->add_flag("--discount", price.discount, "Discount by R^-n");
  price_cmd->add_option("--out", price_out, "Write the JSON result to a file");

  mbprice::cli::PolytopeOptions poly;
  std::string poly_out;
  auto* poly_cmd = app.add_subcommand("polytope", "Describe the polytope P(b) and its distinguished vertices");
  poly_cmd->add_option("--b", poly.b, "Comma separated rationals, e.g. 1/3,-1/2")->required();
  poly_cmd->add_option("--out", poly_out, "Write the JSON result to a file");

  mbprice::cli::VerifyOptions ver;
  std::string ver_out;
  auto* ver_cmd = app.add_subcommand("verify", "Randomized cross-check of closed forms against exact LPs");
  ver_cmd->add_option("--m", ver.config.max_m, "Largest number of assets")->capture_default_str();
  ver_cmd->add_option("--n", ver.config.max_n, "Largest number of steps")->capture_default_str();
  ver_cmd->add_option("--cases", ver.config.cases, "Number of random cases")->capture_default_str();
  ver_cmd->add_option("--seed", ver.config.seed, "RNG seed")->capture_default_str();
  ver_cmd->add_flag("--corrupt-supervertex", ver.config.corrupt_supervertex, "Test hook: perturb the supervertex");
  ver_cmd->add_option("--out", ver_out, "Write the JSON report to a file");

  mbprice::cli::ExpectOptions exp;
  std::string exp_out;
  auto* exp_cmd = app.add_subcommand("expect", "Expectation of the payoff under a constant one-step density");
  exp_cmd->add_option("--config", exp.config_path, "Market JSON file")->required();
  exp_cmd->add_option("--policy", exp.policy, "Policy kind")->capture_default_str();
  exp_cmd->add_option("--density", exp.density, "Comma separated 2^m rationals in lexicographic order")->required();
  exp_cmd->add_flag("--discount", exp.discount, "Discount by R^-n");
  exp_cmd->add_option("--out", exp_out, "Write the JSON result to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (threads > 0) mbprice::set_worker_count(threads);

  auto out_path = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
  if (*price_cmd) {
    price.out = out_path(price_out);
    return mbprice::cli::cmd_price(price, std::cout, std::cerr);
  }
  if (*poly_cmd) {
    poly.out = out_path(poly_out);
    return mbprice::cli::cmd_polytope(poly, std::cout, std::cerr);
  }
  if (*ver_cmd) {
    ver.out = out_path(ver_out);
    return mbprice::cli::cmd_verify(ver, std::cout, std::cerr);
  }
  exp.out = out_path(exp_out);
  return mbprice::cli::cmd_expect(exp, std::cout, std::cerr);
}

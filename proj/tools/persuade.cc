// Copyright 2026 The Persuade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "persuade/analysis.hpp"
#include "persuade/caps.hpp"
#include "persuade/curve.hpp"
#include "persuade/error.hpp"
#include "persuade/generators.hpp"
#include "persuade/genericity.hpp"
#include "persuade/io.hpp"
#include "persuade/plot.hpp"
#include "persuade/random.hpp"
#include "persuade/shares.hpp"

namespace {

using namespace persuade;

struct Config {
  std::string env_path;
  std::string profile_path;
  std::vector<std::string> witness_paths;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> cap;
  std::string prior;
  std::string example;
  std::string property;
  std::string order = "natural";
  std::string k = "1";
  std::string b = "3/4";
  std::string delta;
  int n = 2;
  std::size_t states = 0;
  std::vector<std::size_t> states_list;
  std::size_t actions = 0;
  std::uint64_t samples = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ValidationError("empty list");
  return out;
}

Caps caps_of(const Config& c) {
  return c.cap ? Caps::uniform(*c.cap) : Caps::from_environment();
}

std::uint64_t require_seed(const Config& c, const std::string& what) {
  if (!c.seed) throw ValidationError(what + " is stochastic and needs --seed");
  return *c.seed;
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    write_text(c.out, text);
  }
}

void emit_json(const Config& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

int run_analyze(const Config& c) {
  const Environment env = read_environment(c.env_path);
  std::vector<NamedProfile> witnesses;
  for (const std::string& path : c.witness_paths) witnesses.push_back({path, read_profile(path)});
  emit_json(c, to_json(env, analyze(env, witnesses, caps_of(c))));
  return 0;
}

int run_verify(const Config& c) {
  const Environment env = read_environment(c.env_path);
  const VerificationReport report = verify_profile(env, read_profile(c.profile_path));
  emit_json(c, to_json(report));
  return 0;
}

int run_genericity(const Config& c) {
  const Environment env = read_environment(c.env_path);
  emit_json(c, to_json(env, genericity_report(env, caps_of(c))));
  return 0;
}

int run_curve(const Config& c) {
  const Environment env = read_environment(c.env_path);
  Orders orders;
  if (c.order == "natural") {
    orders = natural_orders(env);
  } else if (c.order == "search") {
    auto found = find_supermodular_orders(env);
    if (!found) throw ValidationError("no orders make Sender utility strictly supermodular");
    orders = *found;
  } else {
    throw ValidationError("--order must be 'natural' or 'search'");
  }
  const Caps caps = caps_of(c);
  const CurveSolution curve = curve_payoff(env, orders, caps);
  const CurvePartitionalSolution part = curve_partitional_payoff(env, orders, caps);
  emit_json(c, to_json(env, curve, part, orders));
  return 0;
}

ShareOptions share_options(const Config& c) {
  ShareOptions options;
  if (!c.prior.empty()) options.prior = parse_list(c.prior);
  options.threads = c.threads;
  options.caps = caps_of(c);
  return options;
}

int run_mc_share(const Config& c) {
  const std::uint64_t seed = require_seed(c, "mc-share");
  const ShareEstimate e = estimate_share(parse_share_property(c.property), c.states,
                                         c.actions, c.samples, seed, share_options(c));
  emit(c, share_csv({e}));
  return 0;
}

int run_share_sweep(const Config& c) {
  const std::uint64_t seed = require_seed(c, "share-sweep");
  emit(c, share_csv(share_sweep(parse_share_property(c.property), c.actions, c.states_list,
                                c.samples, seed, share_options(c))));
  return 0;
}

int run_examples(const Config& c) {
  const std::string& name = c.example;
  Environment env;
  std::optional<Rng> rng;
  auto stochastic = [&]() -> Rng& {
    if (!rng) rng.emplace(require_seed(c, "examples " + name));
    return *rng;
  };
  bool prior_used = false;
  if (name == "prosecutor") {
    env = make_prosecutor(c.prior.empty() ? Rational(3, 10) : parse_rational(c.prior));
    prior_used = true;
  } else if (name == "example1") {
    env = make_example1(parse_rational(c.k));
  } else if (name == "example2") {
    env = make_example2(parse_rational(c.k));
  } else if (name == "quadratic") {
    env = make_quadratic(c.n, parse_rational(c.b));
  } else if (name == "d1") {
    env = make_perturbed_d1(parse_rational(c.k), parse_rational(c.delta.empty() ? "1/200" : c.delta),
                            stochastic());
  } else if (name == "d2") {
    env = make_perturbed_d2(parse_rational(c.k), parse_rational(c.delta.empty() ? "1/1000" : c.delta),
                            stochastic());
  } else if (name == "uniform" || name == "transparent" || name == "supermodular") {
    if (c.states == 0 || c.actions == 0) throw ValidationError("--states and --actions are required");
    std::vector<Rational> prior;
    if (!c.prior.empty()) prior = parse_list(c.prior);
    prior_used = true;
    if (name == "uniform") env = sample_uniform_env(c.states, c.actions, stochastic(), prior);
    if (name == "transparent") env = make_transparent_random(c.states, c.actions, stochastic(), prior);
    if (name == "supermodular") env = sample_supermodular_env(c.states, c.actions, stochastic(), prior);
  } else {
    throw ValidationError("unknown example '" + name + "'");
  }
  if (!prior_used && !c.prior.empty()) env = env.with_prior(parse_list(c.prior));
  emit_json(c, to_json(env));
  return 0;
}

int run_plot(const Config& c) {
  const Environment env = read_environment(c.env_path);
  const TwoStatePlot plot = plot_two_state(env);
  if (c.out.empty()) throw ValidationError("plot needs --out for the SVG file");
  write_text(c.out, render_svg(env, plot));
  std::cout << to_json(plot).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of Sender-Receiver communication environments"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "Output file (default: standard output)");
    sub->add_option("--seed", c.seed, "Random seed");
    sub->add_option("--cap", c.cap, "Uniform enumeration cap")->check(CLI::PositiveNumber);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for an environment");
  analyze_cmd->add_option("env", c.env_path, "Environment JSON")->required();
  analyze_cmd->add_option("--witness", c.witness_paths, "Candidate cheap-talk profile JSON");
  common(analyze_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a profile for equilibrium");
  verify_cmd->add_option("env", c.env_path, "Environment JSON")->required();
  verify_cmd->add_option("profile", c.profile_path, "Profile JSON")->required();
  common(verify_cmd);

  auto* genericity_cmd = app.add_subcommand("genericity", "Genericity and preference predicates");
  genericity_cmd->add_option("env", c.env_path, "Environment JSON")->required();
  common(genericity_cmd);

  auto* curve_cmd = app.add_subcommand("curve", "Curve commitment payoffs");
  curve_cmd->add_option("env", c.env_path, "Environment JSON")->required();
  curve_cmd->add_option("--order", c.order, "natural or search");
  common(curve_cmd);

  auto* mc_cmd = app.add_subcommand("mc-share", "Monte Carlo share of environments");
  mc_cmd->add_option("--property", c.property, "Property name")->required();
  mc_cmd->add_option("--states", c.states, "Number of states")->required();
  mc_cmd->add_option("--actions", c.actions, "Number of actions")->required();
  mc_cmd->add_option("--samples", c.samples, "Number of samples")->required();
  mc_cmd->add_option("--prior", c.prior, "Comma-separated interior prior");
  mc_cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  common(mc_cmd);

  auto* sweep_cmd = app.add_subcommand("share-sweep", "Shares over several state counts");
  sweep_cmd->add_option("--property", c.property, "Property name")->required();
  sweep_cmd->add_option("--states", c.states_list, "State counts")->required()->delimiter(',');
  sweep_cmd->add_option("--actions", c.actions, "Number of actions")->required();
  sweep_cmd->add_option("--samples", c.samples, "Samples per row")->required();
  sweep_cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  common(sweep_cmd);

  auto* examples_cmd = app.add_subcommand("examples", "Write a built-in environment");
  examples_cmd
      ->add_option("name", c.example,
                   "prosecutor, example1, example2, quadratic, d1, d2, uniform, transparent, "
                   "supermodular")
      ->required();
  examples_cmd->add_option("--prior", c.prior, "Guilt prior (prosecutor) or prior list");
  examples_cmd->add_option("--k", c.k, "Scale k");
  examples_cmd->add_option("--b", c.b, "Bias b (quadratic)");
  examples_cmd->add_option("--n", c.n, "Grid size n (quadratic)");
  examples_cmd->add_option("--delta", c.delta, "Perturbation size (d1, d2)");
  examples_cmd->add_option("--states", c.states, "Number of states");
  examples_cmd->add_option("--actions", c.actions, "Number of actions");
  common(examples_cmd);

  auto* plot_cmd = app.add_subcommand("plot", "Indirect utility and concave envelope (2 states)");
  plot_cmd->add_option("env", c.env_path, "Environment JSON")->required();
  common(plot_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(c);
    if (verify_cmd->parsed()) return run_verify(c);
    if (genericity_cmd->parsed()) return run_genericity(c);
    if (curve_cmd->parsed()) return run_curve(c);
    if (mc_cmd->parsed()) return run_mc_share(c);
    if (sweep_cmd->parsed()) return run_share_sweep(c);
    if (examples_cmd->parsed()) return run_examples(c);
    if (plot_cmd->parsed()) return run_plot(c);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

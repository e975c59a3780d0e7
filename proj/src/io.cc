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

#include "persuade/io.hpp"

#include <fstream>
#include <sstream>

#include "persuade/error.hpp"

namespace persuade {
namespace {

RationalMatrix matrix_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) throw ValidationError(std::string(what) + " rows must be arrays");
    std::vector<Rational> r;
    for (const Json& x : row) r.push_back(rational_from_json(x));
    rows.push_back(std::move(r));
  }
  try {
    return RationalMatrix::from_rows(rows);
  } catch (const std::invalid_argument&) {
    throw ValidationError(std::string(what) + " has rows of different lengths");
  }
}

std::vector<Rational> vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const Json& x : j) out.push_back(rational_from_json(x));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Json ints(const std::vector<int>& v) { return Json(v); }

Json labels(const std::vector<std::string>& names, const std::vector<int>& idx) {
  Json out = Json::array();
  for (int i : idx) out.push_back(names[static_cast<std::size_t>(i)]);
  return out;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json optional_rational(const std::optional<Rational>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

Json belief_json(const Belief& b) {
  Json out = Json::array();
  for (const Rational& x : b.probabilities) out.push_back(to_json(x));
  return out;
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const Rational& x : m.row(i)) row.push_back(to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw ValidationError("expected a rational, got " + j.dump());
}

Json to_json(const Environment& env) {
  Json j;
  Json prior = Json::array();
  for (const Rational& p : env.prior()) prior.push_back(to_json(p));
  j["prior"] = prior;
  j["u_sender"] = to_json(env.u_sender());
  j["u_receiver"] = to_json(env.u_receiver());
  j["state_labels"] = env.state_labels();
  j["action_labels"] = env.action_labels();
  return j;
}

Environment environment_from_json(const Json& j) {
  std::vector<std::string> state_labels, action_labels;
  if (j.contains("state_labels")) state_labels = j.at("state_labels").get<std::vector<std::string>>();
  if (j.contains("action_labels")) action_labels = j.at("action_labels").get<std::vector<std::string>>();
  return Environment(vector_from_json(field(j, "prior"), "prior"),
                     matrix_from_json(field(j, "u_sender"), "u_sender"),
                     matrix_from_json(field(j, "u_receiver"), "u_receiver"),
                     std::move(state_labels), std::move(action_labels));
}

Json to_json(const Profile& profile) {
  Json j;
  j["sigma"] = to_json(profile.sigma());
  j["rho"] = to_json(profile.rho());
  return j;
}

Profile profile_from_json(const Json& j) {
  return Profile(matrix_from_json(field(j, "sigma"), "sigma"),
                 matrix_from_json(field(j, "rho"), "rho"));
}

Json to_json(const Environment& env, const GenericityReport& g) {
  const auto& actions = env.action_labels();
  Json j;
  j["partitional_unique_response"] = g.partitional_unique_response.holds;
  j["scant_indifferences"] = g.scant_indifferences.holds;
  j["sender_regular"] = g.sender_regular.regular;
  j["jointly_inclusive"] = g.jointly_inclusive.holds;
  j["felicitous"] = g.felicitous ? Json(g.felicitous->holds) : Json(nullptr);
  j["transparent"] = g.transparent.transparent;
  j["no_duplicate_actions"] = optional_json(g.transparent.no_duplicate_actions);

  Json w;
  if (!g.partitional_unique_response.holds) {
    w["partitional_unique_response"] = {
        {"cell", labels(env.state_labels(), g.partitional_unique_response.witness_cell)},
        {"tied_actions", labels(actions, g.partitional_unique_response.tied_actions)}};
  }
  if (!g.scant_indifferences.holds) {
    w["scant_indifferences"] = {
        {"base_action", actions[g.scant_indifferences.base_action]},
        {"rows", g.scant_indifferences.rows},
        {"submatrix", to_json(g.scant_indifferences.witness)}};
  }
  Json ideal = Json::object(), weak = Json::object();
  for (std::size_t a = 0; a < actions.size(); ++a) {
    ideal[actions[a]] = labels(env.state_labels(), g.sender_regular.ideal_sets[a]);
    weak[actions[a]] = labels(env.state_labels(), g.sender_regular.weak_ideal_sets[a]);
  }
  w["sender_ideal_partition"] = ideal;
  w["sender_ideal_sets_weak"] = weak;
  if (!g.sender_regular.regular) {
    w["sender_regular"] = {{"state", env.state_labels()[static_cast<std::size_t>(g.sender_regular.witness_state)]}};
  }
  if (!g.jointly_inclusive.holds) {
    w["jointly_inclusive"] = {{"missing_action", actions[static_cast<std::size_t>(g.jointly_inclusive.missing_action)]}};
  }
  if (g.felicitous && !g.felicitous->holds) {
    w["felicitous"] = {{"ideal_action", actions[static_cast<std::size_t>(g.felicitous->witness_ideal)]},
                       {"deviation", actions[static_cast<std::size_t>(g.felicitous->witness_deviation)]}};
  }
  if (g.transparent.transparent) {
    Json v = Json::array();
    for (const Rational& x : g.transparent.v) v.push_back(to_json(x));
    w["transparent_values"] = v;
  }
  j["witnesses"] = w;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["is_R_BR"] = r.is_R_BR;
  j["is_S_BR"] = r.is_S_BR;
  j["is_equilibrium"] = r.is_equilibrium();
  j["payoff_S"] = to_json(r.payoff_S);
  j["payoff_R"] = to_json(r.payoff_R);
  Json v = Json::array();
  for (const Violation& x : r.violations) {
    v.push_back({{"player", x.player},
                 {"index", x.index},
                 {"deviation", x.deviation},
                 {"gain", to_json(x.gain)}});
  }
  j["violations"] = v;
  return j;
}

Json to_json(const Environment& env, const AnalysisReport& r) {
  const auto& actions = env.action_labels();
  Json j;
  j["schema"] = kReportSchema;
  j["environment"] = to_json(env);
  const Payoffs& p = r.payoffs;
  j["payoffs"] = {{"persuasion", to_json(p.persuasion)},
                  {"partitional_persuasion", to_json(p.partitional_persuasion)},
                  {"best_pure_cheap_talk", to_json(p.best_pure_cheap_talk)},
                  {"babbling", to_json(p.babbling)},
                  {"sender_ideal", to_json(p.sender_ideal)},
                  {"verified_cheap_talk", optional_rational(p.verified_cheap_talk)}};
  j["delta_R"] = to_json(r.delta_R);
  j["delta_C_upper"] = to_json(r.delta_C_upper);

  Json persuasion;
  persuasion["outcome"] = to_json(r.persuasion.outcome.pi);
  persuasion["recommended_actions"] = labels(actions, r.persuasion.recommended_actions);
  Json binding = Json::array();
  for (const auto& [a, b] : r.persuasion.binding_obedience) {
    binding.push_back(Json::array({actions[static_cast<std::size_t>(a)], actions[static_cast<std::size_t>(b)]}));
  }
  persuasion["binding_obedience"] = binding;
  j["persuasion_solution"] = persuasion;

  Json cells = Json::array();
  for (std::size_t c = 0; c < r.partitional.cells.size(); ++c) {
    cells.push_back({{"states", labels(env.state_labels(), r.partitional.cells[c])},
                     {"action", actions[static_cast<std::size_t>(r.partitional.actions[c])]}});
  }
  j["partitional_solution"] = cells;

  Json ct;
  ct["map"] = labels(actions, r.cheap_talk_witness.map.assignment);
  ct["payoff_S"] = to_json(r.cheap_talk_witness.payoff_S);
  ct["payoff_R"] = to_json(r.cheap_talk_witness.payoff_R);
  j["cheap_talk_witness"] = ct;

  Json witnesses = Json::array();
  for (const WitnessOutcome& w : r.witnesses) {
    Json x = to_json(w.report);
    x["name"] = w.name;
    witnesses.push_back(x);
  }
  j["verified_witnesses"] = witnesses;
  j["genericity"] = to_json(env, r.genericity);

  Json diag;
  diag["flag"] = r.receiver_indifference.flag;
  diag["scope"] = "extracted optimal vertex";
  Json recs = Json::array();
  for (const RecommendationCheck& c : r.receiver_indifference.recommendations) {
    recs.push_back({{"action", actions[static_cast<std::size_t>(c.action)]},
                    {"posterior", belief_json(c.posterior)},
                    {"receiver_argmax", labels(actions, c.receiver_argmax)}});
  }
  diag["recommendations"] = recs;
  j["receiver_indifference"] = diag;

  j["verdicts"] = {{"generic", r.verdicts.generic},
                   {"randomization_valuable", r.verdicts.randomization_valuable},
                   {"commitment_valuable", optional_json(r.verdicts.commitment_valuable)},
                   {"cheap_talk_agrees", optional_json(r.verdicts.cheap_talk_agrees)}};
  return j;
}

Json to_json(const Environment& env, const CurveSolution& curve,
             const CurvePartitionalSolution& partitional, const Orders& orders) {
  Json j;
  j["state_order"] = labels(env.state_labels(), orders.states);
  j["action_order"] = labels(env.action_labels(), orders.actions);
  j["curve_payoff"] = to_json(curve.value);
  j["curve_outcome"] = to_json(curve.outcome.pi);
  j["envelope"] = {{"lo", ints(curve.envelope.lo)}, {"hi", ints(curve.envelope.hi)}};
  j["staircases"] = curve.staircases;
  j["feasible_staircases"] = curve.feasible;
  j["curve_partitional_payoff"] = to_json(partitional.value);
  j["curve_partitional_map"] = labels(env.action_labels(), partitional.map.assignment);
  return j;
}

Json to_json(const TwoStatePlot& plot) {
  Json j;
  Json bp = Json::array();
  for (const Rational& mu : plot.breakpoints) bp.push_back(to_json(mu));
  j["breakpoints"] = bp;
  Json hull = Json::array();
  for (const BeliefPoint& p : plot.hull) hull.push_back(Json::array({to_json(p.mu), to_json(p.value)}));
  j["envelope"] = hull;
  j["prior"] = to_json(plot.prior_mu);
  j["envelope_at_prior"] = to_json(plot.envelope_at_prior);
  return j;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ValidationError("failed writing '" + path + "'");
}

namespace {

Json parse_json(const std::string& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const Json::parse_error& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

Environment read_environment(const std::string& path) {
  try {
    return environment_from_json(parse_json(path));
  } catch (const Json::exception& e) {
    throw ValidationError("'" + path + "': " + e.what());
  }
}

Profile read_profile(const std::string& path) {
  try {
    return profile_from_json(parse_json(path));
  } catch (const Json::exception& e) {
    throw ValidationError("'" + path + "': " + e.what());
  }
}

}  // namespace persuade

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

#ifndef PERSUADE_IO_HPP_
#define PERSUADE_IO_HPP_

#include <string>

#include <json.hpp>

#include "persuade/analysis.hpp"
#include "persuade/cheaptalk.hpp"
#include "persuade/core.hpp"
#include "persuade/curve.hpp"
#include "persuade/genericity.hpp"
#include "persuade/plot.hpp"

namespace persuade {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "persuade.analysis/1";

// Rationals are written as "p/q" strings. Readers also accept JSON numbers
// and decimal strings, converted exactly from their text.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);
Json to_json(const RationalMatrix& m);

// {"prior": [...], "u_sender": [[...] per state], "u_receiver": [[...] per
// state], "state_labels": [...], "action_labels": [...]}.
Json to_json(const Environment& env);
Environment environment_from_json(const Json& j);

// {"sigma": [[...] per state], "rho": [[...] per message]}.
Json to_json(const Profile& profile);
Profile profile_from_json(const Json& j);

Json to_json(const Environment& env, const GenericityReport& report);
Json to_json(const VerificationReport& report);
Json to_json(const Environment& env, const AnalysisReport& report);
Json to_json(const Environment& env, const CurveSolution& curve,
             const CurvePartitionalSolution& partitional, const Orders& orders);
Json to_json(const TwoStatePlot& plot);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

Environment read_environment(const std::string& path);
Profile read_profile(const std::string& path);

}  // namespace persuade

#endif  // PERSUADE_IO_HPP_

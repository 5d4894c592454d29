// Copyright 2026 The QQW Authors
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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace qqw {

/// One named check: {"check": name, "pass": bool, "max_residual": r, "params": {...}}.
struct VerificationReport {
  std::string check;
  bool pass = false;
  double max_residual = 0.0;
  nlohmann::json params = nlohmann::json::object();
};

void to_json(nlohmann::json& j, const VerificationReport& r);

/// "all", "unitary", "stationary", "eigen", "theorem1", "pqrs".
std::span<const std::string_view> suite_names();

/// Runs a property suite with a deterministic RNG stream per suite.
/// Throws Error(ParseError) for an unknown suite name.
std::vector<VerificationReport> run_suite(std::string_view suite, std::uint64_t seed,
                                          double tol);

}  // namespace qqw

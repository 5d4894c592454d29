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

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qqw/coin.hpp"
#include "qqw/path_sum.hpp"
#include "qqw/walk.hpp"

namespace qqw {

/// Shortest decimal that round-trips to the same double.
std::string format_real(double v);

/// "x0+x1i+x2j+x3k" with every sign explicit, e.g. "0.5-0.5i+0j+0.5k".
std::string format_quaternion(const Quaternion& q);

/// Accepts a sum of signed terms, each a real optionally followed by i, j or
/// k ("1+0i+0j+0k", "0.5-0.5i+0.5k", "-j", "1+i"). Throws Error(ParseError).
Quaternion parse_quaternion(std::string_view text);

// Quaternions serialize as [x0, x1, x2, x3]; on input a string in the text
// form above is also accepted.
void to_json(nlohmann::json& j, const Quaternion& q);
void from_json(const nlohmann::json& j, Quaternion& q);

/// [[e11, e12], [e21, e22]]
void to_json(nlohmann::json& j, const QMatrix2& m);
void from_json(const nlohmann::json& j, QMatrix2& m);

/// [left, right]
void to_json(nlohmann::json& j, const Spinor& s);
void from_json(const nlohmann::json& j, Spinor& s);

/// {"p": q, "q": q, "r": q, "s": q}
void to_json(nlohmann::json& j, const PQRSDecomposition& d);

/// Coin description: a preset name ("hadamard", ...) or {"a": q, "b": q, "c": q, "d": q}.
/// Throws Error(ParseError) on malformed input; unitarity is not checked here.
QMatrix2 coin_matrix_from_json(const nlohmann::json& j);
nlohmann::json coin_matrix_to_json(const QMatrix2& m);

/// State file:
///   {"representation": "finite", "offset": x, "amplitudes": [[L, R], ...]}
///   {"representation": "periodic", "period": p, "amplitudes": [[L, R], ...]}
/// A bare [L, R] pair is read as a delta state at the origin.
nlohmann::json state_to_json(const WalkState& state);
WalkState state_from_json(const nlohmann::json& j);

/// Same layout as the state file with "values" instead of "amplitudes".
nlohmann::json measure_to_json(const Measure& mu);
Measure measure_from_json(const nlohmann::json& j);

/// {"n": n, "dist": {"x": p, ...}}
nlohmann::json distribution_to_json(int n, const Distribution& dist);

/// One "n,x,probability" row per site, no header.
void write_distribution_csv(std::ostream& os, int n, const Distribution& dist);

}  // namespace qqw

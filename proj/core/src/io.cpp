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
#include "qqw/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

#include "qqw/error.hpp"

namespace qqw {

using nlohmann::json;

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string format_quaternion(const Quaternion& q) {
  std::string out = format_real(q.x0);
  const std::array<std::pair<double, char>, 3> parts{{{q.x1, 'i'}, {q.x2, 'j'}, {q.x3, 'k'}}};
  for (const auto& [v, unit] : parts) {
    out += std::signbit(v) && v != 0.0 ? '-' : '+';
    out += format_real(std::abs(v));
    out += unit;
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "bad quaternion '" + std::string(text) + "': " + why);
}

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
  Quaternion q;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) parse_fail(text, "empty input");

  bool first = true;
  while (pos < text.size()) {
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1.0 : 1.0;
      ++pos;
      skip_ws();
    } else if (!first) {
      parse_fail(text, "expected '+' or '-' between terms");
    }
    first = false;

    double value = 1.0;
    bool have_number = false;
    if (pos < text.size() && text[pos] != 'i' && text[pos] != 'j' && text[pos] != 'k') {
      const auto res = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (res.ec != std::errc{} || !std::isfinite(value)) parse_fail(text, "expected a number");
      pos = static_cast<std::size_t>(res.ptr - text.data());
      have_number = true;
    }
    skip_ws();

    char unit = '\0';
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      unit = text[pos++];
    } else if (!have_number) {
      parse_fail(text, "dangling sign");
    }
    switch (unit) {
      case 'i': q.x1 += sign * value; break;
      case 'j': q.x2 += sign * value; break;
      case 'k': q.x3 += sign * value; break;
      default: q.x0 += sign * value; break;
    }
    skip_ws();
  }
  return q;
}

void to_json(json& j, const Quaternion& q) { j = json::array({q.x0, q.x1, q.x2, q.x3}); }

void from_json(const json& j, Quaternion& q) {
  if (j.is_string()) {
    q = parse_quaternion(j.get<std::string>());
    return;
  }
  if (j.is_number()) {
    q = Quaternion{j.get<double>()};
    return;
  }
  if (!j.is_array() || j.size() != 4) {
    throw Error(ErrorCode::ParseError, "quaternion must be [x0, x1, x2, x3], got " + j.dump());
  }
  for (const json& c : j) {
    if (!c.is_number()) throw Error(ErrorCode::ParseError, "non-numeric quaternion component");
  }
  q = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

void to_json(json& j, const QMatrix2& m) {
  j = json::array({json::array({m.e11, m.e12}), json::array({m.e21, m.e22})});
}

void from_json(const json& j, QMatrix2& m) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2) {
    throw Error(ErrorCode::ParseError, "matrix must be [[q, q], [q, q]]");
  }
  m = {j[0][0].get<Quaternion>(), j[0][1].get<Quaternion>(), j[1][0].get<Quaternion>(),
       j[1][1].get<Quaternion>()};
}

void to_json(json& j, const Spinor& s) { j = json::array({s.left, s.right}); }

void from_json(const json& j, Spinor& s) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::ParseError, "spinor must be [left, right], got " + j.dump());
  }
  s = {j[0].get<Quaternion>(), j[1].get<Quaternion>()};
}

void to_json(json& j, const PQRSDecomposition& d) {
  j = json{{"p", d.p}, {"q", d.q}, {"r", d.r}, {"s", d.s}};
}

namespace {

// Re-throws library-external parse failures under our error code.
template <typename F>
auto parse_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

QMatrix2 coin_matrix_from_json(const json& j) {
  return parse_guard([&] {
    if (j.is_string()) {
      const auto name = j.get<std::string>();
      if (auto m = coin_preset(name)) return *m;
      throw Error(ErrorCode::ParseError, "unknown coin preset '" + name + "'");
    }
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "coin must be a preset name or object");
    for (const char* key : {"a", "b", "c", "d"}) {
      if (!j.contains(key)) {
        throw Error(ErrorCode::ParseError, std::string("coin is missing entry '") + key + "'");
      }
    }
    return QMatrix2{j.at("a").get<Quaternion>(), j.at("b").get<Quaternion>(),
                    j.at("c").get<Quaternion>(), j.at("d").get<Quaternion>()};
  });
}

json coin_matrix_to_json(const QMatrix2& m) {
  return json{{"a", m.e11}, {"b", m.e12}, {"c", m.e21}, {"d", m.e22}};
}

json state_to_json(const WalkState& state) {
  json j;
  if (state.is_periodic()) {
    j["representation"] = "periodic";
    j["period"] = state.size();
  } else {
    j["representation"] = "finite";
    j["offset"] = state.offset();
  }
  j["amplitudes"] = state.amplitudes();
  return j;
}

WalkState state_from_json(const json& j) {
  return parse_guard([&] {
    if (j.is_array()) return WalkState::delta(j.get<Spinor>());
    if (!j.is_object() || !j.contains("amplitudes")) {
      throw Error(ErrorCode::ParseError, "state must be [left, right] or a state object");
    }
    auto amps = j.at("amplitudes").get<std::vector<Spinor>>();
    const std::string rep = j.value("representation", std::string("finite"));
    if (rep == "periodic") {
      if (j.contains("period") && j.at("period").get<std::size_t>() != amps.size()) {
        throw Error(ErrorCode::ParseError, "period does not match amplitude count");
      }
      return WalkState::periodic(std::move(amps));
    }
    if (rep == "finite") return WalkState::finite(j.value("offset", Site{0}), std::move(amps));
    throw Error(ErrorCode::ParseError, "unknown representation '" + rep + "'");
  });
}

json measure_to_json(const Measure& mu) {
  json j;
  if (mu.is_periodic()) {
    j["representation"] = "periodic";
    j["period"] = mu.size();
  } else {
    j["representation"] = "finite";
    j["offset"] = mu.offset();
  }
  j["values"] = mu.values();
  return j;
}

Measure measure_from_json(const json& j) {
  return parse_guard([&] {
    if (!j.is_object() || !j.contains("values")) {
      throw Error(ErrorCode::ParseError, "measure must be an object with 'values'");
    }
    auto values = j.at("values").get<std::vector<double>>();
    const std::string rep = j.value("representation", std::string("finite"));
    if (rep == "periodic") return Measure::periodic(std::move(values));
    if (rep == "finite") return Measure::finite(j.value("offset", Site{0}), std::move(values));
    throw Error(ErrorCode::ParseError, "unknown representation '" + rep + "'");
  });
}

json distribution_to_json(int n, const Distribution& dist) {
  json d = json::object();
  for (const auto& [x, p] : dist) d[std::to_string(x)] = p;
  return json{{"n", n}, {"dist", std::move(d)}};
}

void write_distribution_csv(std::ostream& os, int n, const Distribution& dist) {
  for (const auto& [x, p] : dist) os << n << ',' << x << ',' << format_real(p) << '\n';
}

}  // namespace qqw

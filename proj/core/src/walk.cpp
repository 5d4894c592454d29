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
#include "qqw/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qqw/error.hpp"
#include "qqw/io.hpp"

namespace qqw {

Spinor operator*(const QMatrix2& m, const Spinor& s) {
  return {m.e11 * s.left + m.e12 * s.right, m.e21 * s.left + m.e22 * s.right};
}

namespace {

bool all_zero(const std::vector<Spinor>& amps) {
  return std::all_of(amps.begin(), amps.end(),
                     [](const Spinor& s) { return norm2(s) == 0.0; });
}

}  // namespace

WalkState WalkState::finite(Site offset, std::vector<Spinor> amplitudes) {
  if (amplitudes.empty() || all_zero(amplitudes)) {
    throw Error(ErrorCode::InvalidState, "finite-support state has no nonzero amplitude");
  }
  return WalkState(LatticeField<Spinor>::finite(offset, std::move(amplitudes)));
}

WalkState WalkState::periodic(std::vector<Spinor> amplitudes) {
  if (amplitudes.empty()) throw Error(ErrorCode::InvalidState, "period must be >= 1");
  if (all_zero(amplitudes)) {
    throw Error(ErrorCode::InvalidState, "periodic state has no nonzero amplitude");
  }
  return WalkState(LatticeField<Spinor>::periodic(std::move(amplitudes)));
}

WalkState WalkState::delta(const Spinor& phi, Site x) { return finite(x, {phi}); }

WalkState WalkState::constant(const Spinor& phi) { return periodic({phi}); }

double WalkState::total_norm2() const {
  double total = 0.0;
  for (const Spinor& s : amplitudes()) total += norm2(s);
  return total;
}

void Measure::validate(const std::vector<double>& values) {
  if (values.empty()) throw Error(ErrorCode::InvalidState, "empty measure");
  bool nonzero = false;
  for (double v : values) {
    if (!(v >= 0.0)) throw Error(ErrorCode::InvalidState, "negative measure value");
    nonzero = nonzero || v > 0.0;
  }
  if (!nonzero) throw Error(ErrorCode::InvalidState, "measure is identically zero");
}

Measure Measure::finite(Site offset, std::vector<double> values) {
  validate(values);
  return Measure(LatticeField<double>::finite(offset, std::move(values)));
}

Measure Measure::periodic(std::vector<double> values) {
  validate(values);
  return Measure(LatticeField<double>::periodic(std::move(values)));
}

double max_abs_diff(const Measure& mu, const Measure& nu) {
  Site lo = 0;
  Site hi = 0;  // exclusive
  if (mu.is_periodic() && nu.is_periodic()) {
    const Site p = mu.size();
    const Site q = nu.size();
    hi = std::min(std::lcm(p, q), p * q);
  } else {
    bool first = true;
    for (const Measure* m : {&mu, &nu}) {
      const Site a = m->offset();
      const Site b = m->offset() + m->size();
      lo = first ? a : std::min(lo, a);
      hi = first ? b : std::max(hi, b);
      first = false;
    }
  }
  double worst = 0.0;
  for (Site x = lo; x < hi; ++x) worst = std::max(worst, std::abs(mu.at(x) - nu.at(x)));
  return worst;
}

WalkState evolve_step(const WalkState& state, const CoinOperator& coin) {
  const Quaternion& a = coin.a();
  const Quaternion& b = coin.b();
  const Quaternion& c = coin.c();
  const Quaternion& d = coin.d();

  auto next = [&](Site x) {
    const Spinor from_right = state.at(x + 1);
    const Spinor from_left = state.at(x - 1);
    return Spinor{a * from_right.left + b * from_right.right,
                  c * from_left.left + d * from_left.right};
  };

  const Site n = state.size();
  if (state.is_periodic()) {
    std::vector<Spinor> out(static_cast<std::size_t>(n));
    for (Site x = 0; x < n; ++x) out[static_cast<std::size_t>(x)] = next(x);
    return WalkState(LatticeField<Spinor>::periodic(std::move(out)));
  }
  const Site lo = state.offset() - 1;
  std::vector<Spinor> out(static_cast<std::size_t>(n + 2));
  for (Site i = 0; i < n + 2; ++i) out[static_cast<std::size_t>(i)] = next(lo + i);
  return WalkState(LatticeField<Spinor>::finite(lo, std::move(out)));
}

WalkState evolve(WalkState state, const CoinOperator& coin, int steps) {
  for (int t = 0; t < steps; ++t) state = evolve_step(state, coin);
  return state;
}

Measure measure_of(const WalkState& state) {
  std::vector<double> values;
  values.reserve(state.amplitudes().size());
  for (const Spinor& s : state.amplitudes()) values.push_back(norm2(s));
  if (state.is_periodic()) return Measure::periodic(std::move(values));
  return Measure::finite(state.offset(), std::move(values));
}

void require_normalized(const Spinor& phi, double tol) {
  const double n2 = norm2(phi);
  if (!(std::abs(n2 - 1.0) <= tol)) {
    throw Error(ErrorCode::NotNormalized,
                "|alpha|^2 + |beta|^2 = " + format_real(n2) + ", expected 1");
  }
}

Distribution to_distribution(const Measure& mu) {
  Distribution out;
  for (Site i = 0; i < mu.size(); ++i) {
    const double v = mu.values()[static_cast<std::size_t>(i)];
    if (v > kZeroProbability) out.emplace(mu.offset() + i, v);
  }
  return out;
}

Distribution distribution(const CoinOperator& coin, const Spinor& phi, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidState, "time must be >= 0");
  require_normalized(phi);
  return to_distribution(measure_of(evolve(WalkState::delta(phi), coin, n)));
}

std::vector<Distribution> distribution_series(const CoinOperator& coin, const Spinor& phi,
                                              int n) {
  if (n < 0) throw Error(ErrorCode::InvalidState, "time must be >= 0");
  require_normalized(phi);
  std::vector<Distribution> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  WalkState state = WalkState::delta(phi);
  out.push_back(to_distribution(measure_of(state)));
  for (int t = 1; t <= n; ++t) {
    state = evolve_step(state, coin);
    out.push_back(to_distribution(measure_of(state)));
  }
  return out;
}

Distribution hadamard_n3_closed_form(const Spinor& phi) {
  require_normalized(phi);
  const double sum = norm2(phi.left + phi.right);
  const double diff = norm2(phi.left - phi.right);
  const std::array<std::pair<Site, double>, 4> raw{{
      {-3, sum / 8.0},
      {-1, (4.0 * norm2(phi.left) + sum) / 8.0},
      {1, (4.0 * norm2(phi.right) + diff) / 8.0},
      {3, diff / 8.0},
  }};
  Distribution out;
  for (const auto& [x, p] : raw) {
    if (p > kZeroProbability) out.emplace(x, p);
  }
  return out;
}

}  // namespace qqw

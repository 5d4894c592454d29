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
#include "qqw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qqw/error.hpp"
#include "qqw/io.hpp"
#include "qqw/path_sum.hpp"

namespace qqw {

EigenCandidate make_eigen_candidate(WalkState state, const Quaternion& lambda, double tol) {
  if (!state.is_periodic()) {
    throw Error(ErrorCode::InvalidState, "eigen candidates must be periodic states");
  }
  if (std::abs(norm(lambda) - 1.0) > tol) {
    throw Error(ErrorCode::NotUnit, "eigenvalue modulus " + format_real(norm(lambda)));
  }
  return {std::move(state), lambda};
}

CheckResult right_eigen_check(const CoinOperator& coin, const EigenCandidate& cand, double tol) {
  const WalkState& st = cand.state;
  if (!st.is_periodic()) {
    throw Error(ErrorCode::InvalidState, "right_eigen_check needs a periodic state");
  }
  double worst = 0.0;
  for (Site x = 0; x < st.size(); ++x) {
    const Spinor here = st.at(x);
    const Spinor right = st.at(x + 1);
    const Spinor left = st.at(x - 1);
    const Quaternion rhs_l = coin.a() * right.left + coin.b() * right.right;
    const Quaternion rhs_r = coin.c() * left.left + coin.d() * left.right;
    worst = std::max({worst, max_abs_diff(here.left * cand.lambda, rhs_l),
                      max_abs_diff(here.right * cand.lambda, rhs_r)});
  }
  return {worst <= tol, worst};
}

namespace {

void require_pairs(std::span<const EvenSitePair> pairs, double tol) {
  if (pairs.empty()) throw Error(ErrorCode::InvalidState, "need at least one coefficient pair");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (norm(pairs[i].alpha) <= tol || norm(pairs[i].beta) <= tol) {
      throw Error(ErrorCode::ZeroCoefficient,
                  "alpha*beta vanishes for pair " + std::to_string(i));
    }
  }
}

// Even site 2x holds pair x. Odd site 2x+1 takes its left amplitude from
// pair x+1 and its right amplitude from pair x.
WalkState interleave(std::span<const EvenSitePair> pairs, const Quaternion& left_factor,
                     const Quaternion& lambda) {
  const std::size_t k = pairs.size();
  std::vector<Spinor> amps(2 * k);
  for (std::size_t x = 0; x < k; ++x) {
    const EvenSitePair& here = pairs[x];
    const EvenSitePair& next = pairs[(x + 1) % k];
    amps[2 * x] = {here.alpha, here.beta};
    amps[2 * x + 1] = {left_factor * next.beta * lambda, here.alpha * lambda};
  }
  return WalkState::periodic(std::move(amps));
}

}  // namespace

EigenCandidate build_eigenstate_flip(int lambda_sign, std::span<const EvenSitePair> pairs,
                                     double tol) {
  if (lambda_sign != 1 && lambda_sign != -1) {
    throw Error(ErrorCode::InvalidState, "flip eigenvalue sign must be +1 or -1");
  }
  require_pairs(pairs, tol);
  const Quaternion lambda = static_cast<double>(lambda_sign);
  return make_eigen_candidate(interleave(pairs, 1.0, lambda), lambda, tol);
}

EigenCandidate build_eigenstate_flipneg(const Quaternion& lambda,
                                        std::span<const EvenSitePair> pairs, double tol) {
  if (std::abs(lambda.re()) > tol || std::abs(norm(lambda) - 1.0) > tol) {
    throw Error(ErrorCode::NotImaginaryUnit,
                "lambda = " + format_quaternion(lambda) + " does not square to -1");
  }
  require_pairs(pairs, tol);
  return make_eigen_candidate(interleave(pairs, -1.0, lambda), lambda, tol);
}

CheckResult verify_stationary(const CoinOperator& coin, const WalkState& state, int n_max,
                              double tol) {
  if (n_max < 1) throw Error(ErrorCode::InvalidState, "n_max must be >= 1");
  const Measure mu0 = measure_of(state);
  WalkState cur = state;
  double worst = 0.0;
  for (int k = 1; k <= n_max; ++k) {
    cur = evolve_step(cur, coin);
    worst = std::max(worst, max_abs_diff(measure_of(cur), mu0));
  }
  return {worst <= tol, worst};
}

TwoStepReport check_two_step_uniformity(const CoinOperator& coin, const WalkState& state,
                                        double tol) {
  if (norm(coin.b()) > tol) {
    throw Error(ErrorCode::WrongCoinClass, "two-step uniformity needs a coin with b = 0");
  }
  if (!state.is_periodic()) {
    throw Error(ErrorCode::InvalidState, "two-step uniformity runs on periodic states");
  }
  const Measure mu0 = measure_of(state);
  const WalkState s1 = evolve_step(state, coin);
  const WalkState s2 = evolve_step(s1, coin);

  TwoStepReport rep;
  rep.max_residual = std::max(max_abs_diff(measure_of(s1), mu0), max_abs_diff(measure_of(s2), mu0));
  rep.two_step_invariant = rep.max_residual <= tol;
  const auto [lo, hi] = std::minmax_element(mu0.values().begin(), mu0.values().end());
  rep.uniform = *hi - *lo <= tol;
  return rep;
}

std::string_view to_string(MeasureClass::Tag tag) noexcept {
  switch (tag) {
    case MeasureClass::Tag::Uniform: return "Uniform";
    case MeasureClass::Tag::ExponentialDecay: return "ExponentialDecay";
    case MeasureClass::Tag::Other: return "Other";
  }
  return "Other";
}

namespace {

// Shared-slope least squares: log mu(x) = c_side + slope |x| on both tails.
bool fit_exponential(const Measure& mu, Site reach, MeasureClass& out) {
  struct Tail {
    double t_mean = 0.0, y_mean = 0.0, intercept = 0.0;
    std::vector<std::pair<double, double>> pts;
  };
  std::array<Tail, 2> tails;  // [0]: x >= 1, [1]: x <= -1
  for (Site t = 1; t <= reach; ++t) {
    for (int side = 0; side < 2; ++side) {
      const double v = mu.at(side == 0 ? t : -t);
      if (!(v > 0.0)) return false;
      tails[static_cast<std::size_t>(side)].pts.emplace_back(static_cast<double>(t), std::log(v));
    }
  }
  const double c0 = mu.at(0);
  if (!(c0 > 0.0)) return false;

  double sxy = 0.0;
  double sxx = 0.0;
  for (Tail& tail : tails) {
    for (const auto& [t, y] : tail.pts) {
      tail.t_mean += t;
      tail.y_mean += y;
    }
    tail.t_mean /= static_cast<double>(tail.pts.size());
    tail.y_mean /= static_cast<double>(tail.pts.size());
    for (const auto& [t, y] : tail.pts) {
      sxy += (t - tail.t_mean) * (y - tail.y_mean);
      sxx += (t - tail.t_mean) * (t - tail.t_mean);
    }
  }
  const double slope = sxy / sxx;
  double worst = 0.0;
  for (Tail& tail : tails) {
    tail.intercept = tail.y_mean - slope * tail.t_mean;
    for (const auto& [t, y] : tail.pts) {
      worst = std::max(worst, std::abs(y - tail.intercept - slope * t));
    }
  }
  // mu = C gamma^-|x| with gamma in (0, 1) means log mu grows with |x|.
  if (worst > kExponentialFitTolerance || slope <= kExponentialFitTolerance) return false;

  out.tag = MeasureClass::Tag::ExponentialDecay;
  out.gamma = std::exp(-slope);
  out.c_plus = std::exp(tails[0].intercept);
  out.c_minus = std::exp(tails[1].intercept);
  out.c0 = c0;
  return true;
}

}  // namespace

MeasureClass classify_measure(const Measure& mu, int window, double tol) {
  Site reach = std::max<Site>(window, 0);
  if (mu.is_periodic()) {
    reach = std::max(reach, mu.size());
  } else {
    reach = std::max({reach, std::abs(mu.offset()), std::abs(mu.offset() + mu.size() - 1)});
  }

  MeasureClass out;
  double lo = mu.at(-reach);
  double hi = lo;
  double sum = 0.0;
  for (Site x = -reach; x <= reach; ++x) {
    const double v = mu.at(x);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
  }
  out.symmetric = true;
  for (Site x = 1; x <= reach; ++x) {
    if (std::abs(mu.at(x) - mu.at(-x)) > tol) {
      out.symmetric = false;
      break;
    }
  }

  const double mean = sum / static_cast<double>(2 * reach + 1);
  if (hi - lo <= tol && mean > tol) {
    out.tag = MeasureClass::Tag::Uniform;
    out.c = mean;
    return out;
  }
  if (!mu.is_periodic() && window >= 3 && fit_exponential(mu, reach, out)) return out;

  out.tag = MeasureClass::Tag::Other;
  return out;
}

Spinor PolarInitialState::to_spinor() const {
  auto component = [](double theta, const std::array<double, 3>& n, double scale) {
    const double s = std::sin(theta);
    return Quaternion{std::cos(theta), n[0] * s, n[1] * s, n[2] * s} * scale;
  };
  return {component(theta_alpha, n_alpha, std::cos(xi)),
          component(theta_beta, n_beta, std::sin(xi))};
}

PolarInitialState PolarInitialState::from_spinor(const Spinor& phi) {
  auto split = [](const Quaternion& q, double& theta, std::array<double, 3>& axis) {
    theta = 0.0;
    axis = {0.0, 0.0, 1.0};
    const double r = norm(q);
    if (r == 0.0) return;
    const Quaternion u = q / r;
    const double im = std::sqrt(u.x1 * u.x1 + u.x2 * u.x2 + u.x3 * u.x3);
    theta = std::atan2(im, u.x0);
    if (im > 0.0) axis = {u.x1 / im, u.x2 / im, u.x3 / im};
  };
  PolarInitialState ps;
  ps.xi = std::atan2(norm(phi.right), norm(phi.left));
  split(phi.left, ps.theta_alpha, ps.n_alpha);
  split(phi.right, ps.theta_beta, ps.n_beta);
  return ps;
}

Complexification complexify_initial_state(const PolarInitialState& ps) {
  const double gamma = ps.n_alpha[0] * ps.n_beta[0] + ps.n_alpha[1] * ps.n_beta[1] +
                       ps.n_alpha[2] * ps.n_beta[2];
  const double k = std::cos(ps.theta_alpha) * std::cos(ps.theta_beta) +
                   gamma * std::sin(ps.theta_alpha) * std::sin(ps.theta_beta);
  // |gamma| <= 1 for unit axes, hence |K| <= 1 up to rounding.
  if (!(std::abs(k) <= 1.0 + 1e-12)) {
    throw Error(ErrorCode::InvalidState, "complexification constant |K| = " +
                                             format_real(std::abs(k)) + " exceeds 1");
  }
  const double theta_b = -std::acos(std::clamp(k, -1.0, 1.0));
  const double cx = std::cos(ps.xi);
  const double sx = std::sin(ps.xi);
  return {{Quaternion{cx}, Quaternion{std::cos(theta_b) * sx, std::sin(theta_b) * sx, 0.0, 0.0}},
          k};
}

double AbcCoefficients::probability(const Spinor& phi) const {
  return a * norm2(phi.left) + b * norm2(phi.right) + c * (phi.left * conj(phi.right)).re();
}

AbcCoefficients abc_coefficients(const CoinOperator& coin, int n, int l, int m, double tol) {
  for (const Quaternion* e : {&coin.a(), &coin.b(), &coin.c(), &coin.d()}) {
    if (std::max({std::abs(e->x1), std::abs(e->x2), std::abs(e->x3)}) > tol) {
      throw Error(ErrorCode::NotRealCoin, "coin entry " + format_quaternion(*e) + " is not real");
    }
  }
  const QMatrix2 xi = xi_reduced(coin, n, l, m);
  const double r11 = xi.e11.re();
  const double r12 = xi.e12.re();
  const double r21 = xi.e21.re();
  const double r22 = xi.e22.re();
  return {r11 * r11 + r21 * r21, r12 * r12 + r22 * r22, 2.0 * (r11 * r12 + r21 * r22)};
}

}  // namespace qqw

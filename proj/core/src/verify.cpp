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
#include "qqw/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "qqw/coin.hpp"
#include "qqw/error.hpp"
#include "qqw/path_sum.hpp"
#include "qqw/sampling.hpp"
#include "qqw/spectral.hpp"
#include "qqw/walk.hpp"

namespace qqw {

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{
      {"check", r.check}, {"pass", r.pass}, {"max_residual", r.max_residual}, {"params", r.params}};
}

namespace {

constexpr std::array<std::string_view, 6> kSuites{"all",   "unitary",  "stationary",
                                                  "eigen", "theorem1", "pqrs"};

constexpr int kRandomCoins = 50;
constexpr int kReducedCoins = 20;
constexpr int kMaxWordLength = 10;

Rng suite_rng(std::uint64_t seed, std::size_t suite_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(suite_index)};
  return Rng(seq);
}

double max_diff(const Distribution& p, const Distribution& q) {
  double worst = 0.0;
  for (const auto& [x, v] : p) {
    const auto it = q.find(x);
    worst = std::max(worst, std::abs(v - (it == q.end() ? 0.0 : it->second)));
  }
  for (const auto& [x, v] : q) {
    if (!p.contains(x)) worst = std::max(worst, v);
  }
  return worst;
}

VerificationReport report(std::string name, double residual, double tol,
                          nlohmann::json params = nlohmann::json::object()) {
  return {std::move(name), residual <= tol, residual, std::move(params)};
}

CoinOperator preset(std::string_view name) { return CoinOperator::make(*coin_preset(name)); }

std::vector<VerificationReport> unitary_suite(Rng& rng, double tol) {
  std::vector<VerificationReport> out;
  double worst = 0.0;
  for (const char* name : {"hadamard", "example-ijk", "flip", "flip-neg"}) {
    const QMatrix2 m = *coin_preset(name);
    worst = std::max({worst, max_abs_diff(m * adjoint(m), QMatrix2::identity()),
                      max_abs_diff(adjoint(m) * m, QMatrix2::identity())});
  }
  out.push_back(report("unitary/presets", worst, tol));

  worst = 0.0;
  double rows = 0.0;
  for (int t = 0; t < kRandomCoins; ++t) {
    const QMatrix2 m = random_unitary(rng);
    worst = std::max({worst, max_abs_diff(m * adjoint(m), QMatrix2::identity()),
                      max_abs_diff(adjoint(m) * m, QMatrix2::identity())});
    const Quaternion r11 = m.e11 * conj(m.e11) + m.e12 * conj(m.e12);
    const Quaternion r22 = m.e21 * conj(m.e21) + m.e22 * conj(m.e22);
    const Quaternion r12 = m.e11 * conj(m.e21) + m.e12 * conj(m.e22);
    rows = std::max({rows, max_abs_diff(r11, 1.0), max_abs_diff(r22, 1.0), norm(r12)});
  }
  out.push_back(report("unitary/random-coins", worst, tol, {{"coins", kRandomCoins}}));
  out.push_back(report("unitary/row-orthonormality", rows, tol, {{"coins", kRandomCoins}}));

  const bool shear_rejected = !is_unitary(QMatrix2{1.0, 1.0, 0.0, 1.0}, tol);
  out.push_back({"unitary/shear-rejected", shear_rejected, 0.0, nlohmann::json::object()});
  return out;
}

std::vector<VerificationReport> pqrs_suite(Rng& rng, double tol) {
  std::vector<VerificationReport> out;
  std::vector<CoinOperator> coins{preset("hadamard"), preset("example-ijk")};
  for (int t = 0; t < kRandomCoins; ++t) coins.push_back(CoinOperator::make(random_unitary(rng)));

  double table = 0.0;
  for (const CoinOperator& c : coins) {
    for (const ProductTableEntry& e : product_table(c, 1.0)) table = std::max(table, e.residual);
  }
  out.push_back(report("pqrs/product-table", table, tol, {{"coins", coins.size()}}));

  double oracle = 0.0;
  double round_trip = 0.0;
  double row_sum = 0.0;
  for (int t = 0; t < kReducedCoins; ++t) {
    const CoinOperator& c = coins[static_cast<std::size_t>(t) + 2];
    QMatrix2 power = QMatrix2::identity();
    for (int n = 1; n <= kMaxWordLength; ++n) {
      power = power * c.matrix();
      QMatrix2 sum = QMatrix2::zero();
      for (int l = 0; l <= n; ++l) {
        const QMatrix2 brute = xi_bruteforce(c, n, l, n - l);
        const QMatrix2 reduced = xi_reduced(c, n, l, n - l);
        oracle = std::max(oracle, max_abs_diff(brute, reduced));
        const PQRSDecomposition dec = decompose_pqrs(c, brute, 1.0);
        round_trip = std::max(round_trip, max_abs_diff(reconstruct(c, dec), brute));
        sum = sum + brute;
      }
      row_sum = std::max(row_sum, max_abs_diff(sum, power));
    }
  }
  const nlohmann::json params{{"coins", kReducedCoins}, {"n_max", kMaxWordLength}};
  out.push_back(report("pqrs/reduced-vs-bruteforce", oracle, tol, params));
  out.push_back(report("pqrs/decomposition-round-trip", round_trip, tol, params));
  out.push_back(report("pqrs/row-sum-equals-power", row_sum, tol, params));

  double xi431 = 0.0;
  for (const CoinOperator& c : coins) {
    const PQRSDecomposition dec = decompose_pqrs(c, xi_reduced(c, 4, 3, 1), 1.0);
    const Quaternion &a = c.a(), &b = c.b(), &cc = c.c();
    xi431 = std::max({xi431, max_abs_diff(dec.p, a * b * cc + b * cc * a), norm(dec.q),
                      max_abs_diff(dec.r, a * a * b), max_abs_diff(dec.s, cc * a * a)});
  }
  out.push_back(report("pqrs/xi4-3-1-coefficients", xi431, tol, {{"coins", coins.size()}}));
  return out;
}

// Period <= 8 states for the b = 0 falsification run. Families:
//   0: independent Gaussian amplitudes
//   1: constant moduli, random unit-quaternion phases (uniform and invariant)
//   2: |Psi^L|^2 = 1 + e(-1)^x, |Psi^R|^2 = 1 - e(-1)^x (uniform, invariant)
//   3: |Psi^L(x)| = |Psi^R(x-1)|, one-step invariant but generally not two-step
WalkState sample_periodic_state(Rng& rng, int family) {
  std::uniform_int_distribution<int> period_dist(1, 8);
  int period = period_dist(rng);
  std::vector<Spinor> amps(static_cast<std::size_t>(period));
  switch (family) {
    case 0:
      for (Spinor& s : amps) s = {random_quaternion(rng), random_quaternion(rng)};
      break;
    case 1: {
      const double l = std::abs(random_quaternion(rng).x0) + 0.1;
      const double r = std::abs(random_quaternion(rng).x0) + 0.1;
      for (Spinor& s : amps) s = {l * random_unit_quaternion(rng), r * random_unit_quaternion(rng)};
      break;
    }
    case 2: {
      period = 2 * std::uniform_int_distribution<int>(1, 4)(rng);
      amps.resize(static_cast<std::size_t>(period));
      const double e = std::uniform_real_distribution<double>(0.0, 0.9)(rng);
      for (int x = 0; x < period; ++x) {
        const double sign = x % 2 == 0 ? 1.0 : -1.0;
        amps[static_cast<std::size_t>(x)] = {std::sqrt(1.0 + sign * e) * random_unit_quaternion(rng),
                                             std::sqrt(1.0 - sign * e) * random_unit_quaternion(rng)};
      }
      break;
    }
    default: {
      std::vector<double> g(static_cast<std::size_t>(period));
      for (double& v : g) v = std::abs(random_quaternion(rng).x0) + 0.1;
      for (int x = 0; x < period; ++x) {
        const double prev = g[static_cast<std::size_t>((x + period - 1) % period)];
        amps[static_cast<std::size_t>(x)] = {std::sqrt(prev) * random_unit_quaternion(rng),
                                             std::sqrt(g[static_cast<std::size_t>(x)]) *
                                                 random_unit_quaternion(rng)};
      }
      break;
    }
  }
  return WalkState::periodic(std::move(amps));
}

std::vector<VerificationReport> stationary_suite(Rng& rng, double tol) {
  std::vector<VerificationReport> out;
  double uniform = 0.0;
  for (int t = 0; t < kRandomCoins; ++t) {
    const CoinOperator coin = CoinOperator::make(random_unitary(rng));
    const Spinor phi{random_quaternion(rng), random_quaternion(rng)};
    uniform = std::max(uniform, verify_stationary(coin, WalkState::constant(phi), 50, tol).max_residual);
  }
  out.push_back(report("stationary/uniform", uniform, tol, {{"coins", kRandomCoins}, {"steps", 50}}));

  const std::array<EvenSitePair, 3> pairs{{{1.0, 1.0}, {2.0, Quaternion::j()}, {0.5, 3.0}}};
  const CoinOperator flip = preset("flip");
  const EigenCandidate cand = build_eigenstate_flip(-1, pairs, tol);
  const CheckResult st = verify_stationary(flip, cand.state, 50, tol);
  const MeasureClass cls = classify_measure(measure_of(cand.state), 8, tol);
  VerificationReport witness = report("stationary/a0-witness", st.max_residual, tol, {{"steps", 50}});
  witness.params["class"] = std::string(to_string(cls.tag));
  witness.pass = witness.pass && cls.tag == MeasureClass::Tag::Other;
  out.push_back(std::move(witness));

  const CheckResult spread =
      verify_stationary(preset("hadamard"), WalkState::delta({1.0, 0.0}), 1, tol);
  out.push_back({"stationary/delta-not-stationary", !spread.pass, spread.max_residual,
                 nlohmann::json::object()});

  int falsified = 0;
  int premise = 0;
  constexpr int kSamples = 1000;
  for (int t = 0; t < kSamples; ++t) {
    const QMatrix2 m{random_unit_quaternion(rng), 0.0, 0.0, random_unit_quaternion(rng)};
    const CoinOperator coin = CoinOperator::make(m);
    const WalkState state = sample_periodic_state(rng, t % 4);
    const TwoStepReport rep = check_two_step_uniformity(coin, state, tol);
    premise += rep.two_step_invariant ? 1 : 0;
    falsified += rep.implication_holds() ? 0 : 1;
  }
  out.push_back({"stationary/b0-two-step-uniformity", falsified == 0, 0.0,
                 {{"samples", kSamples}, {"premise_true", premise}, {"falsified", falsified}}});
  return out;
}

std::vector<VerificationReport> eigen_suite(Rng& rng, double tol) {
  std::vector<VerificationReport> out;
  const CoinOperator flip = preset("flip");
  const CoinOperator flipneg = preset("flip-neg");

  double flip_res = 0.0;
  double flip_stat = 0.0;
  double neg_res = 0.0;
  double neg_stat = 0.0;
  constexpr int kTrials = 20;
  for (int t = 0; t < kTrials; ++t) {
    const auto k = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<EvenSitePair> pairs;
    for (int s = 0; s < k; ++s) pairs.push_back({random_quaternion(rng), random_quaternion(rng)});
    for (int sign : {1, -1}) {
      const EigenCandidate c = build_eigenstate_flip(sign, pairs, tol);
      flip_res = std::max(flip_res, right_eigen_check(flip, c, tol).max_residual);
      flip_stat = std::max(flip_stat, verify_stationary(flip, c.state, 20, tol).max_residual);
    }
    const EigenCandidate c = build_eigenstate_flipneg(random_unit_imaginary(rng), pairs, tol);
    neg_res = std::max(neg_res, right_eigen_check(flipneg, c, tol).max_residual);
    neg_stat = std::max(neg_stat, verify_stationary(flipneg, c.state, 20, tol).max_residual);
  }
  out.push_back(report("eigen/flip-residual", flip_res, tol, {{"trials", kTrials}}));
  out.push_back(report("eigen/flip-stationary", flip_stat, tol, {{"steps", 20}}));
  out.push_back(report("eigen/flip-neg-residual", neg_res, tol, {{"trials", kTrials}}));
  out.push_back(report("eigen/flip-neg-stationary", neg_stat, tol, {{"steps", 20}}));

  const EigenCandidate ones = make_eigen_candidate(WalkState::constant({1.0, 1.0}), 1.0, tol);
  const CheckResult h = right_eigen_check(preset("hadamard"), ones, tol);
  out.push_back({"eigen/hadamard-ones-rejected", !h.pass, h.max_residual, nlohmann::json::object()});

  // Same construction with lambda multiplied on the left of the odd-site
  // amplitudes; j and i do not commute, so this is not an eigenstate.
  const Quaternion lambda = Quaternion::i();
  const Quaternion alpha = Quaternion::j();
  const Quaternion beta = 1.0;
  const std::vector<Spinor> swapped{{alpha, beta}, {-(lambda * beta), lambda * alpha}};
  const EigenCandidate left = make_eigen_candidate(WalkState::periodic(swapped), Quaternion::i(), tol);
  const CheckResult lr = right_eigen_check(flipneg, left, tol);
  out.push_back({"eigen/left-multiplication-rejected", !lr.pass, lr.max_residual,
                 nlohmann::json::object()});
  return out;
}

std::vector<VerificationReport> theorem1_suite(Rng& rng, double tol) {
  std::vector<VerificationReport> out;
  constexpr int kCoins = 20;
  constexpr int kStates = 100;
  constexpr int kSteps = 10;
  double dist = 0.0;
  double k_excess = 0.0;
  double abc = 0.0;
  for (int t = 0; t < kCoins; ++t) {
    const CoinOperator coin = CoinOperator::make(random_real_unitary(rng));
    std::vector<std::vector<AbcCoefficients>> table(kSteps + 1);
    for (int n = 0; n <= kSteps; ++n) {
      for (int l = 0; l <= n; ++l) table[static_cast<std::size_t>(n)].push_back(abc_coefficients(coin, n, l, n - l, tol));
    }
    for (int s = 0; s < kStates; ++s) {
      const Spinor phi = random_unit_spinor(rng);
      const Complexification cx = complexify_initial_state(PolarInitialState::from_spinor(phi));
      k_excess = std::max(k_excess, std::abs(cx.k_value) - 1.0);
      const auto orig = distribution_series(coin, phi, kSteps);
      const auto cplx = distribution_series(coin, cx.state, kSteps);
      for (int n = 0; n <= kSteps; ++n) {
        const auto& d = orig[static_cast<std::size_t>(n)];
        dist = std::max(dist, max_diff(d, cplx[static_cast<std::size_t>(n)]));
        for (int l = 0; l <= n; ++l) {
          const auto it = d.find(n - 2 * l);
          const double p = it == d.end() ? 0.0 : it->second;
          abc = std::max(abc, std::abs(table[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)].probability(phi) - p));
        }
      }
    }
  }
  const nlohmann::json params{{"coins", kCoins}, {"states", kStates}, {"n_max", kSteps}};
  out.push_back(report("theorem1/complexified-distributions", dist, tol, params));
  out.push_back({"theorem1/k-bound", k_excess <= 1e-12, std::max(0.0, k_excess), params});
  out.push_back(report("theorem1/abc-formula", abc, tol, params));
  return out;
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

std::vector<VerificationReport> run_suite(std::string_view suite, std::uint64_t seed, double tol) {
  using Runner = std::function<std::vector<VerificationReport>(Rng&, double)>;
  const std::array<std::pair<std::string_view, Runner>, 5> runners{{
      {"unitary", unitary_suite},
      {"pqrs", pqrs_suite},
      {"stationary", stationary_suite},
      {"eigen", eigen_suite},
      {"theorem1", theorem1_suite},
  }};
  std::vector<VerificationReport> out;
  bool matched = false;
  for (std::size_t i = 0; i < runners.size(); ++i) {
    if (suite != "all" && suite != runners[i].first) continue;
    matched = true;
    Rng rng = suite_rng(seed, i);
    auto part = runners[i].second(rng, tol);
    for (auto& r : part) r.params["seed"] = seed;
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (!matched) throw Error(ErrorCode::ParseError, "unknown suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace qqw

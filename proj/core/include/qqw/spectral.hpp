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

#include <array>
#include <span>
#include <string_view>

#include "qqw/coin.hpp"
#include "qqw/walk.hpp"

namespace qqw {

/// Candidate solution of the right eigenvalue problem U^(s) Psi = Psi lambda.
struct EigenCandidate {
  WalkState state;
  Quaternion lambda;
};

/// Throws Error(NotUnit) unless ||lambda| - 1| <= tol, and
/// Error(InvalidState) unless the state is periodic.
EigenCandidate make_eigen_candidate(WalkState state, const Quaternion& lambda,
                                    double tol = kTolerance);

struct CheckResult {
  bool pass = false;
  double max_residual = 0.0;
};

/// Checks, at every site of one period,
///   Psi^L(x) lambda = a Psi^L(x+1) + b Psi^R(x+1),
///   Psi^R(x) lambda = c Psi^L(x-1) + d Psi^R(x-1),
/// with lambda multiplying on the right.
CheckResult right_eigen_check(const CoinOperator& coin, const EigenCandidate& cand,
                              double tol = kTolerance);

/// Amplitude pair (alpha_2x, beta_2x) placed on even sites.
struct EvenSitePair {
  Quaternion alpha;
  Quaternion beta;
};

/// Eigenstate of the flip coin [[0, 1], [1, 0]] for lambda = sign (+1 or -1).
/// With K pairs the result has period 2K, and for every x
///   Psi^L(2x) = alpha_2x,  Psi^R(2x) = beta_2x,
///   Psi^L(2x-1) = beta_2x lambda,  Psi^R(2x+1) = alpha_2x lambda.
/// Throws Error(ZeroCoefficient) if some alpha_2x beta_2x vanishes and
/// Error(InvalidState) for an empty list or a sign other than +-1.
EigenCandidate build_eigenstate_flip(int lambda_sign, std::span<const EvenSitePair> pairs,
                                     double tol = kTolerance);

/// Eigenstate of [[0, 1], [-1, 0]] for a unit pure-imaginary lambda:
///   Psi^L(2x-1) = -beta_2x lambda,  Psi^R(2x+1) = alpha_2x lambda.
/// Throws Error(NotImaginaryUnit) unless lambda^2 = -1 within tol.
EigenCandidate build_eigenstate_flipneg(const Quaternion& lambda,
                                        std::span<const EvenSitePair> pairs,
                                        double tol = kTolerance);

/// True iff measure_of(evolve^k(state)) equals measure_of(state) at every
/// site within tol for k = 1..n_max.
CheckResult verify_stationary(const CoinOperator& coin, const WalkState& state, int n_max,
                              double tol = kTolerance);

struct TwoStepReport {
  bool two_step_invariant = false;  ///< mu_1 = mu_2 = mu_0
  bool uniform = false;             ///< mu_0 constant
  double max_residual = 0.0;        ///< invariance residual over k = 1, 2

  /// The implication [invariant for k = 1, 2] => [uniform].
  [[nodiscard]] bool implication_holds() const { return !two_step_invariant || uniform; }
};

/// Throws Error(WrongCoinClass) unless |b| <= tol, and Error(InvalidState)
/// unless the state is periodic.
TwoStepReport check_two_step_uniformity(const CoinOperator& coin, const WalkState& state,
                                        double tol = kTolerance);

struct MeasureClass {
  enum class Tag { Uniform, ExponentialDecay, Other };

  Tag tag = Tag::Other;
  bool symmetric = false;

  double c = 0.0;  ///< Uniform level

  /// ExponentialDecay parameters: mu(x) = c_plus gamma^-|x| (x >= 1),
  /// c0 (x = 0), c_minus gamma^-|x| (x <= -1).
  double c_plus = 0.0;
  double c0 = 0.0;
  double c_minus = 0.0;
  double gamma = 0.0;
};

std::string_view to_string(MeasureClass::Tag tag) noexcept;

/// Max log-space residual accepted by the exponential fit.
inline constexpr double kExponentialFitTolerance = 1e-6;

/// Classifies mu over the sites [-window, window] (extended to cover the
/// whole finite support or at least one period). Uniform if all values agree
/// within tol; otherwise ExponentialDecay if both tails fit the two-sided
/// exponential form with a common gamma in (0, 1) (periodic measures never
/// do, and window must be >= 3). The symmetric flag is independent.
MeasureClass classify_measure(const Measure& mu, int window, double tol = kTolerance);

/// alpha = (cos ta + n_alpha sin ta) cos xi,  beta = (cos tb + n_beta sin tb) sin xi.
struct PolarInitialState {
  double theta_alpha = 0.0;
  double theta_beta = 0.0;
  double xi = 0.0;
  std::array<double, 3> n_alpha{0.0, 0.0, 1.0};
  std::array<double, 3> n_beta{0.0, 0.0, 1.0};

  [[nodiscard]] Spinor to_spinor() const;

  /// Inverse of to_spinor with theta in [0, pi]. The axis of a real
  /// component (sin theta = 0) is set to (0, 0, 1).
  static PolarInitialState from_spinor(const Spinor& phi);
};

struct Complexification {
  Spinor state;       ///< complex spinor (zero j and k parts)
  double k_value;     ///< cos ta cos tb + gamma sin ta sin tb
};

/// Complex spinor with the same position distributions as ps under every
/// real orthogonal coin: xi is kept, theta~_alpha = 0 and
/// theta~_beta = -arccos(K). Asserts |K| <= 1.
Complexification complexify_initial_state(const PolarInitialState& ps);

struct AbcCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  /// A |alpha|^2 + B |beta|^2 + C Re(alpha conj(beta)).
  [[nodiscard]] double probability(const Spinor& phi) const;
};

/// From the real matrix Xi_n(l, m) = [[r11, r12], [r21, r22]]:
///   A = r11^2 + r21^2,  B = r12^2 + r22^2,  C = 2 (r11 r12 + r21 r22).
/// Throws Error(NotRealCoin) if any coin entry has an imaginary part above tol.
AbcCoefficients abc_coefficients(const CoinOperator& coin, int n, int l, int m,
                                 double tol = kTolerance);

}  // namespace qqw

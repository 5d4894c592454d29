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
#include <map>
#include <vector>

#include "qqw/coin.hpp"
#include "qqw/quaternion.hpp"

namespace qqw {

/// Two-component amplitude at a single site: (left chirality, right chirality).
struct Spinor {
  Quaternion left;
  Quaternion right;

  friend constexpr bool operator==(const Spinor&, const Spinor&) = default;
};

inline double norm2(const Spinor& s) { return norm2(s.left) + norm2(s.right); }

/// M * (left, right) with matrix entries on the left of the amplitudes.
Spinor operator*(const QMatrix2& m, const Spinor& s);

using Site = std::int64_t;

enum class Representation { FiniteSupport, Periodic };

/// Values on the integer line, stored either as a dense window
/// [offset, offset + size) with zeros outside, or as one period of a
/// periodic configuration where site x reads values[x mod period].
template <typename T>
class LatticeField {
 public:
  LatticeField() = default;

  static LatticeField finite(Site offset, std::vector<T> values) {
    return LatticeField(Representation::FiniteSupport, offset, std::move(values));
  }
  static LatticeField periodic(std::vector<T> values) {
    return LatticeField(Representation::Periodic, 0, std::move(values));
  }

  [[nodiscard]] Representation representation() const { return rep_; }
  [[nodiscard]] bool is_periodic() const { return rep_ == Representation::Periodic; }

  /// First stored site (always 0 for periodic fields).
  [[nodiscard]] Site offset() const { return offset_; }
  /// Window length, or the period.
  [[nodiscard]] Site size() const { return static_cast<Site>(values_.size()); }
  [[nodiscard]] Site period() const { return size(); }
  [[nodiscard]] const std::vector<T>& values() const { return values_; }

  [[nodiscard]] T at(Site x) const {
    if (is_periodic()) {
      const Site p = size();
      return values_[static_cast<std::size_t>(((x % p) + p) % p)];
    }
    const Site i = x - offset_;
    if (i < 0 || i >= size()) return T{};
    return values_[static_cast<std::size_t>(i)];
  }

 private:
  LatticeField(Representation rep, Site offset, std::vector<T> values)
      : rep_(rep), offset_(offset), values_(std::move(values)) {}

  Representation rep_ = Representation::FiniteSupport;
  Site offset_ = 0;
  std::vector<T> values_;
};

/// Walk state Psi(x) = (Psi^L(x), Psi^R(x)).
///
/// Finite-support states must have at least one nonzero amplitude; periodic
/// states must have period >= 1 and a nonzero amplitude in the period.
class WalkState {
 public:
  /// Throws Error(InvalidState) on an empty or all-zero window.
  static WalkState finite(Site offset, std::vector<Spinor> amplitudes);
  /// Throws Error(InvalidState) on period 0 or an all-zero period.
  static WalkState periodic(std::vector<Spinor> amplitudes);
  /// phi at site x, zero elsewhere.
  static WalkState delta(const Spinor& phi, Site x = 0);
  /// Psi(x) = phi for every x.
  static WalkState constant(const Spinor& phi);

  [[nodiscard]] const LatticeField<Spinor>& field() const { return field_; }
  [[nodiscard]] Representation representation() const { return field_.representation(); }
  [[nodiscard]] bool is_periodic() const { return field_.is_periodic(); }
  [[nodiscard]] Site offset() const { return field_.offset(); }
  [[nodiscard]] Site size() const { return field_.size(); }
  [[nodiscard]] const std::vector<Spinor>& amplitudes() const { return field_.values(); }
  [[nodiscard]] Spinor at(Site x) const { return field_.at(x); }

  /// Sum of |Psi^L|^2 + |Psi^R|^2 over the window, or over one period.
  [[nodiscard]] double total_norm2() const;

 private:
  explicit WalkState(LatticeField<Spinor> f) : field_(std::move(f)) {}
  friend WalkState evolve_step(const WalkState&, const CoinOperator&);

  LatticeField<Spinor> field_;
};

/// Nonnegative per-site weights mu(x); never identically zero.
class Measure {
 public:
  /// Throws Error(InvalidState) on negative entries or an all-zero field.
  static Measure finite(Site offset, std::vector<double> values);
  static Measure periodic(std::vector<double> values);

  [[nodiscard]] const LatticeField<double>& field() const { return field_; }
  [[nodiscard]] bool is_periodic() const { return field_.is_periodic(); }
  [[nodiscard]] Site offset() const { return field_.offset(); }
  [[nodiscard]] Site size() const { return field_.size(); }
  [[nodiscard]] const std::vector<double>& values() const { return field_.values(); }
  [[nodiscard]] double at(Site x) const { return field_.at(x); }

 private:
  explicit Measure(LatticeField<double> f) : field_(std::move(f)) {}
  static void validate(const std::vector<double>& values);

  LatticeField<double> field_;
};

/// Largest |mu(x) - nu(x)| over the union of represented sites. For two
/// periodic measures the comparison runs over lcm-many sites, capped at the
/// product of the periods.
double max_abs_diff(const Measure& mu, const Measure& nu);

/// One step: Psi'^L(x) = a Psi^L(x+1) + b Psi^R(x+1),
///           Psi'^R(x) = c Psi^L(x-1) + d Psi^R(x-1).
/// A finite window grows by one site on each side; a period is preserved.
WalkState evolve_step(const WalkState& state, const CoinOperator& coin);

WalkState evolve(WalkState state, const CoinOperator& coin, int steps);

/// mu(x) = |Psi^L(x)|^2 + |Psi^R(x)|^2 in the same representation.
Measure measure_of(const WalkState& state);

/// Sparse position distribution x -> P(X_n = x); zero sites are omitted.
using Distribution = std::map<Site, double>;

/// Probabilities at or below this are treated as exactly zero in Distribution maps.
inline constexpr double kZeroProbability = 1e-15;

/// Tolerance on | |alpha|^2 + |beta|^2 - 1 | for initial spinors.
inline constexpr double kNormalizationTolerance = 1e-9;

/// Throws Error(NotNormalized) if phi is not a unit spinor.
void require_normalized(const Spinor& phi, double tol = kNormalizationTolerance);

/// Finite measure as a sparse map, dropping sites with value <= kZeroProbability.
Distribution to_distribution(const Measure& mu);

/// P(X_n = x) for the walk started from phi at the origin.
Distribution distribution(const CoinOperator& coin, const Spinor& phi, int n);

/// Distributions for every time 0..n (index = time).
std::vector<Distribution> distribution_series(const CoinOperator& coin, const Spinor& phi,
                                              int n);

/// Closed-form Hadamard distribution at n = 3:
///   {-3: |a+b|^2/8, -1: (4|a|^2 + |a+b|^2)/8, 1: (4|b|^2 + |a-b|^2)/8, 3: |a-b|^2/8}.
Distribution hadamard_n3_closed_form(const Spinor& phi);

}  // namespace qqw

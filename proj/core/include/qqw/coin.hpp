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
#include <optional>
#include <string_view>

#include "qqw/quaternion.hpp"

namespace qqw {

/// 2x2 matrix with quaternion entries, row-major [[e11, e12], [e21, e22]].
struct QMatrix2 {
  Quaternion e11, e12, e21, e22;

  static constexpr QMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr QMatrix2 zero() { return {}; }

  friend constexpr bool operator==(const QMatrix2&, const QMatrix2&) = default;
};

QMatrix2 operator+(const QMatrix2& m, const QMatrix2& n);
QMatrix2 operator-(const QMatrix2& m, const QMatrix2& n);

/// (mn)_st = sum_u m_su * n_ut, entry order preserved.
QMatrix2 operator*(const QMatrix2& m, const QMatrix2& n);

/// Left scalar multiple: every entry becomes s * entry.
QMatrix2 operator*(const Quaternion& s, const QMatrix2& m);

/// Conjugate transpose.
QMatrix2 adjoint(const QMatrix2& m);

double max_abs_diff(const QMatrix2& m, const QMatrix2& n);

/// True iff both m m* and m* m are within tol of I (max over entry components).
bool is_unitary(const QMatrix2& m, double tol = kTolerance);

/// Basis letters of the closed product algebra spanned by a coin.
enum class Basis { P, Q, R, S };

char to_char(Basis b) noexcept;

/// coefficient * basis, coefficient acting on the left.
struct BasisTerm {
  Quaternion coefficient;
  Basis basis = Basis::P;
};

/// High-level shape of a coin: a = 0, b = 0, or all four entries nonzero.
enum class CoinClass { AZero, BZero, Generic };

/// A validated unitary coin U = [[a, b], [c, d]] together with the split
/// U = P + Q and the companion matrices R, S:
///
///   P = [[a, b], [0, 0]]   Q = [[0, 0], [c, d]]
///   R = [[c, d], [0, 0]]   S = [[0, 0], [a, b]]
///
/// Products of any two of P, Q, R, S are again one of them times a single
/// coin entry on the left; see product().
class CoinOperator {
 public:
  /// Throws Error(NotUnitary) unless is_unitary(m, tol).
  static CoinOperator make(const QMatrix2& m, double tol = kTolerance);

  [[nodiscard]] const QMatrix2& matrix() const { return u_; }
  [[nodiscard]] const Quaternion& a() const { return u_.e11; }
  [[nodiscard]] const Quaternion& b() const { return u_.e12; }
  [[nodiscard]] const Quaternion& c() const { return u_.e21; }
  [[nodiscard]] const Quaternion& d() const { return u_.e22; }

  [[nodiscard]] const QMatrix2& p() const { return p_; }
  [[nodiscard]] const QMatrix2& q() const { return q_; }
  [[nodiscard]] const QMatrix2& r() const { return r_; }
  [[nodiscard]] const QMatrix2& s() const { return s_; }
  [[nodiscard]] const QMatrix2& basis(Basis b) const;

  /// Symbolic product lhs * rhs read off the multiplication table.
  [[nodiscard]] BasisTerm product(Basis lhs, Basis rhs) const;

  [[nodiscard]] CoinClass classify(double tol = kTolerance) const;

 private:
  explicit CoinOperator(const QMatrix2& m);

  QMatrix2 u_, p_, q_, r_, s_;
};

struct ProductTableEntry {
  Basis lhs = Basis::P;
  Basis rhs = Basis::P;
  BasisTerm term;
  double residual = 0.0;  ///< max deviation of term from the direct product
};

/// The 16 products X*Y for X, Y in {P, Q, R, S}, row-major in (lhs, rhs).
/// Every entry is checked against the direct matrix product; throws
/// Error(TableMismatch) if any entry deviates by more than tol.
std::array<ProductTableEntry, 16> product_table(const CoinOperator& coin,
                                                double tol = kTolerance);

/// Named coins: "hadamard", "example-ijk", "flip", "flip-neg".
std::optional<QMatrix2> coin_preset(std::string_view name);

}  // namespace qqw

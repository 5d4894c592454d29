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

#include <cmath>
#include <iosfwd>

namespace qqw {

/// Library-wide absolute comparison tolerance (per component).
inline constexpr double kTolerance = 1e-10;

/// Real quaternion x0 + x1 i + x2 j + x3 k in double precision.
///
/// The product is the Hamilton product, so a * b and b * a differ in general.
/// i*i = j*j = k*k = -1, ij = -ji = k, jk = -kj = i, ki = -ik = j.
struct Quaternion {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double re) : x0(re) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double a, double b, double c, double d)
      : x0(a), x1(b), x2(c), x3(d) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  [[nodiscard]] constexpr double re() const { return x0; }
  [[nodiscard]] constexpr Quaternion im() const { return {0.0, x1, x2, x3}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    x0 += o.x0;
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    x0 -= o.x0;
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.x0, -a.x1, -a.x2, -a.x3}; }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
          a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
          a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}

// Real scalars commute with everything, so these are unambiguous.
constexpr Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.x0, s * q.x1, s * q.x2, s * q.x3};
}
constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }
constexpr Quaternion operator/(const Quaternion& q, double s) {
  return {q.x0 / s, q.x1 / s, q.x2 / s, q.x3 / s};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.x0, -q.x1, -q.x2, -q.x3}; }

constexpr double norm2(const Quaternion& q) {
  return q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm2(q)); }

/// x*x via the closed form x0^2 - |Im x|^2 + 2 x0 Im x.
constexpr Quaternion square(const Quaternion& q) {
  return {q.x0 * q.x0 - q.x1 * q.x1 - q.x2 * q.x2 - q.x3 * q.x3, 2.0 * q.x0 * q.x1,
          2.0 * q.x0 * q.x2, 2.0 * q.x0 * q.x3};
}

/// Inverse of a unit quaternion. Throws Error(NotUnit) if ||x| - 1| > tol.
Quaternion inv_unit(const Quaternion& q, double tol = kTolerance);

/// Largest absolute component of a - b.
double max_abs_diff(const Quaternion& a, const Quaternion& b);

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = kTolerance) {
  return max_abs_diff(a, b) <= tol;
}

inline bool is_zero(const Quaternion& q, double tol = kTolerance) {
  return approx_equal(q, Quaternion{}, tol);
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qqw

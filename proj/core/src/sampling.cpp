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
#include "qqw/sampling.hpp"

#include <cmath>
#include <numbers>

namespace qqw {

namespace {

double gauss(Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  return nd(rng);
}

// Orthonormal rows via Gram-Schmidt; <u, v> = u1 v1* + u2 v2*.
QMatrix2 orthonormal_rows(Spinor v1, Spinor v2) {
  const double n1 = std::sqrt(norm2(v1));
  const Spinor u1{v1.left / n1, v1.right / n1};
  const Quaternion t = v2.left * conj(u1.left) + v2.right * conj(u1.right);
  Spinor w{v2.left - t * u1.left, v2.right - t * u1.right};
  const double n2 = std::sqrt(norm2(w));
  w = {w.left / n2, w.right / n2};
  return {u1.left, u1.right, w.left, w.right};
}

Quaternion random_complex(Rng& rng) {
  const double re = gauss(rng);
  return {re, gauss(rng), 0.0, 0.0};
}

}  // namespace

Quaternion random_quaternion(Rng& rng) {
  const double a = gauss(rng);
  const double b = gauss(rng);
  const double c = gauss(rng);
  return {a, b, c, gauss(rng)};
}

Quaternion random_unit_quaternion(Rng& rng) {
  const Quaternion q = random_quaternion(rng);
  return q / norm(q);
}

Quaternion random_unit_imaginary(Rng& rng) {
  const double a = gauss(rng);
  const double b = gauss(rng);
  const Quaternion q{0.0, a, b, gauss(rng)};
  return q / norm(q);
}

Spinor random_unit_spinor(Rng& rng) {
  const Quaternion l = random_quaternion(rng);
  const Quaternion r = random_quaternion(rng);
  const double n = std::sqrt(norm2(l) + norm2(r));
  return {l / n, r / n};
}

QMatrix2 random_unitary(Rng& rng) {
  const Quaternion a = random_quaternion(rng);
  const Quaternion b = random_quaternion(rng);
  const Quaternion c = random_quaternion(rng);
  const Quaternion d = random_quaternion(rng);
  return orthonormal_rows({a, b}, {c, d});
}

QMatrix2 random_complex_unitary(Rng& rng) {
  const Quaternion a = random_complex(rng);
  const Quaternion b = random_complex(rng);
  const Quaternion c = random_complex(rng);
  const Quaternion d = random_complex(rng);
  return orthonormal_rows({a, b}, {c, d});
}

QMatrix2 random_real_unitary(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double t = angle(rng);
  const bool reflection = std::bernoulli_distribution(0.5)(rng);
  const double c = std::cos(t);
  const double s = std::sin(t);
  if (reflection) return {c, s, s, -c};
  return {c, -s, s, c};
}

}  // namespace qqw

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

#include <random>

#include "qqw/coin.hpp"
#include "qqw/walk.hpp"

namespace qqw {

using Rng = std::mt19937_64;

/// Independent standard-normal components.
Quaternion random_quaternion(Rng& rng);
Quaternion random_unit_quaternion(Rng& rng);
/// Uniform on the sphere of unit pure-imaginary quaternions.
Quaternion random_unit_imaginary(Rng& rng);
/// Uniform on the unit sphere of H^2.
Spinor random_unit_spinor(Rng& rng);

/// Gram-Schmidt on two Gaussian rows of H^2 with <u, v> = u1 v1* + u2 v2*
/// and projection coefficients applied on the left.
QMatrix2 random_unitary(Rng& rng);
/// Same construction restricted to complex entries (zero j and k parts).
QMatrix2 random_complex_unitary(Rng& rng);
/// Uniform rotation or reflection in O(2).
QMatrix2 random_real_unitary(Rng& rng);

}  // namespace qqw

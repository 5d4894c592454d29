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
#include "qqw/quaternion.hpp"

#include <algorithm>
#include <ostream>

#include "qqw/error.hpp"
#include "qqw/io.hpp"

namespace qqw {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::TableMismatch: return "TableMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::InvalidSplit: return "InvalidSplit";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::NotImaginaryUnit: return "NotImaginaryUnit";
    case ErrorCode::WrongCoinClass: return "WrongCoinClass";
    case ErrorCode::NotRealCoin: return "NotRealCoin";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Quaternion inv_unit(const Quaternion& q, double tol) {
  const double n = norm(q);
  if (std::abs(n - 1.0) > tol) {
    throw Error(ErrorCode::NotUnit, "modulus " + format_real(n) + " is not 1");
  }
  return conj(q);
}

double max_abs_diff(const Quaternion& a, const Quaternion& b) {
  return std::max({std::abs(a.x0 - b.x0), std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2),
                   std::abs(a.x3 - b.x3)});
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << format_quaternion(q);
}

}  // namespace qqw

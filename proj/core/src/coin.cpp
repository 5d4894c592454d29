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
#include "qqw/coin.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qqw/error.hpp"
#include "qqw/io.hpp"

namespace qqw {

QMatrix2 operator+(const QMatrix2& m, const QMatrix2& n) {
  return {m.e11 + n.e11, m.e12 + n.e12, m.e21 + n.e21, m.e22 + n.e22};
}

QMatrix2 operator-(const QMatrix2& m, const QMatrix2& n) {
  return {m.e11 - n.e11, m.e12 - n.e12, m.e21 - n.e21, m.e22 - n.e22};
}

QMatrix2 operator*(const QMatrix2& m, const QMatrix2& n) {
  return {m.e11 * n.e11 + m.e12 * n.e21, m.e11 * n.e12 + m.e12 * n.e22,
          m.e21 * n.e11 + m.e22 * n.e21, m.e21 * n.e12 + m.e22 * n.e22};
}

QMatrix2 operator*(const Quaternion& s, const QMatrix2& m) {
  return {s * m.e11, s * m.e12, s * m.e21, s * m.e22};
}

QMatrix2 adjoint(const QMatrix2& m) {
  return {conj(m.e11), conj(m.e21), conj(m.e12), conj(m.e22)};
}

double max_abs_diff(const QMatrix2& m, const QMatrix2& n) {
  return std::max({max_abs_diff(m.e11, n.e11), max_abs_diff(m.e12, n.e12),
                   max_abs_diff(m.e21, n.e21), max_abs_diff(m.e22, n.e22)});
}

bool is_unitary(const QMatrix2& m, double tol) {
  const QMatrix2 id = QMatrix2::identity();
  const QMatrix2 adj = adjoint(m);
  return max_abs_diff(m * adj, id) <= tol && max_abs_diff(adj * m, id) <= tol;
}

char to_char(Basis b) noexcept {
  switch (b) {
    case Basis::P: return 'P';
    case Basis::Q: return 'Q';
    case Basis::R: return 'R';
    case Basis::S: return 'S';
  }
  return '?';
}

CoinOperator::CoinOperator(const QMatrix2& m)
    : u_(m),
      p_{m.e11, m.e12, 0.0, 0.0},
      q_{0.0, 0.0, m.e21, m.e22},
      r_{m.e21, m.e22, 0.0, 0.0},
      s_{0.0, 0.0, m.e11, m.e12} {}

CoinOperator CoinOperator::make(const QMatrix2& m, double tol) {
  if (!is_unitary(m, tol)) {
    const QMatrix2 id = QMatrix2::identity();
    const double dev = std::max(max_abs_diff(m * adjoint(m), id), max_abs_diff(adjoint(m) * m, id));
    throw Error(ErrorCode::NotUnitary, "max deviation from identity " + format_real(dev));
  }
  return CoinOperator(m);
}

const QMatrix2& CoinOperator::basis(Basis b) const {
  switch (b) {
    case Basis::P: return p_;
    case Basis::Q: return q_;
    case Basis::R: return r_;
    case Basis::S: return s_;
  }
  return p_;
}

// The top row of P and S's bottom row are (a, b); Q's bottom row and R's top
// row are (c, d). X * Y keeps X's row placement, picks up the entry of that
// row that meets Y's nonzero row, and carries Y's row content.
BasisTerm CoinOperator::product(Basis lhs, Basis rhs) const {
  const bool lhs_top = lhs == Basis::P || lhs == Basis::R;
  const bool lhs_ab = lhs == Basis::P || lhs == Basis::S;
  const bool rhs_top = rhs == Basis::P || rhs == Basis::R;
  const bool rhs_ab = rhs == Basis::P || rhs == Basis::S;

  // Entry of the lhs row in the column where rhs has its nonzero row.
  const Quaternion& coef = lhs_ab ? (rhs_top ? a() : b()) : (rhs_top ? c() : d());

  Basis out;
  if (lhs_top) {
    out = rhs_ab ? Basis::P : Basis::R;
  } else {
    out = rhs_ab ? Basis::S : Basis::Q;
  }
  return {coef, out};
}

CoinClass CoinOperator::classify(double tol) const {
  if (norm(a()) <= tol) return CoinClass::AZero;
  if (norm(b()) <= tol) return CoinClass::BZero;
  return CoinClass::Generic;
}

std::array<ProductTableEntry, 16> product_table(const CoinOperator& coin, double tol) {
  constexpr std::array<Basis, 4> kBases{Basis::P, Basis::Q, Basis::R, Basis::S};
  std::array<ProductTableEntry, 16> table;
  std::size_t idx = 0;
  for (Basis x : kBases) {
    for (Basis y : kBases) {
      const BasisTerm term = coin.product(x, y);
      const QMatrix2 direct = coin.basis(x) * coin.basis(y);
      const double residual = max_abs_diff(direct, term.coefficient * coin.basis(term.basis));
      if (!(residual <= tol)) {
        throw Error(ErrorCode::TableMismatch, std::string(1, to_char(x)) + to_char(y) +
                                                  " deviates by " + format_real(residual));
      }
      table[idx++] = {x, y, term, residual};
    }
  }
  return table;
}

std::optional<QMatrix2> coin_preset(std::string_view name) {
  const double h = 1.0 / std::sqrt(2.0);
  if (name == "hadamard") return QMatrix2{h, h, h, -h};
  if (name == "example-ijk") {
    return QMatrix2{h, h * Quaternion::i(), h * Quaternion::j(), h * Quaternion::k()};
  }
  if (name == "flip") return QMatrix2{0.0, 1.0, 1.0, 0.0};
  if (name == "flip-neg") return QMatrix2{0.0, 1.0, -1.0, 0.0};
  return std::nullopt;
}

}  // namespace qqw

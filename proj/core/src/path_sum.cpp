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
#include "qqw/path_sum.hpp"

#include <array>
#include <bit>

#include "qqw/error.hpp"
#include "qqw/io.hpp"

namespace qqw {

void PQWord::push(Letter letter, int length) {
  if (length < 1) throw Error(ErrorCode::ParseError, "block length must be >= 1");
  if (!blocks_.empty() && blocks_.back().letter == letter) {
    blocks_.back().length += length;
  } else {
    blocks_.push_back({letter, length});
  }
  size_ += length;
}

PQWord PQWord::from_letters(std::span<const Letter> letters) {
  PQWord w;
  for (Letter l : letters) w.push(l, 1);
  return w;
}

PQWord PQWord::parse(std::string_view letters) {
  PQWord w;
  for (char ch : letters) {
    if (ch == 'P') {
      w.push(Letter::P, 1);
    } else if (ch == 'Q') {
      w.push(Letter::Q, 1);
    } else {
      throw Error(ErrorCode::ParseError, std::string("unexpected letter '") + ch + "'");
    }
  }
  return w;
}

PQWord PQWord::from_mask(std::uint32_t mask, int n) {
  PQWord w;
  for (int j = n - 1; j >= 0; --j) w.push(((mask >> j) & 1U) ? Letter::P : Letter::Q, 1);
  return w;
}

PQWord PQWord::from_blocks(std::span<const Block> blocks) {
  PQWord w;
  for (const Block& b : blocks) w.push(b.letter, b.length);
  return w;
}

int PQWord::count(Letter letter) const {
  int n = 0;
  for (const Block& b : blocks_) {
    if (b.letter == letter) n += b.length;
  }
  return n;
}

std::vector<Letter> PQWord::letters() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (const Block& b : blocks_) out.insert(out.end(), static_cast<std::size_t>(b.length), b.letter);
  return out;
}

std::string PQWord::to_string() const {
  std::string out;
  for (const Block& b : blocks_) {
    out.append(static_cast<std::size_t>(b.length), b.letter == Letter::P ? 'P' : 'Q');
  }
  return out;
}

namespace {

Basis as_basis(Letter l) { return l == Letter::P ? Basis::P : Basis::Q; }

const QMatrix2& letter_matrix(const CoinOperator& coin, Letter l) {
  return l == Letter::P ? coin.p() : coin.q();
}

void check_split(int n, int l, int m, int cap) {
  if (n < 0 || l < 0 || m < 0 || l + m != n) {
    throw Error(ErrorCode::InvalidSplit, "need l + m = n with l, m >= 0 (n=" +
                                             std::to_string(n) + ", l=" + std::to_string(l) +
                                             ", m=" + std::to_string(m) + ")");
  }
  if (n > cap || n > 31) {
    throw Error(ErrorCode::CapExceeded,
                "n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

// Visits every n-bit mask with exactly l bits set, in ascending order.
template <typename F>
void for_each_mask(int n, int l, F&& f) {
  if (l == 0) {
    f(std::uint32_t{0});
    return;
  }
  const std::uint32_t limit = n == 32 ? 0U : (std::uint32_t{1} << n);
  std::uint32_t mask = (std::uint32_t{1} << l) - 1U;
  while (mask < limit) {
    f(mask);
    // Gosper's hack: next larger integer with the same popcount.
    const std::uint32_t low = mask & (~mask + 1U);
    const std::uint32_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

}  // namespace

QMatrix2 word_matrix(const CoinOperator& coin, const PQWord& word) {
  QMatrix2 acc = QMatrix2::identity();
  for (const PQWord::Block& b : word.blocks()) {
    const QMatrix2& m = letter_matrix(coin, b.letter);
    for (int t = 0; t < b.length; ++t) acc = acc * m;
  }
  return acc;
}

BasisTerm reduce_word(const CoinOperator& coin, const PQWord& word) {
  if (word.empty()) throw Error(ErrorCode::ParseError, "cannot reduce the empty word");
  BasisTerm acc{1.0, as_basis(word.blocks().front().letter)};
  bool first = true;
  for (const PQWord::Block& b : word.blocks()) {
    const Basis y = as_basis(b.letter);
    for (int t = first ? 1 : 0; t < b.length; ++t) {
      const BasisTerm step = coin.product(acc.basis, y);
      acc.coefficient = acc.coefficient * step.coefficient;
      acc.basis = step.basis;
    }
    first = false;
  }
  return acc;
}

QMatrix2 xi_bruteforce(const CoinOperator& coin, int n, int l, int m, int cap) {
  check_split(n, l, m, cap);
  if (n == 0) return QMatrix2::identity();
  QMatrix2 sum = QMatrix2::zero();
  for_each_mask(n, l, [&](std::uint32_t mask) {
    QMatrix2 acc = QMatrix2::identity();
    for (int j = n - 1; j >= 0; --j) acc = acc * (((mask >> j) & 1U) ? coin.p() : coin.q());
    sum = sum + acc;
  });
  return sum;
}

QMatrix2 xi_reduced(const CoinOperator& coin, int n, int l, int m, int cap) {
  check_split(n, l, m, cap);
  if (n == 0) return QMatrix2::identity();
  std::array<Quaternion, 4> coef{};  // indexed by Basis
  for_each_mask(n, l, [&](std::uint32_t mask) {
    const bool lead_p = (mask >> (n - 1)) & 1U;
    Quaternion c = 1.0;
    Basis basis = lead_p ? Basis::P : Basis::Q;
    for (int j = n - 2; j >= 0; --j) {
      const BasisTerm step = coin.product(basis, ((mask >> j) & 1U) ? Basis::P : Basis::Q);
      c = c * step.coefficient;
      basis = step.basis;
    }
    coef[static_cast<std::size_t>(basis)] += c;
  });
  return coef[0] * coin.p() + coef[1] * coin.q() + coef[2] * coin.r() + coef[3] * coin.s();
}

QMatrix2 reconstruct(const CoinOperator& coin, const PQRSDecomposition& dec) {
  return dec.p * coin.p() + dec.q * coin.q() + dec.r * coin.r() + dec.s * coin.s();
}

PQRSDecomposition decompose_pqrs(const CoinOperator& coin, const QMatrix2& xi, double tol) {
  const Quaternion ac = conj(coin.a());
  const Quaternion bc = conj(coin.b());
  const Quaternion cc = conj(coin.c());
  const Quaternion dc = conj(coin.d());
  PQRSDecomposition dec{
      .p = xi.e11 * ac + xi.e12 * bc,
      .q = xi.e21 * cc + xi.e22 * dc,
      .r = xi.e11 * cc + xi.e12 * dc,
      .s = xi.e21 * ac + xi.e22 * bc,
  };
  const double residual = max_abs_diff(reconstruct(coin, dec), xi);
  if (!(residual <= tol)) {
    throw Error(ErrorCode::NotInSpan, "reconstruction residual " + format_real(residual));
  }
  return dec;
}

}  // namespace qqw

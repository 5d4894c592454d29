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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qqw/coin.hpp"

namespace qqw {

enum class Letter { P, Q };

/// Word over {P, Q}, read left to right as a matrix product, stored
/// run-length encoded. Adjacent blocks always carry different letters.
class PQWord {
 public:
  struct Block {
    Letter letter = Letter::P;
    int length = 0;

    friend bool operator==(const Block&, const Block&) = default;
  };

  PQWord() = default;

  static PQWord from_letters(std::span<const Letter> letters);
  /// Parses "PPQP"-style strings. Throws Error(ParseError) on other characters.
  static PQWord parse(std::string_view letters);
  /// Word of length n whose j-th letter (from the left) is P iff bit (n-1-j) is set.
  static PQWord from_mask(std::uint32_t mask, int n);
  /// Appends blocks, merging equal neighbours. Throws Error(ParseError) on length < 1.
  static PQWord from_blocks(std::span<const Block> blocks);

  [[nodiscard]] const std::vector<Block>& blocks() const { return blocks_; }
  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] bool empty() const { return size_ == 0; }
  [[nodiscard]] int count(Letter letter) const;
  [[nodiscard]] std::vector<Letter> letters() const;
  [[nodiscard]] std::string to_string() const;

 private:
  void push(Letter letter, int length);

  std::vector<Block> blocks_;
  int size_ = 0;
};

/// Brute-force enumeration is bounded by 2^n words.
inline constexpr int kDefaultWordCap = 20;

/// Direct product of the word's P and Q matrices.
QMatrix2 word_matrix(const CoinOperator& coin, const PQWord& word);

/// Reduces a nonempty word to coefficient * basis by folding the product
/// table left to right. PQ = bR, P^k = a^(k-1) P, and so on.
BasisTerm reduce_word(const CoinOperator& coin, const PQWord& word);

/// Xi_n(l, m): sum of all n-letter words with l P's and m Q's, each word
/// multiplied out as 2x2 matrices. Words are visited in ascending mask order.
/// Throws Error(InvalidSplit) unless l + m = n with l, m >= 0, and
/// Error(CapExceeded) if n > cap.
QMatrix2 xi_bruteforce(const CoinOperator& coin, int n, int l, int m,
                       int cap = kDefaultWordCap);

/// Same sum as xi_bruteforce, but each word is reduced to a single
/// quaternion coefficient first and accumulated per basis letter.
QMatrix2 xi_reduced(const CoinOperator& coin, int n, int l, int m, int cap = kDefaultWordCap);

/// Left coefficients of xi = p P + q Q + r R + s S.
struct PQRSDecomposition {
  Quaternion p, q, r, s;
};

/// Row projection onto the coin rows u1 = (a, b), u2 = (c, d):
///   p = xi11 a* + xi12 b*,  r = xi11 c* + xi12 d*,
///   s = xi21 a* + xi22 b*,  q = xi21 c* + xi22 d*.
/// Throws Error(NotInSpan) if the reconstruction residual exceeds tol.
PQRSDecomposition decompose_pqrs(const CoinOperator& coin, const QMatrix2& xi,
                                 double tol = kTolerance);

QMatrix2 reconstruct(const CoinOperator& coin, const PQRSDecomposition& dec);

}  // namespace qqw

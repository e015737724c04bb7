// Copyright 2026 The qplee Authors
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
#include <utility>
#include <vector>

#include "qplee/error.hpp"

namespace qplee {

using GroupElem = std::uint32_t;

/**
 * The elementary abelian group Z_p^dim with base-p indices: digit i of an
 * index is coordinate i. Both F_{q^2} (index x + q y) and F_q x F_q are this
 * group with dim = 2k, so sumsets, syndromes and characters work on indices
 * directly.
 */
class VectorGroup {
 public:
  VectorGroup(std::uint32_t p, std::uint32_t dim) : p_(p), dim_(dim), place_(dim + 1, 1) {
    for (std::uint32_t i = 0; i < dim; ++i) place_[i + 1] = place_[i] * p;
  }

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t dim() const noexcept { return dim_; }
  std::uint32_t size() const noexcept { return place_[dim_]; }

  std::uint32_t digit(GroupElem a, std::uint32_t i) const noexcept { return (a / place_[i]) % p_; }

  std::vector<std::uint32_t> digits(GroupElem a) const {
    std::vector<std::uint32_t> d(dim_);
    for (auto& di : d) {
      di = a % p_;
      a /= p_;
    }
    return d;
  }

  GroupElem from_digits(std::span<const std::uint32_t> d) const {
    GroupElem a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i] % p_;
    return a;
  }

  GroupElem add(GroupElem a, GroupElem b) const noexcept {
    GroupElem r = 0;
    for (std::uint32_t i = 0; i < dim_; ++i) {
      std::uint32_t d = a % p_ + b % p_;
      if (d >= p_) d -= p_;
      r += d * place_[i];
      a /= p_;
      b /= p_;
    }
    return r;
  }

  GroupElem neg(GroupElem a) const noexcept {
    GroupElem r = 0;
    for (std::uint32_t i = 0; i < dim_; ++i) {
      const std::uint32_t d = a % p_;
      if (d) r += (p_ - d) * place_[i];
      a /= p_;
    }
    return r;
  }

  GroupElem sub(GroupElem a, GroupElem b) const noexcept { return add(a, neg(b)); }

  /// c * a for an integer scalar c.
  GroupElem scale(std::int64_t c, GroupElem a) const noexcept {
    const auto pp = static_cast<std::int64_t>(p_);
    const auto cc = static_cast<std::uint64_t>(((c % pp) + pp) % pp);
    GroupElem r = 0;
    for (std::uint32_t i = 0; i < dim_; ++i) {
      r += static_cast<GroupElem>((cc * (a % p_)) % p_) * place_[i];
      a /= p_;
    }
    return r;
  }

 private:
  std::uint32_t p_;
  std::uint32_t dim_;
  std::vector<std::uint32_t> place_;
};

/// Rank over F_p of a matrix given as rows of residues.
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    // Inverse of the pivot by Fermat.
    std::uint64_t inv = 1, base = rows[rank][c] % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
    }
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(v * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      const std::uint64_t f = rows[r][c] % p;
      for (std::size_t j = 0; j < cols; ++j)
        rows[r][j] = static_cast<std::uint32_t>((rows[r][j] + (p - f) * rows[rank][j]) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace qplee

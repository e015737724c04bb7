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

/**
 * @file subset_sums.hpp
 * @brief Dense sumsets over Z_p^m, the cumulative layers C_t = ∪_{i<=t} H^(i),
 *        Lee ball sizes, and the perfect / 2-quasi-perfect classification.
 */

#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qplee/quadratic_subsets.hpp"

namespace qplee {

using DenseSet = boost::dynamic_bitset<std::uint64_t>;

inline DenseSet dense_set(std::span<const GroupElem> elems, std::uint32_t universe) {
  DenseSet s(universe);
  for (auto e : elems) s.set(e);
  return s;
}

inline std::vector<GroupElem> elements(const DenseSet& s) {
  std::vector<GroupElem> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != DenseSet::npos; i = s.find_next(i)) out.push_back(static_cast<GroupElem>(i));
  return out;
}

/// A + B in the group.
inline DenseSet sumset(const DenseSet& a, const DenseSet& b, const VectorGroup& g) {
  detail::require(a.size() == g.size() && b.size() == g.size(), Errc::InvalidArgument,
                  "sumset operands must span the ambient group");
  DenseSet out(g.size());
  const auto bs = elements(b);
  for (auto x = a.find_first(); x != DenseSet::npos; x = a.find_next(x))
    for (auto y : bs) out.set(g.add(static_cast<GroupElem>(x), y));
  return out;
}

/// The pure t-fold sumset H^(t), with H^(0) = {0}.
inline DenseSet sumset_power(const GeneratorSet& h, std::uint32_t t) {
  const auto g = h.group();
  DenseSet acc(g.size());
  acc.set(0);
  const auto hs = dense_set(h.members, g.size());
  for (std::uint32_t i = 0; i < t; ++i) acc = sumset(acc, hs, g);
  return acc;
}

/// #B^n_r from the closed forms, r <= 3. Valid as a Z_p^n count when
/// p >= 2r + 1.
inline std::uint64_t lee_ball_size(std::uint64_t n, std::uint32_t r) {
  switch (r) {
    case 0: return 1;
    case 1: return 2 * n + 1;
    case 2: return 2 * n * n + 2 * n + 1;
    case 3: return (1 + 2 * n) * (3 + 2 * n + 2 * n * n) / 3;
    default: raise(Errc::UnsupportedRadius, "closed-form Lee ball sizes exist for r <= 3 only");
  }
}

/// Exact number of words of Lee weight <= r in Z_p^n, saturating at
/// UINT64_MAX. Coefficient sum of (1 + 2x + ... + 2x^{(p-1)/2})^n up to x^r.
inline std::uint64_t lee_ball_size_mod(std::uint64_t n, std::uint32_t r, std::uint32_t p) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  const auto sat_mul = [](std::uint64_t a, std::uint64_t b) { return (b != 0 && a > kMax / b) ? kMax : a * b; };
  const std::uint32_t half = (p - 1) / 2;
  std::vector<std::uint64_t> poly(r + 1, 0);
  poly[0] = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next(r + 1, 0);
    for (std::uint32_t w = 0; w <= r; ++w) {
      if (poly[w] == 0) continue;
      next[w] = sat_add(next[w], poly[w]);
      for (std::uint32_t s = 1; s <= half && w + s <= r; ++s) next[w + s] = sat_add(next[w + s], sat_mul(2, poly[w]));
    }
    poly = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto c : poly) total = sat_add(total, c);
  return total;
}

/**
 * Cumulative layers C_0 = {0}, C_{t+1} = C_t + (H ∪ {0}).
 *
 * critical_index: greatest t with #C_t equal to the Z_p^n Lee ball size.
 * limit_index: least r with C_r the whole group. When `covered` is false the
 * reported limit index is the last computed level, a lower bound; `stalled`
 * means the layers stopped growing, i.e. H does not generate.
 */
struct SumsetLayers {
  Family family = Family::plus;
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  std::uint32_t group_size = 0;
  std::vector<DenseSet> layers;
  std::vector<std::uint64_t> sizes;
  std::uint32_t critical_index = 0;
  bool critical_is_lower_bound = false;
  std::uint32_t limit_index = 0;
  bool covered = false;
  bool stalled = false;

  void require_covered() const {
    detail::require(!stalled, Errc::CoverageFailure, "generator set does not generate the group");
    detail::require(covered, Errc::CapTooSmall,
                    "layer cap " + std::to_string(layers.size() - 1) + " reached before coverage");
  }
};

inline constexpr std::uint32_t kDefaultLayerCap = 8;

inline SumsetLayers layered_sums(const GeneratorSet& h, std::uint32_t cap = kDefaultLayerCap) {
  const auto g = h.group();
  SumsetLayers out;
  out.family = h.family;
  out.p = h.field.p();
  out.k = h.field.k();
  out.n = h.n();
  out.group_size = g.size();

  DenseSet current(g.size());
  current.set(0);
  out.layers.push_back(current);
  out.sizes.push_back(1);
  while (out.sizes.back() < g.size() && out.layers.size() <= cap) {
    DenseSet next = current;
    for (auto x = current.find_first(); x != DenseSet::npos; x = current.find_next(x))
      for (auto m : h.members) next.set(g.add(static_cast<GroupElem>(x), m));
    if (next == current) {
      out.stalled = true;
      break;
    }
    current = std::move(next);
    out.sizes.push_back(current.count());
    out.layers.push_back(current);
  }
  out.covered = out.sizes.back() == g.size();
  out.limit_index = static_cast<std::uint32_t>(out.sizes.size() - 1);

  std::uint32_t t = 0;
  while (t + 1 < out.sizes.size() && out.sizes[t + 1] == lee_ball_size_mod(out.n, t + 1, out.p)) ++t;
  out.critical_index = t;
  // Past coverage the ball only grows; otherwise equality at the last level
  // leaves the index open.
  out.critical_is_lower_bound = !out.covered && t + 1 == out.sizes.size();
  return out;
}

enum class Verdict { Perfect2, QuasiPerfect2, Neither };

constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Perfect2: return "Perfect2";
    case Verdict::QuasiPerfect2: return "QuasiPerfect2";
    case Verdict::Neither: return "Neither";
  }
  return "Neither";
}

struct Classification {
  Verdict verdict = Verdict::Neither;
  bool sandwich = false;        // 2n^2+2n+1 < #Γ < (1+2n)(3+2n+2n^2)/3
  bool perfect_size = false;    // #Γ = 2n^2+2n+1
  bool c2_is_ball = false;      // #C_2 = 2n^2+2n+1
  bool c2_covers = false;
  bool c3_covers = false;
  std::string details;
};

inline Classification classify(const GeneratorSet& h) {
  detail::require(h.field.p() >= 5, Errc::SmallPrime, "classification needs p >= 5");
  const auto layers = layered_sums(h, 3);
  const std::uint64_t group = layers.group_size;
  const std::uint64_t b2 = lee_ball_size(h.n(), 2), b3 = lee_ball_size(h.n(), 3);
  const auto size_at = [&](std::size_t t) { return t < layers.sizes.size() ? layers.sizes[t] : group; };

  Classification c;
  c.sandwich = b2 < group && group < b3;
  c.perfect_size = group == b2;
  c.c2_is_ball = size_at(2) == b2;
  c.c2_covers = size_at(2) == group;
  c.c3_covers = size_at(3) == group;
  if (c.perfect_size && c.c2_covers) {
    c.verdict = Verdict::Perfect2;
    c.details = "#Γ = #B_2 and C_2 = Γ";
  } else if (c.sandwich && c.c2_is_ball && c.c3_covers) {
    c.verdict = Verdict::QuasiPerfect2;
    c.details = "#B_2 < #Γ < #B_3, #C_2 = #B_2, C_3 = Γ";
  } else {
    c.verdict = Verdict::Neither;
    if (c.perfect_size)
      c.details = "#Γ = #B_2 but C_2 != Γ (#C_2 = " + std::to_string(size_at(2)) + ")";
    else if (!c.sandwich)
      c.details = "#Γ outside (#B_2, #B_3)";
    else if (!c.c2_is_ball)
      c.details = "#C_2 = " + std::to_string(size_at(2)) + " != #B_2 = " + std::to_string(b2);
    else
      c.details = "C_3 != Γ (#C_3 = " + std::to_string(size_at(3)) + ")";
  }
  return c;
}

}  // namespace qplee

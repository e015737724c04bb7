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

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "qplee/subset_sums.hpp"

using namespace qplee;

namespace {

GeneratorSet make(std::uint32_t p, std::uint32_t k, Family fam) { return build_generator_set(Field(p, k), fam); }

/// Cumulative layers by set arithmetic on coordinate pairs.
std::vector<std::size_t> naive_layers(const GeneratorSet& h, std::size_t levels) {
  const auto g = h.group();
  std::set<GroupElem> cur{0};
  std::vector<std::size_t> sizes{1};
  for (std::size_t t = 1; t <= levels; ++t) {
    std::set<GroupElem> next = cur;
    for (auto x : cur)
      for (auto m : h.members) {
        auto a = g.digits(x), b = g.digits(m);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % g.p();
        next.insert(g.from_digits(a));
      }
    cur = std::move(next);
    sizes.push_back(cur.size());
  }
  return sizes;
}

TEST(SubsetSums, SumsetIdentityAndExample) {
  const auto h = make(5, 1, Family::plus);
  const auto g = h.group();
  const auto hs = dense_set(h.members, g.size());
  DenseSet zero(g.size());
  zero.set(0);
  EXPECT_EQ(sumset(hs, zero, g), hs);
  EXPECT_EQ(sumset_power(h, 0), zero);
  EXPECT_EQ(sumset(hs, hs, g).count(), 19u);
}

TEST(SubsetSums, LeeBallClosedForms) {
  EXPECT_EQ(lee_ball_size(7, 2), 113u);
  for (std::uint32_t r = 0; r <= 3; ++r) EXPECT_EQ(lee_ball_size(1, r), 2 * r + 1);
  EXPECT_EQ(lee_ball_size(11, 3), 2047u);
  EXPECT_EQ(oracle::z_ball(11, 3), 2047u);
  for (std::uint32_t n = 1; n <= 12; ++n)
    for (std::uint32_t r = 0; r <= 3; ++r) EXPECT_EQ(lee_ball_size(n, r), oracle::z_ball(n, r)) << n << " " << r;
  EXPECT_THROW(lee_ball_size(3, 4), Error);
}

TEST(SubsetSums, LeeBallModMatchesEnumeration) {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (std::uint32_t n = 1; n <= 4; ++n)
      for (std::uint32_t r = 0; r <= 5; ++r) {
        std::uint64_t count = 0;
        oracle::for_each_lee_vector(n, p, r, [&](const oracle::Vec&, std::uint32_t) { ++count; });
        EXPECT_EQ(lee_ball_size_mod(n, r, p), count) << p << " " << n << " " << r;
      }
  // p = 5 radius-3 balls wrap.
  EXPECT_LT(lee_ball_size_mod(3, 3, 5), lee_ball_size(3, 3));
  EXPECT_EQ(lee_ball_size_mod(6, 3, 7), lee_ball_size(6, 3));
}

TEST(SubsetSums, LayerTable) {
  struct Case {
    std::uint32_t p, k;
    Family fam;
    std::vector<std::uint64_t> sizes;
  };
  const std::vector<Case> cases = {
      {5, 1, Family::minus, {1, 5, 13, 21, 25}},   {5, 1, Family::plus, {1, 7, 19, 25}},
      {7, 1, Family::minus, {1, 7, 19, 37, 49}},   {7, 1, Family::plus, {1, 9, 41, 49}},
      {11, 1, Family::minus, {1, 11, 61, 121}},    {11, 1, Family::plus, {1, 13, 73, 121}},
      {13, 1, Family::minus, {1, 13, 73, 169}},    {13, 1, Family::plus, {1, 15, 113, 169}},
      {17, 1, Family::minus, {1, 17, 145, 289}},   {17, 1, Family::plus, {1, 19, 163, 289}},
      {19, 1, Family::minus, {1, 19, 163, 361}},   {19, 1, Family::plus, {1, 21, 221, 361}},
      {23, 1, Family::minus, {1, 23, 265, 529}},   {23, 1, Family::plus, {1, 25, 289, 529}},
      {3, 2, Family::minus, {1, 9, 33, 65, 81}},
  };
  for (const auto& c : cases) {
    const auto h = make(c.p, c.k, c.fam);
    const auto s = layered_sums(h);
    EXPECT_EQ(s.sizes, c.sizes) << c.p << "^" << c.k << " " << to_string(c.fam);
    EXPECT_TRUE(s.covered);
    EXPECT_EQ(s.limit_index, c.sizes.size() - 1);
    const auto naive = naive_layers(h, c.sizes.size() - 1);
    EXPECT_EQ(std::vector<std::uint64_t>(naive.begin(), naive.end()), c.sizes);
  }
}

TEST(SubsetSums, IndicesForTheTwoExamples) {
  const auto a = layered_sums(make(13, 1, Family::plus));
  EXPECT_EQ(a.critical_index, 2u);
  EXPECT_EQ(a.limit_index, 3u);
  const auto b = layered_sums(make(23, 1, Family::minus));
  EXPECT_EQ(b.critical_index, 2u);
  EXPECT_EQ(b.limit_index, 3u);
  const auto c = layered_sums(make(5, 1, Family::plus));
  EXPECT_EQ(c.sizes[2], 19u);
  EXPECT_EQ(c.critical_index, 1u);
}

TEST(SubsetSums, CapAndStall) {
  const auto s = layered_sums(make(13, 1, Family::plus), 2);
  EXPECT_FALSE(s.covered);
  EXPECT_FALSE(s.stalled);
  EXPECT_EQ(s.limit_index, 2u);
  EXPECT_TRUE(s.critical_is_lower_bound);
  try {
    s.require_covered();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CapTooSmall);
  }
  const auto stall = layered_sums(make(3, 1, Family::minus));
  EXPECT_TRUE(stall.stalled);
  EXPECT_FALSE(stall.covered);
  EXPECT_THROW(stall.require_covered(), Error);
}

TEST(SubsetSums, ClassifyExamples) {
  EXPECT_EQ(classify(make(13, 1, Family::plus)).verdict, Verdict::QuasiPerfect2);
  EXPECT_EQ(classify(make(23, 1, Family::minus)).verdict, Verdict::QuasiPerfect2);
  const auto c5 = classify(make(5, 1, Family::plus));
  EXPECT_EQ(c5.verdict, Verdict::Neither);
  EXPECT_TRUE(c5.perfect_size);
  EXPECT_FALSE(c5.c2_covers);
  EXPECT_THROW(classify(make(3, 2, Family::plus)), Error);
}

TEST(SubsetSums, SecondLayerClosedForms) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {29, 1}, {31, 1}}) {
    const Field f(p, k);
    const std::uint64_t q = f.q();
    const bool m3_sq = f.eta(f.from_int(-3)) == 1;
    const auto plus = layered_sums(build_h_plus(QuadExt(f)));
    const std::uint64_t plus_c2 = 1 + (q + 1) + (m3_sq ? (q + 1) * (q + 1) / 2 : (q - 1) * (q + 1) / 2);
    EXPECT_EQ(plus.sizes[2], plus_c2) << p << "^" << k;
    const auto minus = layered_sums(build_h_minus(f));
    const std::uint64_t minus_c2 = 1 + (q - 1) + (m3_sq || p == 3 ? (q - 1) * (q - 1) / 2 - (q - 1) : (q - 1) * (q - 1) / 2);
    EXPECT_EQ(minus.sizes[2], minus_c2) << p << "^" << k;
  }
}

TEST(SubsetSums, PropertyMonotoneAndSymmetricLayers) {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}};
  const auto gen = [&](std::mt19937_64& rng) {
    const auto [p, k] = fields[rng() % fields.size()];
    return std::tuple{p, k, rng() % 2 ? Family::plus : Family::minus};
  };
  const auto prop = [](auto c) {
    auto [p, k, fam] = c;
    const auto h = make(p, k, fam);
    const auto g = h.group();
    const auto s = layered_sums(h);
    for (std::size_t t = 1; t < s.sizes.size(); ++t) {
      if (s.sizes[t] <= s.sizes[t - 1]) return false;
      if (!s.layers[t - 1].is_subset_of(s.layers[t])) return false;
    }
    for (const auto& layer : s.layers)
      for (auto x = layer.find_first(); x != DenseSet::npos; x = layer.find_next(x))
        if (!layer.test(g.neg(static_cast<GroupElem>(x)))) return false;
    return true;
  };
  EXPECT_EQ(oracle::for_all(2026, 20, gen, prop), -1);
}

TEST(SubsetSums, PureTripleSumsetRemark) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}}) {
    auto h3 = sumset_power(make(p, k, Family::minus), 3);
    h3.set(0);
    EXPECT_FALSE(h3.all()) << p << "^" << k;
  }
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{13, 1}, {17, 1}, {5, 2}, {23, 1}}) {
    auto h3 = sumset_power(make(p, k, Family::minus), 3);
    h3.set(0);
    EXPECT_TRUE(h3.all()) << p << "^" << k;
  }
}

}  // namespace

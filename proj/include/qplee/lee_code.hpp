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
 * @file lee_code.hpp
 * @brief The Lee linear code C(Γ; H) = {c in F_p^n : Σ c_j β_j = 0}: parity
 *        check matrix, Lee metric, coset-leader syndrome decoding, and an
 *        independent re-derivation of error correction and covering radius
 *        from the syndrome space.
 */

#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qplee/quadratic_subsets.hpp"
#include "qplee/subset_sums.hpp"

namespace qplee {

using Word = std::vector<std::uint32_t>;

/**
 * 2k x n matrix over F_p. Column j holds the base-p digits of β_j: for plus
 * the coordinates in {1, x, .., x^{k-1}, √δ, √δ x, .., √δ x^{k-1}}, for minus
 * the first-component coordinates followed by the second.
 */
struct ParityCheckMatrix {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  Family family = Family::plus;
  std::vector<GroupElem> columns;
  std::vector<std::vector<std::uint32_t>> rows;

  std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(columns.size()); }
  std::uint32_t row_count() const noexcept { return 2 * k; }
  VectorGroup group() const { return VectorGroup(p, 2 * k); }
  std::size_t rank() const { return rank_mod_p(rows, p); }
};

inline ParityCheckMatrix matrix_from_columns(std::uint32_t p, std::uint32_t k, Family family,
                                             std::vector<GroupElem> columns) {
  ParityCheckMatrix m{p, k, family, std::move(columns), {}};
  const auto g = m.group();
  m.rows.assign(2 * k, std::vector<std::uint32_t>(m.columns.size(), 0));
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    detail::require(m.columns[j] < g.size(), Errc::InvalidArgument, "column outside the ambient group");
    for (std::uint32_t i = 0; i < 2 * k; ++i) m.rows[i][j] = g.digit(m.columns[j], i);
  }
  return m;
}

inline ParityCheckMatrix matrix_from_rows(std::uint32_t p, std::uint32_t k, Family family,
                                          const std::vector<std::vector<std::uint32_t>>& rows) {
  detail::require(rows.size() == 2 * std::size_t{k}, Errc::ParseError,
                  "expected " + std::to_string(2 * k) + " rows, got " + std::to_string(rows.size()));
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  const VectorGroup g(p, 2 * k);
  std::vector<GroupElem> columns(n, 0);
  std::vector<std::uint32_t> col(2 * k);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::uint32_t i = 0; i < 2 * k; ++i) {
      detail::require(rows[i].size() == n, Errc::ParseError, "ragged matrix rows");
      detail::require(rows[i][j] < p, Errc::ParseError, "matrix entry outside [0, p)");
      col[i] = rows[i][j];
    }
    columns[j] = g.from_digits(col);
  }
  return matrix_from_columns(p, k, family, std::move(columns));
}

inline ParityCheckMatrix parity_check_matrix(const GeneratorSet& h) {
  return matrix_from_columns(h.field.p(), h.field.k(), h.family, h.representatives);
}

/// The generator set whose representatives are the matrix columns.
inline GeneratorSet generator_set_from_matrix(const ParityCheckMatrix& m, std::uint64_t square_cap = kDefaultSquareCap) {
  Field f(m.p, m.k, square_cap);
  std::optional<Elem> delta;
  if (m.family == Family::plus) delta = canonical_nonsquare(f);
  return generator_set_from_representatives(std::move(f), m.family, delta, m.columns);
}

inline std::uint32_t lee_weight(std::uint32_t v, std::uint32_t p) noexcept {
  v %= p;
  return std::min(v, p - v);
}

inline std::uint64_t lee_weight(std::span<const std::uint32_t> word, std::uint32_t p) noexcept {
  std::uint64_t w = 0;
  for (auto v : word) w += lee_weight(v, p);
  return w;
}

inline std::uint64_t lee_distance(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                  std::uint32_t p) {
  detail::require(a.size() == b.size(), Errc::LengthMismatch, "words of different length");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += lee_weight((a[i] % p + p - b[i] % p) % p, p);
  return d;
}

/// Σ word_j β_j as a group element.
inline GroupElem syndrome(const ParityCheckMatrix& m, std::span<const std::uint32_t> word) {
  detail::require(word.size() == m.n(), Errc::LengthMismatch,
                  "word length " + std::to_string(word.size()) + " != n = " + std::to_string(m.n()));
  const auto g = m.group();
  GroupElem s = 0;
  for (std::size_t j = 0; j < word.size(); ++j)
    if (word[j] % m.p) s = g.add(s, g.scale(word[j], m.columns[j]));
  return s;
}

/**
 * Minimum-Lee-weight error per syndrome, filled by breadth-first search over
 * Lee weight. Level w+1 extends the level-w leaders in discovery order by the
 * steps +β_1, -β_1, +β_2, -β_2, ...; the first vector reaching a syndrome is
 * its leader. Leaders are stored as (parent, step) links.
 */
class CosetLeaderTable {
 public:
  static constexpr std::uint8_t kUnfilled = std::numeric_limits<std::uint8_t>::max();

  CosetLeaderTable(const ParityCheckMatrix& m, std::uint32_t cap) : matrix_(m) {
    const auto g = m.group();
    const std::uint32_t N = g.size();
    weight_.assign(N, kUnfilled);
    parent_.assign(N, 0);
    step_.assign(N, 0);
    std::vector<GroupElem> steps;
    steps.reserve(2 * m.n());
    for (auto c : m.columns) {
      steps.push_back(c);
      steps.push_back(g.neg(c));
    }
    weight_[0] = 0;
    std::vector<GroupElem> frontier{0};
    std::uint32_t filled = 1;
    for (std::uint32_t w = 0; !frontier.empty() && filled < N && w < cap; ++w) {
      std::vector<GroupElem> next;
      for (auto s : frontier)
        for (std::uint32_t i = 0; i < steps.size(); ++i) {
          const GroupElem t = g.add(s, steps[i]);
          if (weight_[t] != kUnfilled) continue;
          weight_[t] = static_cast<std::uint8_t>(w + 1);
          parent_[t] = s;
          step_[t] = i;
          next.push_back(t);
          ++filled;
        }
      frontier = std::move(next);
    }
    detail::require(filled == N, Errc::CoverageFailure,
                    std::to_string(N - filled) + " syndromes have no leader of weight <= " + std::to_string(cap));
  }

  const ParityCheckMatrix& matrix() const noexcept { return matrix_; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(weight_.size()); }
  std::uint32_t weight(GroupElem s) const { return weight_.at(s); }

  Word leader(GroupElem s) const {
    Word e(matrix_.n(), 0);
    const std::uint32_t p = matrix_.p;
    for (GroupElem cur = s; cur != 0; cur = parent_[cur]) {
      const std::uint32_t j = step_[cur] / 2;
      e[j] = (step_[cur] % 2 == 0) ? (e[j] + 1) % p : (e[j] + p - 1) % p;
    }
    return e;
  }

  std::uint32_t max_weight() const {
    return *std::max_element(weight_.begin(), weight_.end());
  }

  /// histogram[w] = number of syndromes whose leader has weight w.
  std::vector<std::uint64_t> histogram() const {
    std::vector<std::uint64_t> h(max_weight() + 1, 0);
    for (auto w : weight_) ++h[w];
    return h;
  }

 private:
  ParityCheckMatrix matrix_;
  std::vector<std::uint8_t> weight_;
  std::vector<GroupElem> parent_;
  std::vector<std::uint32_t> step_;
};

inline CosetLeaderTable build_coset_leader_table(const ParityCheckMatrix& m, std::uint32_t cap = kDefaultLayerCap) {
  return CosetLeaderTable(m, cap);
}

struct DecodeResult {
  Word codeword;
  Word error;
  std::uint64_t corrected_weight = 0;
};

inline DecodeResult decode(const CosetLeaderTable& table, std::span<const std::uint32_t> word) {
  const auto& m = table.matrix();
  DecodeResult r;
  r.error = table.leader(syndrome(m, word));
  r.codeword.resize(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) r.codeword[j] = (word[j] % m.p + m.p - r.error[j]) % m.p;
  r.corrected_weight = lee_weight(r.error, m.p);
  return r;
}

/// Minimum Lee weight and the number of minimum-weight vectors (saturated at
/// 2) per syndrome, by dynamic programming over the columns.
struct SyndromeCensus {
  std::uint32_t max_weight = 0;
  std::vector<std::uint8_t> min_weight;    // kUnfilled above max_weight
  std::vector<std::uint8_t> multiplicity;  // 0, 1, or 2 meaning "two or more"
};

inline SyndromeCensus syndrome_census(const ParityCheckMatrix& m, std::uint32_t max_weight) {
  const auto g = m.group();
  const std::uint32_t N = g.size(), p = m.p, W = max_weight;
  const std::size_t stride = N;
  // counts[w * N + s]: vectors over the processed columns with weight w and
  // syndrome s.
  std::vector<std::uint8_t> counts(std::size_t{W + 1} * stride, 0), next;
  counts[0] = 1;
  const auto sat = [](std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>(std::min(2, a + b)); };
  for (auto beta : m.columns) {
    next = counts;  // value 0 at this column
    std::vector<std::pair<std::uint32_t, GroupElem>> moves;  // (Lee weight, v·β)
    for (std::uint32_t d = 1; d <= W && d <= (p - 1) / 2; ++d) {
      moves.emplace_back(d, g.scale(d, beta));
      moves.emplace_back(d, g.scale(-static_cast<std::int64_t>(d), beta));
    }
    for (std::uint32_t w = 0; w <= W; ++w)
      for (std::uint32_t s = 0; s < N; ++s) {
        const std::uint8_t c = counts[w * stride + s];
        if (!c) continue;
        for (const auto& [d, shift] : moves) {
          if (w + d > W) continue;
          auto& slot = next[(w + d) * stride + g.add(s, shift)];
          slot = sat(slot, c);
        }
      }
    counts.swap(next);
  }
  SyndromeCensus out;
  out.max_weight = W;
  out.min_weight.assign(N, CosetLeaderTable::kUnfilled);
  out.multiplicity.assign(N, 0);
  for (std::uint32_t s = 0; s < N; ++s)
    for (std::uint32_t w = 0; w <= W; ++w)
      if (counts[w * stride + s]) {
        out.min_weight[s] = static_cast<std::uint8_t>(w);
        out.multiplicity[s] = counts[w * stride + s];
        break;
      }
  return out;
}

struct LeeCode {
  ParityCheckMatrix matrix;
  std::uint32_t n = 0;
  std::uint32_t dimension = 0;
  std::uint32_t error_correction = 0;
  std::uint32_t covering_radius = 0;
  boost::multiprecision::cpp_int codeword_count;
  double density = 0.0;  // codewords / p^n = p^{-rank}
};

/// Parameters of C(Γ; H); t and R are the critical and limit indices of H.
inline LeeCode code_parameters(const GeneratorSet& h, std::uint32_t cap = kDefaultLayerCap) {
  LeeCode c;
  c.matrix = parity_check_matrix(h);
  c.n = h.n();
  const auto rank = static_cast<std::uint32_t>(c.matrix.rank());
  c.dimension = c.n - rank;
  const auto layers = layered_sums(h, cap);
  layers.require_covered();
  c.error_correction = layers.critical_index;
  c.covering_radius = layers.limit_index;
  c.codeword_count = boost::multiprecision::pow(boost::multiprecision::cpp_int(h.field.p()), c.dimension);
  c.density = std::pow(static_cast<double>(h.field.p()), -static_cast<double>(rank));
  return c;
}

struct QuasiPerfectReport {
  std::uint32_t t_from_code = 0;
  std::uint32_t r_from_code = 0;
  std::uint32_t critical_index = 0;
  std::uint32_t limit_index = 0;
  std::vector<std::uint64_t> leader_histogram;
  bool quasi_perfect = false;  // (t, R) = (2, 3)
  bool perfect = false;        // t = R
};

/**
 * Re-derives (t, R) from the syndrome space: R is the largest leader weight;
 * t is the largest w such that every syndrome of minimum weight <= w has a
 * unique minimum-weight vector and there are #B^n_w of them. Throws Mismatch
 * if this disagrees with the subset-sum indices in `code` or if the table's
 * leader weights are not the census minima.
 */
inline QuasiPerfectReport verify_quasi_perfect(const LeeCode& code, const CosetLeaderTable& table) {
  QuasiPerfectReport r;
  r.critical_index = code.error_correction;
  r.limit_index = code.covering_radius;
  r.leader_histogram = table.histogram();
  r.r_from_code = table.max_weight();

  const auto census = syndrome_census(table.matrix(), r.r_from_code);
  for (std::uint32_t s = 0; s < table.size(); ++s)
    detail::require(census.min_weight[s] == table.weight(s), Errc::Mismatch,
                    "coset leader weight is not minimal at syndrome " + std::to_string(s));

  const std::uint32_t p = table.matrix().p, n = table.matrix().n();
  std::uint64_t reached = 0;
  bool unique = true;
  std::uint32_t t = 0;
  for (std::uint32_t w = 0; w <= r.r_from_code; ++w) {
    for (std::uint32_t s = 0; s < table.size(); ++s)
      if (census.min_weight[s] == w) {
        ++reached;
        unique = unique && census.multiplicity[s] == 1;
      }
    if (!unique || reached != lee_ball_size_mod(n, w, p)) break;
    t = w;
  }
  r.t_from_code = t;
  r.quasi_perfect = r.t_from_code == 2 && r.r_from_code == 3;
  r.perfect = r.t_from_code == r.r_from_code;
  detail::require(r.t_from_code == r.critical_index && r.r_from_code == r.limit_index, Errc::Mismatch,
                  "syndrome analysis gives (t, R) = (" + std::to_string(r.t_from_code) + ", " +
                      std::to_string(r.r_from_code) + ") but subset sums give (" + std::to_string(r.critical_index) +
                      ", " + std::to_string(r.limit_index) + ")");
  return r;
}

/// Uniform sampler of codewords: free coordinates at random, pivots solved
/// from the reduced row echelon form of the parity-check matrix.
class CodewordSampler {
 public:
  explicit CodewordSampler(const ParityCheckMatrix& m) : p_(m.p), n_(m.n()), rref_(m.rows) {
    std::size_t rank = 0;
    std::vector<bool> is_pivot(n_, false);
    for (std::uint32_t c = 0; c < n_ && rank < rref_.size(); ++c) {
      std::size_t piv = rank;
      while (piv < rref_.size() && rref_[piv][c] == 0) ++piv;
      if (piv == rref_.size()) continue;
      std::swap(rref_[piv], rref_[rank]);
      const std::uint64_t inv = pow_mod(rref_[rank][c], p_ - 2, p_);
      for (auto& v : rref_[rank]) v = static_cast<std::uint32_t>(v * inv % p_);
      for (std::size_t r = 0; r < rref_.size(); ++r) {
        if (r == rank || rref_[r][c] == 0) continue;
        const std::uint64_t f = rref_[r][c];
        for (std::uint32_t j = 0; j < n_; ++j)
          rref_[r][j] = static_cast<std::uint32_t>((rref_[r][j] + (p_ - f) * rref_[rank][j]) % p_);
      }
      pivots_.push_back(c);
      is_pivot[c] = true;
      ++rank;
    }
    rref_.resize(rank);
    for (std::uint32_t c = 0; c < n_; ++c)
      if (!is_pivot[c]) free_.push_back(c);
  }

  template <class Rng>
  Word operator()(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    Word c(n_, 0);
    for (auto j : free_) c[j] = dist(rng);
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      std::uint64_t acc = 0;
      for (auto j : free_) acc += std::uint64_t{rref_[r][j]} * c[j];
      c[pivots_[r]] = static_cast<std::uint32_t>((p_ - acc % p_) % p_);
    }
    return c;
  }

 private:
  std::uint32_t p_;
  std::uint32_t n_;
  std::vector<std::vector<std::uint32_t>> rref_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::uint32_t> free_;
};

/// Random error of Lee weight exactly `weight` (<= 2): one entry ±1, or
/// either a single ±2 or two entries ±1 at distinct positions.
template <class Rng>
Word random_error(std::uint32_t n, std::uint32_t p, std::uint32_t weight, Rng& rng) {
  detail::require(weight <= 2, Errc::InvalidArgument, "random errors are generated up to weight 2");
  Word e(n, 0);
  std::uniform_int_distribution<std::uint32_t> pos(0, n - 1), coin(0, 1);
  const auto signed_unit = [&](std::uint32_t mag) { return coin(rng) ? mag : p - mag; };
  if (weight == 1) {
    e[pos(rng)] = signed_unit(1);
  } else if (weight == 2) {
    if (n == 1 || coin(rng)) {
      e[pos(rng)] = signed_unit(2);
    } else {
      const std::uint32_t a = pos(rng);
      std::uint32_t b = pos(rng);
      while (b == a) b = pos(rng);
      e[a] = signed_unit(1);
      e[b] = signed_unit(1);
    }
  }
  return e;
}

struct RoundTripReport {
  std::uint64_t trials = 0;
  std::uint64_t recovered = 0;
  bool all_recovered() const noexcept { return trials == recovered; }
};

/// Decodes `trials` seeded (codeword + error) pairs with errors of Lee
/// weight <= max_error_weight and counts exact recoveries.
inline RoundTripReport decode_round_trip(const CosetLeaderTable& table, std::uint64_t trials, std::uint64_t seed,
                                         std::uint32_t max_error_weight = 2) {
  const auto& m = table.matrix();
  std::mt19937_64 rng(seed);
  const CodewordSampler sample(m);
  std::uniform_int_distribution<std::uint32_t> wdist(0, max_error_weight);
  RoundTripReport r;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Word c = sample(rng);
    const Word e = random_error(m.n(), m.p, wdist(rng), rng);
    Word received(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) received[j] = (c[j] + e[j]) % m.p;
    ++r.trials;
    if (decode(table, received).codeword == c) ++r.recovered;
  }
  return r;
}

}  // namespace qplee

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
 * @file cayley_spectrum.hpp
 * @brief Spectra of Cay(Γ; H) through the additive characters of Γ.
 *
 * The character indexed by α sends β to ζ_p^<α,β>, with
 *   <α,β> = Tr_{F_{q^2}/F_p}(αβ) = Tr_{F_q/F_p}(2(ax + δby))   (plus), and
 *   <α,β> = Tr_{F_q/F_p}(ax + by)                              (minus),
 * for α = (a,b), β = (x,y). The eigenvalue of χ_α is Σ_{β∈H} χ_α(β); it is
 * accumulated as an exact histogram of exponents and evaluated once.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string_view>
#include <thread>
#include <vector>

#include "qplee/finite_field.hpp"
#include "qplee/quadratic_subsets.hpp"

namespace qplee {

inline constexpr std::uint64_t kDefaultSpectrumBudget = std::uint64_t{1} << 20;
inline constexpr double kSpectrumTolerance = 1e-9;

/// <α, β> computed with field arithmetic.
inline Elem character_pairing(const GeneratorSet& h, GroupElem alpha, GroupElem beta) {
  const Field& f = h.field;
  const Elem q = f.q();
  const Elem a = alpha % q, b = alpha / q, x = beta % q, y = beta / q;
  if (h.family == Family::plus) {
    const Elem inner = f.add(f.mul(a, x), f.mul(*h.delta, f.mul(b, y)));
    return f.trace(f.add(inner, inner));
  }
  return f.trace(f.add(f.mul(a, x), f.mul(b, y)));
}

namespace detail {

/// The pairing is F_p-bilinear, so <α,β> = Σ_i α_i <e_i,β> over the base-p
/// digits α_i of α. Row-major: 2k functional values per member.
inline std::vector<std::uint32_t> pairing_functionals(const GeneratorSet& h) {
  const auto g = h.group();
  std::vector<std::uint32_t> out;
  out.reserve(h.members.size() * g.dim());
  for (auto beta : h.members) {
    GroupElem unit = 1;
    for (std::uint32_t i = 0; i < g.dim(); ++i, unit *= g.p()) out.push_back(character_pairing(h, unit, beta));
  }
  return out;
}

inline void accumulate_counts(const GeneratorSet& h, const std::vector<std::uint32_t>& functionals,
                              std::span<const std::uint32_t> alpha_digits, std::span<std::int64_t> counts) {
  const std::uint32_t p = h.field.p();
  const std::size_t dim = alpha_digits.size();
  for (std::size_t m = 0; m < h.members.size(); ++m) {
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < dim; ++i) e += std::uint64_t{alpha_digits[i]} * functionals[m * dim + i];
    ++counts[e % p];
  }
}

}  // namespace detail

/// λ_α = Σ_{β∈H} ζ_p^<α,β>.
inline CharacterSum eigenvalue(const GeneratorSet& h, GroupElem alpha) {
  detail::require(alpha < h.group().size(), Errc::InvalidArgument, "character index outside the group");
  std::vector<std::int64_t> counts(h.field.p(), 0);
  for (auto beta : h.members) ++counts[character_pairing(h, alpha, beta)];
  return CharacterSum::from_counts(h.field.p(), std::move(counts));
}

enum class SpectrumClass { Ramanujan, AlmostRamanujan, Neither };

constexpr std::string_view to_string(SpectrumClass c) noexcept {
  switch (c) {
    case SpectrumClass::Ramanujan: return "Ramanujan";
    case SpectrumClass::AlmostRamanujan: return "AlmostRamanujan";
    case SpectrumClass::Neither: return "Neither";
  }
  return "Neither";
}

struct SpectrumReport {
  Family family = Family::plus;
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t degree = 0;
  std::vector<double> eigenvalues;  // indexed by α
  /// Exponent histograms, p per character, when N·p fits the count budget.
  std::vector<std::int32_t> counts;
  /// Σ over all characters of the exponent histograms.
  std::vector<std::int64_t> total_counts;
  double max_nontrivial_abs = 0.0;
  double ramanujan_bound = 0.0;  // 2 sqrt(degree - 1)
  double almost_bound = 0.0;     // 2 sqrt(degree + 1)
  SpectrumClass classification = SpectrumClass::Neither;
  bool connected = false;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  bool has_counts() const noexcept { return !counts.empty(); }
  std::span<const std::int32_t> counts_of(GroupElem alpha) const {
    return {counts.data() + std::size_t{alpha} * p, p};
  }

  /// Eigenvalues rounded to 1e-6, as (micro-units, multiplicity).
  std::map<std::int64_t, std::uint64_t> histogram() const {
    std::map<std::int64_t, std::uint64_t> out;
    for (double v : eigenvalues) ++out[std::llround(v * 1e6)];
    return out;
  }
};

struct SpectrumOptions {
  std::uint64_t budget = kDefaultSpectrumBudget;
  std::uint64_t count_budget = std::uint64_t{1} << 24;
  unsigned threads = 1;
};

inline SpectrumReport full_spectrum(const GeneratorSet& h, const SpectrumOptions& opt = {}) {
  const auto g = h.group();
  const std::uint32_t N = g.size(), p = g.p();
  detail::require(N <= opt.budget, Errc::SizeCapExceeded,
                  "spectrum of " + std::to_string(N) + " characters exceeds the budget " + std::to_string(opt.budget));
  SpectrumReport r;
  r.family = h.family;
  r.p = p;
  r.k = h.field.k();
  r.degree = h.degree();
  r.eigenvalues.assign(N, 0.0);
  const bool keep = std::uint64_t{N} * p <= opt.count_budget;
  if (keep) r.counts.assign(std::size_t{N} * p, 0);

  const auto functionals = detail::pairing_functionals(h);
  std::vector<double> cosines(p);
  for (std::uint32_t j = 0; j < p; ++j) cosines[j] = std::cos(2.0 * std::numbers::pi * j / p);

  const unsigned workers = std::max(1u, std::min(opt.threads, N));
  std::vector<std::vector<std::int64_t>> totals(workers, std::vector<std::int64_t>(p, 0));
  std::vector<std::uint8_t> disconnect(workers, 0);
  const auto work = [&](unsigned w) {
    const std::uint32_t begin = static_cast<std::uint32_t>(std::uint64_t{N} * w / workers);
    const std::uint32_t end = static_cast<std::uint32_t>(std::uint64_t{N} * (w + 1) / workers);
    std::vector<std::int64_t> counts(p);
    for (std::uint32_t alpha = begin; alpha < end; ++alpha) {
      std::fill(counts.begin(), counts.end(), 0);
      const auto digits = g.digits(alpha);
      detail::accumulate_counts(h, functionals, digits, counts);
      double value = 0.0;
      for (std::uint32_t j = 0; j < p; ++j) {
        if (!counts[j]) continue;
        value += static_cast<double>(counts[j]) * cosines[j];
        totals[w][j] += counts[j];
        if (keep) r.counts[std::size_t{alpha} * p + j] = static_cast<std::int32_t>(counts[j]);
      }
      r.eigenvalues[alpha] = value;
      if (alpha != 0 && counts[0] == static_cast<std::int64_t>(r.degree)) disconnect[w] = 1;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  r.total_counts.assign(p, 0);
  for (const auto& t : totals)
    for (std::uint32_t j = 0; j < p; ++j) r.total_counts[j] += t[j];
  r.connected = std::none_of(disconnect.begin(), disconnect.end(), [](auto d) { return d != 0; });
  for (std::uint32_t alpha = 1; alpha < N; ++alpha)
    r.max_nontrivial_abs = std::max(r.max_nontrivial_abs, std::abs(r.eigenvalues[alpha]));
  r.ramanujan_bound = 2.0 * std::sqrt(static_cast<double>(r.degree) - 1.0);
  r.almost_bound = 2.0 * std::sqrt(static_cast<double>(r.degree) + 1.0);
  if (r.max_nontrivial_abs <= r.ramanujan_bound + kSpectrumTolerance)
    r.classification = SpectrumClass::Ramanujan;
  else if (r.max_nontrivial_abs <= r.almost_bound + kSpectrumTolerance)
    r.classification = SpectrumClass::AlmostRamanujan;
  else
    r.classification = SpectrumClass::Neither;
  return r;
}

}  // namespace qplee

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
 * @file quadratic_subsets.hpp
 * @brief Generator sets cut out by the conics x^2 - delta y^2 = 1 (family
 *        plus, in F_{q^2}) and xy = 1 (family minus, in F_q x F_q), and the
 *        pointwise counting facts about them.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qplee/finite_field.hpp"
#include "qplee/group.hpp"

namespace qplee {

enum class Family { plus, minus };

constexpr std::string_view to_string(Family f) noexcept { return f == Family::plus ? "plus" : "minus"; }

inline Family parse_family(std::string_view s) {
  if (s == "plus") return Family::plus;
  if (s == "minus") return Family::minus;
  raise(Errc::InvalidArgument, "family must be plus or minus, got '" + std::string(s) + "'");
}

/**
 * A symmetric generating subset H = {±β_1, ..., ±β_n} of the ambient group
 * (F_{q^2} for plus, F_q x F_q for minus), both indexed x + q y.
 *
 * `representatives` holds the smaller index of each ± pair, ascending.
 */
struct GeneratorSet {
  Family family = Family::plus;
  Field field;
  std::optional<Elem> delta;  // plus only
  std::vector<GroupElem> members;
  std::vector<GroupElem> representatives;

  VectorGroup group() const { return VectorGroup(field.p(), 2 * field.k()); }
  std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(representatives.size()); }
  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(members.size()); }
  bool contains(GroupElem g) const { return std::binary_search(members.begin(), members.end(), g); }

  /// Rank over F_p of the member coordinate vectors.
  std::size_t rank() const {
    const auto g = group();
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(members.size());
    for (auto m : members) rows.push_back(g.digits(m));
    return rank_mod_p(std::move(rows), field.p());
  }
};

/// Assemble from a list of representatives; members become reps ∪ -reps.
/// Throws InvalidArgument on zero, repeated or self-paired entries.
inline GeneratorSet generator_set_from_representatives(Field field, Family family, std::optional<Elem> delta,
                                                       const std::vector<GroupElem>& reps) {
  GeneratorSet h{family, std::move(field), delta, {}, {}};
  const auto g = h.group();
  for (auto r : reps) {
    detail::require(r < g.size(), Errc::InvalidArgument, "generator outside the ambient group");
    detail::require(r != 0, Errc::InvalidArgument, "zero cannot be a generator");
    h.members.push_back(r);
    h.members.push_back(g.neg(r));
  }
  std::sort(h.members.begin(), h.members.end());
  detail::require(std::adjacent_find(h.members.begin(), h.members.end()) == h.members.end(), Errc::InvalidArgument,
                  "generators must be distinct up to sign");
  for (auto m : h.members)
    if (m < g.neg(m)) h.representatives.push_back(m);
  return h;
}

namespace detail {

inline GeneratorSet generator_set_from_members(Field field, Family family, std::optional<Elem> delta,
                                               std::vector<GroupElem> members) {
  GeneratorSet h{family, std::move(field), delta, std::move(members), {}};
  std::sort(h.members.begin(), h.members.end());
  const auto g = h.group();
  for (auto m : h.members)
    if (m < g.neg(m)) h.representatives.push_back(m);
  return h;
}

}  // namespace detail

/// H+ = {z in F_{q^2} : N(z) = 1}.
inline GeneratorSet build_h_plus(const QuadExt& ext) {
  std::vector<GroupElem> members;
  for (Elem z = 0; z < ext.size(); ++z)
    if (ext.norm(z) == 1) members.push_back(z);
  return detail::generator_set_from_members(ext.base(), Family::plus, ext.delta(), std::move(members));
}

/// H- = {(x, 1/x) : x in F_q^*}.
inline GeneratorSet build_h_minus(const Field& f) {
  std::vector<GroupElem> members;
  for (Elem x = 1; x < f.q(); ++x) members.push_back(x + f.q() * f.inv(x));
  return detail::generator_set_from_members(f, Family::minus, std::nullopt, std::move(members));
}

inline GeneratorSet build_generator_set(const Field& f, Family family) {
  return family == Family::plus ? build_h_plus(QuadExt(f)) : build_h_minus(f);
}

/// D_c = {x : x^2 = c or x^2 - c is a nonsquare}, ascending.
inline std::vector<Elem> d_c_set(const Field& f, Elem c) {
  detail::require(c != 0, Errc::ZeroInput, "D_c needs c != 0");
  std::vector<Elem> out;
  for (Elem x = 0; x < f.q(); ++x) {
    const Elem diff = f.sub(f.square(x), c);
    if (diff == 0 || f.eta(diff) == -1) out.push_back(x);
  }
  return out;
}

/// I_w = {N(z) : z in H+ + H+ w}, ascending. `h_plus` must be build_h_plus(ext).
inline std::vector<Elem> i_w_set(const QuadExt& ext, const GeneratorSet& h_plus, Elem w) {
  detail::require(w != 0, Errc::ZeroInput, "I_w needs w != 0");
  std::vector<bool> seen(ext.base().q(), false);
  for (auto z1 : h_plus.members)
    for (auto z2 : h_plus.members) seen[ext.norm(ext.add(z1, ext.mul(z2, w)))] = true;
  std::vector<Elem> out;
  for (Elem c = 0; c < ext.base().q(); ++c)
    if (seen[c]) out.push_back(c);
  return out;
}

inline std::vector<Elem> i_w_set(const QuadExt& ext, Elem w) { return i_w_set(ext, build_h_plus(ext), w); }

/// #(H+ + H+ w). `h_plus` must be build_h_plus(ext).
inline std::size_t h_plus_translate_sumset_size(const QuadExt& ext, const GeneratorSet& h_plus, Elem w) {
  detail::require(w != 0, Errc::ZeroInput, "translate needs w != 0");
  std::vector<bool> seen(ext.size(), false);
  std::size_t count = 0;
  for (auto z1 : h_plus.members)
    for (auto z2 : h_plus.members) {
      const Elem s = ext.add(z1, ext.mul(z2, w));
      if (!seen[s]) {
        seen[s] = true;
        ++count;
      }
    }
  return count;
}

inline std::size_t h_plus_translate_sumset_size(const QuadExt& ext, Elem w) {
  return h_plus_translate_sumset_size(ext, build_h_plus(ext), w);
}

/// Point count of the projective cubic (X+Y+tZ)(XY-ZX-YZ)+XYZ = 0.
struct CubicCount {
  Elem t = 0;
  std::uint64_t affine = 0;
  std::uint64_t at_infinity = 0;
  std::uint64_t projective = 0;
  /// Affine points with xy(x+y+t) != 0; equals projective - 6 unless t = 0,
  /// where the three excluded affine points collapse to (0,0).
  std::uint64_t affine_outside_axes = 0;
  std::int64_t hasse_weil_deviation = 0;  // projective - (q+1)

  std::int64_t minus_six() const noexcept { return static_cast<std::int64_t>(projective) - 6; }
};

inline CubicCount count_projective_cubic(const Field& f, Elem t) {
  detail::require(f.contains(t), Errc::InvalidArgument, "parameter outside the field");
  detail::require(t != f.neg(1), Errc::ReducibleParameter, "the cubic is reducible at t = -1");
  CubicCount r;
  r.t = t;
  const auto curve = [&](Elem x, Elem y, Elem z) {
    const Elem lin = f.add(f.add(x, y), f.mul(t, z));
    const Elem quad = f.sub(f.sub(f.mul(x, y), f.mul(z, x)), f.mul(y, z));
    return f.add(f.mul(lin, quad), f.mul(f.mul(x, y), z));
  };
  for (Elem x = 0; x < f.q(); ++x)
    for (Elem y = 0; y < f.q(); ++y) {
      if (curve(x, y, 1) != 0) continue;
      ++r.affine;
      if (x != 0 && y != 0 && f.add(f.add(x, y), t) != 0) ++r.affine_outside_axes;
    }
  // Line at infinity: (1 : y : 0) and (0 : 1 : 0).
  for (Elem y = 0; y < f.q(); ++y)
    if (curve(1, y, 0) == 0) ++r.at_infinity;
  if (curve(0, 1, 0) == 0) ++r.at_infinity;
  r.projective = r.affine + r.at_infinity;
  r.hasse_weil_deviation = static_cast<std::int64_t>(r.projective) - static_cast<std::int64_t>(f.q()) - 1;
  return r;
}

inline bool within_hasse_weil(const CubicCount& c, std::uint32_t q) {
  return std::abs(static_cast<double>(c.hasse_weil_deviation)) <= 2.0 * std::sqrt(static_cast<double>(q));
}

struct AdmissibilityReport {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  Family family = Family::plus;
  int minus3_class = 0;  // quadratic character of -3 in F_q
  bool q_gt_12 = false;
  bool admissible = false;
  bool rule_admissible = false;  // the mod-12 congruence rule
  std::string reason;
};

/**
 * Whether (p, k, family) is covered by the 2-quasi-perfect constructions.
 * The decision evaluates eta_q(-3) = (-3)^((q-1)/2) mod p directly and the
 * mod-12 rule; disagreement throws Mismatch.
 */
inline AdmissibilityReport admissibility(std::uint32_t p, std::uint32_t k, Family family) {
  detail::require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
  detail::require(p >= 5, Errc::SmallPrime, "the constructions need p >= 5");
  detail::require(k >= 1, Errc::InvalidArgument, "extension degree must be >= 1");
  AdmissibilityReport r;
  r.p = p;
  r.k = k;
  r.family = family;

  // (q-1)/2 mod (p-1), from q mod 2(p-1).
  const std::uint64_t m2 = 2 * std::uint64_t{p - 1};
  const std::uint64_t q_mod = pow_mod(p, k, m2);
  const std::uint64_t e = ((q_mod + m2 - 1) % m2) / 2;
  r.minus3_class = pow_mod(p - 3, e, p) == 1 ? 1 : -1;

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k && q <= 12; ++i) q *= p;
  r.q_gt_12 = q > 12;

  const std::uint32_t res = p % 12;
  const bool even_k = k % 2 == 0;
  const bool minus3_square_rule = res == 1 || res == 7 || even_k;
  const std::string cls = "p = " + std::to_string(p) + " = " + std::to_string(res) + " mod 12, k = " +
                          std::to_string(k);
  if (family == Family::plus) {
    r.rule_admissible = minus3_square_rule;
    r.admissible = r.minus3_class == 1;
    r.reason = r.admissible ? "-3 is a square in F_q (" + cls + ")" : "-3 is a nonsquare in F_q (" + cls + ")";
  } else {
    r.rule_admissible = !minus3_square_rule && r.q_gt_12;
    r.admissible = r.minus3_class == -1 && r.q_gt_12;
    if (r.minus3_class == 1)
      r.reason = "-3 is a square in F_q (" + cls + ")";
    else if (!r.q_gt_12)
      r.reason = "q = " + std::to_string(q) + " <= 12";
    else
      r.reason = "-3 is a nonsquare in F_q and q > 12 (" + cls + ")";
  }
  detail::require(r.rule_admissible == r.admissible, Errc::Mismatch,
                  "congruence rule and quadratic character disagree for " + cls);
  return r;
}

}  // namespace qplee

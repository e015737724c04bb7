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
 * @file lemmas.hpp
 * @brief Exhaustive checks, over one field F_q, of the counting and
 *        character-sum facts behind the two code families. Each check
 *        enumerates its whole parameter range and reports pass/fail with the
 *        first counterexample.
 */

#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "qplee/cayley_spectrum.hpp"
#include "qplee/finite_field.hpp"
#include "qplee/quadratic_subsets.hpp"
#include "qplee/subset_sums.hpp"

namespace qplee {

struct LemmaResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace lemmas {

inline LemmaResult make(std::string name, bool pass, std::string detail) {
  return {std::move(name), pass, std::move(detail)};
}

/// #{z : N(z) = c} = q + 1 for every c != 0.
inline LemmaResult norm_fibres(const QuadExt& ext) {
  const std::uint32_t q = ext.base().q();
  std::vector<std::uint64_t> count(q, 0);
  for (Elem z = 0; z < ext.size(); ++z) ++count[ext.norm(z)];
  for (Elem c = 1; c < q; ++c)
    if (count[c] != q + 1)
      return make("norm_fibres", false, "#N^-1(" + std::to_string(c) + ") = " + std::to_string(count[c]));
  return make("norm_fibres", true, "every nonzero norm has q+1 preimages");
}

inline LemmaResult norm_multiplicative(const QuadExt& ext) {
  for (Elem a = 0; a < ext.size(); ++a)
    for (Elem b = a; b < ext.size(); ++b)
      if (ext.norm(ext.mul(a, b)) != ext.base().mul(ext.norm(a), ext.norm(b)))
        return make("norm_multiplicative", false, "fails at " + std::to_string(a) + ", " + std::to_string(b));
  return make("norm_multiplicative", true, "N(ab) = N(a)N(b) on all pairs");
}

inline LemmaResult trace_linear(const Field& f) {
  for (Elem a = 0; a < f.q(); ++a) {
    if (f.trace(f.pow(a, f.p())) != f.trace(a))
      return make("trace_linear", false, "Tr(a^p) != Tr(a) at " + std::to_string(a));
    for (Elem b = 0; b < f.q(); ++b)
      if (f.trace(f.add(a, b)) != f.add(f.trace(a), f.trace(b)))
        return make("trace_linear", false, "additivity fails at " + std::to_string(a) + ", " + std::to_string(b));
  }
  return make("trace_linear", true, "Tr additive and Frobenius invariant");
}

inline LemmaResult eta_multiplicative(const Field& f) {
  for (Elem a = 1; a < f.q(); ++a) {
    if ((f.pow(a, (f.q() - 1) / 2) == 1) != (f.eta(a) == 1))
      return make("eta_multiplicative", false, "Euler criterion fails at " + std::to_string(a));
    for (Elem b = 1; b < f.q(); ++b)
      if (f.eta(f.mul(a, b)) != f.eta(a) * f.eta(b))
        return make("eta_multiplicative", false, "fails at " + std::to_string(a) + ", " + std::to_string(b));
  }
  return make("eta_multiplicative", true, "eta(ab) = eta(a)eta(b), Euler criterion");
}

/// #D_c = (q+3)/2 for squares c, (q+1)/2 for nonsquares.
inline LemmaResult d_c_sizes(const Field& f) {
  const std::uint32_t q = f.q();
  for (Elem c = 1; c < q; ++c) {
    const auto size = d_c_set(f, c).size();
    const std::size_t want = f.eta(c) == 1 ? (q + 3) / 2 : (q + 1) / 2;
    if (size != want)
      return make("d_c_sizes", false, "#D_" + std::to_string(c) + " = " + std::to_string(size));
  }
  return make("d_c_sizes", true, "all c != 0");
}

/// #I_w by the square class of N(w), for every w != 0.
inline LemmaResult i_w_sizes(const QuadExt& ext, const GeneratorSet& hp) {
  const std::uint32_t q = ext.base().q();
  for (Elem w = 1; w < ext.size(); ++w) {
    const auto size = i_w_set(ext, hp, w).size();
    const std::size_t want = ext.base().eta(ext.norm(w)) == 1 ? (q + 3) / 2 : (q + 1) / 2;
    if (size != want) return make("i_w_sizes", false, "#I_" + std::to_string(w) + " = " + std::to_string(size));
  }
  return make("i_w_sizes", true, "all w != 0");
}

/// 1 ∈ I_1 iff -3 is a nonsquare or p = 3.
inline LemmaResult one_in_i1(const QuadExt& ext, const GeneratorSet& hp) {
  const Field& f = ext.base();
  const auto i1 = i_w_set(ext, hp, 1);
  const bool has_one = std::binary_search(i1.begin(), i1.end(), Elem{1});
  const bool predicate = f.p() == 3 || f.eta(f.from_int(-3)) == -1;
  return make("one_in_i1", has_one == predicate,
              std::string("1 in I_1: ") + (has_one ? "yes" : "no") + ", predicate: " + (predicate ? "yes" : "no"));
}

/// #(H+ + H+ w) for w ∉ H+ ∪ {0}.
inline LemmaResult translate_sumset_sizes(const QuadExt& ext, const GeneratorSet& hp) {
  const std::uint64_t q = ext.base().q();
  for (Elem w = 1; w < ext.size(); ++w) {
    if (hp.contains(w)) continue;
    const auto size = h_plus_translate_sumset_size(ext, hp, w);
    const std::uint64_t want = ext.base().eta(ext.norm(w)) == 1 ? (q + 1) * (q + 3) / 2 : (q + 1) * (q + 1) / 2;
    if (size != want)
      return make("translate_sumset_sizes", false, "#(H+ + H+ " + std::to_string(w) + ") = " + std::to_string(size));
  }
  return make("translate_sumset_sizes", true, "all w outside H+");
}

/// #H+^(2) = 1 + (q+1)^2/2 and the -3 split of H+^(2) \ (H+ ∪ {0}).
inline LemmaResult h_plus_double(const GeneratorSet& hp) {
  const Field& f = hp.field;
  const std::uint64_t q = f.q();
  const auto h2 = sumset_power(hp, 2);
  const auto hs = dense_set(hp.members, h2.size());
  DenseSet rest = h2 - hs;
  rest.reset(0);
  const bool minus3_square = f.p() != 3 && f.eta(f.from_int(-3)) == 1;
  const std::uint64_t want_rest = minus3_square ? (q + 1) * (q + 1) / 2 : (q - 1) * (q + 1) / 2;
  const bool ok = h2.count() == 1 + (q + 1) * (q + 1) / 2 && rest.count() == want_rest;
  return make("h_plus_double", ok,
              "#H+^(2) = " + std::to_string(h2.count()) + ", #(H+^(2) \\ (H+ ∪ 0)) = " + std::to_string(rest.count()));
}

inline LemmaResult h_plus_triple(const GeneratorSet& hp) {
  auto h3 = sumset_power(hp, 3);
  h3.set(0);
  return make("h_plus_triple", h3.all(), "#(H+^(3) ∪ 0) = " + std::to_string(h3.count()) + " of " +
                                              std::to_string(h3.size()));
}

/// (a,b) ∈ H- + H- iff ab != 0 and (ab/2 - 1)^2 - 1 ∈ SQ ∪ {0}, for (a,b) != 0.
inline LemmaResult h_minus_pair_criterion(const GeneratorSet& hm) {
  const Field& f = hm.field;
  const std::uint32_t q = f.q();
  const auto h2 = sumset_power(hm, 2);
  const Elem half = f.inv(f.from_int(2));
  for (GroupElem g = 1; g < h2.size(); ++g) {
    const Elem t = f.mul(g % q, g / q);
    bool predicate = false;
    if (t != 0) {
      const Elem u = f.sub(f.mul(t, half), 1);
      predicate = f.eta(f.sub(f.square(u), 1)) >= 0;
    }
    if (predicate != h2.test(g)) return make("h_minus_pair_criterion", false, "fails at " + std::to_string(g));
  }
  return make("h_minus_pair_criterion", true, "all (a,b) != 0");
}

/// #H-^(2) = 1 + (q-1)^2/2 and the -3 split of H-^(2) \ (H- ∪ {0}).
inline LemmaResult h_minus_double(const GeneratorSet& hm) {
  const Field& f = hm.field;
  const std::uint64_t q = f.q();
  const auto h2 = sumset_power(hm, 2);
  const auto hs = dense_set(hm.members, h2.size());
  DenseSet rest = h2 - hs;
  rest.reset(0);
  const bool minus3_nonsquare = f.p() != 3 && f.eta(f.from_int(-3)) == -1;
  const std::uint64_t half = (q - 1) * (q - 1) / 2;
  const std::uint64_t want_rest = minus3_nonsquare ? half : half - (q - 1);
  const bool ok = h2.count() == 1 + half && rest.count() == want_rest;
  return make("h_minus_double", ok,
              "#H-^(2) = " + std::to_string(h2.count()) + ", #(H-^(2) \\ (H- ∪ 0)) = " + std::to_string(rest.count()));
}

/// H-^(3) ∪ {0} is everything iff q >= 13.
inline LemmaResult h_minus_triple(const GeneratorSet& hm) {
  auto h3 = sumset_power(hm, 3);
  h3.set(0);
  const bool want = hm.field.q() >= 13;
  return make("h_minus_triple", h3.all() == want,
              "#(H-^(3) ∪ 0) = " + std::to_string(h3.count()) + " of " + std::to_string(h3.size()));
}

inline LemmaResult gauss_sums(const Field& f) {
  double worst = 0.0;
  for (Elem c = 1; c < f.q(); ++c)
    for (Elem a = 0; a < f.q(); ++a) {
      const auto direct = gauss_quadratic_sum(f, c, a).value();
      const auto closed = gauss_closed_form(f, c, a);
      worst = std::max({worst, std::abs(direct.real() - closed.real()), std::abs(direct.imag() - closed.imag())});
    }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max deviation %.3e", worst);
  return make("gauss_sums", worst <= 1e-9, buf);
}

inline LemmaResult kloosterman_bound(const Field& f) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(f.q()));
  double worst = 0.0;
  for (Elem a = 0; a < f.q(); ++a)
    for (Elem b = 1; b < f.q(); ++b) worst = std::max(worst, std::abs(kloosterman(f, a, b)));
  char buf[96];
  std::snprintf(buf, sizeof buf, "max |K| = %.9f <= %.9f", worst, bound);
  return make("kloosterman_bound", worst <= bound + 1e-9, buf);
}

/// λ_α(H+) = -K_q(1, N(α)) for α != 0.
inline LemmaResult plus_eigenvalue_kloosterman(const QuadExt& ext, const GeneratorSet& hp) {
  double worst = 0.0;
  for (Elem alpha = 1; alpha < ext.size(); ++alpha) {
    const double lambda = eigenvalue(hp, alpha).re;
    worst = std::max(worst, std::abs(lambda + kloosterman(ext.base(), 1, ext.norm(alpha))));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max deviation %.3e", worst);
  return make("plus_eigenvalue_kloosterman", worst <= 1e-9, buf);
}

inline LemmaResult spectrum_bound(const GeneratorSet& h, double bound_sq_arg, std::string name) {
  const auto s = full_spectrum(h);
  const double bound = 2.0 * std::sqrt(bound_sq_arg);
  char buf[96];
  std::snprintf(buf, sizeof buf, "max nontrivial |λ| = %.9f <= %.9f", s.max_nontrivial_abs, bound);
  return make(std::move(name), s.max_nontrivial_abs <= bound + kSpectrumTolerance, buf);
}

/// Hasse-Weil for every t != -1, and #E_t - 6 > 0 when q >= 13.
inline LemmaResult cubic_counts(const Field& f) {
  const Elem minus_one = f.neg(1);
  std::int64_t min_excess = std::numeric_limits<std::int64_t>::max();
  for (Elem t = 0; t < f.q(); ++t) {
    if (t == minus_one) continue;
    const auto c = count_projective_cubic(f, t);
    if (!within_hasse_weil(c, f.q()))
      return make("cubic_counts", false, "Hasse-Weil fails at t = " + std::to_string(t));
    min_excess = std::min(min_excess, c.minus_six());
  }
  const bool needs_positive = f.q() >= 13;
  const bool ok = !needs_positive || min_excess > 0;
  return make("cubic_counts", ok, "Hasse-Weil holds; min #E_t - 6 = " + std::to_string(min_excess));
}

inline LemmaResult reciprocity(std::uint32_t lo = 5, std::uint32_t hi = 200) {
  std::uint32_t checked = 0;
  for (std::uint32_t p = lo; p <= hi; ++p) {
    if (!is_prime(p)) continue;
    if (!residue_class_mod12(p).consistent()) return make("reciprocity", false, "fails at p = " + std::to_string(p));
    ++checked;
  }
  return make("reciprocity", true, std::to_string(checked) + " primes in [" + std::to_string(lo) + ", " +
                                       std::to_string(hi) + "]");
}

}  // namespace lemmas

/// The full battery over F_{p^k}.
inline std::vector<LemmaResult> run_lemma_suite(std::uint32_t p, std::uint32_t k,
                                                std::uint64_t square_cap = kDefaultSquareCap) {
  const Field f(p, k, square_cap);
  const QuadExt ext(f);
  const auto hp = build_h_plus(ext);
  const auto hm = build_h_minus(f);
  const double q = f.q();
  std::vector<LemmaResult> out;
  out.push_back(lemmas::trace_linear(f));
  out.push_back(lemmas::eta_multiplicative(f));
  out.push_back(lemmas::norm_fibres(ext));
  out.push_back(lemmas::norm_multiplicative(ext));
  out.push_back(lemmas::d_c_sizes(f));
  out.push_back(lemmas::i_w_sizes(ext, hp));
  out.push_back(lemmas::one_in_i1(ext, hp));
  out.push_back(lemmas::translate_sumset_sizes(ext, hp));
  out.push_back(lemmas::h_plus_double(hp));
  out.push_back(lemmas::h_plus_triple(hp));
  out.push_back(lemmas::h_minus_pair_criterion(hm));
  out.push_back(lemmas::h_minus_double(hm));
  out.push_back(lemmas::h_minus_triple(hm));
  out.push_back(lemmas::gauss_sums(f));
  out.push_back(lemmas::kloosterman_bound(f));
  out.push_back(lemmas::plus_eigenvalue_kloosterman(ext, hp));
  out.push_back(lemmas::spectrum_bound(hp, q, "plus_ramanujan"));
  out.push_back(lemmas::spectrum_bound(hm, q, "minus_almost_ramanujan"));
  out.push_back(lemmas::cubic_counts(f));
  out.push_back(lemmas::reciprocity());
  return out;
}

}  // namespace qplee

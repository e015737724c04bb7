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
 * @file finite_field.hpp
 * @brief Table-backed arithmetic in F_q (q = p^k, p odd), its quadratic
 *        extension F_q[sqrt(delta)], and the exponential sums over F_q that
 *        the Cayley spectra reduce to.
 *
 * Elements of F_q are the integers 0..q-1: the index of a0 + a1 x + ... +
 * a_{k-1} x^{k-1} is sum a_i p^i, so the prime subfield is {0..p-1} and
 * addition is digit-wise mod p. Elements x + sqrt(delta) y of the quadratic
 * extension are indexed x + q y.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "qplee/error.hpp"

namespace qplee {

using Elem = std::uint32_t;

/// Default bound on q^2, the size of the groups F_{q^2} and F_q^2.
inline constexpr std::uint64_t kDefaultSquareCap = std::uint64_t{1} << 26;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = static_cast<std::uint64_t>((unsigned __int128)result * base % mod);
    base = static_cast<std::uint64_t>((unsigned __int128)base * base % mod);
    exp >>= 1;
  }
  return result;
}

namespace detail {

/// Polynomial over F_p, constant term first.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Remainder of `a` modulo the monic polynomial `m`.
inline Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      const std::uint64_t sub = lead * m[j] % p;
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

/// Irreducibility by trial division with every monic polynomial of degree
/// 1..deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Lexicographically smallest monic irreducible of degree k, comparing the
/// tuples (a0, ..., a_{k-1}) with a0 most significant.
inline Poly smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  Poly f(k + 1, 0);
  f[k] = 1;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = k; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  raise(Errc::Mismatch, "no irreducible polynomial of degree " + std::to_string(k) + " over F_" + std::to_string(p));
}

}  // namespace detail

/**
 * An immutable finite field F_{p^k}, p odd. Copies share the same tables,
 * so a Field can be passed by value and read concurrently.
 *
 * Multiplication uses log/antilog tables built from a primitive element;
 * `mul_reference` is the schoolbook polynomial product the tables are
 * built from.
 */
class Field {
 public:
  Field(std::uint32_t p, std::uint32_t k, std::uint64_t square_cap = kDefaultSquareCap) {
    detail::require(k >= 1, Errc::InvalidArgument, "extension degree must be >= 1");
    detail::require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
    detail::require(p != 2, Errc::EvenPrime, "characteristic 2 is not supported");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      q *= p;
      detail::require(q * q <= square_cap, Errc::SizeCapExceeded,
                      "q^2 exceeds the cap " + std::to_string(square_cap));
    }
    auto t = std::make_shared<Tables>();
    t->p = p;
    t->k = k;
    t->q = static_cast<std::uint32_t>(q);
    if (k == 1) {
      t->modulus = {0, 1};
    } else {
      t->modulus = detail::smallest_irreducible(p, k);
    }
    t_ = t;
    build_tables(*t);
  }

  std::uint32_t p() const noexcept { return t_->p; }
  std::uint32_t k() const noexcept { return t_->k; }
  std::uint32_t q() const noexcept { return t_->q; }
  /// Monic modulus, constant term first (x for k = 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return t_->modulus; }
  Elem primitive_element() const noexcept { return t_->generator; }

  bool contains(Elem a) const noexcept { return a < q(); }

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept {
    const auto pp = static_cast<std::int64_t>(p());
    return static_cast<Elem>(((v % pp) + pp) % pp);
  }

  std::uint32_t digit(Elem a, std::uint32_t i) const noexcept {
    for (std::uint32_t j = 0; j < i; ++j) a /= p();
    return a % p();
  }

  std::vector<std::uint32_t> coefficients(Elem a) const {
    std::vector<std::uint32_t> c(k());
    for (auto& ci : c) {
      ci = a % p();
      a /= p();
    }
    return c;
  }

  Elem from_coefficients(std::span<const std::uint32_t> c) const {
    Elem a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p() + c[i] % p();
    return a;
  }

  Elem add(Elem a, Elem b) const noexcept {
    const std::uint32_t pp = p();
    if (k() == 1) {
      const Elem s = a + b;
      return s >= pp ? s - pp : s;
    }
    Elem r = 0, place = 1;
    for (std::uint32_t i = 0; i < k(); ++i) {
      std::uint32_t d = a % pp + b % pp;
      if (d >= pp) d -= pp;
      r += d * place;
      place *= pp;
      a /= pp;
      b /= pp;
    }
    return r;
  }

  Elem neg(Elem a) const noexcept {
    const std::uint32_t pp = p();
    if (k() == 1) return a == 0 ? 0 : pp - a;
    Elem r = 0, place = 1;
    for (std::uint32_t i = 0; i < k(); ++i) {
      const std::uint32_t d = a % pp;
      r += (d == 0 ? 0 : pp - d) * place;
      place *= pp;
      a /= pp;
    }
    return r;
  }

  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
  }

  Elem inv(Elem a) const {
    detail::require(a != 0, Errc::DivisionByZero, "inverse of zero");
    const std::uint32_t order = q() - 1;
    return t_->exp[(order - t_->log[a]) % order];
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = q() - 1;
    return t_->exp[(t_->log[a] * (e % order)) % order];
  }

  Elem square(Elem a) const noexcept { return mul(a, a); }

  /// Tr_{F_q/F_p}(a) as an element of the prime subfield.
  Elem trace(Elem a) const noexcept { return t_->trace[a]; }

  /// Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
  int eta(Elem a) const noexcept { return t_->eta[a]; }

  /// Product of coefficient vectors reduced by the modulus.
  Elem mul_reference(Elem a, Elem b) const {
    if (k() == 1) return static_cast<Elem>(std::uint64_t{a} * b % p());
    const std::uint32_t pp = p(), kk = k();
    const auto ca = coefficients(a), cb = coefficients(b);
    detail::Poly prod(2 * kk - 1, 0);
    for (std::uint32_t i = 0; i < kk; ++i)
      for (std::uint32_t j = 0; j < kk; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % pp);
    auto rem = detail::poly_rem(std::move(prod), modulus(), pp);
    rem.resize(kk, 0);
    return from_coefficients(rem);
  }

 private:
  struct Tables {
    std::uint32_t p = 0, k = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    Elem generator = 0;
    std::vector<Elem> exp;            // 2(q-1) entries
    std::vector<std::uint32_t> log;   // log[0] unused
    std::vector<Elem> trace;
    std::vector<std::int8_t> eta;
  };

  // Runs once from the constructor while `t` is still private to it.
  void build_tables(Tables& tables) {
    Tables* t = &tables;
    const std::uint32_t q = t->q, order = q - 1;
    for (Elem g = 2; g < q; ++g) {
      std::uint32_t n = 1;
      Elem x = g;
      while (x != 1) {
        x = mul_reference(x, g);
        ++n;
      }
      if (n == order) {
        t->generator = g;
        break;
      }
    }
    if (t->generator == 0) raise(Errc::Mismatch, "no primitive element found");
    t->exp.assign(2 * std::size_t{order}, 0);
    t->log.assign(q, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
      t->exp[i] = x;
      t->exp[i + order] = x;
      t->log[x] = i;
      x = mul_reference(x, t->generator);
    }
    t->eta.assign(q, 0);
    for (Elem a = 1; a < q; ++a) t->eta[a] = (t->log[a] % 2 == 0) ? 1 : -1;
    t->trace.assign(q, 0);
    for (Elem a = 0; a < q; ++a) {
      Elem sum = 0, frob = a;
      for (std::uint32_t i = 0; i < t->k; ++i) {
        sum = add(sum, frob);
        frob = pow(frob, t->p);
      }
      if (sum >= t->p) raise(Errc::Mismatch, "trace left the prime subfield");
      t->trace[a] = sum;
    }
  }

  std::shared_ptr<const Tables> t_;
};

inline Field make_field(std::uint32_t p, std::uint32_t k, std::uint64_t square_cap = kDefaultSquareCap) {
  return Field(p, k, square_cap);
}

enum class FieldOp { add, sub, mul, inv, neg, pow };

/// Single dispatch entry point; `b` is the exponent for `pow` and ignored
/// for `inv` and `neg`.
inline Elem field_arith(const Field& f, FieldOp op, Elem a, std::uint64_t b = 0) {
  detail::require(f.contains(a), Errc::InvalidArgument, "element out of range");
  switch (op) {
    case FieldOp::add: return f.add(a, static_cast<Elem>(b));
    case FieldOp::sub: return f.sub(a, static_cast<Elem>(b));
    case FieldOp::mul: return f.mul(a, static_cast<Elem>(b));
    case FieldOp::inv: return f.inv(a);
    case FieldOp::neg: return f.neg(a);
    case FieldOp::pow: return f.pow(a, b);
  }
  return 0;
}

inline Elem trace(const Field& f, Elem a) { return f.trace(a); }
inline int quad_character(const Field& f, Elem a) { return f.eta(a); }

/// Smallest element index with quadratic character -1.
inline Elem canonical_nonsquare(const Field& f) {
  for (Elem a = 1; a < f.q(); ++a)
    if (f.eta(a) == -1) return a;
  raise(Errc::Mismatch, "field has no nonsquare");
}

/// A point (x, y) of F_q^2; also the element x + sqrt(delta) y of F_{q^2}.
struct Point {
  Elem x = 0;
  Elem y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/**
 * F_{q^2} = F_q[sqrt(delta)] with delta the canonical nonsquare of F_q.
 * Element index x + q y.
 */
class QuadExt {
 public:
  explicit QuadExt(Field base) : base_(std::move(base)), delta_(canonical_nonsquare(base_)) {}

  const Field& base() const noexcept { return base_; }
  Elem delta() const noexcept { return delta_; }
  std::uint32_t size() const noexcept { return base_.q() * base_.q(); }

  Elem make(Elem x, Elem y) const noexcept { return x + base_.q() * y; }
  Elem make(Point pt) const noexcept { return make(pt.x, pt.y); }
  Point split(Elem z) const noexcept { return {z % base_.q(), z / base_.q()}; }

  Elem add(Elem a, Elem b) const noexcept {
    const auto u = split(a), v = split(b);
    return make(base_.add(u.x, v.x), base_.add(u.y, v.y));
  }
  Elem neg(Elem a) const noexcept {
    const auto u = split(a);
    return make(base_.neg(u.x), base_.neg(u.y));
  }
  Elem mul(Elem a, Elem b) const noexcept {
    const auto& f = base_;
    const auto u = split(a), v = split(b);
    const Elem x = f.add(f.mul(u.x, v.x), f.mul(delta_, f.mul(u.y, v.y)));
    const Elem y = f.add(f.mul(u.x, v.y), f.mul(u.y, v.x));
    return make(x, y);
  }
  Elem conj(Elem a) const noexcept {
    const auto u = split(a);
    return make(u.x, base_.neg(u.y));
  }
  /// x^2 - delta y^2.
  Elem norm(Elem a) const noexcept {
    const auto& f = base_;
    const auto u = split(a);
    return f.sub(f.square(u.x), f.mul(delta_, f.square(u.y)));
  }
  /// Tr_{F_{q^2}/F_q}(x + sqrt(delta) y) = 2x.
  Elem trace_to_base(Elem a) const noexcept {
    const Elem x = split(a).x;
    return base_.add(x, x);
  }
  /// Absolute trace Tr_{F_{q^2}/F_p}.
  Elem trace(Elem a) const noexcept { return base_.trace(trace_to_base(a)); }

 private:
  Field base_;
  Elem delta_;
};

inline Elem norm(const QuadExt& ext, Elem z) { return ext.norm(z); }

/**
 * A sum of p-th roots of unity, kept as the exact histogram of exponents:
 * counts[j] is the number of terms zeta_p^j. `re`/`im` are evaluated from
 * the histogram once.
 */
struct CharacterSum {
  std::uint32_t p = 0;
  std::vector<std::int64_t> counts;
  double re = 0.0;
  double im = 0.0;

  static CharacterSum from_counts(std::uint32_t p, std::vector<std::int64_t> counts) {
    CharacterSum s;
    s.p = p;
    s.counts = std::move(counts);
    for (std::uint32_t j = 0; j < p; ++j) {
      if (s.counts[j] == 0) continue;
      const double angle = 2.0 * std::numbers::pi * j / p;
      s.re += static_cast<double>(s.counts[j]) * std::cos(angle);
      s.im += static_cast<double>(s.counts[j]) * std::sin(angle);
    }
    return s;
  }

  std::int64_t terms() const noexcept {
    std::int64_t n = 0;
    for (auto c : counts) n += c;
    return n;
  }

  std::complex<double> value() const noexcept { return {re, im}; }
};

/// K_q(a, b) as a character sum; b must be nonzero.
inline CharacterSum kloosterman_sum(const Field& f, Elem a, Elem b) {
  detail::require(b != 0, Errc::ZeroSecondArgument, "Kloosterman sum needs b != 0");
  std::vector<std::int64_t> counts(f.p(), 0);
  for (Elem x = 1; x < f.q(); ++x) ++counts[f.trace(f.add(f.mul(a, x), f.div(b, x)))];
  return CharacterSum::from_counts(f.p(), std::move(counts));
}

/// Real value of K_q(a, b). Throws Mismatch if the imaginary part does not
/// vanish.
inline double kloosterman(const Field& f, Elem a, Elem b) {
  const auto s = kloosterman_sum(f, a, b);
  detail::require(std::abs(s.im) <= 1e-9, Errc::Mismatch, "Kloosterman sum has an imaginary part");
  return s.re;
}

/// Sum over x in F_q of zeta_p^{Tr(c x^2 + a x)}, c != 0.
inline CharacterSum gauss_quadratic_sum(const Field& f, Elem c, Elem a) {
  detail::require(c != 0, Errc::ZeroQuadraticCoefficient, "quadratic coefficient must be nonzero");
  std::vector<std::int64_t> counts(f.p(), 0);
  for (Elem x = 0; x < f.q(); ++x) ++counts[f.trace(f.add(f.mul(c, f.square(x)), f.mul(a, x)))];
  return CharacterSum::from_counts(f.p(), std::move(counts));
}

/// (-1)^{k-1} eta(c) sqrt(p*)^k zeta_p^{Tr(-a^2/(4c))}, p* = (-1)^{(p-1)/2} p.
inline std::complex<double> gauss_closed_form(const Field& f, Elem c, Elem a) {
  detail::require(c != 0, Errc::ZeroQuadraticCoefficient, "quadratic coefficient must be nonzero");
  const double sqrt_p = std::sqrt(static_cast<double>(f.p()));
  const std::complex<double> root_pstar =
      (f.p() % 4 == 1) ? std::complex<double>(sqrt_p, 0.0) : std::complex<double>(0.0, sqrt_p);
  std::complex<double> value = std::pow(root_pstar, static_cast<int>(f.k()));
  if (f.k() % 2 == 0) value = -value;
  value *= static_cast<double>(f.eta(c));
  const Elem four_c = f.mul(f.from_int(4), c);
  const Elem exponent = f.trace(f.neg(f.div(f.square(a), four_c)));
  const double angle = 2.0 * std::numbers::pi * exponent / f.p();
  return value * std::complex<double>(std::cos(angle), std::sin(angle));
}

/// The three reciprocity predicates by congruence rule and by direct
/// evaluation of the quadratic character mod p.
struct ReciprocityReport {
  struct Predicates {
    bool minus1_square = false;
    bool three_square = false;
    bool minus3_square = false;
    friend bool operator==(const Predicates&, const Predicates&) = default;
  };
  std::uint32_t p = 0;
  std::uint32_t residue_mod12 = 0;
  Predicates by_rule;
  Predicates by_character;

  bool consistent() const noexcept { return by_rule == by_character; }
};

inline ReciprocityReport residue_class_mod12(std::uint32_t p) {
  detail::require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
  detail::require(p > 3, Errc::SmallPrime, "reciprocity classes need p > 3");
  ReciprocityReport r;
  r.p = p;
  r.residue_mod12 = p % 12;
  r.by_rule.minus1_square = p % 4 == 1;
  r.by_rule.three_square = r.residue_mod12 == 1 || r.residue_mod12 == 11;
  r.by_rule.minus3_square = r.residue_mod12 == 1 || r.residue_mod12 == 7;
  const auto euler = [p](std::uint64_t a) { return pow_mod(a, (p - 1) / 2, p) == 1; };
  r.by_character.minus1_square = euler(p - 1);
  r.by_character.three_square = euler(3);
  r.by_character.minus3_square = euler(p - 3);
  return r;
}

}  // namespace qplee

// Copyright 2026 The besmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace besmub {

/// Largest prime accepted by full group enumeration unless a caller overrides it.
inline constexpr std::uint32_t kDefaultMaxPrime = 101;

/// A validated prime modulus. Construction throws std::invalid_argument for
/// anything that is not prime.
class Prime {
 public:
  explicit Prime(std::uint32_t value);

  std::uint32_t value() const noexcept { return value_; }
  operator std::uint32_t() const noexcept { return value_; }
  bool odd() const noexcept { return value_ != 2; }

  friend bool operator==(Prime a, Prime b) noexcept { return a.value_ == b.value_; }

 private:
  std::uint32_t value_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Canonical residue of x in {0, ..., p-1}.
constexpr std::uint32_t reduce(std::int64_t x, std::uint32_t p) noexcept {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) noexcept;

/// Multiplicative inverse of a nonzero residue. Throws std::domain_error on 0.
std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p);

/// Legendre symbol: 1 for a nonzero square, -1 for a non-square, 0 for x = 0.
int legendre(std::uint32_t x, Prime p);

/// Element of SL(2, Z_p), [[alpha, beta], [gamma, delta]] with residues kept
/// in {0, ..., p-1}. Ordering is lexicographic on (alpha, beta, gamma, delta).
struct Sl2Matrix {
  std::uint32_t p = 2;
  std::uint32_t alpha = 1;
  std::uint32_t beta = 0;
  std::uint32_t gamma = 0;
  std::uint32_t delta = 1;

  /// Reduces the entries mod p and checks the determinant.
  /// Throws std::invalid_argument if det != 1.
  static Sl2Matrix make(Prime p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static Sl2Matrix identity(Prime p) noexcept;

  std::uint32_t trace() const noexcept { return (alpha + delta) % p; }
  std::uint32_t det() const noexcept;

  friend auto operator<=>(const Sl2Matrix &, const Sl2Matrix &) = default;
};

/// Product mod p. Throws std::invalid_argument if the moduli differ.
Sl2Matrix sl2_mul(const Sl2Matrix &a, const Sl2Matrix &b);
/// Adjugate [[delta, -beta], [-gamma, alpha]].
Sl2Matrix sl2_inv(const Sl2Matrix &a) noexcept;

inline Sl2Matrix operator*(const Sl2Matrix &a, const Sl2Matrix &b) { return sl2_mul(a, b); }

/// Tr(a^-1 b) mod p without forming the product.
inline std::uint32_t trace_of_quotient(const Sl2Matrix &a, const Sl2Matrix &b) noexcept {
  const std::uint64_t p = a.p;
  const std::uint64_t pos = std::uint64_t{a.delta} * b.alpha + std::uint64_t{a.alpha} * b.delta;
  const std::uint64_t neg = std::uint64_t{a.beta} * b.gamma + std::uint64_t{a.gamma} * b.beta;
  return static_cast<std::uint32_t>((pos + 2 * p * p - neg) % p);
}

/// "[[a,b],[c,d]]"; with signed_form residues above p/2 print as negatives.
std::string to_string(const Sl2Matrix &m, bool signed_form = false);

/// All p(p^2-1) elements in lexicographic order. Throws std::out_of_range when
/// p exceeds max_prime.
std::vector<Sl2Matrix> enumerate_sl2(Prime p, std::uint32_t max_prime = kDefaultMaxPrime);

/// Number of group elements with each trace value. Requires odd p.
std::map<std::uint32_t, std::uint64_t> trace_class_counts(Prime p);

/// Closed-form count for one trace value: p(p+1), p(p-1) or p^2 depending on
/// the Legendre symbol of t^2 - 4.
std::uint64_t expected_trace_class_count(std::uint32_t t, Prime p);

constexpr std::uint64_t group_order(std::uint64_t p) noexcept { return p * (p * p - 1); }

}  // namespace besmub

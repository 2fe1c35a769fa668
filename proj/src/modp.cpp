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

#include "besmub/modp.hpp"

#include <sstream>
#include <stdexcept>

namespace besmub {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint32_t value) : value_(value) {
  if (!is_prime(value)) {
    throw std::invalid_argument("p = " + std::to_string(value) + " is not prime");
  }
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) noexcept {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p) {
  x %= p;
  if (x == 0) throw std::domain_error("0 has no inverse mod " + std::to_string(p));
  // Extended Euclid on (x, p).
  std::int64_t r0 = p, r1 = x, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return reduce(s0, p);
}

int legendre(std::uint32_t x, Prime p) {
  x %= p.value();
  if (x == 0) return 0;
  if (p.value() == 2) return 1;
  return pow_mod(x, (p.value() - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint32_t Sl2Matrix::det() const noexcept {
  const std::uint64_t q = p;
  return static_cast<std::uint32_t>((std::uint64_t{alpha} * delta + q * q - std::uint64_t{beta} * gamma) % q);
}

Sl2Matrix Sl2Matrix::make(Prime p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  Sl2Matrix m{p.value(), reduce(a, p), reduce(b, p), reduce(c, p), reduce(d, p)};
  if (m.det() != 1 % p.value()) {
    throw std::invalid_argument("matrix " + to_string(m) + " does not have unit determinant mod " +
                                std::to_string(p.value()));
  }
  return m;
}

Sl2Matrix Sl2Matrix::identity(Prime p) noexcept { return Sl2Matrix{p.value(), 1, 0, 0, 1}; }

Sl2Matrix sl2_mul(const Sl2Matrix &a, const Sl2Matrix &b) {
  if (a.p != b.p) {
    throw std::invalid_argument("sl2_mul: moduli differ (" + std::to_string(a.p) + " vs " + std::to_string(b.p) +
                                ")");
  }
  const std::uint64_t p = a.p;
  auto dot = [p](std::uint64_t x0, std::uint64_t y0, std::uint64_t x1, std::uint64_t y1) {
    return static_cast<std::uint32_t>((x0 * y0 + x1 * y1) % p);
  };
  return Sl2Matrix{a.p,
                   dot(a.alpha, b.alpha, a.beta, b.gamma),
                   dot(a.alpha, b.beta, a.beta, b.delta),
                   dot(a.gamma, b.alpha, a.delta, b.gamma),
                   dot(a.gamma, b.beta, a.delta, b.delta)};
}

Sl2Matrix sl2_inv(const Sl2Matrix &a) noexcept {
  return Sl2Matrix{a.p, a.delta, (a.p - a.beta) % a.p, (a.p - a.gamma) % a.p, a.alpha};
}

std::string to_string(const Sl2Matrix &m, bool signed_form) {
  auto show = [&](std::uint32_t v) -> std::int64_t {
    if (signed_form && v > m.p / 2) return static_cast<std::int64_t>(v) - m.p;
    return v;
  };
  std::ostringstream out;
  out << "[[" << show(m.alpha) << "," << show(m.beta) << "],[" << show(m.gamma) << "," << show(m.delta) << "]]";
  return out.str();
}

std::vector<Sl2Matrix> enumerate_sl2(Prime p, std::uint32_t max_prime) {
  const std::uint32_t q = p.value();
  if (q > max_prime) {
    throw std::out_of_range("p = " + std::to_string(q) + " exceeds the configured maximum " +
                            std::to_string(max_prime));
  }
  std::vector<Sl2Matrix> out;
  out.reserve(group_order(q));
  // Each nonzero first row (alpha, beta) admits exactly p second rows.
  for (std::uint32_t alpha = 0; alpha < q; ++alpha) {
    for (std::uint32_t beta = 0; beta < q; ++beta) {
      if (alpha == 0 && beta == 0) continue;
      if (alpha == 0) {
        const std::uint32_t gamma = reduce(-static_cast<std::int64_t>(inv_mod(beta, q)), q);
        for (std::uint32_t delta = 0; delta < q; ++delta) out.push_back({q, alpha, beta, gamma, delta});
      } else {
        const std::uint32_t alpha_inv = inv_mod(alpha, q);
        for (std::uint32_t gamma = 0; gamma < q; ++gamma) {
          const std::uint32_t delta =
              static_cast<std::uint32_t>((1 + std::uint64_t{beta} * gamma) % q * alpha_inv % q);
          out.push_back({q, alpha, beta, gamma, delta});
        }
      }
    }
  }
  return out;
}

std::map<std::uint32_t, std::uint64_t> trace_class_counts(Prime p) {
  if (!p.odd()) throw std::invalid_argument("trace_class_counts requires odd p");
  std::map<std::uint32_t, std::uint64_t> counts;
  for (std::uint32_t t = 0; t < p; ++t) counts[t] = 0;
  for (const auto &m : enumerate_sl2(p)) ++counts[m.trace()];
  return counts;
}

std::uint64_t expected_trace_class_count(std::uint32_t t, Prime p) {
  const std::uint64_t q = p.value();
  const std::uint32_t disc = reduce(static_cast<std::int64_t>(t) * t - 4, p);
  switch (legendre(disc, p)) {
    case 1:
      return q * (q + 1);
    case -1:
      return q * (q - 1);
    default:
      return q * q;
  }
}

}  // namespace besmub

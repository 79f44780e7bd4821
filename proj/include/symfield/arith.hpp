// Copyright 2026 The symfield Authors
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

// Small integer helpers shared by the field and polynomial layers.

#ifndef SYMFIELD_ARITH_HPP_
#define SYMFIELD_ARITH_HPP_

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "symfield/error.hpp"

namespace symfield {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ExponentOverflow("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ExponentOverflow("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

// base^exp when it does not exceed `limit`; nothing otherwise.
inline std::optional<std::uint64_t> pow_within(std::uint64_t base, std::uint64_t exp,
                                               std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > limit / base) return std::nullopt;
    out *= base;
  }
  if (out > limit) return std::nullopt;
  return out;
}

inline std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

// Multiplicative order of p modulo n, i.e. the least k >= 1 with n | p^k - 1.
// For n = 1 this is 1. Requires gcd(p, n) = 1.
inline unsigned multiplicative_order(std::uint64_t p, std::uint64_t n) {
  if (n == 0 || std::gcd(p, n) != 1) {
    throw DomainError("multiplicative order of " + std::to_string(p) + " modulo " +
                      std::to_string(n) + " is undefined");
  }
  if (n == 1) return 1;
  unsigned k = 1;
  __extension__ using u128 = unsigned __int128;
  u128 acc = p % n;
  while (acc != 1) {
    acc = (acc * p) % n;
    ++k;
  }
  return k;
}

}  // namespace symfield

#endif  // SYMFIELD_ARITH_HPP_

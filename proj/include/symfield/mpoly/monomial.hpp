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

#ifndef SYMFIELD_MPOLY_MONOMIAL_HPP_
#define SYMFIELD_MPOLY_MONOMIAL_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "symfield/arith.hpp"

namespace symfield {

// Variables in their fixed order. The two-variable Newton side uses X, Y for
// x, y.
enum class Var : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Var, 3> kAllVars = {Var::X, Var::Y, Var::Z};

inline char var_name(Var v) { return "XYZ"[static_cast<int>(v)]; }

// Exponent triple (a, b, c) for X^a Y^b Z^c. The total degree is cached and
// must fit in 64 bits; construction throws ExponentOverflow otherwise.
class Monomial {
 public:
  constexpr Monomial() = default;
  Monomial(std::uint64_t x, std::uint64_t y, std::uint64_t z)
      : e_{x, y, z}, degree_(checked_add(checked_add(x, y), z)) {}

  static Monomial of(Var v, std::uint64_t e) {
    Monomial m;
    m.e_[static_cast<int>(v)] = e;
    m.degree_ = e;
    return m;
  }

  std::uint64_t operator[](Var v) const noexcept { return e_[static_cast<int>(v)]; }
  std::uint64_t operator[](int i) const noexcept { return e_[i]; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& m) const noexcept {
    return e_[0] <= m.e_[0] && e_[1] <= m.e_[1] && e_[2] <= m.e_[2];
  }

  // Same monomial with the exponent of v replaced.
  Monomial with(Var v, std::uint64_t e) const {
    auto copy = e_;
    copy[static_cast<int>(v)] = e;
    return Monomial(copy[0], copy[1], copy[2]);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial(checked_add(a.e_[0], b.e_[0]), checked_add(a.e_[1], b.e_[1]),
                    checked_add(a.e_[2], b.e_[2]));
  }

  // Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
    Monomial m;
    m.e_ = {a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2]};
    m.degree_ = a.degree_ - b.degree_;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e_ == b.e_; }

  // Graded lexicographic order with X > Y > Z.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

 private:
  std::array<std::uint64_t, 3> e_{};
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = m[0] * 0x9E3779B97F4A7C15ULL;
    h ^= m[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= m[2] * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace symfield

#endif  // SYMFIELD_MPOLY_MONOMIAL_HPP_

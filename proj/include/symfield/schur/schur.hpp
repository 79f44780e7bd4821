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

// Generalized Vandermonde determinants in X, Y, Z and their Schur quotients.
//
// For an exponent pair A > B >= 1 with d = gcd(A, B):
//   R = det [[X^A, Y^A, Z^A], [X^B, Y^B, Z^B], [1, 1, 1]]
//   I = R / (X^d - Y^d)
//   T = R / V(X^d, Y^d, Z^d),   V = (X - Y)(Z - X)(Z - Y)
// and T is the Schur polynomial s_lambda(X^d, Y^d, Z^d) for
// lambda = (A/d - 2, B/d - 1, 0).

#ifndef SYMFIELD_SCHUR_SCHUR_HPP_
#define SYMFIELD_SCHUR_SCHUR_HPP_

#include <array>
#include <cstdint>
#include <string>

#include "symfield/mpoly/multipoly.hpp"

namespace symfield::schur {

// Field-size ceiling for enumeration-based cross-checks.
inline constexpr std::uint64_t kDefaultOracleCeiling = 1'000'000;

struct Partition3 {
  std::array<std::uint64_t, 3> parts{};

  // Throws DomainError unless a >= b >= c.
  static Partition3 make(std::uint64_t a, std::uint64_t b, std::uint64_t c);
  friend bool operator==(const Partition3&, const Partition3&) = default;
};

struct ExponentPair {
  std::uint64_t A = 0;
  std::uint64_t B = 0;
  std::uint64_t d = 0;

  // Throws DomainError unless A > B >= 1.
  static ExponentPair make(std::uint64_t A, std::uint64_t B);

  // (A/d - 2, B/d - 1, 0).
  Partition3 partition() const;
  std::string to_string() const;
};

// V(X^d, Y^d, Z^d) expanded.
template <CoefficientField K>
MultiPoly<K> vandermonde(const K& field, std::uint64_t d);

// det of the matrix with rows (X^e, Y^e, Z^e) for e = e1, e2, e3, by cofactor
// expansion along the first row.
template <CoefficientField K>
MultiPoly<K> alternant(const K& field, std::uint64_t e1, std::uint64_t e2, std::uint64_t e3);

// R, built as an alternant and from its closed three-term form; throws
// ConsistencyError if the two disagree.
template <CoefficientField K>
MultiPoly<K> r_poly(const K& field, const ExponentPair& e);

struct CrossCheck {
  enum class Status { kVerified, kFailed, kSkipped, kNotApplicable };
  Status status = Status::kNotApplicable;
  std::string detail;
};

std::string status_name(CrossCheck::Status s);

template <CoefficientField K>
struct IPoly {
  MultiPoly<K> poly;
  CrossCheck check;
};

// I = R / (X^d - Y^d). The quotient is compared against its factorization
//   Z^A prod_zeta (X - zeta Y) - Z^B prod_xi (X - xi Y) + X^B Y^B prod_theta (X - theta Y)
// (zeta, xi, theta running over the B-th, A-th and (A-B)-th roots of unity
// that are not d-th roots) expanded over a finite field holding those roots.
// Over F_{p^r} that field is F_{p^m} for the least suitable m; over QQ the
// comparison is made modulo the least prime q = 1 mod lcm(A, B, A-B). The
// check is skipped when the needed field exceeds `ceiling` elements and is not
// applicable when the characteristic divides A, B or A-B.
template <CoefficientField K>
IPoly<K> i_poly(const K& field, const ExponentPair& e,
                std::uint64_t ceiling = kDefaultOracleCeiling);

// T = R / V(X^d, Y^d, Z^d).
template <CoefficientField K>
MultiPoly<K> t_poly(const K& field, const ExponentPair& e);

// h_k(X, Y, Z): every monomial of total degree k with coefficient 1.
template <CoefficientField K>
MultiPoly<K> complete_homogeneous(const K& field, std::uint64_t k);

// s_lambda(X^d, Y^d, Z^d) as the quotient of alternants.
template <CoefficientField K>
MultiPoly<K> schur_bialternant(const K& field, const Partition3& lambda, std::uint64_t d);

// (XYZ)^D f(1/X, 1/Y, 1/Z). Throws DomainError if some exponent exceeds D.
template <CoefficientField K>
MultiPoly<K> inverted_transform(const MultiPoly<K>& f, std::uint64_t D);

#define SYMFIELD_DECLARE_SCHUR(K)                                                          \
  extern template MultiPoly<K> vandermonde(const K&, std::uint64_t);                       \
  extern template MultiPoly<K> alternant(const K&, std::uint64_t, std::uint64_t,           \
                                         std::uint64_t);                                   \
  extern template MultiPoly<K> r_poly(const K&, const ExponentPair&);                      \
  extern template IPoly<K> i_poly(const K&, const ExponentPair&, std::uint64_t);           \
  extern template MultiPoly<K> t_poly(const K&, const ExponentPair&);                      \
  extern template MultiPoly<K> complete_homogeneous(const K&, std::uint64_t);              \
  extern template MultiPoly<K> schur_bialternant(const K&, const Partition3&, std::uint64_t); \
  extern template MultiPoly<K> inverted_transform(const MultiPoly<K>&, std::uint64_t);

SYMFIELD_DECLARE_SCHUR(RationalField)
SYMFIELD_DECLARE_SCHUR(GaloisField)

}  // namespace symfield::schur

#endif  // SYMFIELD_SCHUR_SCHUR_HPP_

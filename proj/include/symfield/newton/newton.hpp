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

// Power sums N_m = x^m + y^m, the alternative pairs z, w with
// z^m + w^m = x^m + y^m, and the degree of the symmetric field over the
// field generated by N_{p^r+1}, N_{p^s+1}, N_1 (closed form and by count).
//
// Two-variable polynomials use X and Y for x and y.

#ifndef SYMFIELD_NEWTON_NEWTON_HPP_
#define SYMFIELD_NEWTON_NEWTON_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "symfield/mpoly/multipoly.hpp"
#include "symfield/schur/schur.hpp"

namespace symfield::newton {

inline constexpr std::uint64_t kDefaultOracleCeiling = 1'000'000;
// Largest m expanded monomially by the direct identity check.
inline constexpr std::uint64_t kDirectExpansionLimit = 4096;

// x^m + y^m. Throws DomainError for m = 0.
template <CoefficientField K>
MultiPoly<K> newton_poly(const K& field, std::uint64_t m);

// Degree of the symmetric field over the field generated by N_a, N_b: ab/2
// for ab even, (a-1)b/2 otherwise. Requires a > b >= 1 coprime and, when
// p > 0, p dividing neither a nor b; DomainError otherwise.
std::uint64_t two_generator_degree(std::uint64_t a, std::uint64_t b, std::uint64_t p);

// Whether the Jacobian of (N_a, N_b) is nonzero over characteristic p (0 for
// QQ). Computed symbolically. Requires a > b >= 1.
bool jacobian_nonzero_check(std::uint64_t a, std::uint64_t b, std::uint64_t p);

// Least eta in F_p with X^2 - 2 eta X + eta irreducible. p odd prime.
std::uint32_t find_irreducible_eta(std::uint64_t p);

struct AlternativePair {
  std::uint64_t p = 0;
  std::optional<std::uint32_t> eta;  // absent for p = 2
  ff::FFElement alpha;
  ff::FFElement beta;  // Frobenius conjugate of alpha
  LinearForm<GaloisField> z;  // alpha x + (1 - alpha) y
  LinearForm<GaloisField> w;  // (1 - alpha) x + alpha y

  const ff::FieldSpec& ambient() const { return alpha.field(); }
};

// Odd p: alpha is the first root (by coordinate vector) in F_{p^2} of
// X^2 - 2 eta X + eta for eta = find_irreducible_eta(p), and
// 2 alpha beta = alpha + beta = 2 eta is checked. p = 2: alpha is the first
// primitive cube root of unity in F_4.
AlternativePair build_alternative_pair(std::uint64_t p);

enum class IdentityMode { kDirect, kFrobeniusShortcut };

struct IdentityReport {
  bool holds = false;
  IdentityMode mode = IdentityMode::kDirect;
  std::string m;  // decimal; may exceed 64 bits in shortcut mode
  // Shortcut mode: coefficients of x^m, x^{m-1} y, x y^{m-1}, y^m in
  // z^m + w^m (the middle two coincide when m = 2 and are then merged into
  // the first of them).
  std::optional<std::array<ff::FFElement, 4>> coefficients;
};

// z^m + w^m = x^m + y^m as polynomials. Direct mode expands both powers and
// throws CeilingExceeded above kDirectExpansionLimit; shortcut mode needs
// m = p^j + 1 and throws DomainError otherwise.
IdentityReport verify_newton_identity(const AlternativePair& pair, std::uint64_t m,
                                      IdentityMode mode);

// Shortcut check for m = p^j + 1 with any j, including m beyond 64 bits.
IdentityReport verify_newton_identity_frobenius(const AlternativePair& pair, std::uint64_t j);

struct TowerParams {
  std::uint64_t p = 0;
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::uint64_t m = 0;  // gcd(r, s)

  // Requires p prime and r > s >= 0.
  static TowerParams make(std::uint64_t p, std::uint64_t r, std::uint64_t s);
};

// #{alpha in F_{p^{r-s}} : 2 alpha alpha^{p^s} = alpha + alpha^{p^s}} for odd
// p, #{alpha : alpha^{2^s} = alpha} for p = 2. Needs s >= 1 and
// p^{r-s} <= ceiling. The scan is split over `jobs` threads.
std::uint64_t brute_count_alternatives(const TowerParams& t,
                                       std::uint64_t ceiling = kDefaultOracleCeiling,
                                       unsigned jobs = 1);

enum class DegreeMode { kFormula, kOracle, kBoth };

struct DegreeReport {
  std::optional<std::uint64_t> formula_value;
  std::optional<std::uint64_t> oracle_count;
  std::optional<std::uint64_t> oracle_value;  // oracle_count / 2
  std::optional<bool> agree;                  // both mode only
};

// Closed form: odd p gives 1 when 2m does not divide r - s and (p^m + 1)/2
// when it does; p = 2 gives 2^{m-1}. Refuses s = 0.
DegreeReport degree_of_extension(const TowerParams& t, DegreeMode mode,
                                 std::uint64_t ceiling = kDefaultOracleCeiling,
                                 unsigned jobs = 1);

// g^2 * base. Requires g >= 1.
Rational gcd_reduction_degree(std::uint64_t g, const Rational& base);

struct NewtonTriple {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t p = 0;
  std::uint64_t gcd = 0;
  // p divides a, b, c, a-b, a-c, b-c (all false for p = 0).
  std::array<bool, 6> p_divides{};

  // Requires a > b > c >= 1 and p = 0 or prime.
  static NewtonTriple make(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t p);
  // (A, B) = (a - c, b - c).
  schur::ExponentPair exponent_pair() const;
};

#define SYMFIELD_DECLARE_NEWTON(K) extern template MultiPoly<K> newton_poly(const K&, std::uint64_t);
SYMFIELD_DECLARE_NEWTON(RationalField)
SYMFIELD_DECLARE_NEWTON(GaloisField)

}  // namespace symfield::newton

#endif  // SYMFIELD_NEWTON_NEWTON_HPP_

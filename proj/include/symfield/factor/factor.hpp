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

// Linear-factor search, closed-form factorizations of T, divisibility, and
// the two irreducibility criteria (signatures, Eisenstein-like), plus point
// probes for singularity and the evaluated Z-partial of T_{k,1}.
//
// Absence of linear factors is never reported as irreducibility. Only
// signature_witness and eisenstein_like_check return irreducibility verdicts.

#ifndef SYMFIELD_FACTOR_FACTOR_HPP_
#define SYMFIELD_FACTOR_FACTOR_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "symfield/mpoly/multipoly.hpp"
#include "symfield/schur/schur.hpp"

namespace symfield::factor {

// Default bound on the field order for exhaustive (alpha, beta) scans.
inline constexpr std::uint64_t kDefaultFactorCeiling = 512;

// Z - alpha X - beta Y with its multiplicity.
struct LinearFactor {
  ff::FFElement alpha;
  ff::FFElement beta;
  std::uint64_t multiplicity = 0;
};

struct FactorReport {
  std::vector<LinearFactor> factors;  // ordered by (alpha, beta)
  FPoly residual;                     // input divided by every factor found
  std::uint64_t input_degree_in_z = 0;
  std::uint64_t residual_degree_in_z = 0;
  bool fully_split = false;

  std::uint64_t factor_count() const;
};

// Z - alpha X - beta Y.
FPoly linear_factor_poly(const GaloisField& field, const ff::FFElement& alpha,
                         const ff::FFElement& beta);

// Scans every (alpha, beta) of f's coefficient field in coordinate order and
// strips each factor Z - alpha X - beta Y as often as it divides. Throws
// DomainError on the zero polynomial and CeilingExceeded when the field has
// more than `ceiling` elements.
FactorReport linear_factors_over(const FPoly& f, std::uint64_t ceiling = kDefaultFactorCeiling);

struct FactVerification {
  bool pass = false;
  bool product_matches = false;
  std::uint64_t expected_factors = 0;
  FactorReport report;
};

// T_{q,1} against prod_{alpha != 0,1} (Z - alpha X + (alpha - 1) Y) over F_q,
// q = p^r <= ceiling.
FactVerification verify_fact_eq1(std::uint64_t p, unsigned r,
                                 std::uint64_t ceiling = kDefaultFactorCeiling);

// T_{q^2-1,q-1} against prod_{alpha, beta != 0} (Z - alpha X - beta Y) over
// F_q, q^2 <= ceiling.
FactVerification verify_fact_eq2(std::uint64_t p, unsigned r,
                                 std::uint64_t ceiling = kDefaultFactorCeiling);

// Whether f divides g exactly. Throws DomainError when f is zero.
template <CoefficientField K>
bool divides(const MultiPoly<K>& f, const MultiPoly<K>& g);

// Least m such that F_{p^m} contains the n-th roots of unity for every n
// listed. Throws DomainError when p divides one of them.
unsigned field_for_roots(std::uint64_t p, std::initializer_list<std::uint64_t> orders);

template <CoefficientField K>
struct SignatureWitness {
  enum class Kind { kLower, kUpper };
  Kind kind = Kind::kLower;
  std::uint64_t length = 0;
  typename K::Element root;  // theta (lower) or zeta (upper)
  LinearForm<K> prime_form;  // X - root * Y
  // Multiplicity of prime_form in the Z^j coefficients, j = 0..length for
  // lower witnesses and j = A, A-1, ..., A-length for upper ones.
  std::vector<Multiplicity> checks;
  bool verdict = false;
};

// Lower signatures of I of length B relative to X - theta Y for every
// theta^{A-B} = 1 with theta^d != 1, then upper signatures of length A-B
// relative to X - zeta Y for zeta^B = 1, zeta^d != 1. Refuses (DomainError)
// when B = d or A - B = d, or when the characteristic divides B or A - B.
// Throws FieldTooSmall when the field lacks the roots of unity.
template <CoefficientField K>
std::vector<SignatureWitness<K>> signature_witness(const K& field, const schur::ExponentPair& e);

template <CoefficientField K>
struct EisensteinReport {
  bool verdict = false;
  Multiplicity f0_multiplicity;  // of P in the Z^0 coefficient
  bool f0_is_power = false;      // Z^0 coefficient = unit * P^k
  bool p_divides_f1 = false;     // P | Z^1 coefficient (true when it is zero)
};

// True iff the Z^0 coefficient of f is a unit times a power of P and P does
// not divide the Z^1 coefficient. f must be homogeneous of positive degree.
template <CoefficientField K>
EisensteinReport<K> eisenstein_like_check(const MultiPoly<K>& f, const LinearForm<K>& P);

template <CoefficientField K>
struct SingularProbe {
  typename K::Element value;
  std::array<typename K::Element, 3> partials;  // d/dX, d/dY, d/dZ
  bool singular = false;                        // value and all partials vanish
};

// Throws DomainError for the zero point or an inhomogeneous f.
template <CoefficientField K>
SingularProbe<K> singular_point_probe(const MultiPoly<K>& f,
                                      const std::array<typename K::Element, 3>& point);

template <CoefficientField K>
struct GradEval {
  typename K::Element lhs;  // d/dZ T_{k,1} at (phi, psi, 1)
  typename K::Element rhs;  // (k-1) / ((1-phi)(1-psi))
  bool equal = false;
};

// Requires phi^{k-1} = psi^{k-1} = 1 with phi, psi, 1 pairwise distinct and
// the characteristic dividing neither k nor k-1; DomainError otherwise.
template <CoefficientField K>
GradEval<K> grad_eval_identity(const K& field, std::uint64_t k, const typename K::Element& phi,
                               const typename K::Element& psi);

#define SYMFIELD_DECLARE_FACTOR(K)                                                           \
  extern template bool divides(const MultiPoly<K>&, const MultiPoly<K>&);                    \
  extern template std::vector<SignatureWitness<K>> signature_witness(                        \
      const K&, const schur::ExponentPair&);                                                 \
  extern template EisensteinReport<K> eisenstein_like_check(const MultiPoly<K>&,             \
                                                            const LinearForm<K>&);           \
  extern template SingularProbe<K> singular_point_probe(const MultiPoly<K>&,                 \
                                                        const std::array<K::Element, 3>&);   \
  extern template GradEval<K> grad_eval_identity(const K&, std::uint64_t, const K::Element&, \
                                                 const K::Element&);

SYMFIELD_DECLARE_FACTOR(RationalField)
SYMFIELD_DECLARE_FACTOR(GaloisField)

}  // namespace symfield::factor

#endif  // SYMFIELD_FACTOR_FACTOR_HPP_

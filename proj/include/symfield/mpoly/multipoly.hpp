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

// Sparse polynomials in X, Y, Z over a coefficient field.
//
// Terms are kept sorted by descending graded-lex order (X > Y > Z) with no
// zero coefficients, so two equal polynomials have identical term vectors.
// Values are immutable in practice: every operation returns a fresh value.
//
// Implementations live in src/mpoly and are instantiated for RationalField and
// GaloisField.

#ifndef SYMFIELD_MPOLY_MULTIPOLY_HPP_
#define SYMFIELD_MPOLY_MULTIPOLY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symfield/domain.hpp"
#include "symfield/mpoly/monomial.hpp"

namespace symfield {

template <CoefficientField K>
typename K::Element power(const K& field, typename K::Element base, std::uint64_t e) {
  typename K::Element acc = field.one();
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

template <CoefficientField K>
class MultiPoly {
 public:
  using Field = K;
  using Element = typename K::Element;

  struct Term {
    Monomial mono;
    Element coeff;
    friend bool operator==(const Term& a, const Term& b) {
      return a.mono == b.mono && a.coeff == b.coeff;
    }
  };

  // The zero polynomial.
  explicit MultiPoly(K field) : field_(std::move(field)) {}

  static MultiPoly constant(K field, const Element& c);
  static MultiPoly from_int(K field, std::int64_t n);
  static MultiPoly variable(K field, Var v);
  static MultiPoly monomial(K field, const Element& c, const Monomial& m);
  // Sorts, merges duplicate monomials and drops zero coefficients.
  static MultiPoly from_terms(K field, std::vector<Term> terms);

  const K& field() const noexcept { return field_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Largest term in graded-lex order. Throws DomainError on zero.
  const Term& leading_term() const;
  Element coefficient(const Monomial& m) const;

  // Both are absent for the zero polynomial.
  std::optional<std::uint64_t> total_degree() const;
  std::optional<std::uint64_t> degree_in(Var v) const;

  // Coefficient of v^k, as a polynomial in the remaining variables.
  MultiPoly coefficient_in(Var v, std::uint64_t k) const;

  Element evaluate(const std::array<Element, 3>& point) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    out *= b;
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_field(const MultiPoly& o) const;
  MultiPoly merge(const MultiPoly& o, bool subtract) const;

  K field_;
  std::vector<Term> terms_;
};

template <CoefficientField K>
MultiPoly<K> scalar_mul(const MultiPoly<K>& f, const typename K::Element& c);

template <CoefficientField K>
MultiPoly<K> pow(const MultiPoly<K>& f, std::uint64_t n);

// Quotient q with f = q * g, or nothing when g does not divide f. Division runs
// in graded-lex order; a non-divisible leading monomial proves non-exactness.
template <CoefficientField K>
std::optional<MultiPoly<K>> try_exact_divide(const MultiPoly<K>& f, const MultiPoly<K>& g);

// As try_exact_divide but throws InexactDivision when the remainder is nonzero.
template <CoefficientField K>
MultiPoly<K> exact_divide(const MultiPoly<K>& f, const MultiPoly<K>& g);

// c_x * X + c_y * Y.
template <CoefficientField K>
struct LinearForm {
  K field;
  typename K::Element cx;
  typename K::Element cy;

  MultiPoly<K> to_poly() const;
};

// The form X - theta * Y.
template <CoefficientField K>
LinearForm<K> root_form(const K& field, const typename K::Element& theta) {
  return LinearForm<K>{field, field.one(), -theta};
}

template <CoefficientField K>
MultiPoly<K> substitute(const MultiPoly<K>& f, Var v, const LinearForm<K>& form);

template <CoefficientField K>
MultiPoly<K> partial_derivative(const MultiPoly<K>& f, Var v);

struct Homogeneity {
  enum class Kind { kZero, kHomogeneous, kInhomogeneous };
  Kind kind;
  std::uint64_t degree = 0;  // meaningful only for kHomogeneous

  bool homogeneous() const noexcept { return kind == Kind::kHomogeneous; }
  // The degree when homogeneous; absent otherwise.
  std::optional<std::uint64_t> degree_if_homogeneous() const {
    return homogeneous() ? std::optional<std::uint64_t>(degree) : std::nullopt;
  }
};

template <CoefficientField K>
Homogeneity is_homogeneous(const MultiPoly<K>& f);

// Renames variable i to images[i].
template <CoefficientField K>
MultiPoly<K> permute(const MultiPoly<K>& f, const std::array<Var, 3>& images);

template <CoefficientField K>
bool is_symmetric3(const MultiPoly<K>& f);

// Multiplicity of a linear factor; infinite for the zero polynomial.
struct Multiplicity {
  bool infinite = false;
  std::uint64_t count = 0;

  static Multiplicity finite(std::uint64_t n) { return {false, n}; }
  static Multiplicity unbounded() { return {true, 0}; }

  bool at_least(std::uint64_t n) const noexcept { return infinite || count >= n; }
  bool exactly(std::uint64_t n) const noexcept { return !infinite && count == n; }
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

// Exact multiplicity of `form` as a factor of the bivariate polynomial g.
template <CoefficientField K>
Multiplicity linear_multiplicity(const MultiPoly<K>& g, const LinearForm<K>& form);

// f(X^d, Y^d, Z^d).
template <CoefficientField K>
MultiPoly<K> scale_exponents(const MultiPoly<K>& f, std::uint64_t d);

// Coefficients as residues mod p, keyed by monomial in term order. Rational
// coefficients must be integers; finite-field coefficients must lie in the
// prime field of characteristic p. Throws DomainError otherwise.
template <CoefficientField K>
std::vector<std::pair<Monomial, std::uint32_t>> residues_mod(const MultiPoly<K>& f,
                                                             std::uint32_t p);

#define SYMFIELD_DECLARE_MPOLY(K)                                                               \
  extern template class MultiPoly<K>;                                                           \
  extern template struct LinearForm<K>;                                                         \
  extern template MultiPoly<K> scalar_mul(const MultiPoly<K>&, const K::Element&);              \
  extern template MultiPoly<K> pow(const MultiPoly<K>&, std::uint64_t);                         \
  extern template std::optional<MultiPoly<K>> try_exact_divide(const MultiPoly<K>&,             \
                                                               const MultiPoly<K>&);            \
  extern template MultiPoly<K> exact_divide(const MultiPoly<K>&, const MultiPoly<K>&);          \
  extern template MultiPoly<K> substitute(const MultiPoly<K>&, Var, const LinearForm<K>&);      \
  extern template MultiPoly<K> partial_derivative(const MultiPoly<K>&, Var);                    \
  extern template Homogeneity is_homogeneous(const MultiPoly<K>&);                              \
  extern template MultiPoly<K> permute(const MultiPoly<K>&, const std::array<Var, 3>&);         \
  extern template bool is_symmetric3(const MultiPoly<K>&);                                      \
  extern template Multiplicity linear_multiplicity(const MultiPoly<K>&, const LinearForm<K>&);  \
  extern template MultiPoly<K> scale_exponents(const MultiPoly<K>&, std::uint64_t);             \
  extern template std::vector<std::pair<Monomial, std::uint32_t>> residues_mod(                 \
      const MultiPoly<K>&, std::uint32_t);

SYMFIELD_DECLARE_MPOLY(RationalField)
SYMFIELD_DECLARE_MPOLY(GaloisField)

using QPoly = MultiPoly<RationalField>;
using FPoly = MultiPoly<GaloisField>;

}  // namespace symfield

#endif  // SYMFIELD_MPOLY_MULTIPOLY_HPP_

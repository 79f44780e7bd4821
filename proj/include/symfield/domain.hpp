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

// Coefficient fields for MultiPoly: exact rationals and finite fields.
//
// A coefficient field is a small value object that knows how to produce its
// constants, print and parse its elements, and report its characteristic.
// Element arithmetic goes through the element type's own operators.

#ifndef SYMFIELD_DOMAIN_HPP_
#define SYMFIELD_DOMAIN_HPP_

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "symfield/ff/field.hpp"

namespace symfield {

using Rational = mpq_class;

template <class K>
concept CoefficientField =
    std::equality_comparable<K> &&
    requires(const K& k, const typename K::Element& a, std::int64_t n, std::string_view s) {
      { k.zero() } -> std::same_as<typename K::Element>;
      { k.one() } -> std::same_as<typename K::Element>;
      { k.from_int(n) } -> std::same_as<typename K::Element>;
      { k.from_uint(std::uint64_t{}) } -> std::same_as<typename K::Element>;
      { k.is_zero(a) } -> std::same_as<bool>;
      { k.is_negative(a) } -> std::same_as<bool>;
      { k.characteristic() } -> std::same_as<std::uint64_t>;
      { k.format(a) } -> std::same_as<std::string>;
      { k.serialize(a) } -> std::same_as<std::string>;
      { k.parse_scalar(s) } -> std::same_as<typename K::Element>;
      { k.name() } -> std::same_as<std::string>;
    };

class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t n) const { return Element(static_cast<long>(n)); }
  Element from_uint(std::uint64_t n) const { return Element(static_cast<unsigned long>(n)); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }
  std::uint64_t characteristic() const { return 0; }

  // "-3/2", "5".
  std::string format(const Element& a) const { return a.get_str(); }
  std::string serialize(const Element& a) const { return a.get_str(); }
  // Accepts "n" or "n/m" with an optional leading '-'.
  Element parse_scalar(std::string_view s) const;

  std::string name() const { return "QQ"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class GaloisField {
 public:
  using Element = ff::FFElement;

  explicit GaloisField(const ff::FieldSpec& spec) : spec_(&spec) {}

  const ff::FieldSpec& spec() const noexcept { return *spec_; }

  Element zero() const { return Element::zero(*spec_); }
  Element one() const { return Element::one(*spec_); }
  Element from_int(std::int64_t n) const { return Element::from_int(*spec_, n); }
  Element from_uint(std::uint64_t n) const { return Element(*spec_, spec_->embed(n)); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool is_negative(const Element&) const { return false; }
  std::uint64_t characteristic() const { return spec_->p(); }

  // Prime-field elements print as their residue, others as "[c0,c1,...]".
  std::string format(const Element& a) const;
  // "p^r:[c0,...]".
  std::string serialize(const Element& a) const { return a.to_string(); }
  // Accepts a signed integer, "[c0,...]", or "p^r:[c0,...]".
  Element parse_scalar(std::string_view s) const;

  std::string name() const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.spec_ == b.spec_;
  }

 private:
  const ff::FieldSpec* spec_;
};

static_assert(CoefficientField<RationalField>);
static_assert(CoefficientField<GaloisField>);

}  // namespace symfield

#endif  // SYMFIELD_DOMAIN_HPP_

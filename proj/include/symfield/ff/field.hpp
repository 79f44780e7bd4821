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

// Finite fields F_{p^r} = F_p[a]/(modulus) with a fixed, reproducible modulus.
//
// Elements are stored as a packed integer code of their coordinate vector
// (c0, c1, ..., c_{r-1}) in the power basis 1, a, ..., a^{r-1}. The packing
// puts c0 in the most significant base-p digit, so comparing codes compares
// coordinate vectors lexicographically with the low coordinate first.

#ifndef SYMFIELD_FF_FIELD_HPP_
#define SYMFIELD_FF_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symfield::ff {

class FieldSpec {
 public:
  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  std::uint32_t p() const noexcept { return p_; }
  unsigned r() const noexcept { return r_; }
  // Number of elements, p^r.
  std::uint32_t order() const noexcept { return order_; }

  // Coefficients of the monic modulus, lowest degree first; size r + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  // Whether log/antilog tables back multiplication.
  bool has_tables() const noexcept { return !exp_.empty(); }

  std::vector<std::uint32_t> decode(std::uint32_t code) const;
  std::uint32_t encode(std::span<const std::uint32_t> coords) const;
  // Code of the prime-field element `residue` (taken mod p).
  std::uint32_t embed(std::uint64_t residue) const noexcept;
  std::optional<std::uint32_t> prime_residue(std::uint32_t code) const noexcept;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg(std::uint32_t a) const noexcept;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  // "F_9 = F_3[a]/(a^2 + 1)".
  std::string describe() const;

 private:
  friend const FieldSpec& make_field(std::uint64_t p, unsigned r);
  FieldSpec(std::uint32_t p, unsigned r, std::vector<std::uint32_t> modulus);

  std::uint32_t mul_schoolbook(std::uint32_t a, std::uint32_t b) const;
  void build_tables();

  std::uint32_t p_;
  unsigned r_;
  std::uint32_t order_;
  std::uint32_t unit_place_;  // code of 1, i.e. p^{r-1}
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;  // indexed by code
};

// Returns the field of order p^r whose modulus is the lexicographically
// smallest monic irreducible polynomial of degree r over F_p (coefficients
// compared lowest degree first). For r = 1 the modulus is X. Instances are
// interned: every call with the same (p, r) returns the same object, which
// lives for the rest of the program. Thread-safe.
const FieldSpec& make_field(std::uint64_t p, unsigned r);

class FFElement {
 public:
  FFElement(const FieldSpec& field, std::uint32_t code);

  static FFElement zero(const FieldSpec& field) { return FFElement(field, 0); }
  static FFElement one(const FieldSpec& field) { return FFElement(field, field.embed(1)); }
  static FFElement from_int(const FieldSpec& field, std::int64_t n);
  static FFElement from_coeffs(const FieldSpec& field, std::span<const std::uint32_t> coords);

  const FieldSpec& field() const noexcept { return *field_; }
  std::uint32_t code() const noexcept { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_->decode(code_); }

  bool is_zero() const noexcept { return code_ == 0; }
  bool is_one() const noexcept { return code_ == field_->embed(1); }
  // The residue in [0, p) when the element lies in the prime field.
  std::optional<std::uint32_t> prime_residue() const noexcept {
    return field_->prime_residue(code_);
  }

  FFElement pow(std::uint64_t e) const { return FFElement(*field_, field_->pow(code_, e), 0); }
  FFElement inverse() const;

  FFElement operator-() const { return FFElement(*field_, field_->neg(code_), 0); }
  FFElement& operator+=(const FFElement& o);
  FFElement& operator-=(const FFElement& o);
  FFElement& operator*=(const FFElement& o);
  FFElement& operator/=(const FFElement& o);

  friend FFElement operator+(FFElement a, const FFElement& b) { return a += b; }
  friend FFElement operator-(FFElement a, const FFElement& b) { return a -= b; }
  friend FFElement operator*(FFElement a, const FFElement& b) { return a *= b; }
  friend FFElement operator/(FFElement a, const FFElement& b) { return a /= b; }

  friend bool operator==(const FFElement& a, const FFElement& b) noexcept {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }
  // Lexicographic on coordinate vectors; only meaningful within one field.
  friend std::strong_ordering operator<=>(const FFElement& a, const FFElement& b) noexcept {
    return a.code_ <=> b.code_;
  }

  // "p^r:[c0,c1,...]".
  std::string to_string() const;

 private:
  FFElement(const FieldSpec& field, std::uint32_t code, int /*unchecked*/) noexcept
      : field_(&field), code_(code) {}
  void check_same_field(const FFElement& o) const;

  const FieldSpec* field_;
  std::uint32_t code_;
};

// x^(p^k), with k reduced mod r.
FFElement frobenius(const FFElement& x, std::uint64_t k);

// True iff x lies in the subfield F_{p^m}; m must divide r.
bool in_subfield(const FFElement& x, unsigned m);

// All n solutions of z^n = 1, sorted by coordinate vector. Throws DomainError
// when p | n and FieldTooSmall when n does not divide p^r - 1.
std::vector<FFElement> roots_of_unity(std::uint64_t n, const FieldSpec& field);

// Every element of the field, sorted by coordinate vector.
std::vector<FFElement> all_elements(const FieldSpec& field);

// Parses "p^r:[c0,...]" against `field`.
FFElement parse_element(const FieldSpec& field, std::string_view text);

}  // namespace symfield::ff

#endif  // SYMFIELD_FF_FIELD_HPP_

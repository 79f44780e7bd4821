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

// Text and JSON forms of MultiPoly.
//
// Text: terms in descending graded-lex order joined by " + " / " - ", each
// term "c*X^a*Y^b*Z^c" with unit coefficients, zero exponents and unit
// exponents elided, e.g. "X^2 - 2*X*Y + Y^2". The zero polynomial is "0".
// Over F_{p^r} coefficients are never negative; elements outside the prime
// field print as their coordinate list "[c0,c1,...]".
//
// JSON: [[coeff, [a, b, c]], ...] in the same order, where coeff is the
// field's serialized element ("-3/2" over QQ, "p^r:[c0,...]" over F_{p^r}).

#ifndef SYMFIELD_MPOLY_TEXT_HPP_
#define SYMFIELD_MPOLY_TEXT_HPP_

#include <string>
#include <string_view>

#include "symfield/json.hpp"
#include "symfield/mpoly/multipoly.hpp"

namespace symfield {

template <CoefficientField K>
std::string to_string(const MultiPoly<K>& f);

// Inverse of to_string. Whitespace is ignored and lowercase x, y, z are read
// as X, Y, Z. Throws ParseError on malformed input.
template <CoefficientField K>
MultiPoly<K> parse_poly(const K& field, std::string_view text);

template <CoefficientField K>
Json to_json(const MultiPoly<K>& f);

template <CoefficientField K>
MultiPoly<K> poly_from_json(const K& field, const Json& j);

#define SYMFIELD_DECLARE_TEXT(K)                                             \
  extern template std::string to_string(const MultiPoly<K>&);                \
  extern template MultiPoly<K> parse_poly(const K&, std::string_view);       \
  extern template Json to_json(const MultiPoly<K>&);                         \
  extern template MultiPoly<K> poly_from_json(const K&, const Json&);

SYMFIELD_DECLARE_TEXT(RationalField)
SYMFIELD_DECLARE_TEXT(GaloisField)

}  // namespace symfield

#endif  // SYMFIELD_MPOLY_TEXT_HPP_

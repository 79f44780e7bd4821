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

#include "symfield/mpoly/text.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "symfield/error.hpp"

namespace symfield {
namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (Var v : kAllVars) {
    const std::uint64_t e = m[v];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Splits at top-level occurrences of any char in `seps`, ignoring those
// inside [...]. Each piece keeps its leading separator (if any).
std::vector<std::string_view> split_top(std::string_view s, std::string_view seps,
                                        bool keep_sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '[') ++depth;
    if (c == ']') --depth;
    // A '-' right after '^' or ':' would belong to a literal, which the
    // grammar forbids anyway; treat every top-level sign as a separator.
    if (depth == 0 && i > 0 && seps.find(c) != std::string_view::npos) {
      out.push_back(s.substr(start, i - start));
      start = keep_sep ? i : i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::uint64_t parse_exponent(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) {
    throw ExponentOverflow("exponent '" + std::string(s) + "' does not fit in 64 bits");
  }
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("malformed exponent in '" + std::string(whole) + "'");
  }
  return v;
}

bool is_var_char(char c) {
  return c == 'X' || c == 'Y' || c == 'Z' || c == 'x' || c == 'y' || c == 'z';
}

Var var_of(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'X':
      return Var::X;
    case 'Y':
      return Var::Y;
    default:
      return Var::Z;
  }
}

}  // namespace

template <CoefficientField K>
std::string to_string(const MultiPoly<K>& f) {
  if (f.is_zero()) return "0";
  const K& field = f.field();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = field.is_negative(t.coeff);
    const typename K::Element mag = negative ? typename K::Element(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += field.format(mag);
    } else if (mag == field.one()) {
      out += monomial_text(t.mono);
    } else {
      out += field.format(mag) + "*" + monomial_text(t.mono);
    }
  }
  return out;
}

template <CoefficientField K>
MultiPoly<K> parse_poly(const K& field, std::string_view text) {
  using Term = typename MultiPoly<K>::Term;
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw ParseError("empty polynomial text");

  std::vector<Term> terms;
  for (std::string_view piece : split_top(compact, "+-", true)) {
    bool negative = false;
    if (!piece.empty() && (piece.front() == '+' || piece.front() == '-')) {
      negative = piece.front() == '-';
      piece.remove_prefix(1);
    }
    if (piece.empty()) throw ParseError("dangling sign in '" + std::string(text) + "'");

    typename K::Element coeff = field.one();
    std::array<std::uint64_t, 3> exps{};
    for (std::string_view factor : split_top(piece, "*", false)) {
      if (factor.empty()) throw ParseError("empty factor in '" + std::string(text) + "'");
      if (is_var_char(factor.front())) {
        std::uint64_t e = 1;
        if (factor.size() > 1) {
          if (factor[1] != '^') throw ParseError("malformed variable in '" + std::string(text) + "'");
          e = parse_exponent(factor.substr(2), text);
        }
        auto& slot = exps[static_cast<int>(var_of(factor.front()))];
        slot = checked_add(slot, e);
      } else {
        coeff = coeff * field.parse_scalar(factor);
      }
    }
    if (negative) coeff = -coeff;
    terms.push_back(Term{Monomial(exps[0], exps[1], exps[2]), coeff});
  }
  return MultiPoly<K>::from_terms(field, std::move(terms));
}

template <CoefficientField K>
Json to_json(const MultiPoly<K>& f) {
  Json out = Json::array();
  for (const auto& t : f.terms()) {
    out.push_back(Json::array({f.field().serialize(t.coeff),
                               Json::array({t.mono[0], t.mono[1], t.mono[2]})}));
  }
  return out;
}

template <CoefficientField K>
MultiPoly<K> poly_from_json(const K& field, const Json& j) {
  using Term = typename MultiPoly<K>::Term;
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  std::vector<Term> terms;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[1].is_array() || entry[1].size() != 3) {
      throw ParseError("polynomial term must be [coeff, [a, b, c]]");
    }
    std::string coeff_text;
    if (entry[0].is_string()) {
      coeff_text = entry[0].get<std::string>();
    } else if (entry[0].is_number_integer()) {
      coeff_text = entry[0].dump();
    } else {
      throw ParseError("coefficient must be a string or an integer");
    }
    std::array<std::uint64_t, 3> e{};
    for (int i = 0; i < 3; ++i) {
      if (!entry[1][i].is_number_unsigned()) throw ParseError("exponents must be non-negative integers");
      e[i] = entry[1][i].get<std::uint64_t>();
    }
    terms.push_back(Term{Monomial(e[0], e[1], e[2]), field.parse_scalar(coeff_text)});
  }
  return MultiPoly<K>::from_terms(field, std::move(terms));
}

#define SYMFIELD_INSTANTIATE_TEXT(K)                                  \
  template std::string to_string(const MultiPoly<K>&);                \
  template MultiPoly<K> parse_poly(const K&, std::string_view);       \
  template Json to_json(const MultiPoly<K>&);                         \
  template MultiPoly<K> poly_from_json(const K&, const Json&);

SYMFIELD_INSTANTIATE_TEXT(RationalField)
SYMFIELD_INSTANTIATE_TEXT(GaloisField)

}  // namespace symfield

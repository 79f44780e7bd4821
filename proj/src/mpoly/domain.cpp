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

#include "symfield/domain.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "symfield/error.hpp"

namespace symfield {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational RationalField::parse_scalar(std::string_view s) const {
  std::string_view body = s;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed rational '" + std::string(s) + "'");
  }
  Rational out;
  if (out.set_str(std::string(s), 10) != 0 || sgn(out.get_den()) == 0) {
    throw ParseError("malformed rational '" + std::string(s) + "'");
  }
  out.canonicalize();
  return out;
}

std::string GaloisField::format(const Element& a) const {
  if (auto residue = a.prime_residue()) return std::to_string(*residue);
  std::ostringstream os;
  os << "[";
  const auto coords = a.coeffs();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  os << "]";
  return os.str();
}

GaloisField::Element GaloisField::parse_scalar(std::string_view s) const {
  if (s.empty()) throw ParseError("empty field element");
  if (s.find(':') != std::string_view::npos) return ff::parse_element(*spec_, s);
  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError("malformed field element '" + std::string(s) + "'");
    std::vector<std::uint32_t> coords;
    std::string_view body = s.substr(1, s.size() - 2);
    while (true) {
      const auto comma = body.find(',');
      const std::string_view tok = body.substr(0, comma);
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty() || v >= spec_->p()) {
        throw ParseError("malformed field element '" + std::string(s) + "'");
      }
      coords.push_back(v);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    if (coords.size() != spec_->r()) {
      throw ParseError("element '" + std::string(s) + "' needs " + std::to_string(spec_->r()) +
                       " coordinates");
    }
    return Element::from_coeffs(*spec_, coords);
  }
  bool negative = false;
  std::string_view body = s;
  if (body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw ParseError("malformed field element '" + std::string(s) + "'");
  // Reduce digit by digit so long literals cannot overflow.
  std::uint64_t residue = 0;
  for (char c : body) residue = (residue * 10 + static_cast<std::uint64_t>(c - '0')) % spec_->p();
  Element out = from_uint(residue);
  return negative ? -out : out;
}

std::string GaloisField::name() const {
  return "GF(" + std::to_string(spec_->p()) + "^" + std::to_string(spec_->r()) + ")";
}

}  // namespace symfield

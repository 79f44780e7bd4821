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

#include "symfield/ff/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include "symfield/arith.hpp"
#include "symfield/error.hpp"

namespace symfield::ff {
namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

using UPoly = std::vector<std::uint32_t>;  // over F_p, lowest degree first

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g, over F_p.
UPoly poly_rem(UPoly f, const UPoly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t c = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = (c * g[i]) % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

// Exhaustive scan for a monic factor of degree 1..deg/2.
bool is_irreducible(const UPoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t k = 1; 2 * k <= deg; ++k) {
    const std::uint64_t count = checked_pow(p, k);
    UPoly g(k + 1, 0);
    g[k] = 1;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::uint64_t rest = t;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

UPoly smallest_irreducible(std::uint32_t p, unsigned r) {
  if (r == 1) return {0, 1};
  const std::uint64_t count = checked_pow(p, r);
  UPoly f(r + 1, 0);
  f[r] = 1;
  for (std::uint64_t t = 0; t < count; ++t) {
    // c0 is the most significant digit of t, so t runs in lexicographic order.
    std::uint64_t rest = t;
    for (unsigned i = r; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (f[0] != 0 && is_irreducible(f, p)) return f;
  }
  throw ConsistencyError("no irreducible polynomial of degree " + std::to_string(r) + " over F_" +
                         std::to_string(p));
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t p, unsigned r, std::vector<std::uint32_t> modulus)
    : p_(p),
      r_(r),
      order_(static_cast<std::uint32_t>(checked_pow(p, r))),
      unit_place_(static_cast<std::uint32_t>(checked_pow(p, r - 1))),
      modulus_(std::move(modulus)) {
  if (r_ >= 2 && order_ <= kTableLimit) build_tables();
}

std::vector<std::uint32_t> FieldSpec::decode(std::uint32_t code) const {
  std::vector<std::uint32_t> coords(r_);
  for (unsigned i = r_; i-- > 0;) {
    coords[i] = code % p_;
    code /= p_;
  }
  return coords;
}

std::uint32_t FieldSpec::encode(std::span<const std::uint32_t> coords) const {
  if (coords.size() != r_) {
    throw DomainError("expected " + std::to_string(r_) + " coordinates, got " +
                      std::to_string(coords.size()));
  }
  std::uint32_t code = 0;
  for (std::uint32_t c : coords) {
    if (c >= p_) throw DomainError("coordinate " + std::to_string(c) + " outside [0, p)");
    code = code * p_ + c;
  }
  return code;
}

std::uint32_t FieldSpec::embed(std::uint64_t residue) const noexcept {
  return static_cast<std::uint32_t>(residue % p_) * unit_place_;
}

std::optional<std::uint32_t> FieldSpec::prime_residue(std::uint32_t code) const noexcept {
  if (code % unit_place_ != 0) return std::nullopt;
  return code / unit_place_;
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const noexcept {
  if (r_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (unsigned i = 0; i < r_; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const noexcept {
  if (r_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (unsigned i = 0; i < r_; ++i) {
    const std::uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t FieldSpec::mul_schoolbook(std::uint32_t a, std::uint32_t b) const {
  const auto x = decode(a);
  const auto y = decode(b);
  std::vector<std::uint64_t> prod(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    for (unsigned j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_;
  }
  for (std::size_t k = prod.size(); k-- > r_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (unsigned i = 0; i < r_; ++i) {
      prod[k - r_ + i] = (prod[k - r_ + i] + p_ - (c * modulus_[i]) % p_) % p_;
    }
  }
  std::vector<std::uint32_t> low(r_);
  for (unsigned i = 0; i < r_; ++i) low[i] = static_cast<std::uint32_t>(prod[i]);
  return encode(low);
}

void FieldSpec::build_tables() {
  const std::uint32_t n = order_ - 1;
  const auto factors = prime_factors(n);
  const std::uint32_t one = embed(1);
  auto slow_pow = [&](std::uint32_t base, std::uint64_t e) {
    std::uint32_t acc = one;
    while (e) {
      if (e & 1) acc = mul_schoolbook(acc, base);
      base = mul_schoolbook(base, base);
      e >>= 1;
    }
    return acc;
  };
  std::uint32_t gen = 0;
  for (std::uint32_t c = 1; c < order_; ++c) {
    bool primitive = true;
    for (std::uint64_t f : factors) {
      if (slow_pow(c, n / f) == one) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = c;
      break;
    }
  }
  if (gen == 0) throw ConsistencyError("no primitive element in " + describe());
  exp_.resize(2 * std::size_t{n});
  log_.assign(order_, 0);
  std::uint32_t acc = one;
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[i] = acc;
    exp_[i + n] = acc;
    log_[acc] = i;
    acc = mul_schoolbook(acc, gen);
  }
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (r_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  if (has_tables()) return exp_[log_[a] + log_[b]];
  return mul_schoolbook(a, b);
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("division by zero in " + describe());
  if (has_tables()) return exp_[(order_ - 1) - log_[a]];
  return pow(a, order_ - 2);
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return embed(1);
  if (a == 0) return 0;
  if (has_tables()) {
    const std::uint64_t n = order_ - 1;
    return exp_[static_cast<std::size_t>((std::uint64_t{log_[a]} * (e % n)) % n)];
  }
  std::uint32_t acc = embed(1);
  std::uint32_t base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "F_" << order_;
  if (r_ == 1) return os.str();
  os << " = F_" << p_ << "[a]/(";
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const std::uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "a";
    if (i > 1) os << "^" << i;
  }
  os << ")";
  return os.str();
}

const FieldSpec& make_field(std::uint64_t p, unsigned r) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (r < 1) throw DomainError("extension degree must be at least 1");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < r; ++i) {
    order *= p;
    if (order > kMaxOrder) {
      throw DomainError("field of order " + std::to_string(p) + "^" + std::to_string(r) +
                        " exceeds the supported size 2^31");
    }
  }

  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FieldSpec>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, r}];
  if (!slot) {
    const auto p32 = static_cast<std::uint32_t>(p);
    slot.reset(new FieldSpec(p32, r, smallest_irreducible(p32, r)));
  }
  return *slot;
}

FFElement::FFElement(const FieldSpec& field, std::uint32_t code) : field_(&field), code_(code) {
  if (code >= field.order()) {
    throw DomainError("element code " + std::to_string(code) + " outside " + field.describe());
  }
}

FFElement FFElement::from_int(const FieldSpec& field, std::int64_t n) {
  const std::int64_t p = field.p();
  const std::int64_t res = ((n % p) + p) % p;
  return FFElement(field, field.embed(static_cast<std::uint64_t>(res)), 0);
}

FFElement FFElement::from_coeffs(const FieldSpec& field, std::span<const std::uint32_t> coords) {
  return FFElement(field, field.encode(coords), 0);
}

void FFElement::check_same_field(const FFElement& o) const {
  if (field_ != o.field_) {
    throw FieldMismatch("elements of " + field_->describe() + " and " + o.field_->describe() +
                        " do not mix");
  }
}

FFElement FFElement::inverse() const { return FFElement(*field_, field_->inv(code_), 0); }

FFElement& FFElement::operator+=(const FFElement& o) {
  check_same_field(o);
  code_ = field_->add(code_, o.code_);
  return *this;
}

FFElement& FFElement::operator-=(const FFElement& o) {
  check_same_field(o);
  code_ = field_->sub(code_, o.code_);
  return *this;
}

FFElement& FFElement::operator*=(const FFElement& o) {
  check_same_field(o);
  code_ = field_->mul(code_, o.code_);
  return *this;
}

FFElement& FFElement::operator/=(const FFElement& o) {
  check_same_field(o);
  code_ = field_->mul(code_, field_->inv(o.code_));
  return *this;
}

std::string FFElement::to_string() const {
  std::ostringstream os;
  os << field_->p() << "^" << field_->r() << ":[";
  const auto coords = coeffs();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  os << "]";
  return os.str();
}

FFElement frobenius(const FFElement& x, std::uint64_t k) {
  const FieldSpec& f = x.field();
  FFElement out = x;
  for (std::uint64_t i = 0; i < k % f.r(); ++i) out = out.pow(f.p());
  return out;
}

bool in_subfield(const FFElement& x, unsigned m) {
  const unsigned r = x.field().r();
  if (m == 0 || r % m != 0) {
    throw DomainError("F_{p^" + std::to_string(m) + "} is not a subfield of " +
                      x.field().describe());
  }
  return frobenius(x, m) == x;
}

std::vector<FFElement> roots_of_unity(std::uint64_t n, const FieldSpec& field) {
  if (n == 0) throw DomainError("roots of unity of order 0 are undefined");
  if (n % field.p() == 0) {
    throw DomainError("z^" + std::to_string(n) + " = 1 has repeated roots in characteristic " +
                      std::to_string(field.p()));
  }
  const std::uint64_t group = field.order() - 1;
  if (group % n != 0) {
    const unsigned need = multiplicative_order(field.p(), n);
    throw FieldTooSmall(field.describe() + " lacks the " + std::to_string(n) +
                            "-th roots of unity; need degree " + std::to_string(need),
                        need);
  }
  std::vector<FFElement> out;
  out.reserve(n);
  for (std::uint32_t c = 1; c < field.order(); ++c) {
    if (field.pow(c, n) == field.embed(1)) out.emplace_back(field, c);
  }
  if (out.size() != n) {
    throw ConsistencyError("found " + std::to_string(out.size()) + " roots of z^" +
                           std::to_string(n) + " = 1 in " + field.describe());
  }
  return out;
}

std::vector<FFElement> all_elements(const FieldSpec& field) {
  std::vector<FFElement> out;
  out.reserve(field.order());
  for (std::uint32_t c = 0; c < field.order(); ++c) out.emplace_back(field, c);
  return out;
}

FFElement parse_element(const FieldSpec& field, std::string_view text) {
  auto fail = [&]() -> FFElement {
    throw ParseError("malformed field element '" + std::string(text) + "' for " +
                     field.describe());
  };
  auto read_uint = [&](std::string_view& s) -> std::uint64_t {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr == s.data()) fail();
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return v;
  };
  std::string_view s = text;
  const std::uint64_t p = read_uint(s);
  if (s.empty() || s.front() != '^') fail();
  s.remove_prefix(1);
  const std::uint64_t r = read_uint(s);
  if (p != field.p() || r != field.r()) {
    throw FieldMismatch("element '" + std::string(text) + "' does not belong to " +
                        field.describe());
  }
  if (s.size() < 2 || s.substr(0, 2) != ":[") fail();
  s.remove_prefix(2);
  std::vector<std::uint32_t> coords;
  while (true) {
    const std::uint64_t c = read_uint(s);
    if (c >= p) fail();
    coords.push_back(static_cast<std::uint32_t>(c));
    if (s.empty()) fail();
    if (s.front() == ']') break;
    if (s.front() != ',') fail();
    s.remove_prefix(1);
  }
  s.remove_prefix(1);
  if (!s.empty() || coords.size() != r) fail();
  return FFElement::from_coeffs(field, coords);
}

}  // namespace symfield::ff

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

#include "symfield/schur/schur.hpp"

#include <numeric>
#include <type_traits>
#include <vector>

#include "symfield/error.hpp"

namespace symfield::schur {
namespace {

template <CoefficientField K>
MultiPoly<K> mono(const K& field, std::int64_t c, std::uint64_t a, std::uint64_t b,
                  std::uint64_t z) {
  return MultiPoly<K>::monomial(field, field.from_int(c), Monomial(a, b, z));
}

// X^n - Y^n.
template <CoefficientField K>
MultiPoly<K> binomial_difference(const K& field, std::uint64_t n) {
  return mono(field, 1, n, 0, 0) - mono(field, 1, 0, n, 0);
}

FPoly product_form(const GaloisField& L, const ExponentPair& e) {
  auto product_over = [&](std::uint64_t n) {
    FPoly acc = FPoly::from_int(L, 1);
    for (const auto& z : ff::roots_of_unity(n, L.spec())) {
      if (z.pow(e.d).is_one()) continue;
      acc *= root_form(L, z).to_poly();
    }
    return acc;
  };
  return mono(L, 1, 0, 0, e.A) * product_over(e.B) - mono(L, 1, 0, 0, e.B) * product_over(e.A) +
         mono(L, 1, e.B, e.B, 0) * product_over(e.A - e.B);
}

template <CoefficientField K>
CrossCheck compare_mod(const MultiPoly<K>& quotient, const GaloisField& L, const ExponentPair& e) {
  const std::uint32_t p = L.spec().p();
  const FPoly expected = product_form(L, e);
  try {
    if (residues_mod(quotient, p) == residues_mod(expected, p)) {
      return {CrossCheck::Status::kVerified, "product form agrees over " + L.name()};
    }
  } catch (const DomainError& err) {
    return {CrossCheck::Status::kFailed, std::string("product form over ") + L.name() + ": " +
                                             err.what()};
  }
  return {CrossCheck::Status::kFailed, "product form disagrees over " + L.name()};
}

}  // namespace

Partition3 Partition3::make(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (a < b || b < c) {
    throw DomainError("partition parts must be non-increasing, got (" + std::to_string(a) + ", " +
                      std::to_string(b) + ", " + std::to_string(c) + ")");
  }
  return Partition3{{a, b, c}};
}

ExponentPair ExponentPair::make(std::uint64_t A, std::uint64_t B) {
  if (B < 1 || A <= B) {
    throw DomainError("exponent pair needs A > B >= 1, got A=" + std::to_string(A) +
                      " B=" + std::to_string(B));
  }
  return ExponentPair{A, B, std::gcd(A, B)};
}

Partition3 ExponentPair::partition() const {
  // A/d >= 2 and B/d >= 1 always hold since A > B >= d.
  return Partition3::make(A / d - 2, B / d - 1, 0);
}

std::string ExponentPair::to_string() const {
  return "(A=" + std::to_string(A) + ", B=" + std::to_string(B) + ", d=" + std::to_string(d) + ")";
}

std::string status_name(CrossCheck::Status s) {
  switch (s) {
    case CrossCheck::Status::kVerified:
      return "verified";
    case CrossCheck::Status::kFailed:
      return "failed";
    case CrossCheck::Status::kSkipped:
      return "skipped";
    case CrossCheck::Status::kNotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

template <CoefficientField K>
MultiPoly<K> vandermonde(const K& field, std::uint64_t d) {
  if (d < 1) throw DomainError("vandermonde needs d >= 1");
  const auto x = mono(field, 1, d, 0, 0);
  const auto y = mono(field, 1, 0, d, 0);
  const auto z = mono(field, 1, 0, 0, d);
  return (x - y) * (z - x) * (z - y);
}

template <CoefficientField K>
MultiPoly<K> alternant(const K& field, std::uint64_t e1, std::uint64_t e2, std::uint64_t e3) {
  using Term = typename MultiPoly<K>::Term;
  const auto one = field.one();
  const typename K::Element minus = -field.one();
  // X^e1 (Y^e2 Z^e3 - Y^e3 Z^e2) - Y^e1 (X^e2 Z^e3 - X^e3 Z^e2) + Z^e1 (X^e2 Y^e3 - X^e3 Y^e2)
  std::vector<Term> terms = {
      {Monomial(e1, e2, e3), one},   {Monomial(e1, e3, e2), minus},
      {Monomial(e2, e1, e3), minus}, {Monomial(e3, e1, e2), one},
      {Monomial(e2, e3, e1), one},   {Monomial(e3, e2, e1), minus},
  };
  return MultiPoly<K>::from_terms(field, std::move(terms));
}

template <CoefficientField K>
MultiPoly<K> r_poly(const K& field, const ExponentPair& e) {
  MultiPoly<K> det = alternant(field, e.A, e.B, 0);
  MultiPoly<K> closed = mono(field, 1, 0, 0, e.A) * binomial_difference(field, e.B) -
                        mono(field, 1, 0, 0, e.B) * binomial_difference(field, e.A) +
                        mono(field, 1, e.B, e.B, 0) * binomial_difference(field, e.A - e.B);
  if (!(det == closed)) {
    throw ConsistencyError("cofactor and closed forms of R disagree for " + e.to_string());
  }
  return det;
}

template <CoefficientField K>
IPoly<K> i_poly(const K& field, const ExponentPair& e, std::uint64_t ceiling) {
  IPoly<K> out{exact_divide(r_poly(field, e), binomial_difference(field, e.d)), {}};

  if constexpr (std::is_same_v<K, GaloisField>) {
    const std::uint64_t p = field.characteristic();
    if (e.A % p == 0 || e.B % p == 0 || (e.A - e.B) % p == 0) {
      out.check = {CrossCheck::Status::kNotApplicable,
                   "characteristic " + std::to_string(p) + " divides A, B or A-B"};
      return out;
    }
    const std::uint64_t m = lcm_checked(
        lcm_checked(multiplicative_order(p, e.A), multiplicative_order(p, e.B)),
        multiplicative_order(p, e.A - e.B));
    const auto size = pow_within(p, m, ceiling);
    if (!size || *size > (std::uint64_t{1} << 31)) {
      out.check = {CrossCheck::Status::kSkipped,
                   "roots of unity need F_" + std::to_string(p) + "^" + std::to_string(m) +
                       ", above the ceiling " + std::to_string(ceiling)};
      return out;
    }
    out.check = compare_mod(out.poly, GaloisField(ff::make_field(p, static_cast<unsigned>(m))), e);
  } else {
    const std::uint64_t L = lcm_checked(lcm_checked(e.A, e.B), e.A - e.B);
    for (std::uint64_t q = L + 1; q <= ceiling && q < (std::uint64_t{1} << 31); q += L) {
      if (!is_prime(q)) continue;
      out.check = compare_mod(out.poly, GaloisField(ff::make_field(q, 1)), e);
      out.check.detail += " (reduction mod " + std::to_string(q) + ")";
      return out;
    }
    out.check = {CrossCheck::Status::kSkipped,
                 "no prime q = 1 mod " + std::to_string(L) + " below the ceiling " +
                     std::to_string(ceiling)};
  }
  return out;
}

template <CoefficientField K>
MultiPoly<K> t_poly(const K& field, const ExponentPair& e) {
  return exact_divide(r_poly(field, e), vandermonde(field, e.d));
}

template <CoefficientField K>
MultiPoly<K> complete_homogeneous(const K& field, std::uint64_t k) {
  using Term = typename MultiPoly<K>::Term;
  std::vector<Term> terms;
  for (std::uint64_t a = 0; a <= k; ++a) {
    for (std::uint64_t b = 0; a + b <= k; ++b) {
      terms.push_back(Term{Monomial(a, b, k - a - b), field.one()});
    }
  }
  return MultiPoly<K>::from_terms(field, std::move(terms));
}

template <CoefficientField K>
MultiPoly<K> schur_bialternant(const K& field, const Partition3& lambda, std::uint64_t d) {
  if (d < 1) throw DomainError("schur_bialternant needs d >= 1");
  const auto& l = lambda.parts;
  if (l[0] < l[1] || l[1] < l[2]) throw DomainError("partition parts must be non-increasing");
  MultiPoly<K> s = exact_divide(
      alternant(field, checked_add(l[0], 2), checked_add(l[1], 1), l[2]), alternant(field, 2, 1, 0));
  return scale_exponents(s, d);
}

template <CoefficientField K>
MultiPoly<K> inverted_transform(const MultiPoly<K>& f, std::uint64_t D) {
  using Term = typename MultiPoly<K>::Term;
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.mono[0] > D || t.mono[1] > D || t.mono[2] > D) {
      throw DomainError("inverted_transform: an exponent exceeds D=" + std::to_string(D));
    }
    out.push_back(Term{Monomial(D - t.mono[0], D - t.mono[1], D - t.mono[2]), t.coeff});
  }
  return MultiPoly<K>::from_terms(f.field(), std::move(out));
}

#define SYMFIELD_INSTANTIATE_SCHUR(K)                                                    \
  template MultiPoly<K> vandermonde(const K&, std::uint64_t);                            \
  template MultiPoly<K> alternant(const K&, std::uint64_t, std::uint64_t, std::uint64_t); \
  template MultiPoly<K> r_poly(const K&, const ExponentPair&);                            \
  template IPoly<K> i_poly(const K&, const ExponentPair&, std::uint64_t);                \
  template MultiPoly<K> t_poly(const K&, const ExponentPair&);                           \
  template MultiPoly<K> complete_homogeneous(const K&, std::uint64_t);                   \
  template MultiPoly<K> schur_bialternant(const K&, const Partition3&, std::uint64_t);   \
  template MultiPoly<K> inverted_transform(const MultiPoly<K>&, std::uint64_t);

SYMFIELD_INSTANTIATE_SCHUR(RationalField)
SYMFIELD_INSTANTIATE_SCHUR(GaloisField)

}  // namespace symfield::schur

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

#include "symfield/mpoly/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <type_traits>
#include <unordered_map>

#include "symfield/error.hpp"

namespace symfield {

template <CoefficientField K>
MultiPoly<K> MultiPoly<K>::constant(K field, const Element& c) {
  return monomial(std::move(field), c, Monomial());
}

template <CoefficientField K>
MultiPoly<K> MultiPoly<K>::from_int(K field, std::int64_t n) {
  Element c = field.from_int(n);
  return constant(std::move(field), c);
}

template <CoefficientField K>
MultiPoly<K> MultiPoly<K>::variable(K field, Var v) {
  Element one = field.one();
  return monomial(std::move(field), one, Monomial::of(v, 1));
}

template <CoefficientField K>
MultiPoly<K> MultiPoly<K>::monomial(K field, const Element& c, const Monomial& m) {
  MultiPoly out(std::move(field));
  if (!out.field_.is_zero(c)) out.terms_.push_back(Term{m, c});
  return out;
}

template <CoefficientField K>
MultiPoly<K> MultiPoly<K>::from_terms(K field, std::vector<Term> terms) {
  MultiPoly out(std::move(field));
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.field_.is_zero(out.terms_.back().coeff)) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.field_.is_zero(out.terms_.back().coeff)) out.terms_.pop_back();
  return out;
}

template <CoefficientField K>
const typename MultiPoly<K>::Term& MultiPoly<K>::leading_term() const {
  if (terms_.empty()) throw DomainError("the zero polynomial has no leading term");
  return terms_.front();
}

template <CoefficientField K>
typename K::Element MultiPoly<K>::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return field_.zero();
}

template <CoefficientField K>
std::optional<std::uint64_t> MultiPoly<K>::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().mono.degree();
}

template <CoefficientField K>
std::optional<std::uint64_t> MultiPoly<K>::degree_in(Var v) const {
  if (terms_.empty()) return std::nullopt;
  std::uint64_t best = 0;
  for (const auto& t : terms_) best = std::max(best, t.mono[v]);
  return best;
}

template <CoefficientField K>
MultiPoly<K> MultiPoly<K>::coefficient_in(Var v, std::uint64_t k) const {
  std::vector<Term> picked;
  for (const auto& t : terms_) {
    if (t.mono[v] == k) picked.push_back(Term{t.mono.with(v, 0), t.coeff});
  }
  return from_terms(field_, std::move(picked));
}

template <CoefficientField K>
typename K::Element MultiPoly<K>::evaluate(const std::array<Element, 3>& point) const {
  Element acc = field_.zero();
  for (const auto& t : terms_) {
    Element term = t.coeff;
    for (int i = 0; i < 3; ++i) {
      if (t.mono[i] != 0) term = term * power(field_, point[i], t.mono[i]);
    }
    acc += term;
  }
  return acc;
}

template <CoefficientField K>
void MultiPoly<K>::check_same_field(const MultiPoly& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch("polynomials over " + field_.name() + " and " + o.field_.name() +
                        " do not mix");
  }
}

template <CoefficientField K>
MultiPoly<K> MultiPoly<K>::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

template <CoefficientField K>
MultiPoly<K> MultiPoly<K>::merge(const MultiPoly& o, bool subtract) const {
  check_same_field(o);
  MultiPoly out(field_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono > b->mono)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->mono > a->mono) {
      out.terms_.push_back(Term{b->mono, subtract ? Element(-b->coeff) : b->coeff});
      ++b;
    } else {
      Element c = subtract ? Element(a->coeff - b->coeff) : Element(a->coeff + b->coeff);
      if (!field_.is_zero(c)) out.terms_.push_back(Term{a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  return out;
}

template <CoefficientField K>
MultiPoly<K>& MultiPoly<K>::operator+=(const MultiPoly& o) {
  *this = merge(o, false);
  return *this;
}

template <CoefficientField K>
MultiPoly<K>& MultiPoly<K>::operator-=(const MultiPoly& o) {
  *this = merge(o, true);
  return *this;
}

template <CoefficientField K>
MultiPoly<K>& MultiPoly<K>::operator*=(const MultiPoly& o) {
  check_same_field(o);
  if (terms_.empty() || o.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  if (o.terms_.size() == 1) {
    // Multiplying by a monomial preserves the term order.
    const Term& m = o.terms_.front();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Element c = t.coeff * m.coeff;
      if (!field_.is_zero(c)) out.push_back(Term{t.mono * m.mono, std::move(c)});
    }
    terms_ = std::move(out);
    return *this;
  }
  std::unordered_map<Monomial, Element, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Element c = a.coeff * b.coeff;
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono, c);
      if (!inserted) it->second += c;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [mono, c] : acc) {
    if (!field_.is_zero(c)) out.push_back(Term{mono, std::move(c)});
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  terms_ = std::move(out);
  return *this;
}

template <CoefficientField K>
MultiPoly<K> scalar_mul(const MultiPoly<K>& f, const typename K::Element& c) {
  return f * MultiPoly<K>::constant(f.field(), c);
}

template <CoefficientField K>
MultiPoly<K> pow(const MultiPoly<K>& f, std::uint64_t n) {
  MultiPoly<K> acc = MultiPoly<K>::from_int(f.field(), 1);
  MultiPoly<K> base = f;
  while (n) {
    if (n & 1) acc *= base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

template <CoefficientField K>
std::optional<MultiPoly<K>> try_exact_divide(const MultiPoly<K>& f, const MultiPoly<K>& g) {
  using Element = typename K::Element;
  using Term = typename MultiPoly<K>::Term;
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (!(f.field() == g.field())) {
    throw FieldMismatch("cannot divide a polynomial over " + f.field().name() + " by one over " +
                        g.field().name());
  }
  const K& field = f.field();
  const Term& lead = g.leading_term();
  const Element lead_inv = field.one() / lead.coeff;

  std::map<Monomial, Element, std::greater<>> rem;
  for (const auto& t : f.terms()) rem.emplace(t.mono, t.coeff);

  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.mono.divides(top->first)) return std::nullopt;
    const Monomial qm = top->first / lead.mono;
    const Element qc = top->second * lead_inv;
    for (const auto& t : g.terms()) {
      Element delta = qc * t.coeff;
      auto [it, inserted] = rem.try_emplace(qm * t.mono, -delta);
      if (!inserted) {
        it->second -= delta;
        if (field.is_zero(it->second)) rem.erase(it);
      }
    }
    quotient.push_back(Term{qm, qc});
  }
  // Quotient monomials come out strictly decreasing, hence already canonical.
  return MultiPoly<K>::from_terms(field, std::move(quotient));
}

template <CoefficientField K>
MultiPoly<K> exact_divide(const MultiPoly<K>& f, const MultiPoly<K>& g) {
  auto q = try_exact_divide(f, g);
  if (!q) throw InexactDivision("division is not exact: nonzero remainder");
  return *std::move(q);
}

template <CoefficientField K>
MultiPoly<K> LinearForm<K>::to_poly() const {
  return scalar_mul(MultiPoly<K>::variable(field, Var::X), cx) +
         scalar_mul(MultiPoly<K>::variable(field, Var::Y), cy);
}

template <CoefficientField K>
MultiPoly<K> substitute(const MultiPoly<K>& f, Var v, const LinearForm<K>& form) {
  using Term = typename MultiPoly<K>::Term;
  if (!(f.field() == form.field)) {
    throw FieldMismatch("substitution form over " + form.field.name() + " into polynomial over " +
                        f.field().name());
  }
  std::map<std::uint64_t, std::vector<Term>> by_power;
  for (const auto& t : f.terms()) by_power[t.mono[v]].push_back(Term{t.mono.with(v, 0), t.coeff});

  const MultiPoly<K> lin = form.to_poly();
  MultiPoly<K> power_acc = MultiPoly<K>::from_int(f.field(), 1);
  std::uint64_t power_exp = 0;
  MultiPoly<K> out(f.field());
  for (auto& [e, terms] : by_power) {
    power_acc *= pow(lin, e - power_exp);
    power_exp = e;
    out += MultiPoly<K>::from_terms(f.field(), std::move(terms)) * power_acc;
  }
  return out;
}

template <CoefficientField K>
MultiPoly<K> partial_derivative(const MultiPoly<K>& f, Var v) {
  using Term = typename MultiPoly<K>::Term;
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const std::uint64_t e = t.mono[v];
    if (e == 0) continue;
    typename K::Element c = t.coeff * f.field().from_uint(e);
    if (f.field().is_zero(c)) continue;
    out.push_back(Term{t.mono.with(v, e - 1), std::move(c)});
  }
  return MultiPoly<K>::from_terms(f.field(), std::move(out));
}

template <CoefficientField K>
Homogeneity is_homogeneous(const MultiPoly<K>& f) {
  if (f.is_zero()) return {Homogeneity::Kind::kZero, 0};
  const std::uint64_t deg = f.terms().front().mono.degree();
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != deg) return {Homogeneity::Kind::kInhomogeneous, 0};
  }
  return {Homogeneity::Kind::kHomogeneous, deg};
}

template <CoefficientField K>
MultiPoly<K> permute(const MultiPoly<K>& f, const std::array<Var, 3>& images) {
  using Term = typename MultiPoly<K>::Term;
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::array<std::uint64_t, 3> e{};
    for (int i = 0; i < 3; ++i) e[static_cast<int>(images[i])] = t.mono[i];
    out.push_back(Term{Monomial(e[0], e[1], e[2]), t.coeff});
  }
  return MultiPoly<K>::from_terms(f.field(), std::move(out));
}

template <CoefficientField K>
bool is_symmetric3(const MultiPoly<K>& f) {
  std::array<Var, 3> images = {Var::X, Var::Y, Var::Z};
  do {
    if (!(permute(f, images) == f)) return false;
  } while (std::next_permutation(images.begin(), images.end()));
  return true;
}

template <CoefficientField K>
Multiplicity linear_multiplicity(const MultiPoly<K>& g, const LinearForm<K>& form) {
  if (g.degree_in(Var::Z).value_or(0) != 0) {
    throw DomainError("linear_multiplicity expects a polynomial in X and Y only");
  }
  if (g.is_zero()) return Multiplicity::unbounded();
  const MultiPoly<K> lin = form.to_poly();
  if (lin.is_zero()) throw DomainError("the zero linear form has no multiplicity");
  std::uint64_t count = 0;
  MultiPoly<K> rest = g;
  while (auto q = try_exact_divide(rest, lin)) {
    rest = *std::move(q);
    ++count;
  }
  return Multiplicity::finite(count);
}

template <CoefficientField K>
MultiPoly<K> scale_exponents(const MultiPoly<K>& f, std::uint64_t d) {
  using Term = typename MultiPoly<K>::Term;
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    out.push_back(Term{Monomial(checked_mul(t.mono[0], d), checked_mul(t.mono[1], d),
                                checked_mul(t.mono[2], d)),
                       t.coeff});
  }
  return MultiPoly<K>::from_terms(f.field(), std::move(out));
}

template <CoefficientField K>
std::vector<std::pair<Monomial, std::uint32_t>> residues_mod(const MultiPoly<K>& f,
                                                             std::uint32_t p) {
  std::vector<std::pair<Monomial, std::uint32_t>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::uint32_t residue = 0;
    if constexpr (std::is_same_v<K, RationalField>) {
      if (t.coeff.get_den() != 1) {
        throw DomainError("coefficient " + t.coeff.get_str() + " is not an integer");
      }
      residue = static_cast<std::uint32_t>(mpz_fdiv_ui(t.coeff.get_num_mpz_t(), p));
    } else {
      if (f.field().characteristic() != p) {
        throw DomainError("cannot reduce " + f.field().name() + " coefficients mod " +
                          std::to_string(p));
      }
      auto r = t.coeff.prime_residue();
      if (!r) throw DomainError("coefficient " + t.coeff.to_string() + " is not in the prime field");
      residue = *r;
    }
    if (residue != 0) out.emplace_back(t.mono, residue);
  }
  return out;
}

#define SYMFIELD_INSTANTIATE_MPOLY(K)                                                       \
  template class MultiPoly<K>;                                                              \
  template struct LinearForm<K>;                                                            \
  template MultiPoly<K> scalar_mul(const MultiPoly<K>&, const K::Element&);                 \
  template MultiPoly<K> pow(const MultiPoly<K>&, std::uint64_t);                            \
  template std::optional<MultiPoly<K>> try_exact_divide(const MultiPoly<K>&,                \
                                                        const MultiPoly<K>&);               \
  template MultiPoly<K> exact_divide(const MultiPoly<K>&, const MultiPoly<K>&);             \
  template MultiPoly<K> substitute(const MultiPoly<K>&, Var, const LinearForm<K>&);         \
  template MultiPoly<K> partial_derivative(const MultiPoly<K>&, Var);                       \
  template Homogeneity is_homogeneous(const MultiPoly<K>&);                                 \
  template MultiPoly<K> permute(const MultiPoly<K>&, const std::array<Var, 3>&);            \
  template bool is_symmetric3(const MultiPoly<K>&);                                         \
  template Multiplicity linear_multiplicity(const MultiPoly<K>&, const LinearForm<K>&);     \
  template MultiPoly<K> scale_exponents(const MultiPoly<K>&, std::uint64_t);                \
  template std::vector<std::pair<Monomial, std::uint32_t>> residues_mod(const MultiPoly<K>&, \
                                                                        std::uint32_t);

SYMFIELD_INSTANTIATE_MPOLY(RationalField)
SYMFIELD_INSTANTIATE_MPOLY(GaloisField)

}  // namespace symfield

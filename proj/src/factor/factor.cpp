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

#include "symfield/factor/factor.hpp"

#include <type_traits>

#include "symfield/error.hpp"

namespace symfield::factor {
namespace {

using schur::ExponentPair;

template <CoefficientField K>
std::vector<typename K::Element> roots_in(const K& field, std::uint64_t n) {
  if constexpr (std::is_same_v<K, GaloisField>) {
    return ff::roots_of_unity(n, field.spec());
  } else {
    if (n == 1) return {field.one()};
    if (n == 2) return {-field.one(), field.one()};
    throw FieldTooSmall("QQ has no primitive " + std::to_string(n) + "-th roots of unity", 0);
  }
}

const ff::FieldSpec& checked_field(std::uint64_t p, unsigned r, std::uint64_t limit,
                                   const std::string& what) {
  if (!is_prime(p) || r < 1) throw DomainError("need a prime p and r >= 1");
  if (!pow_within(p, r, limit)) {
    throw CeilingExceeded(what + " for p=" + std::to_string(p) + ", r=" + std::to_string(r) +
                          " exceeds the ceiling " + std::to_string(limit));
  }
  return ff::make_field(p, r);
}

FactVerification finish(const FPoly& t, const FPoly& product, std::uint64_t expected,
                        std::uint64_t ceiling) {
  FactVerification out{false, t == product, expected, linear_factors_over(t, ceiling)};
  out.pass = out.product_matches && out.report.fully_split && out.report.factor_count() == expected;
  return out;
}

}  // namespace

std::uint64_t FactorReport::factor_count() const {
  std::uint64_t n = 0;
  for (const auto& f : factors) n += f.multiplicity;
  return n;
}

FPoly linear_factor_poly(const GaloisField& field, const ff::FFElement& alpha,
                         const ff::FFElement& beta) {
  return FPoly::variable(field, Var::Z) - LinearForm<GaloisField>{field, alpha, beta}.to_poly();
}

FactorReport linear_factors_over(const FPoly& f, std::uint64_t ceiling) {
  if (f.is_zero()) throw DomainError("linear_factors_over: zero polynomial");
  const GaloisField& field = f.field();
  if (field.spec().order() > ceiling) {
    throw CeilingExceeded("linear factor scan over " + field.name() + " exceeds the ceiling " +
                          std::to_string(ceiling));
  }
  const std::uint64_t input_deg = f.degree_in(Var::Z).value_or(0);
  FactorReport report{{}, f, input_deg, input_deg, false};
  const auto elems = ff::all_elements(field.spec());
  for (const auto& alpha : elems) {
    for (const auto& beta : elems) {
      if (report.residual_degree_in_z == 0) break;
      const LinearForm<GaloisField> form{field, alpha, beta};
      std::uint64_t mult = 0;
      while (report.residual.degree_in(Var::Z).value_or(0) > 0 &&
             substitute(report.residual, Var::Z, form).is_zero()) {
        report.residual = exact_divide(report.residual, linear_factor_poly(field, alpha, beta));
        ++mult;
      }
      if (mult > 0) {
        report.factors.push_back(LinearFactor{alpha, beta, mult});
        report.residual_degree_in_z = report.residual.degree_in(Var::Z).value_or(0);
      }
    }
  }
  report.fully_split = report.residual_degree_in_z == 0;
  return report;
}

FactVerification verify_fact_eq1(std::uint64_t p, unsigned r, std::uint64_t ceiling) {
  const GaloisField field(checked_field(p, r, ceiling, "field order"));
  const std::uint64_t q = field.spec().order();
  FPoly product = FPoly::from_int(field, 1);
  for (const auto& alpha : ff::all_elements(field.spec())) {
    if (alpha.is_zero() || alpha.is_one()) continue;
    product *= linear_factor_poly(field, alpha, field.one() - alpha);
  }
  return finish(schur::t_poly(field, ExponentPair::make(q, 1)), product, q - 2, ceiling);
}

FactVerification verify_fact_eq2(std::uint64_t p, unsigned r, std::uint64_t ceiling) {
  if (!pow_within(p, 2 * static_cast<std::uint64_t>(r), ceiling)) {
    throw CeilingExceeded("p^(2r) for p=" + std::to_string(p) + ", r=" + std::to_string(r) +
                          " exceeds the ceiling " + std::to_string(ceiling));
  }
  const GaloisField field(checked_field(p, r, ceiling, "field order"));
  const std::uint64_t q = field.spec().order();
  const auto elems = ff::all_elements(field.spec());
  FPoly product = FPoly::from_int(field, 1);
  for (const auto& alpha : elems) {
    if (alpha.is_zero()) continue;
    for (const auto& beta : elems) {
      if (beta.is_zero()) continue;
      product *= linear_factor_poly(field, alpha, beta);
    }
  }
  return finish(schur::t_poly(field, ExponentPair::make(q * q - 1, q - 1)), product,
                (q - 1) * (q - 1), ceiling);
}

template <CoefficientField K>
bool divides(const MultiPoly<K>& f, const MultiPoly<K>& g) {
  if (f.is_zero()) throw DomainError("divides: the zero polynomial divides nothing");
  return try_exact_divide(g, f).has_value();
}

unsigned field_for_roots(std::uint64_t p, std::initializer_list<std::uint64_t> orders) {
  std::uint64_t m = 1;
  for (std::uint64_t n : orders) m = lcm_checked(m, multiplicative_order(p, n));
  return static_cast<unsigned>(m);
}

template <CoefficientField K>
std::vector<SignatureWitness<K>> signature_witness(const K& field, const ExponentPair& e) {
  using Witness = SignatureWitness<K>;
  if (e.B == e.d || e.A - e.B == e.d) {
    throw DomainError("signature_witness: " + e.to_string() +
                      " has B = d or A - B = d; use eisenstein_like_check for this case");
  }
  const std::uint64_t p = field.characteristic();
  if (p != 0) {
    if (e.B % p == 0 || (e.A - e.B) % p == 0) {
      throw DomainError("signature_witness: characteristic " + std::to_string(p) +
                        " divides B or A - B");
    }
    if constexpr (std::is_same_v<K, GaloisField>) {
      const unsigned need = field_for_roots(p, {e.B, e.A - e.B});
      if (field.spec().r() % need != 0) {
        throw FieldTooSmall(field.name() + " lacks the roots of unity of orders " +
                                std::to_string(e.B) + " and " + std::to_string(e.A - e.B),
                            need);
      }
    }
  }
  const auto roots_lower = roots_in(field, e.A - e.B);
  const auto roots_upper = roots_in(field, e.B);
  // Ceiling 0 skips the product-form cross-check; only the quotient is needed.
  const MultiPoly<K> I = schur::i_poly(field, e, 0).poly;

  std::vector<Witness> out;
  auto make = [&](typename Witness::Kind kind, const typename K::Element& root,
                  std::uint64_t length) {
    Witness w{kind, length, root, root_form(field, root), {}, false};
    for (std::uint64_t j = 0; j <= length; ++j) {
      const std::uint64_t zpow = kind == Witness::Kind::kLower ? j : e.A - j;
      w.checks.push_back(linear_multiplicity(I.coefficient_in(Var::Z, zpow), w.prime_form));
    }
    w.verdict = w.checks.front().exactly(1) && w.checks.back().exactly(0);
    for (std::uint64_t j = 1; j < length; ++j) w.verdict = w.verdict && w.checks[j].at_least(1);
    out.push_back(std::move(w));
  };
  for (const auto& theta : roots_lower) {
    if (power(field, theta, e.d) == field.one()) continue;
    make(Witness::Kind::kLower, theta, e.B);
  }
  for (const auto& zeta : roots_upper) {
    if (power(field, zeta, e.d) == field.one()) continue;
    make(Witness::Kind::kUpper, zeta, e.A - e.B);
  }
  return out;
}

template <CoefficientField K>
EisensteinReport<K> eisenstein_like_check(const MultiPoly<K>& f, const LinearForm<K>& P) {
  const Homogeneity h = is_homogeneous(f);
  if (!h.homogeneous() || h.degree == 0) {
    throw DomainError("eisenstein_like_check needs a homogeneous polynomial of positive degree");
  }
  if (P.to_poly().is_zero()) throw DomainError("eisenstein_like_check: zero linear form");
  EisensteinReport<K> out;
  const MultiPoly<K> f0 = f.coefficient_in(Var::Z, 0);
  const MultiPoly<K> f1 = f.coefficient_in(Var::Z, 1);
  out.f0_multiplicity = linear_multiplicity(f0, P);
  if (!f0.is_zero()) {
    const MultiPoly<K> rest = exact_divide(f0, pow(P.to_poly(), out.f0_multiplicity.count));
    out.f0_is_power = rest.total_degree() == 0;
  }
  out.p_divides_f1 = linear_multiplicity(f1, P).at_least(1);
  out.verdict = out.f0_is_power && !out.p_divides_f1;
  return out;
}

template <CoefficientField K>
SingularProbe<K> singular_point_probe(const MultiPoly<K>& f,
                                      const std::array<typename K::Element, 3>& point) {
  const K& field = f.field();
  if (field.is_zero(point[0]) && field.is_zero(point[1]) && field.is_zero(point[2])) {
    throw DomainError("singular_point_probe: (0, 0, 0) is not a projective point");
  }
  if (is_homogeneous(f).kind == Homogeneity::Kind::kInhomogeneous) {
    throw DomainError("singular_point_probe needs a homogeneous polynomial");
  }
  SingularProbe<K> out{f.evaluate(point),
                       {partial_derivative(f, Var::X).evaluate(point),
                        partial_derivative(f, Var::Y).evaluate(point),
                        partial_derivative(f, Var::Z).evaluate(point)},
                       false};
  out.singular = field.is_zero(out.value) && field.is_zero(out.partials[0]) &&
                 field.is_zero(out.partials[1]) && field.is_zero(out.partials[2]);
  return out;
}

template <CoefficientField K>
GradEval<K> grad_eval_identity(const K& field, std::uint64_t k, const typename K::Element& phi,
                               const typename K::Element& psi) {
  if (k < 3) throw DomainError("grad_eval_identity needs k >= 3");
  const std::uint64_t p = field.characteristic();
  if (p != 0 && (k % p == 0 || (k - 1) % p == 0)) {
    throw DomainError("grad_eval_identity: characteristic divides k or k - 1");
  }
  const auto one = field.one();
  if (!(power(field, phi, k - 1) == one) || !(power(field, psi, k - 1) == one)) {
    throw DomainError("grad_eval_identity: phi and psi must be (k-1)-th roots of unity");
  }
  if (phi == one || psi == one || phi == psi) {
    throw DomainError("grad_eval_identity: phi, psi and 1 must be pairwise distinct");
  }
  const MultiPoly<K> dz = partial_derivative(schur::t_poly(field, ExponentPair::make(k, 1)), Var::Z);
  GradEval<K> out{dz.evaluate({phi, psi, one}),
                  field.from_uint(k - 1) / ((one - phi) * (one - psi)), false};
  out.equal = out.lhs == out.rhs;
  return out;
}

#define SYMFIELD_INSTANTIATE_FACTOR(K)                                                    \
  template bool divides(const MultiPoly<K>&, const MultiPoly<K>&);                        \
  template std::vector<SignatureWitness<K>> signature_witness(const K&,                   \
                                                              const ExponentPair&);       \
  template EisensteinReport<K> eisenstein_like_check(const MultiPoly<K>&,                 \
                                                     const LinearForm<K>&);               \
  template SingularProbe<K> singular_point_probe(const MultiPoly<K>&,                     \
                                                 const std::array<K::Element, 3>&);       \
  template GradEval<K> grad_eval_identity(const K&, std::uint64_t, const K::Element&,     \
                                          const K::Element&);

SYMFIELD_INSTANTIATE_FACTOR(RationalField)
SYMFIELD_INSTANTIATE_FACTOR(GaloisField)

}  // namespace symfield::factor

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

#include "symfield/newton/newton.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <vector>

#include "symfield/error.hpp"

namespace symfield::newton {
namespace {

template <CoefficientField K>
bool jacobian_nonzero(const K& field, std::uint64_t a, std::uint64_t b) {
  const auto na = newton_poly(field, a);
  const auto nb = newton_poly(field, b);
  const auto j = partial_derivative(na, Var::X) * partial_derivative(nb, Var::Y) -
                 partial_derivative(na, Var::Y) * partial_derivative(nb, Var::X);
  return !j.is_zero();
}

void require_prime_or_zero(std::uint64_t p) {
  if (p != 0 && !is_prime(p)) {
    throw DomainError("characteristic must be 0 or a prime, got " + std::to_string(p));
  }
}

// The j with m = p^j + 1, if any.
std::optional<std::uint64_t> frobenius_exponent(std::uint64_t p, std::uint64_t m) {
  if (m < 2) return std::nullopt;
  std::uint64_t rest = m - 1;
  std::uint64_t j = 0;
  while (rest % p == 0) {
    rest /= p;
    ++j;
  }
  if (rest != 1) return std::nullopt;
  return j;
}

}  // namespace

template <CoefficientField K>
MultiPoly<K> newton_poly(const K& field, std::uint64_t m) {
  if (m == 0) throw DomainError("newton_poly needs m >= 1");
  return MultiPoly<K>::monomial(field, field.one(), Monomial(m, 0, 0)) +
         MultiPoly<K>::monomial(field, field.one(), Monomial(0, m, 0));
}

std::uint64_t two_generator_degree(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (!(a > b && b >= 1)) throw DomainError("two_generator_degree needs a > b >= 1");
  if (std::gcd(a, b) != 1) throw DomainError("two_generator_degree needs gcd(a, b) = 1");
  require_prime_or_zero(p);
  if (p != 0 && (a % p == 0 || b % p == 0)) {
    throw DomainError("two_generator_degree: characteristic " + std::to_string(p) +
                      " divides a or b");
  }
  const std::uint64_t ab = checked_mul(a, b);
  return ab % 2 == 0 ? ab / 2 : (a - 1) * b / 2;
}

bool jacobian_nonzero_check(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (!(a > b && b >= 1)) throw DomainError("jacobian_nonzero_check needs a > b >= 1");
  require_prime_or_zero(p);
  if (p == 0) return jacobian_nonzero(RationalField{}, a, b);
  return jacobian_nonzero(GaloisField(ff::make_field(p, 1)), a, b);
}

std::uint32_t find_irreducible_eta(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw DomainError("find_irreducible_eta needs an odd prime");
  const auto& fp = ff::make_field(p, 1);
  for (std::uint32_t eta = 0; eta < p; ++eta) {
    const ff::FFElement e = ff::FFElement::from_int(fp, eta);
    bool has_root = false;
    for (const auto& x : ff::all_elements(fp)) {
      if ((x * x - ff::FFElement::from_int(fp, 2) * e * x + e).is_zero()) {
        has_root = true;
        break;
      }
    }
    if (!has_root) return eta;
  }
  throw ConsistencyError("no irreducible X^2 - 2 eta X + eta over F_" + std::to_string(p));
}

AlternativePair build_alternative_pair(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("build_alternative_pair needs a prime");
  const auto& field = ff::make_field(p, 2);
  const GaloisField K(field);
  const auto one = ff::FFElement::one(field);
  std::optional<std::uint32_t> eta;
  std::optional<ff::FFElement> alpha;
  if (p == 2) {
    for (const auto& x : ff::all_elements(field)) {
      if (!x.is_one() && x.pow(3).is_one()) {
        alpha = x;
        break;
      }
    }
  } else {
    eta = find_irreducible_eta(p);
    const auto e = ff::FFElement::from_int(field, *eta);
    const auto two = ff::FFElement::from_int(field, 2);
    for (const auto& x : ff::all_elements(field)) {
      if ((x * x - two * e * x + e).is_zero()) {
        alpha = x;
        break;
      }
    }
  }
  if (!alpha) throw ConsistencyError("no alternative root in F_" + std::to_string(p) + "^2");
  const ff::FFElement beta = ff::frobenius(*alpha, 1);
  if (ff::in_subfield(*alpha, 1)) {
    throw ConsistencyError("alternative root " + alpha->to_string() + " lies in the prime field");
  }
  if (eta) {
    const auto two = ff::FFElement::from_int(field, 2);
    const auto two_eta = two * ff::FFElement::from_int(field, *eta);
    if (!(two * *alpha * beta == two_eta) || !(*alpha + beta == two_eta)) {
      throw ConsistencyError("2 alpha beta = alpha + beta = 2 eta fails for " + alpha->to_string());
    }
  }
  return AlternativePair{p,
                         eta,
                         *alpha,
                         beta,
                         LinearForm<GaloisField>{K, *alpha, one - *alpha},
                         LinearForm<GaloisField>{K, one - *alpha, *alpha}};
}

IdentityReport verify_newton_identity(const AlternativePair& pair, std::uint64_t m,
                                      IdentityMode mode) {
  if (m == 0) throw DomainError("verify_newton_identity needs m >= 1");
  if (mode == IdentityMode::kFrobeniusShortcut) {
    const auto j = frobenius_exponent(pair.p, m);
    if (!j) {
      throw DomainError("frobenius shortcut needs m = p^j + 1, got m=" + std::to_string(m));
    }
    return verify_newton_identity_frobenius(pair, *j);
  }
  if (m > kDirectExpansionLimit) {
    throw CeilingExceeded("direct expansion of degree " + std::to_string(m) + " exceeds " +
                          std::to_string(kDirectExpansionLimit));
  }
  const GaloisField field(pair.ambient());
  const FPoly lhs = pow(pair.z.to_poly(), m) + pow(pair.w.to_poly(), m);
  return IdentityReport{lhs == newton_poly(field, m), IdentityMode::kDirect, std::to_string(m),
                        std::nullopt};
}

IdentityReport verify_newton_identity_frobenius(const AlternativePair& pair, std::uint64_t j) {
  // z^{p^j} = b x^{p^j} + (1 - b) y^{p^j} with b = alpha^{p^j}, and likewise
  // for w, so z^m + w^m has at most four terms.
  const auto& a = pair.alpha;
  const ff::FFElement b = ff::frobenius(a, j);
  const auto one = ff::FFElement::one(pair.ambient());
  const auto zero = ff::FFElement::zero(pair.ambient());
  const ff::FFElement outer = b * a + (one - b) * (one - a);
  const ff::FFElement cross = b * (one - a) + (one - b) * a;
  std::array<ff::FFElement, 4> c = {outer, cross, cross, outer};
  if (j == 0) {
    c[1] = cross + cross;
    c[2] = zero;
  }
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), pair.p, j);
  m += 1;
  const bool holds = c[0].is_one() && c[1].is_zero() && c[2].is_zero() && c[3].is_one();
  return IdentityReport{holds, IdentityMode::kFrobeniusShortcut, m.get_str(), c};
}

TowerParams TowerParams::make(std::uint64_t p, std::uint64_t r, std::uint64_t s) {
  if (!is_prime(p)) throw DomainError("tower needs a prime p, got " + std::to_string(p));
  if (!(r > s)) throw DomainError("tower needs r > s >= 0");
  return TowerParams{p, r, s, std::gcd(r, s)};
}

std::uint64_t brute_count_alternatives(const TowerParams& t, std::uint64_t ceiling,
                                       unsigned jobs) {
  if (t.s < 1) throw DomainError("brute_count_alternatives needs s >= 1");
  const std::uint64_t n = t.r - t.s;
  const auto size = pow_within(t.p, n, std::min<std::uint64_t>(ceiling, std::uint64_t{1} << 31));
  if (!size) {
    throw CeilingExceeded("F_" + std::to_string(t.p) + "^" + std::to_string(n) +
                          " exceeds the ceiling " + std::to_string(ceiling));
  }
  const auto& field = ff::make_field(t.p, static_cast<unsigned>(n));
  const std::uint32_t q = field.order();
  const auto two = ff::FFElement::from_int(field, 2);
  auto count_range = [&](std::uint32_t lo, std::uint32_t hi) {
    std::uint64_t count = 0;
    for (std::uint32_t code = lo; code < hi; ++code) {
      const ff::FFElement alpha(field, code);
      const ff::FFElement gamma = ff::frobenius(alpha, t.s);
      const bool ok = t.p == 2 ? gamma == alpha : two * alpha * gamma == alpha + gamma;
      if (ok) ++count;
    }
    return count;
  };
  jobs = std::clamp<unsigned>(jobs, 1, std::max<std::uint32_t>(1, q));
  if (jobs == 1) return count_range(0, q);
  std::vector<std::uint64_t> partial(jobs, 0);
  std::vector<std::thread> workers;
  for (unsigned i = 0; i < jobs; ++i) {
    const auto lo = static_cast<std::uint32_t>(std::uint64_t{q} * i / jobs);
    const auto hi = static_cast<std::uint32_t>(std::uint64_t{q} * (i + 1) / jobs);
    workers.emplace_back([&, i, lo, hi] { partial[i] = count_range(lo, hi); });
  }
  for (auto& w : workers) w.join();
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

DegreeReport degree_of_extension(const TowerParams& t, DegreeMode mode, std::uint64_t ceiling,
                                 unsigned jobs) {
  if (t.s < 1) throw DomainError("degree_of_extension needs s >= 1; s = 0 is not covered");
  DegreeReport out;
  if (mode != DegreeMode::kOracle) {
    if (t.p == 2) {
      out.formula_value = checked_pow(2, t.m - 1);
    } else if ((t.r - t.s) % (2 * t.m) != 0) {
      out.formula_value = 1;
    } else {
      out.formula_value = (checked_pow(t.p, t.m) + 1) / 2;
    }
  }
  if (mode != DegreeMode::kFormula) {
    out.oracle_count = brute_count_alternatives(t, ceiling, jobs);
    if (*out.oracle_count % 2 != 0) {
      throw ConsistencyError("odd alternative count " + std::to_string(*out.oracle_count));
    }
    out.oracle_value = *out.oracle_count / 2;
  }
  if (mode == DegreeMode::kBoth) out.agree = out.formula_value == out.oracle_value;
  return out;
}

Rational gcd_reduction_degree(std::uint64_t g, const Rational& base) {
  if (g < 1) throw DomainError("gcd_reduction_degree needs g >= 1");
  Rational out = base * Rational(static_cast<unsigned long>(g)) *
                 Rational(static_cast<unsigned long>(g));
  out.canonicalize();
  return out;
}

NewtonTriple NewtonTriple::make(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                std::uint64_t p) {
  if (!(a > b && b > c && c >= 1)) throw DomainError("Newton triple needs a > b > c >= 1");
  require_prime_or_zero(p);
  NewtonTriple t{a, b, c, p, std::gcd(std::gcd(a, b), c), {}};
  const std::array<std::uint64_t, 6> values = {a, b, c, a - b, a - c, b - c};
  for (std::size_t i = 0; i < values.size(); ++i) t.p_divides[i] = p != 0 && values[i] % p == 0;
  return t;
}

schur::ExponentPair NewtonTriple::exponent_pair() const {
  return schur::ExponentPair::make(a - c, b - c);
}

template MultiPoly<RationalField> newton_poly(const RationalField&, std::uint64_t);
template MultiPoly<GaloisField> newton_poly(const GaloisField&, std::uint64_t);

}  // namespace symfield::newton

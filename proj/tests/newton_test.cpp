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

#include <gtest/gtest.h>

#include "oracle/naive_field.hpp"
#include "symfield/error.hpp"
#include "symfield/factor/factor.hpp"
#include "symfield/mpoly/text.hpp"

namespace symfield::newton {
namespace {

const RationalField kQ;

GaloisField gf(std::uint64_t p, unsigned r = 1) { return GaloisField(ff::make_field(p, r)); }

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < e; ++i) out = out * b % p;
  return out;
}

// Smallest eta with eta^2 - eta a non-residue (Euler's criterion).
std::int64_t euler_eta(std::int64_t p) {
  for (std::int64_t eta = 1; eta < p; ++eta) {
    const std::int64_t disc = oracle::mod(eta * eta - eta, p);
    if (disc != 0 && powmod(disc, (p - 1) / 2, p) == p - 1) return eta;
  }
  return -1;
}

// Naive count of alpha in F_{p^n} with 2 alpha gamma = alpha + gamma,
// gamma = alpha^{p^s} (gamma = alpha for p = 2).
std::uint64_t naive_count(std::int64_t p, std::size_t n, std::uint64_t s) {
  const oracle::Field F{p, oracle::least_irreducible(p, n)};
  std::uint64_t ps = 1;
  for (std::uint64_t i = 0; i < s; ++i) ps *= p;
  std::uint64_t count = 0;
  for (const auto& a : F.elements()) {
    const auto g = F.pow(a, ps);
    const bool ok = p == 2 ? g == a
                           : F.mul(F.constant(2), F.mul(a, g)) == F.add(a, g);
    if (ok) ++count;
  }
  return count;
}

TEST(NewtonPoly, WorkedExamples) {
  EXPECT_EQ(to_string(newton_poly(kQ, 1)), "X + Y");
  EXPECT_EQ(to_string(newton_poly(kQ, 2)), "X^2 + Y^2");
  EXPECT_THROW(newton_poly(kQ, 0), DomainError);
  for (std::uint64_t p : {2, 3, 5}) {
    const auto K = gf(p);
    for (std::uint64_t m = 1; m <= 20; ++m) {
      EXPECT_EQ(newton_poly(K, p * m), pow(newton_poly(K, m), p)) << "p=" << p << " m=" << m;
    }
  }
}

TEST(TwoGeneratorDegree, WorkedExamples) {
  EXPECT_EQ(two_generator_degree(3, 2, 0), 3u);
  EXPECT_EQ(two_generator_degree(5, 3, 0), 6u);
  EXPECT_EQ(two_generator_degree(5, 2, 0), 5u);
  EXPECT_EQ(two_generator_degree(2, 1, 0), 1u);
  EXPECT_EQ(two_generator_degree(5, 3, 7), 6u);
  EXPECT_THROW(two_generator_degree(3, 2, 3), DomainError);
  EXPECT_THROW(two_generator_degree(4, 2, 0), DomainError);
  EXPECT_THROW(two_generator_degree(2, 3, 0), DomainError);
  EXPECT_THROW(two_generator_degree(5, 3, 4), DomainError);
}

TEST(Jacobian, WorkedExamples) {
  EXPECT_TRUE(jacobian_nonzero_check(3, 2, 5));
  EXPECT_FALSE(jacobian_nonzero_check(3, 2, 3));
  EXPECT_FALSE(jacobian_nonzero_check(3, 2, 2));
  for (std::uint64_t a = 2; a <= 8; ++a) {
    for (std::uint64_t b = 1; b < a; ++b) EXPECT_TRUE(jacobian_nonzero_check(a, b, 0));
  }
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t a = 2; a <= 9; ++a) {
      for (std::uint64_t b = 1; b < a; ++b) {
        EXPECT_EQ(jacobian_nonzero_check(a, b, p), (a * b) % p != 0) << a << "," << b << " p=" << p;
      }
    }
  }
}

TEST(Eta, MatchesEulerCriterion) {
  EXPECT_EQ(find_irreducible_eta(3), 2u);
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    EXPECT_EQ(static_cast<std::int64_t>(find_irreducible_eta(p)), euler_eta(p)) << "p=" << p;
  }
  EXPECT_THROW(find_irreducible_eta(2), DomainError);
  EXPECT_THROW(find_irreducible_eta(9), DomainError);
}

TEST(AlternativePair, Invariants) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const auto pair = build_alternative_pair(p);
    const auto one = ff::FFElement::one(pair.ambient());
    EXPECT_EQ(pair.ambient().r(), 2u);
    EXPECT_FALSE(ff::in_subfield(pair.alpha, 1));
    EXPECT_EQ(pair.beta, ff::frobenius(pair.alpha, 1));
    EXPECT_EQ(pair.z.cx + pair.w.cx, one);
    EXPECT_EQ(pair.z.cy + pair.w.cy, one);
    EXPECT_EQ(pair.z.to_poly() + pair.w.to_poly(), newton_poly(GaloisField(pair.ambient()), 1));
    if (p == 2) {
      EXPECT_FALSE(pair.eta.has_value());
      EXPECT_TRUE(pair.alpha.pow(3).is_one());
    } else {
      const auto two = ff::FFElement::from_int(pair.ambient(), 2);
      EXPECT_EQ(two * pair.alpha * pair.beta, pair.alpha + pair.beta);
      EXPECT_EQ(pair.alpha + pair.beta, two * ff::FFElement::from_int(pair.ambient(), *pair.eta));
    }
  }
  // p = 3, eta = 2: alpha^2 = 4 alpha - 2.
  const auto pair = build_alternative_pair(3);
  const auto& F = pair.ambient();
  EXPECT_EQ(pair.alpha * pair.alpha,
            ff::FFElement::from_int(F, 4) * pair.alpha - ff::FFElement::from_int(F, 2));
  EXPECT_THROW(build_alternative_pair(4), DomainError);
}

TEST(Identity, OddPFamily) {
  for (std::uint64_t p : {3, 5}) {
    const auto pair = build_alternative_pair(p);
    EXPECT_TRUE(verify_newton_identity(pair, 1, IdentityMode::kDirect).holds);
    EXPECT_TRUE(verify_newton_identity(pair, p + 1, IdentityMode::kDirect).holds);
    EXPECT_TRUE(verify_newton_identity(pair, p + 1, IdentityMode::kFrobeniusShortcut).holds);
    EXPECT_FALSE(verify_newton_identity(pair, p * p + 1, IdentityMode::kDirect).holds);
    EXPECT_FALSE(verify_newton_identity(pair, p * p + 1, IdentityMode::kFrobeniusShortcut).holds);
    EXPECT_TRUE(verify_newton_identity(pair, p * p * p + 1, IdentityMode::kFrobeniusShortcut).holds);
  }
  const auto pair = build_alternative_pair(3);
  EXPECT_TRUE(verify_newton_identity(pair, 28, IdentityMode::kDirect).holds);
  EXPECT_FALSE(verify_newton_identity(pair, 10, IdentityMode::kDirect).holds);
  EXPECT_FALSE(verify_newton_identity(pair, 2, IdentityMode::kDirect).holds);
  const auto big = verify_newton_identity_frobenius(pair, 41);
  EXPECT_TRUE(big.holds);
  EXPECT_EQ(big.m, "36472996377170786404");  // 3^41 + 1
  EXPECT_FALSE(verify_newton_identity_frobenius(pair, 40).holds);
}

TEST(Identity, CharTwoFamily) {
  const auto pair = build_alternative_pair(2);
  for (std::uint64_t m : {1, 5, 17}) {
    EXPECT_TRUE(verify_newton_identity(pair, m, IdentityMode::kDirect).holds) << m;
  }
  EXPECT_TRUE(verify_newton_identity(pair, 5, IdentityMode::kFrobeniusShortcut).holds);
  EXPECT_TRUE(verify_newton_identity(pair, 17, IdentityMode::kFrobeniusShortcut).holds);
  EXPECT_FALSE(verify_newton_identity(pair, 3, IdentityMode::kDirect).holds);
  EXPECT_FALSE(verify_newton_identity(pair, 9, IdentityMode::kFrobeniusShortcut).holds);
}

TEST(Identity, ModesAgree) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const auto pair = build_alternative_pair(p);
    std::uint64_t pj = p;
    for (int j = 1; j <= 3 && pj + 1 <= 400; ++j, pj *= p) {
      EXPECT_EQ(verify_newton_identity(pair, pj + 1, IdentityMode::kDirect).holds,
                verify_newton_identity(pair, pj + 1, IdentityMode::kFrobeniusShortcut).holds)
          << "p=" << p << " j=" << j;
    }
  }
}

// z^4 + w^4 - x^4 - y^4 vanishes on F_9 x F_9 with schoolbook arithmetic; the
// degree in each variable is below 9, so this is a polynomial identity.
TEST(Identity, NaiveEvaluationP3) {
  const auto pair = build_alternative_pair(3);
  const oracle::Field F{3, oracle::least_irreducible(3, 2)};
  const auto a_coeffs = pair.alpha.coeffs();
  const oracle::Coeffs a(a_coeffs.begin(), a_coeffs.end());
  const auto one = F.constant(1);
  const auto b = F.sub(one, a);
  for (const auto& x : F.elements()) {
    for (const auto& y : F.elements()) {
      const auto z = F.add(F.mul(a, x), F.mul(b, y));
      const auto w = F.add(F.mul(b, x), F.mul(a, y));
      const auto lhs = F.add(F.pow(z, 4), F.pow(w, 4));
      EXPECT_EQ(lhs, F.add(F.pow(x, 4), F.pow(y, 4)));
    }
  }
}

TEST(Identity, Refusals) {
  const auto pair = build_alternative_pair(3);
  EXPECT_THROW(verify_newton_identity(pair, 0, IdentityMode::kDirect), DomainError);
  EXPECT_THROW(verify_newton_identity(pair, 7, IdentityMode::kFrobeniusShortcut), DomainError);
  EXPECT_THROW(verify_newton_identity(pair, 1, IdentityMode::kFrobeniusShortcut), DomainError);
  EXPECT_THROW(verify_newton_identity(pair, kDirectExpansionLimit + 1, IdentityMode::kDirect),
               CeilingExceeded);
}

TEST(Tower, Params) {
  const auto t = TowerParams::make(3, 6, 4);
  EXPECT_EQ(t.m, 2u);
  EXPECT_EQ(TowerParams::make(3, 2, 0).m, 2u);
  EXPECT_THROW(TowerParams::make(4, 3, 1), DomainError);
  EXPECT_THROW(TowerParams::make(3, 2, 2), DomainError);
}

TEST(BruteCount, WorkedExamples) {
  EXPECT_EQ(brute_count_alternatives(TowerParams::make(3, 2, 1)), 2u);
  EXPECT_EQ(brute_count_alternatives(TowerParams::make(3, 3, 1)), 4u);
  EXPECT_EQ(brute_count_alternatives(TowerParams::make(2, 4, 2)), 4u);
  EXPECT_THROW(brute_count_alternatives(TowerParams::make(3, 2, 0)), DomainError);
  EXPECT_THROW(brute_count_alternatives(TowerParams::make(3, 9, 1), 1000), CeilingExceeded);
}

TEST(BruteCount, MatchesNaiveOracle) {
  for (std::int64_t p : {2, 3, 5}) {
    for (std::uint64_t r = 2; r <= 6; ++r) {
      for (std::uint64_t s = 1; s < r; ++s) {
        std::uint64_t size = 1;
        for (std::uint64_t i = 0; i < r - s; ++i) size *= p;
        if (size > 125) continue;
        const auto t = TowerParams::make(p, r, s);
        const auto got = brute_count_alternatives(t);
        EXPECT_EQ(got, naive_count(p, r - s, s)) << p << " " << r << " " << s;
        EXPECT_EQ(got % 2, 0u);
        EXPECT_GE(got, 2u);
      }
    }
  }
}

TEST(BruteCount, IndependentOfPartition) {
  const auto t = TowerParams::make(3, 9, 1);
  const auto serial = brute_count_alternatives(t, kDefaultOracleCeiling, 1);
  for (unsigned jobs : {2u, 3u, 7u, 64u}) {
    EXPECT_EQ(brute_count_alternatives(t, kDefaultOracleCeiling, jobs), serial);
  }
}

TEST(Degree, WorkedExamples) {
  auto both = [](std::uint64_t p, std::uint64_t r, std::uint64_t s) {
    return degree_of_extension(TowerParams::make(p, r, s), DegreeMode::kBoth);
  };
  const auto a = both(3, 3, 1);
  EXPECT_EQ(a.formula_value, 2u);
  EXPECT_EQ(a.oracle_value, 2u);
  EXPECT_EQ(a.oracle_count, 4u);
  EXPECT_EQ(a.agree, true);
  EXPECT_EQ(both(3, 2, 1).formula_value, 1u);
  const auto c = both(2, 4, 2);
  EXPECT_EQ(c.formula_value, 2u);
  EXPECT_EQ(c.oracle_value, 2u);

  const auto f = degree_of_extension(TowerParams::make(3, 40, 20), DegreeMode::kFormula);
  EXPECT_FALSE(f.oracle_count.has_value());
  EXPECT_FALSE(f.agree.has_value());
  EXPECT_THROW(degree_of_extension(TowerParams::make(3, 2, 0), DegreeMode::kFormula), DomainError);
}

TEST(Degree, GridAgrees) {
  for (std::uint64_t p : {3, 5}) {
    for (std::uint64_t r = 2; r <= 6; ++r) {
      for (std::uint64_t s = 1; s < r; ++s) {
        const auto rep = degree_of_extension(TowerParams::make(p, r, s), DegreeMode::kBoth);
        EXPECT_EQ(rep.agree, true) << p << " " << r << " " << s;
      }
    }
  }
  for (std::uint64_t r = 2; r <= 10; ++r) {
    for (std::uint64_t s = 1; s < r; ++s) {
      const auto rep = degree_of_extension(TowerParams::make(2, r, s), DegreeMode::kBoth);
      EXPECT_EQ(rep.agree, true) << 2 << " " << r << " " << s;
    }
  }
}

// Every nontrivial alpha in the oracle count gives a linear factor
// Z - alpha X - (1 - alpha) Y of T_{p^{r-s},1} over F_{p^{r-s}}.
TEST(Degree, AlphasAreLinearFactors) {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {5, 2}, {2, 3}}) {
    const GaloisField K = gf(p, n);
    const auto t = schur::t_poly(K, schur::ExponentPair::make(K.spec().order(), 1));
    const auto one = K.one();
    for (const auto& a : ff::all_elements(K.spec())) {
      if (a.is_zero() || a.is_one()) continue;
      EXPECT_TRUE(factor::divides(factor::linear_factor_poly(K, a, one - a), t));
    }
  }
}

TEST(GcdReduction, WorkedExamples) {
  EXPECT_EQ(gcd_reduction_degree(1, Rational(5, 2)), Rational(5, 2));
  EXPECT_EQ(gcd_reduction_degree(2, Rational(3)), Rational(12));
  EXPECT_EQ(gcd_reduction_degree(3, Rational(1)), Rational(9));
  EXPECT_THROW(gcd_reduction_degree(0, Rational(1)), DomainError);
}

TEST(NewtonTriple, Flags) {
  const auto t = NewtonTriple::make(7, 4, 1, 3);
  EXPECT_EQ(t.gcd, 1u);
  EXPECT_EQ(t.p_divides, (std::array<bool, 6>{false, false, false, true, true, true}));
  const auto e = t.exponent_pair();
  EXPECT_EQ(e.A, 6u);
  EXPECT_EQ(e.B, 3u);
  EXPECT_THROW(NewtonTriple::make(3, 3, 1, 0), DomainError);
  EXPECT_THROW(NewtonTriple::make(5, 3, 1, 4), DomainError);
}

}  // namespace
}  // namespace symfield::newton

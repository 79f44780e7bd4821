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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "oracle/naive_field.hpp"
#include "symfield/error.hpp"

namespace symfield::ff {
namespace {

oracle::Coeffs to_oracle(const FFElement& x) {
  auto c = x.coeffs();
  return oracle::Coeffs(c.begin(), c.end());
}

oracle::Field oracle_for(const FieldSpec& f) {
  return oracle::Field{f.p(), oracle::Coeffs(f.modulus().begin(), f.modulus().end())};
}

struct Level {
  std::uint64_t p;
  unsigned r;
};

const Level kLevels[] = {{2, 1}, {2, 2}, {2, 3}, {2, 5}, {3, 1}, {3, 2}, {3, 3},
                         {5, 2}, {7, 1}, {7, 2}, {11, 1}, {2, 8}, {3, 5}};

TEST(MakeField, ModulusIsLeastIrreducible) {
  for (auto [p, r] : kLevels) {
    const auto& f = make_field(p, r);
    const auto expected = oracle::least_irreducible(static_cast<std::int64_t>(p), r);
    EXPECT_EQ(oracle::Coeffs(f.modulus().begin(), f.modulus().end()), expected)
        << "p=" << p << " r=" << r;
    EXPECT_EQ(f.order(), static_cast<std::uint32_t>(std::pow(p, r)));
  }
}

TEST(MakeField, WorkedModuli) {
  EXPECT_EQ(make_field(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  const auto& f9 = make_field(3, 2);
  // No root in F_3.
  for (std::uint32_t x = 0; x < 3; ++x) {
    const auto& m = f9.modulus();
    EXPECT_NE((m[0] + m[1] * x + m[2] * x * x) % 3, 0u);
  }
  EXPECT_EQ(f9.describe(), "F_9 = F_3[a]/(a^2 + 1)");
  const auto& f3 = make_field(3, 1);
  EXPECT_EQ((FFElement::from_int(f3, 2) * FFElement::from_int(f3, 2)).prime_residue(), 1u);
}

TEST(MakeField, InternedAndDeterministic) {
  const auto& a = make_field(5, 3);
  const auto& b = make_field(5, 3);
  EXPECT_EQ(&a, &b);
  std::vector<const FieldSpec*> seen(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) threads.emplace_back([&, i] { seen[i] = &make_field(13, 2); });
  for (auto& t : threads) t.join();
  for (auto* s : seen) EXPECT_EQ(s, seen[0]);
}

TEST(MakeField, RejectsBadInput) {
  EXPECT_THROW(make_field(4, 1), DomainError);
  EXPECT_THROW(make_field(1, 1), DomainError);
  EXPECT_THROW(make_field(3, 0), DomainError);
}

TEST(Arithmetic, MatchesNaiveOracle) {
  std::mt19937 rng(42);
  for (auto [p, r] : kLevels) {
    const auto& f = make_field(p, r);
    const auto o = oracle_for(f);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
    for (int i = 0; i < 200; ++i) {
      const FFElement x(f, pick(rng));
      const FFElement y(f, pick(rng));
      EXPECT_EQ(to_oracle(x + y), o.add(to_oracle(x), to_oracle(y)));
      EXPECT_EQ(to_oracle(x - y), o.sub(to_oracle(x), to_oracle(y)));
      EXPECT_EQ(to_oracle(x * y), o.mul(to_oracle(x), to_oracle(y)));
      if (!y.is_zero()) {
        EXPECT_EQ(to_oracle((x / y) * y), to_oracle(x));
        EXPECT_TRUE((y * y.inverse()).is_one());
      }
      EXPECT_EQ(to_oracle(x.pow(7)), o.pow(to_oracle(x), 7));
    }
  }
}

TEST(Arithmetic, ZeroHasNoInverse) {
  const auto& f = make_field(3, 2);
  EXPECT_THROW(FFElement::zero(f).inverse(), DomainError);
}

TEST(Arithmetic, FieldsDoNotMix) {
  const auto a = FFElement::one(make_field(3, 1));
  const auto b = FFElement::one(make_field(3, 2));
  EXPECT_THROW(a + b, FieldMismatch);
  EXPECT_THROW(a * b, FieldMismatch);
}

TEST(Arithmetic, FromIntReducesNegatives) {
  const auto& f = make_field(7, 1);
  EXPECT_EQ(FFElement::from_int(f, -1).prime_residue(), 6u);
  EXPECT_EQ(FFElement::from_int(f, 15).prime_residue(), 1u);
}

TEST(Frobenius, PrimeFieldFixed) {
  const auto& f = make_field(5, 2);
  for (int c = 0; c < 5; ++c) {
    const auto x = FFElement::from_int(f, c);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(frobenius(x, k), x);
  }
}

TEST(Frobenius, SwapsRootsInF4) {
  const auto& f = make_field(2, 2);
  const FFElement a = FFElement::from_coeffs(f, std::vector<std::uint32_t>{0, 1});
  EXPECT_EQ(frobenius(a, 1), a + FFElement::one(f));
  EXPECT_EQ(frobenius(a, 2), a);
}

TEST(Frobenius, FullOrbitAndHomomorphism) {
  std::mt19937 rng(7);
  for (auto [p, r] : kLevels) {
    const auto& f = make_field(p, r);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
    for (int i = 0; i < 50; ++i) {
      const FFElement x(f, pick(rng));
      const FFElement y(f, pick(rng));
      EXPECT_EQ(frobenius(x, r), x);
      for (std::uint64_t k = 0; k <= r; ++k) {
        EXPECT_EQ(frobenius(x * y, k), frobenius(x, k) * frobenius(y, k));
        EXPECT_EQ(frobenius(x + y, k), frobenius(x, k) + frobenius(y, k));
      }
      EXPECT_EQ(frobenius(x, 1), x.pow(p));
    }
  }
}

TEST(InSubfield, Basics) {
  const auto& f4 = make_field(2, 2);
  EXPECT_TRUE(in_subfield(FFElement::zero(f4), 1));
  EXPECT_TRUE(in_subfield(FFElement::one(f4), 1));
  const FFElement a = FFElement::from_coeffs(f4, std::vector<std::uint32_t>{0, 1});
  EXPECT_FALSE(in_subfield(a, 1));
  EXPECT_TRUE(in_subfield(a, 2));
  EXPECT_THROW(in_subfield(a, 3), DomainError);
}

TEST(InSubfield, GcdClosureAndCounts) {
  const auto& f = make_field(2, 6);
  std::map<unsigned, int> counts;
  for (const auto& x : all_elements(f)) {
    for (unsigned m : {1u, 2u, 3u, 6u}) {
      if (in_subfield(x, m)) ++counts[m];
    }
    for (unsigned m1 : {2u, 3u, 6u}) {
      for (unsigned m2 : {2u, 3u, 6u}) {
        if (in_subfield(x, m1) && in_subfield(x, m2)) {
          EXPECT_TRUE(in_subfield(x, std::gcd(m1, m2)));
        }
      }
    }
  }
  EXPECT_EQ(counts[1], 2);
  EXPECT_EQ(counts[2], 4);
  EXPECT_EQ(counts[3], 8);
  EXPECT_EQ(counts[6], 64);
}

std::vector<std::uint32_t> residues(const std::vector<FFElement>& xs) {
  std::vector<std::uint32_t> out;
  for (const auto& x : xs) out.push_back(*x.prime_residue());
  return out;
}

TEST(RootsOfUnity, WorkedExamples) {
  const auto& f7 = make_field(7, 1);
  EXPECT_EQ(residues(roots_of_unity(1, f7)), (std::vector<std::uint32_t>{1}));
  EXPECT_EQ(residues(roots_of_unity(2, f7)), (std::vector<std::uint32_t>{1, 6}));
  EXPECT_EQ(residues(roots_of_unity(3, f7)), (std::vector<std::uint32_t>{1, 2, 4}));
}

TEST(RootsOfUnity, Errors) {
  const auto& f7 = make_field(7, 1);
  EXPECT_THROW(roots_of_unity(7, f7), DomainError);
  try {
    roots_of_unity(5, f7);
    FAIL() << "expected FieldTooSmall";
  } catch (const FieldTooSmall& e) {
    EXPECT_EQ(e.required_degree(), 4u);  // 7^4 = 2401 = 1 mod 5
  }
}

TEST(RootsOfUnity, CyclicGroupOfOrderN) {
  for (auto [p, r, n] : std::vector<std::array<std::uint64_t, 3>>{
           {7, 1, 6}, {2, 4, 5}, {2, 4, 15}, {3, 2, 8}, {5, 2, 12}, {13, 1, 4}}) {
    const auto& f = make_field(p, static_cast<unsigned>(r));
    const auto roots = roots_of_unity(n, f);
    ASSERT_EQ(roots.size(), n);
    EXPECT_TRUE(std::is_sorted(roots.begin(), roots.end()));
    std::set<std::uint32_t> codes;
    for (const auto& z : roots) codes.insert(z.code());
    EXPECT_EQ(codes.size(), n);
    for (const auto& a : roots) {
      for (const auto& b : roots) EXPECT_TRUE(codes.count((a * b).code()));
    }
    bool generator = false;
    for (const auto& z : roots) {
      std::uint64_t order = 1;
      for (auto x = z; !x.is_one(); x = x * z) ++order;
      generator = generator || order == n;
    }
    EXPECT_TRUE(generator);
  }
}

TEST(Serialization, RoundTrip) {
  const auto& f = make_field(3, 2);
  for (const auto& x : all_elements(f)) EXPECT_EQ(parse_element(f, x.to_string()), x);
  EXPECT_EQ(FFElement::from_coeffs(f, std::vector<std::uint32_t>{2, 1}).to_string(), "3^2:[2,1]");
  EXPECT_THROW(parse_element(f, "3^1:[2]"), FieldMismatch);
  EXPECT_THROW(parse_element(f, "3^2:[1"), symfield::ParseError);
  EXPECT_THROW(parse_element(f, "3^2:[3,0]"), symfield::ParseError);
}

TEST(AllElements, SortedByCoordinates) {
  const auto& f = make_field(3, 2);
  const auto xs = all_elements(f);
  ASSERT_EQ(xs.size(), 9u);
  for (std::size_t i = 1; i < xs.size(); ++i) EXPECT_LT(xs[i - 1].coeffs(), xs[i].coeffs());
}

}  // namespace
}  // namespace symfield::ff

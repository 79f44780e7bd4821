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

// Acceptance gate: one PASS/FAIL line per criterion. Exit status is 0 only
// when every criterion passes.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "symfield/factor/factor.hpp"
#include "symfield/mpoly/text.hpp"
#include "symfield/newton/newton.hpp"
#include "symfield/schur/schur.hpp"

namespace {

using namespace symfield;
using schur::ExponentPair;

GaloisField gf(std::uint64_t p, unsigned r = 1) { return GaloisField(ff::make_field(p, r)); }

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t out = 1;
  while (e--) out *= b;
  return out;
}

// Collects the first few failures of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 5) notes_ << "\n    failed: " << what;
  }
  bool ok() const { return failed_ == 0 && total_ > 0; }
  std::string summary() const {
    std::ostringstream s;
    s << total_ - failed_ << "/" << total_ << " checks" << notes_.str();
    return s.str();
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::ostringstream notes_;
};

template <CoefficientField K>
void identity_suite(const K& field, Check& c) {
  for (std::uint64_t k = 2; k <= 12; ++k) {
    c.expect(schur::t_poly(field, ExponentPair::make(k, 1)) ==
                 schur::complete_homogeneous(field, k - 2),
             "T_{" + std::to_string(k) + ",1} = h over " + field.name());
  }
  for (std::uint64_t A = 2; A <= 12; ++A) {
    for (std::uint64_t B = 1; B < A; ++B) {
      const auto e = ExponentPair::make(A, B);
      const auto t = schur::t_poly(field, e);
      c.expect(t * schur::vandermonde(field, e.d) == schur::r_poly(field, e),
               "T V = R " + e.to_string() + " over " + field.name());
      c.expect(t == schur::schur_bialternant(field, e.partition(), e.d),
               "T = s_lambda " + e.to_string() + " over " + field.name());
    }
  }
}

Check criterion1() {
  Check c;
  identity_suite(RationalField{}, c);
  for (std::uint64_t p : {2, 3, 5, 7}) identity_suite(gf(p), c);
  return c;
}

Check criterion2() {
  Check c;
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    const auto v = factor::verify_fact_eq1(p, r);
    const std::string tag = "eq1 p=" + std::to_string(p) + " r=" + std::to_string(r);
    c.expect(v.pass, tag);
    c.expect(v.report.factor_count() == ipow(p, r) - 2, tag + " count");
  }
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}}) {
    const auto v = factor::verify_fact_eq2(p, r);
    const std::string tag = "eq2 p=" + std::to_string(p) + " r=" + std::to_string(r);
    c.expect(v.pass, tag);
    const std::uint64_t q = ipow(p, r);
    c.expect(v.report.factor_count() == (q - 1) * (q - 1), tag + " count");
  }
  return c;
}

Check criterion3() {
  Check c;
  const auto K = gf(2);
  const auto base = schur::t_poly(K, ExponentPair::make(3, 1));
  for (auto [s, t] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
    const auto target = schur::t_poly(K, ExponentPair::make(ipow(2, s) - 1, ipow(2, t) - 1));
    c.expect(factor::divides(base, target),
             "(s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ")");
  }
  return c;
}

Check criterion4() {
  Check c;
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const auto K = gf(p);
    const auto t = schur::t_poly(K, ExponentPair::make(ipow(p, r) + 1, 1));
    c.expect(factor::eisenstein_like_check(t, root_form(K, K.one())).verdict,
             "eisenstein q=" + std::to_string(ipow(p, r)));
  }
  struct Sample {
    std::uint64_t A, B, p;
    unsigned r;
  };
  // The last sample has p | A.
  for (const auto& s : {Sample{5, 2, 7, 1}, Sample{5, 3, 7, 1}, Sample{7, 2, 11, 1},
                        Sample{7, 4, 13, 1}, Sample{5, 2, 5, 2}}) {
    const auto K = gf(s.p, s.r);
    const auto ws = factor::signature_witness(K, ExponentPair::make(s.A, s.B));
    bool all = !ws.empty();
    for (const auto& w : ws) all = all && w.verdict;
    c.expect(all, "signature (" + std::to_string(s.A) + "," + std::to_string(s.B) + ") over " +
                      K.name());
  }
  return c;
}

Check criterion5() {
  Check c;
  using newton::IdentityMode;
  const auto p3 = newton::build_alternative_pair(3);
  for (std::uint64_t m : {1, 4, 28}) {
    c.expect(newton::verify_newton_identity(p3, m, IdentityMode::kDirect).holds,
             "p=3 m=" + std::to_string(m) + " direct");
  }
  for (std::uint64_t m : {4, 28}) {
    c.expect(newton::verify_newton_identity(p3, m, IdentityMode::kFrobeniusShortcut).holds,
             "p=3 m=" + std::to_string(m) + " shortcut");
  }
  c.expect(!newton::verify_newton_identity(p3, 10, IdentityMode::kDirect).holds,
           "p=3 m=10 direct fails");
  c.expect(!newton::verify_newton_identity(p3, 10, IdentityMode::kFrobeniusShortcut).holds,
           "p=3 m=10 shortcut fails");
  const auto p2 = newton::build_alternative_pair(2);
  c.expect(p2.alpha.pow(3).is_one() && !p2.alpha.is_one(), "p=2 alpha is a cube root of unity");
  for (std::uint64_t m : {1, 5, 17}) {
    c.expect(newton::verify_newton_identity(p2, m, IdentityMode::kDirect).holds,
             "p=2 m=" + std::to_string(m));
  }
  return c;
}

Check criterion6() {
  Check c;
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto run = [&](std::uint64_t p, std::uint64_t max_r) {
    for (std::uint64_t r = 2; r <= max_r; ++r) {
      for (std::uint64_t s = 1; s < r; ++s) {
        if (!pow_within(p, r - s, 1'000'000)) continue;
        const auto rep = newton::degree_of_extension(newton::TowerParams::make(p, r, s),
                                                     newton::DegreeMode::kBoth,
                                                     newton::kDefaultOracleCeiling, jobs);
        c.expect(rep.agree.value_or(false), "p=" + std::to_string(p) + " r=" +
                                                std::to_string(r) + " s=" + std::to_string(s));
      }
    }
  };
  run(3, 6);
  run(5, 6);
  run(2, 10);
  return c;
}

Check criterion7() {
  Check c;
  c.expect(newton::two_generator_degree(3, 2, 0) == 3, "(3,2)");
  c.expect(newton::two_generator_degree(5, 3, 0) == 6, "(5,3)");
  c.expect(newton::two_generator_degree(5, 2, 0) == 5, "(5,2)");
  return c;
}

template <CoefficientField K>
void derivative_suite(const K& field, Check& c) {
  for (std::uint64_t k = 3; k <= 10; ++k) {
    const auto t = schur::t_poly(field, ExponentPair::make(k, 1));
    const auto lhs = partial_derivative(t, Var::X) + partial_derivative(t, Var::Y) +
                     partial_derivative(t, Var::Z);
    const auto rhs =
        scalar_mul(schur::t_poly(field, ExponentPair::make(k - 1, 1)), field.from_uint(k));
    c.expect(lhs == rhs, "k=" + std::to_string(k) + " over " + field.name());
  }
}

Check criterion8() {
  Check c;
  derivative_suite(RationalField{}, c);
  const auto K = gf(7);
  derivative_suite(K, c);
  for (auto [phi, psi] : std::vector<std::pair<int, int>>{{2, 4}, {4, 2}}) {
    c.expect(factor::grad_eval_identity(K, 4, K.from_int(phi), K.from_int(psi)).equal,
             "grad phi=" + std::to_string(phi) + " psi=" + std::to_string(psi));
  }
  return c;
}

Check criterion9() {
  Check c;
  const RationalField Q;
  for (auto [A, d] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {5, 1}, {7, 1}, {8, 2}, {9, 3}}) {
    const auto lhs = schur::inverted_transform(schur::t_poly(Q, ExponentPair::make(A, A - d)),
                                               A - 2 * d);
    c.expect(lhs == schur::t_poly(Q, ExponentPair::make(A, d)),
             "(A,d)=(" + std::to_string(A) + "," + std::to_string(d) + ")");
  }
  return c;
}

Check criterion10(std::string& data) {
  Check c;
  const auto K2 = gf(2);
  const auto probe = factor::singular_point_probe(schur::t_poly(K2, ExponentPair::make(5, 1)),
                                                  {K2.one(), K2.one(), K2.one()});
  c.expect(probe.singular, "T_{5,1} over F_2 singular at (1,1,1)");

  const auto K3 = gf(3);
  const auto p3 = factor::singular_point_probe(schur::t_poly(K3, ExponentPair::make(4, 1)),
                                               {K3.one(), K3.one(), K3.one()});
  data = "T_{4,1} over F_3 at (1,1,1): value=" + K3.format(p3.value) +
         " dX=" + K3.format(p3.partials[0]) + " dY=" + K3.format(p3.partials[1]) +
         " dZ=" + K3.format(p3.partials[2]) + " singular=" + (p3.singular ? "true" : "false");
  return c;
}

}  // namespace

int main() {
  std::string data10;
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"identity suite", criterion1},
      {"factorization reproduction", criterion2},
      {"divisibility rules", criterion3},
      {"irreducibility witnesses", criterion4},
      {"counterexample family", criterion5},
      {"degree formulas vs oracle", criterion6},
      {"two-generator degrees", criterion7},
      {"derivative and gradient identities", criterion8},
      {"duality", criterion9},
      {"singularity probe", [&] { return criterion10(data10); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << "criterion " << i + 1 << " " << (c.ok() ? "PASS" : "FAIL") << " "
              << criteria[i].first << " (" << c.summary() << ", " << time.str() << "s)\n";
    if (!c.ok()) ++failures;
  }
  if (!data10.empty()) std::cout << "criterion 10 DATA " << data10 << '\n';
  return failures == 0 ? 0 : 1;
}

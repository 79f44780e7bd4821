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

#include "symfield/cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "symfield/error.hpp"
#include "symfield/factor/factor.hpp"
#include "symfield/json.hpp"
#include "symfield/mpoly/text.hpp"
#include "symfield/newton/newton.hpp"
#include "symfield/schur/schur.hpp"

namespace symfield::cli {
namespace {

using schur::ExponentPair;

enum class Verdict { kInfo, kPass, kFail, kSkip };

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kInfo:
      return "info";
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkip:
      return "skip";
  }
  return "unknown";
}

struct Row {
  Json json;
  std::string text;
  Verdict verdict = Verdict::kInfo;
};

using Rows = std::vector<Row>;

struct Global {
  std::string format = "text";
  std::uint64_t ceiling = 0;
  bool ceiling_set = false;
  std::uint64_t seed = 0;
  bool strict = false;
  unsigned jobs = 1;

  std::uint64_t ceiling_or(std::uint64_t fallback) const { return ceiling_set ? ceiling : fallback; }
};

struct FieldOpts {
  std::uint64_t p = 0;
  unsigned r = 1;
};

Json header(const std::string& command) {
  Json j;
  j["command"] = command;
  return j;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Calls fn with QQ when p = 0 and with F_{p^r} otherwise.
template <class Fn>
Rows with_field(const FieldOpts& f, Fn&& fn) {
  if (f.p == 0) {
    if (f.r != 1) throw DomainError("--r only applies to a finite field (--p > 0)");
    return fn(RationalField{});
  }
  if (!is_prime(f.p)) throw DomainError("--p must be 0 or a prime, got " + std::to_string(f.p));
  return fn(GaloisField(ff::make_field(f.p, f.r)));
}

GaloisField finite_field(const FieldOpts& f, const std::string& command) {
  if (f.p == 0) throw DomainError(command + " needs a finite field (--p > 0)");
  if (!is_prime(f.p)) throw DomainError("--p must be a prime, got " + std::to_string(f.p));
  return GaloisField(ff::make_field(f.p, f.r));
}

Row skip_row(Json j, const std::string& reason) {
  j["reason"] = reason;
  return Row{std::move(j), "skip: " + reason, Verdict::kSkip};
}

// "2,3,5", "1..4", "1..3,7".
std::vector<std::uint64_t> parse_list(const std::string& text, const std::string& what) {
  std::vector<std::uint64_t> out;
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw DomainError("bad value '" + std::string(s) + "' in " + what);
    }
    return v;
  };
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
    } else {
      const std::uint64_t lo = number(std::string_view(item).substr(0, dots));
      const std::uint64_t hi = number(std::string_view(item).substr(dots + 2));
      for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  return out;
}

// --- vandermonde_schur -------------------------------------------------------

template <CoefficientField K>
Row poly_row(const K& field, Json j, const MultiPoly<K>& f) {
  j["field"] = field.name();
  j["poly"] = to_string(f);
  j["terms"] = to_json(f);
  return Row{std::move(j), to_string(f), Verdict::kInfo};
}

struct PairOpts {
  std::uint64_t A = 0;
  std::uint64_t B = 0;
};

Rows cmd_tpoly(const FieldOpts& fo, const PairOpts& po) {
  return with_field(fo, [&](const auto& field) {
    const auto e = ExponentPair::make(po.A, po.B);
    Json j = header("tpoly");
    j["A"] = e.A;
    j["B"] = e.B;
    j["d"] = e.d;
    return Rows{poly_row(field, std::move(j), schur::t_poly(field, e))};
  });
}

Rows cmd_rpoly(const FieldOpts& fo, const PairOpts& po, bool quotient, const Global& g) {
  return with_field(fo, [&](const auto& field) {
    const auto e = ExponentPair::make(po.A, po.B);
    Json j = header(quotient ? "ipoly" : "rpoly");
    j["A"] = e.A;
    j["B"] = e.B;
    j["d"] = e.d;
    if (!quotient) return Rows{poly_row(field, std::move(j), schur::r_poly(field, e))};
    auto ip = schur::i_poly(field, e, g.ceiling_or(schur::kDefaultOracleCeiling));
    Row row = poly_row(field, std::move(j), ip.poly);
    row.json["cross_check"] = schur::status_name(ip.check.status);
    row.json["cross_check_detail"] = ip.check.detail;
    row.text += "\ncross-check: " + schur::status_name(ip.check.status) + " (" + ip.check.detail + ")";
    switch (ip.check.status) {
      case schur::CrossCheck::Status::kVerified:
        row.verdict = Verdict::kPass;
        break;
      case schur::CrossCheck::Status::kFailed:
        row.verdict = Verdict::kFail;
        break;
      case schur::CrossCheck::Status::kSkipped:
        row.verdict = Verdict::kSkip;
        break;
      case schur::CrossCheck::Status::kNotApplicable:
        break;
    }
    return Rows{std::move(row)};
  });
}

Rows cmd_schur(const FieldOpts& fo, const std::vector<std::uint64_t>& lambda, std::uint64_t d) {
  if (lambda.size() != 3) throw DomainError("--lambda needs exactly three parts");
  const auto part = schur::Partition3::make(lambda[0], lambda[1], lambda[2]);
  return with_field(fo, [&](const auto& field) {
    Json j = header("schur");
    j["lambda"] = part.parts;
    j["d"] = d;
    return Rows{poly_row(field, std::move(j), schur::schur_bialternant(field, part, d))};
  });
}

// --- factor_lab --------------------------------------------------------------

Json factors_json(const GaloisField& field, const factor::FactorReport& rep) {
  Json list = Json::array();
  for (const auto& f : rep.factors) {
    list.push_back({{"alpha", field.serialize(f.alpha)},
                    {"beta", field.serialize(f.beta)},
                    {"multiplicity", f.multiplicity}});
  }
  return list;
}

std::string factors_text(const GaloisField& field, const factor::FactorReport& rep) {
  std::string out;
  for (const auto& f : rep.factors) {
    out += "\n  Z - (" + field.format(f.alpha) + ")*X - (" + field.format(f.beta) + ")*Y  mult=" +
           std::to_string(f.multiplicity);
  }
  return out;
}

void add_report(Json& j, const GaloisField& field, const factor::FactorReport& rep) {
  j["factors"] = factors_json(field, rep);
  j["factor_count"] = rep.factor_count();
  j["input_degree_in_z"] = rep.input_degree_in_z;
  j["residual_degree_in_z"] = rep.residual_degree_in_z;
  j["residual"] = to_string(rep.residual);
  j["fully_split"] = rep.fully_split;
}

Rows cmd_factor(const FieldOpts& fo, const PairOpts& po, const std::string& poly_text,
                const Global& g) {
  const GaloisField field = finite_field(fo, "factor");
  Json j = header("factor");
  j["field"] = field.name();
  const FPoly f = poly_text.empty() ? schur::t_poly(field, ExponentPair::make(po.A, po.B))
                                    : parse_poly(field, poly_text);
  j["input"] = to_string(f);
  try {
    const auto rep = factor::linear_factors_over(f, g.ceiling_or(factor::kDefaultFactorCeiling));
    add_report(j, field, rep);
    std::string text = "input: " + to_string(f) + "\nlinear factors: " +
                       std::to_string(rep.factor_count()) + factors_text(field, rep) +
                       "\nresidual: " + to_string(rep.residual) +
                       "\nfully_split=" + bool_text(rep.fully_split);
    return Rows{Row{std::move(j), std::move(text), Verdict::kInfo}};
  } catch (const CeilingExceeded& e) {
    return Rows{skip_row(std::move(j), e.what())};
  }
}

Row verify_fact_row(const std::string& which, std::uint64_t p, unsigned r, std::uint64_t ceiling) {
  Json j = header("verify-fact");
  j["which"] = which;
  j["p"] = p;
  j["r"] = r;
  try {
    const auto v = which == "eq1" ? factor::verify_fact_eq1(p, r, ceiling)
                                  : factor::verify_fact_eq2(p, r, ceiling);
    const GaloisField field(ff::make_field(p, r));
    j["pass"] = v.pass;
    j["product_matches"] = v.product_matches;
    j["expected_factors"] = v.expected_factors;
    add_report(j, field, v.report);
    std::string text = which + " p=" + std::to_string(p) + " r=" + std::to_string(r) + ": " +
                       (v.pass ? "pass" : "fail") + ", " + std::to_string(v.report.factor_count()) +
                       (v.report.factor_count() == 1 ? " factor" : " factors") +
                       factors_text(field, v.report);
    return Row{std::move(j), std::move(text), v.pass ? Verdict::kPass : Verdict::kFail};
  } catch (const CeilingExceeded& e) {
    return skip_row(std::move(j), e.what());
  }
}

std::string multiplicity_text(const Multiplicity& m) {
  return m.infinite ? "inf" : std::to_string(m.count);
}

Json multiplicity_json(const Multiplicity& m) {
  return m.infinite ? Json("inf") : Json(m.count);
}

Rows cmd_signature(FieldOpts fo, const PairOpts& po, bool auto_field) {
  const auto e = ExponentPair::make(po.A, po.B);
  if (auto_field) {
    if (fo.p == 0) throw DomainError("--auto-field needs --p > 0");
    if (!is_prime(fo.p)) throw DomainError("--p must be a prime");
    fo.r = factor::field_for_roots(fo.p, {e.B, e.A - e.B});
  }
  return with_field(fo, [&](const auto& field) {
    using K = std::decay_t<decltype(field)>;
    const auto ws = factor::signature_witness(field, e);
    Json j = header("signature");
    j["field"] = field.name();
    j["A"] = e.A;
    j["B"] = e.B;
    j["d"] = e.d;
    Json list = Json::array();
    bool all = !ws.empty();
    std::string text = "signature " + e.to_string() + " over " + field.name();
    for (const auto& w : ws) {
      const bool lower = w.kind == factor::SignatureWitness<K>::Kind::kLower;
      Json checks = Json::array();
      std::string ctext;
      for (const auto& m : w.checks) {
        checks.push_back(multiplicity_json(m));
        ctext += (ctext.empty() ? "" : ",") + multiplicity_text(m);
      }
      list.push_back({{"kind", lower ? "lower" : "upper"},
                      {"length", w.length},
                      {"root", field.serialize(w.root)},
                      {"checks", checks},
                      {"verdict", w.verdict}});
      text += std::string("\n  ") + (lower ? "lower theta=" : "upper zeta=") +
              field.format(w.root) + " length=" + std::to_string(w.length) + " checks=[" + ctext +
              "] verdict=" + bool_text(w.verdict);
      all = all && w.verdict;
    }
    j["witnesses"] = std::move(list);
    j["all_true"] = all;
    return Rows{Row{std::move(j), std::move(text), all ? Verdict::kPass : Verdict::kFail}};
  });
}

Row eisenstein_row(std::uint64_t p, unsigned r) {
  const GaloisField field(ff::make_field(p, 1));
  const std::uint64_t q = checked_pow(p, r);
  const auto t = schur::t_poly(field, ExponentPair::make(q + 1, 1));
  const auto rep = factor::eisenstein_like_check(t, root_form(field, field.one()));
  Json j = header("eisenstein");
  j["p"] = p;
  j["r"] = r;
  j["f0_multiplicity"] = multiplicity_json(rep.f0_multiplicity);
  j["f0_is_power"] = rep.f0_is_power;
  j["p_divides_f1"] = rep.p_divides_f1;
  j["irreducible"] = rep.verdict;
  std::string text = "T_{" + std::to_string(q + 1) + ",1} over F_" + std::to_string(p) +
                     ", P = X - Y: f0 multiplicity=" + multiplicity_text(rep.f0_multiplicity) +
                     " f0_is_power=" + bool_text(rep.f0_is_power) +
                     " P|f1=" + bool_text(rep.p_divides_f1) + " irreducible=" + bool_text(rep.verdict);
  return Row{std::move(j), std::move(text), rep.verdict ? Verdict::kPass : Verdict::kFail};
}

// --- newton_ext --------------------------------------------------------------

std::string mode_name(newton::DegreeMode m) {
  switch (m) {
    case newton::DegreeMode::kFormula:
      return "formula";
    case newton::DegreeMode::kOracle:
      return "oracle";
    case newton::DegreeMode::kBoth:
      return "both";
  }
  return "unknown";
}

Row degree_row(std::uint64_t p, std::uint64_t r, std::uint64_t s, newton::DegreeMode mode,
               const Global& g) {
  Json j = header("degree");
  j["p"] = p;
  j["r"] = r;
  j["s"] = s;
  j["mode"] = mode_name(mode);
  const auto t = newton::TowerParams::make(p, r, s);
  j["m"] = t.m;
  try {
    const auto rep =
        newton::degree_of_extension(t, mode, g.ceiling_or(newton::kDefaultOracleCeiling), g.jobs);
    std::string text;
    Verdict v = Verdict::kInfo;
    if (rep.formula_value) {
      j["formula_value"] = *rep.formula_value;
      text += "formula=" + std::to_string(*rep.formula_value);
    }
    if (rep.oracle_value) {
      j["oracle_count"] = *rep.oracle_count;
      j["oracle_value"] = *rep.oracle_value;
      text += std::string(text.empty() ? "" : " ") + "oracle=" + std::to_string(*rep.oracle_value);
      if (!rep.agree) text += " count=" + std::to_string(*rep.oracle_count);
    }
    if (rep.agree) {
      j["agree"] = *rep.agree;
      text += " agree=" + bool_text(*rep.agree);
      v = *rep.agree ? Verdict::kPass : Verdict::kFail;
    }
    return Row{std::move(j), std::move(text), v};
  } catch (const CeilingExceeded& e) {
    return skip_row(std::move(j), e.what());
  }
}

// Whether z^m + w^m = x^m + y^m is expected: always for m = 1, and for
// m = p^j + 1 when j is odd (odd p) or even (p = 2).
std::optional<bool> expected_identity(std::uint64_t p, std::uint64_t m) {
  if (m == 1) return true;
  if (m < 2) return std::nullopt;
  std::uint64_t rest = m - 1;
  std::uint64_t j = 0;
  while (rest % p == 0) {
    rest /= p;
    ++j;
  }
  if (rest != 1) return std::nullopt;
  return p == 2 ? j % 2 == 0 : j % 2 == 1;
}

Rows cmd_counterexample(std::uint64_t p, std::vector<std::uint64_t> ms, const std::string& mode) {
  const auto pair = newton::build_alternative_pair(p);
  const GaloisField field(pair.ambient());
  if (ms.empty()) {
    ms = p == 2 ? std::vector<std::uint64_t>{1, 3, 5, 17}
                : std::vector<std::uint64_t>{1, p + 1, p * p + 1, p * p * p + 1};
  }
  Rows rows;
  Json head = header("counterexample");
  head["p"] = p;
  head["field"] = field.name();
  if (pair.eta) head["eta"] = *pair.eta;
  head["alpha"] = field.serialize(pair.alpha);
  head["beta"] = field.serialize(pair.beta);
  head["z"] = {field.serialize(pair.z.cx), field.serialize(pair.z.cy)};
  head["w"] = {field.serialize(pair.w.cx), field.serialize(pair.w.cy)};
  std::string htext = "pair over " + field.name() + ":" +
                      (pair.eta ? " eta=" + std::to_string(*pair.eta) : std::string()) +
                      " alpha=" + field.format(pair.alpha) + " beta=" + field.format(pair.beta) +
                      "\n  z = " + to_string(pair.z.to_poly()) +
                      "\n  w = " + to_string(pair.w.to_poly());
  rows.push_back(Row{std::move(head), std::move(htext), Verdict::kInfo});

  for (std::uint64_t m : ms) {
    Json j = header("counterexample");
    j["p"] = p;
    j["m"] = m;
    std::optional<bool> direct;
    std::optional<bool> shortcut;
    if ((mode == "direct" || mode == "both") && m <= newton::kDirectExpansionLimit) {
      direct = newton::verify_newton_identity(pair, m, newton::IdentityMode::kDirect).holds;
    }
    if ((mode == "shortcut" || mode == "both") && expected_identity(p, m) && m >= 2) {
      shortcut =
          newton::verify_newton_identity(pair, m, newton::IdentityMode::kFrobeniusShortcut).holds;
    }
    const auto expected = expected_identity(p, m);
    std::string text = "m=" + std::to_string(m);
    if (direct) {
      j["direct"] = *direct;
      text += " direct=" + bool_text(*direct);
    }
    if (shortcut) {
      j["shortcut"] = *shortcut;
      text += " shortcut=" + bool_text(*shortcut);
    }
    if (!direct && !shortcut) {
      rows.push_back(skip_row(std::move(j), "no feasible mode for m=" + std::to_string(m)));
      continue;
    }
    const bool observed = direct ? *direct : *shortcut;
    const bool consistent = !(direct && shortcut) || *direct == *shortcut;
    Verdict v = Verdict::kInfo;
    if (!consistent) {
      v = Verdict::kFail;
    } else if (expected) {
      j["expected"] = *expected;
      text += " expected=" + bool_text(*expected);
      v = observed == *expected ? Verdict::kPass : Verdict::kFail;
    }
    text += " verdict=" + verdict_name(v);
    rows.push_back(Row{std::move(j), std::move(text), v});
  }
  return rows;
}

// --- identity suite ----------------------------------------------------------

template <CoefficientField K>
Row identity_point(const std::string& name, const K& field, Json j, bool ok, std::string label) {
  j["field"] = field.name();
  j["holds"] = ok;
  return Row{std::move(j), name + " " + label + " over " + field.name() + ": " + bool_text(ok),
             ok ? Verdict::kPass : Verdict::kFail};
}

template <CoefficientField K>
MultiPoly<K> random_poly(const K& field, std::mt19937_64& rng) {
  using Term = typename MultiPoly<K>::Term;
  std::uniform_int_distribution<int> count(0, 4), exp(0, 3), coeff(-5, 5);
  std::vector<Term> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    terms.push_back(Term{Monomial(exp(rng), exp(rng), exp(rng)), field.from_int(coeff(rng))});
  }
  return MultiPoly<K>::from_terms(field, std::move(terms));
}

struct IdentityOpts {
  std::string name;
  std::uint64_t max = 12;
  std::uint64_t k = 4;
  std::string phi;
  std::string psi;
  std::uint64_t samples = 20;
  std::string f;
  std::string g;
  std::string point;
};

Rows cmd_identity(const FieldOpts& fo, const IdentityOpts& io, const Global& g) {
  return with_field(fo, [&](const auto& field) {
    using K = std::decay_t<decltype(field)>;
    Rows rows;
    auto point = [&](bool ok, std::string label, Json extra) {
      Json j = header("identity");
      j["name"] = io.name;
      for (auto& [key, value] : extra.items()) j[key] = value;
      rows.push_back(identity_point(io.name, field, std::move(j), ok, std::move(label)));
    };
    if (io.name == "hk") {
      for (std::uint64_t k = 2; k <= io.max; ++k) {
        const bool ok = schur::t_poly(field, ExponentPair::make(k, 1)) ==
                        schur::complete_homogeneous(field, k - 2);
        point(ok, "T_{" + std::to_string(k) + ",1} = h_" + std::to_string(k - 2), {{"k", k}});
      }
    } else if (io.name == "roundtrip" || io.name == "schur") {
      for (std::uint64_t A = 2; A <= io.max; ++A) {
        for (std::uint64_t B = 1; B < A; ++B) {
          const auto e = ExponentPair::make(A, B);
          const auto t = schur::t_poly(field, e);
          const bool ok = io.name == "roundtrip"
                              ? t * schur::vandermonde(field, e.d) == schur::r_poly(field, e)
                              : t == schur::schur_bialternant(field, e.partition(), e.d);
          point(ok, "(A,B)=(" + std::to_string(A) + "," + std::to_string(B) + ")",
                {{"A", A}, {"B", B}});
        }
      }
    } else if (io.name == "derivative") {
      for (std::uint64_t k = 3; k <= io.max; ++k) {
        const auto t = schur::t_poly(field, ExponentPair::make(k, 1));
        const auto lhs = partial_derivative(t, Var::X) + partial_derivative(t, Var::Y) +
                         partial_derivative(t, Var::Z);
        const auto rhs = scalar_mul(schur::t_poly(field, ExponentPair::make(k - 1, 1)),
                                    field.from_uint(k));
        point(lhs == rhs, "k=" + std::to_string(k), {{"k", k}});
      }
    } else if (io.name == "duality") {
      for (std::uint64_t A = 3; A <= io.max; ++A) {
        for (std::uint64_t d = 1; 2 * d <= A; ++d) {
          if (A % d != 0 || A - d <= d) continue;
          const auto lhs = schur::inverted_transform(
              schur::t_poly(field, ExponentPair::make(A, A - d)), A - 2 * d);
          const bool ok = lhs == schur::t_poly(field, ExponentPair::make(A, d));
          point(ok, "(A,d)=(" + std::to_string(A) + "," + std::to_string(d) + ")",
                {{"A", A}, {"d", d}});
        }
      }
    } else if (io.name == "grad") {
      if (io.phi.empty() || io.psi.empty()) throw DomainError("identity grad needs --phi and --psi");
      const auto r = factor::grad_eval_identity(field, io.k, field.parse_scalar(io.phi),
                                                field.parse_scalar(io.psi));
      point(r.equal,
            "k=" + std::to_string(io.k) + " phi=" + io.phi + " psi=" + io.psi +
                " lhs=" + field.format(r.lhs) + " rhs=" + field.format(r.rhs),
            {{"k", io.k}, {"lhs", field.serialize(r.lhs)}, {"rhs", field.serialize(r.rhs)}});
    } else if (io.name == "ring") {
      std::mt19937_64 rng(g.seed);
      for (std::uint64_t i = 0; i < io.samples; ++i) {
        const MultiPoly<K> a = random_poly(field, rng);
        const MultiPoly<K> b = random_poly(field, rng);
        const MultiPoly<K> c = random_poly(field, rng);
        bool ok = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a;
        if (!b.is_zero()) ok = ok && exact_divide(a * b, b) == a;
        point(ok, "sample " + std::to_string(i), {{"sample", i}});
      }
    } else if (io.name == "divides") {
      if (io.f.empty() || io.g.empty()) throw DomainError("identity divides needs --f and --g");
      const auto f = parse_poly(field, io.f);
      const auto h = parse_poly(field, io.g);
      const bool ok = factor::divides(f, h);
      Json j = header("identity");
      j["name"] = io.name;
      j["f"] = to_string(f);
      j["g"] = to_string(h);
      j["field"] = field.name();
      j["divides"] = ok;
      rows.push_back(Row{std::move(j),
                         "divides (" + to_string(f) + ") | (" + to_string(h) + ") over " +
                             field.name() + ": " + bool_text(ok),
                         Verdict::kInfo});
    } else if (io.name == "divisibility") {
      // T_{p^{2r}-1, p^r-1} | T_{p^s-1, p^t-1} for r | s, r | t, s > t, s <= max.
      const std::uint64_t p = field.characteristic();
      if (p == 0) throw DomainError("identity divisibility needs a prime characteristic");
      const std::uint64_t r = fo.r;
      const auto base = schur::t_poly(
          field, ExponentPair::make(checked_pow(p, 2 * r) - 1, checked_pow(p, r) - 1));
      for (std::uint64_t s = 2 * r; s <= io.max; s += r) {
        for (std::uint64_t t = r; t < s; t += r) {
          const auto e = ExponentPair::make(checked_pow(p, s) - 1, checked_pow(p, t) - 1);
          point(factor::divides(base, schur::t_poly(field, e)),
                "(s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ")",
                {{"r", r}, {"s", s}, {"t", t}});
        }
      }
    } else if (io.name == "singular") {
      if (io.point.empty()) throw DomainError("identity singular needs --point a,b,c");
      const auto f = io.f.empty() ? schur::t_poly(field, ExponentPair::make(io.k, 1))
                                  : parse_poly(field, io.f);
      std::vector<typename K::Element> coords;
      std::size_t start = 0;
      while (start <= io.point.size()) {
        const auto comma = std::min(io.point.find(',', start), io.point.size());
        coords.push_back(field.parse_scalar(io.point.substr(start, comma - start)));
        start = comma + 1;
      }
      if (coords.size() != 3) throw ParseError("--point needs three coordinates");
      const auto probe = factor::singular_point_probe(f, {coords[0], coords[1], coords[2]});
      Json j = header("identity");
      j["name"] = io.name;
      j["f"] = to_string(f);
      j["field"] = field.name();
      j["point"] = io.point;
      j["value"] = field.serialize(probe.value);
      j["partials"] = Json::array({field.serialize(probe.partials[0]),
                                   field.serialize(probe.partials[1]),
                                   field.serialize(probe.partials[2])});
      j["singular"] = probe.singular;
      rows.push_back(Row{std::move(j),
                         "singular f=" + to_string(f) + " at (" + io.point + ") over " +
                             field.name() + ": value=" + field.format(probe.value) +
                             " dX=" + field.format(probe.partials[0]) +
                             " dY=" + field.format(probe.partials[1]) +
                             " dZ=" + field.format(probe.partials[2]) +
                             " singular=" + bool_text(probe.singular),
                         Verdict::kInfo});
    } else {
      throw DomainError("unknown identity '" + io.name + "'");
    }
    return rows;
  });
}

// --- sweep -------------------------------------------------------------------

struct SweepOpts {
  std::string target;
  std::string which = "eq1";
  std::string mode = "both";
  std::string p_list;
  std::string r_list = "1";
  std::string s_list;
};

newton::DegreeMode parse_mode(const std::string& m) {
  if (m == "formula") return newton::DegreeMode::kFormula;
  if (m == "oracle") return newton::DegreeMode::kOracle;
  return newton::DegreeMode::kBoth;
}

Rows cmd_sweep(const SweepOpts& so, const Global& g) {
  const auto ps = parse_list(so.p_list, "--p");
  const auto rs = parse_list(so.r_list, "--r");
  for (auto p : ps) {
    if (!is_prime(p)) throw DomainError("sweep --p entries must be primes, got " + std::to_string(p));
  }
  std::vector<std::function<Row()>> points;
  if (so.target == "verify-fact") {
    if (so.which != "eq1" && so.which != "eq2") throw DomainError("--which must be eq1 or eq2");
    const std::uint64_t ceiling = g.ceiling_or(factor::kDefaultFactorCeiling);
    for (auto p : ps) {
      for (auto r : rs) {
        if (r < 1) throw DomainError("sweep --r entries must be >= 1");
        points.push_back([=, w = so.which] {
          return verify_fact_row(w, p, static_cast<unsigned>(r), ceiling);
        });
      }
    }
  } else if (so.target == "degree") {
    const auto ss = parse_list(so.s_list, "--s");
    const auto mode = parse_mode(so.mode);
    Global inner = g;
    inner.jobs = 1;  // parallelism is across points
    for (auto p : ps) {
      for (auto r : rs) {
        for (auto s : ss) {
          if (s < 1 || s >= r) continue;
          points.push_back([=] { return degree_row(p, r, s, mode, inner); });
        }
      }
    }
  } else if (so.target == "eisenstein") {
    for (auto p : ps) {
      for (auto r : rs) {
        if (r < 1) throw DomainError("sweep --r entries must be >= 1");
        points.push_back([=] { return eisenstein_row(p, static_cast<unsigned>(r)); });
      }
    }
  } else {
    throw DomainError("unknown sweep target '" + so.target + "'");
  }
  if (points.empty()) throw DomainError("empty sweep grid");

  Rows rows(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        rows[i] = points[i]();
      } catch (const DomainError& e) {
        rows[i] = skip_row(header(so.target), std::string("refused: ") + e.what());
      }
    }
  };
  const unsigned n = std::min<std::size_t>(std::max(1u, g.jobs), points.size());
  std::vector<std::thread> threads;
  for (unsigned i = 1; i < n; ++i) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t skip = 0;
  for (const auto& r : rows) {
    pass += r.verdict == Verdict::kPass;
    fail += r.verdict == Verdict::kFail;
    skip += r.verdict == Verdict::kSkip;
  }
  Json summary = header("sweep");
  summary["target"] = so.target;
  summary["points"] = rows.size();
  summary["pass"] = pass;
  summary["fail"] = fail;
  summary["skip"] = skip;
  rows.push_back(Row{std::move(summary),
                     "summary: points=" + std::to_string(rows.size()) + " pass=" +
                         std::to_string(pass) + " fail=" + std::to_string(fail) +
                         " skip=" + std::to_string(skip),
                     Verdict::kInfo});
  return rows;
}

// --- output ------------------------------------------------------------------

std::string tsv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const Rows& rows, const std::string& format, std::ostream& out) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    Json j = row.json;
    j["verdict"] = verdict_name(row.verdict);
    if (format == "json") {
      out << j.dump() << '\n';
    } else if (format == "tsv") {
      std::vector<std::string> keys;
      for (auto& [key, value] : j.items()) keys.push_back(key);
      if (keys != columns) {
        columns = keys;
        for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "\t" : "") << keys[i];
        out << '\n';
      }
      std::size_t i = 0;
      for (auto& [key, value] : j.items()) out << (i++ ? "\t" : "") << tsv_cell(value);
      out << '\n';
    } else {
      out << row.text << '\n';
    }
  }
}

int exit_status(const Rows& rows, bool strict) {
  bool fail = false;
  for (const auto& r : rows) {
    if (r.verdict == Verdict::kFail) fail = true;
    if (r.verdict == Verdict::kSkip && strict) fail = true;
  }
  return fail ? kExitFail : kExitPass;
}

void add_field_options(CLI::App* sub, FieldOpts& fo) {
  sub->add_option("--p,--char", fo.p, "Characteristic; 0 for the rationals")->capture_default_str();
  sub->add_option("--r", fo.r, "Extension degree of F_{p^r}")->capture_default_str()
      ->check(CLI::Range(1u, 64u));
}

void add_pair_options(CLI::App* sub, PairOpts& po, bool required) {
  auto* a = sub->add_option("--A", po.A, "Larger exponent A");
  auto* b = sub->add_option("--B", po.B, "Smaller exponent B, 1 <= B < A");
  if (required) {
    a->required();
    b->required();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Vandermonde/Schur polynomials over finite fields and Newton power sums"};
  app.name("symfield");
  app.require_subcommand(1);
  app.set_config("--config", "", "Read option values from a TOML/INI file");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Global g;
  std::uint64_t ceiling_opt = 0;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "tsv"}))
      ->capture_default_str();
  auto* ceiling_flag =
      app.add_option("--ceiling", ceiling_opt, "Field-size ceiling for enumerations");
  app.add_option("--seed", g.seed, "Seed for randomized sampling")->capture_default_str();
  app.add_flag("--strict", g.strict, "Treat skipped points as failures");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  FieldOpts fo;
  PairOpts po;

  auto* tpoly = app.add_subcommand("tpoly", "T_{A,B} = R / V(X^d, Y^d, Z^d)");
  add_field_options(tpoly, fo);
  add_pair_options(tpoly, po, true);

  bool quotient = false;
  auto* rpoly = app.add_subcommand("rpoly", "The determinant R_{A,B}, or I = R / (X^d - Y^d)");
  add_field_options(rpoly, fo);
  add_pair_options(rpoly, po, true);
  rpoly->add_flag("--i", quotient, "Print I with its product-form cross-check");

  std::vector<std::uint64_t> lambda;
  std::uint64_t schur_d = 1;
  auto* schur_cmd = app.add_subcommand("schur", "s_lambda(X^d, Y^d, Z^d) by bialternants");
  add_field_options(schur_cmd, fo);
  schur_cmd->add_option("--lambda", lambda, "Partition parts, e.g. 1,0,0")
      ->delimiter(',')
      ->required();
  schur_cmd->add_option("--d", schur_d, "Exponent scale d")->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string poly_text;
  auto* factor_cmd = app.add_subcommand("factor", "Linear factors Z - aX - bY over F_{p^r}");
  add_field_options(factor_cmd, fo);
  add_pair_options(factor_cmd, po, false);
  factor_cmd->add_option("--poly", poly_text, "Polynomial text instead of T_{A,B}");

  bool auto_field = false;
  auto* sig = app.add_subcommand("signature", "Lower and upper signature witnesses of I");
  add_field_options(sig, fo);
  add_pair_options(sig, po, true);
  sig->add_flag("--auto-field", auto_field, "Use the least r holding the roots of unity");

  std::string which = "eq1";
  auto* vf = app.add_subcommand("verify-fact", "Closed-form factorizations of T over F_{p^r}");
  add_field_options(vf, fo);
  vf->add_option("--which", which, "eq1 or eq2")->check(CLI::IsMember({"eq1", "eq2"}))
      ->capture_default_str();

  std::uint64_t cx_p = 0;
  std::vector<std::uint64_t> cx_m;
  std::string cx_mode = "both";
  auto* cx = app.add_subcommand("counterexample", "Alternative pair z, w and its identities");
  cx->add_option("--p,--char", cx_p, "Prime characteristic")->required();
  cx->add_option("--m", cx_m, "Exponents to check (default: the standard list)")->delimiter(',');
  cx->add_option("--mode", cx_mode, "direct, shortcut or both")
      ->check(CLI::IsMember({"direct", "shortcut", "both"}))
      ->capture_default_str();

  std::uint64_t dp = 0, dr = 0, ds = 0;
  std::string dmode = "both";
  auto* deg = app.add_subcommand("degree", "[S : N_{p^r+1, p^s+1, 1}] by formula and by count");
  deg->add_option("--p,--char", dp, "Prime characteristic")->required();
  deg->add_option("--r", dr, "r")->required();
  deg->add_option("--s", ds, "s, 1 <= s < r")->required();
  deg->add_option("--mode", dmode, "formula, oracle or both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}))
      ->capture_default_str();

  SweepOpts so;
  auto* sweep = app.add_subcommand("sweep", "Run a verification over a parameter grid");
  sweep->add_option("--target", so.target, "verify-fact, degree or eisenstein")
      ->check(CLI::IsMember({"verify-fact", "degree", "eisenstein"}))
      ->required();
  sweep->add_option("--which", so.which, "eq1 or eq2 (verify-fact)")
      ->check(CLI::IsMember({"eq1", "eq2"}));
  sweep->add_option("--mode", so.mode, "formula, oracle or both (degree)")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));
  sweep->add_option("--p", so.p_list, "Primes, e.g. 2,3,5 or 2..7")->required();
  sweep->add_option("--r", so.r_list, "r values, e.g. 1..3")->capture_default_str();
  sweep->add_option("--s", so.s_list, "s values (degree)");

  IdentityOpts io;
  auto* ident = app.add_subcommand("identity", "Polynomial identity checks");
  add_field_options(ident, fo);
  ident
      ->add_option("--name", io.name,
                    "hk, roundtrip, schur, derivative, duality, grad, ring, divides, "
                    "divisibility, singular")
      ->check(CLI::IsMember({"hk", "roundtrip", "schur", "derivative", "duality", "grad", "ring",
                             "divides", "divisibility", "singular"}))
      ->required();
  ident->add_option("--max", io.max, "Largest k or A")->capture_default_str();
  ident->add_option("--k", io.k, "k (grad, singular)")->capture_default_str();
  ident->add_option("--phi", io.phi, "phi (grad)");
  ident->add_option("--psi", io.psi, "psi (grad)");
  ident->add_option("--samples", io.samples, "Random samples (ring)")->capture_default_str();
  ident->add_option("--f", io.f, "Polynomial f (divides, singular)");
  ident->add_option("--g", io.g, "Polynomial g (divides)");
  ident->add_option("--point", io.point, "Point a,b,c (singular)");

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (ceiling_flag->count() > 0) {
      g.ceiling = ceiling_opt;
      g.ceiling_set = true;
    } else if (const char* env = std::getenv(kCeilingEnv); env != nullptr && *env != '\0') {
      const std::string_view s(env);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), g.ceiling);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DomainError(std::string(kCeilingEnv) + " is not a number: " + env);
      }
      g.ceiling_set = true;
    }
    if (g.ceiling_set && g.ceiling < 2) throw DomainError("the ceiling must be at least 2");

    Rows rows;
    if (*tpoly) {
      rows = cmd_tpoly(fo, po);
    } else if (*rpoly) {
      rows = cmd_rpoly(fo, po, quotient, g);
    } else if (*schur_cmd) {
      rows = cmd_schur(fo, lambda, schur_d);
    } else if (*factor_cmd) {
      if (poly_text.empty() && (po.A == 0 || po.B == 0)) {
        throw DomainError("factor needs --A and --B, or --poly");
      }
      rows = cmd_factor(fo, po, poly_text, g);
    } else if (*sig) {
      rows = cmd_signature(fo, po, auto_field);
    } else if (*vf) {
      if (fo.p == 0) throw DomainError("verify-fact needs --p > 0");
      rows = {verify_fact_row(which, fo.p, fo.r, g.ceiling_or(factor::kDefaultFactorCeiling))};
    } else if (*cx) {
      rows = cmd_counterexample(cx_p, cx_m, cx_mode);
    } else if (*deg) {
      rows = {degree_row(dp, dr, ds, parse_mode(dmode), g)};
    } else if (*sweep) {
      if (so.target == "degree" && so.s_list.empty()) throw DomainError("sweep degree needs --s");
      rows = cmd_sweep(so, g);
    } else if (*ident) {
      rows = cmd_identity(fo, io, g);
    }
    emit(rows, g.format, out);
    return exit_status(rows, g.strict);
  } catch (const CeilingExceeded& e) {
    err << "skip: " << e.what() << '\n';
    return g.strict ? kExitFail : kExitPass;
  } catch (const FieldTooSmall& e) {
    err << "error: " << e.what() << " (needs r divisible by " << e.required_degree() << ")\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const symfield::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ExponentOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace symfield::cli

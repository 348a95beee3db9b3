#pragma once

// The fourteen acceptance criteria as exact checks with wall-clock budgets.
// Level "quick" is the default; "full" adds the 256×256 eliminations.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hopflab/dual.hpp"
#include "hopflab/error.hpp"
#include "hopflab/galois.hpp"
#include "hopflab/hopf.hpp"
#include "hopflab/isotest.hpp"
#include "hopflab/parse.hpp"
#include "hopflab/report.hpp"
#include "hopflab/witt.hpp"

namespace hopflab {

enum class SuiteLevel { Quick, Full };

inline SuiteLevel parse_level(const std::string& s) {
  if (s == "quick") return SuiteLevel::Quick;
  if (s == "full") return SuiteLevel::Full;
  throw Error(ErrorKind::InvalidParameters, "level must be quick or full, got \"" + s + "\"");
}

/// HOPFLAB_LEVEL, when set, wins over the requested level.
inline SuiteLevel effective_level(SuiteLevel requested) {
  if (const char* env = std::getenv("HOPFLAB_LEVEL"); env && *env) return parse_level(env);
  return requested;
}

struct CriterionResult {
  int id = 0;
  std::string title;
  double seconds = 0;
  double budget = 0;
  Report report;
  std::string error;  // exception text, if one escaped

  bool within_budget() const { return seconds <= budget; }
  bool passed() const { return error.empty() && report.passed() && within_budget(); }

  std::string line() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f s of %.0f s", seconds, budget);
    std::string s = std::string(passed() ? "PASS" : "FAIL") + " criterion " + std::to_string(id) + ": " + title + " (" +
                    buf + ", " + std::to_string(report.checks.size()) + " checks)";
    if (!within_budget()) s += " over budget";
    return s;
  }
};

/// One monogenic test case (p, n, r, f) over F_p(T_1, ..., T_m) at root depth d.
struct HopfCase {
  std::int64_t p;
  int n, r;
  std::string f;
  int m = 1;

  Field field() const { return Field(p, m, witt_depth(n, r)); }
  HopfAlgebraData build() const {
    Field F = field();
    return build_hopf(F, n, r, parse_ratfunc(F, f));
  }
  std::string name() const {
    return "(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(r) + "," + f + ")";
  }
};

inline const std::vector<HopfCase>& hopf_cases() {
  static const std::vector<HopfCase> cases = {{2, 2, 1, "T1"}, {2, 3, 1, "T1"}, {2, 3, 2, "T1"},
                                              {3, 2, 1, "T1"}, {3, 3, 2, "T1"}, {2, 2, 1, "T1+1"}};
  return cases;
}

inline const std::vector<HopfCase>& dual_cases() {
  static const std::vector<HopfCase> cases = {{2, 2, 1, "T1"}, {3, 2, 1, "T1"}, {2, 3, 2, "T1"}, {3, 3, 2, "T1"}};
  return cases;
}

namespace detail {

inline IntPoly displayed_s1(std::int64_t p) {
  // X_1 + Y_1 - Σ_{i=1}^{p-1} ((p-1)!/(i!(p-i)!)) X_0^i Y_0^{p-i}
  auto fact = [](std::int64_t k) {
    BigInt r = 1;
    for (std::int64_t j = 2; j <= k; ++j) r *= j;
    return r;
  };
  IntPoly s = IntPoly::monomial(Monomial::var(1)) + IntPoly::monomial(Monomial::var(kYOffset + 1));
  for (std::int64_t i = 1; i < p; ++i) {
    BigInt c = fact(p - 1) / (fact(i) * fact(p - i));
    Monomial m = Monomial::var(0, static_cast<unsigned>(i)) * Monomial::var(kYOffset, static_cast<unsigned>(p - i));
    s = s - IntPoly::monomial(m, c);
  }
  return s;
}

inline std::string vec_text(const IntWittVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

inline IntWittVector random_witt(std::mt19937& rng, int len, int bound = 6) {
  std::uniform_int_distribution<int> pick(-bound, bound);
  IntWittVector v;
  for (int i = 0; i < len; ++i) v.push_back(pick(rng));
  return v;
}

inline Report criterion_1(SuiteLevel) {
  Report rep;
  for (std::int64_t p : {2, 3, 5}) {
    auto sys = witt_system(p, 1);
    IntPoly s0 = IntPoly::monomial(Monomial::var(0)) + IntPoly::monomial(Monomial::var(kYOffset));
    rep.add("S_0 at p=" + std::to_string(p), sys->addition_polynomial(0) == s0);
    IntPoly s1 = displayed_s1(p);
    rep.add("S_1 at p=" + std::to_string(p), sys->addition_polynomial(1) == s1,
            clip(sys->addition_polynomial(1).to_string([](int i) { return witt_var_name(i); }), 120));
  }
  for (std::int64_t p : {2, 3}) {
    bool ok = true;
    std::string detail;
    try {
      auto sys = witt_system(p, 4);
      detail = std::to_string(sys->addition_polynomial(4).size()) + " terms in S_4";
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    rep.add("integrality of S_0..S_4 at p=" + std::to_string(p), ok, detail);
  }
  return rep;
}

inline Report criterion_2(SuiteLevel) {
  Report rep;
  std::mt19937 rng(2024);
  for (std::int64_t p : {2, 3}) {
    auto sys = witt_system(p, 3);
    bool ghost_ok = true, assoc_ok = true;
    std::string detail;
    for (int k = 0; k < 50; ++k) {
      const int len = 1 + k % 4;
      auto u = random_witt(rng, len), v = random_witt(rng, len), w = random_witt(rng, len);
      auto s = witt_add(*sys, u, v);
      auto gs = ghost_map(*sys, s), gu = ghost_map(*sys, u), gv = ghost_map(*sys, v);
      for (int i = 0; i < len; ++i)
        if (gs[i] != gu[i] + gv[i]) {
          ghost_ok = false;
          detail = vec_text(u) + " + " + vec_text(v);
        }
      if (witt_add(*sys, s, w) != witt_add(*sys, u, witt_add(*sys, v, w))) {
        assoc_ok = false;
        detail = vec_text(u) + ", " + vec_text(v) + ", " + vec_text(w);
      }
    }
    rep.add("ghost additivity at p=" + std::to_string(p) + " (50 vectors)", ghost_ok, ghost_ok ? "" : detail);
    rep.add("associativity at p=" + std::to_string(p) + " (50 triples)", assoc_ok, assoc_ok ? "" : detail);
  }
  return rep;
}

inline Report criterion_3(SuiteLevel) {
  Report rep;
  std::mt19937 rng(7);
  for (std::int64_t p : {2, 3, 5}) {
    // d = 3 at p = 5 costs several hundred ms to generate; length 3 suffices there.
    const int max_len = p == 5 ? 3 : 4;
    auto sys = witt_system(p, max_len - 1);
    bool inverse_ok = true, componentwise_ok = true;
    for (int k = 0; k < 20; ++k) {
      auto u = random_witt(rng, 1 + k % max_len);
      const IntWittVector zero(u.size(), 0);
      inverse_ok = inverse_ok && witt_add(*sys, u, witt_neg(*sys, u)) == zero;
      IntWittVector neg = u;
      for (auto& c : neg) c = -c;
      componentwise_ok = componentwise_ok && witt_add(*sys, u, neg) == zero;
    }
    rep.add("witt_neg(u) + u = 0 at p=" + std::to_string(p) + " (20 vectors)", inverse_ok);
    if (p != 2) rep.add("componentwise negation is the inverse at p=" + std::to_string(p), componentwise_ok);
  }
  auto sys = witt_system(2, 1);
  auto s = witt_add(*sys, {1, 0}, {-1, 0});
  rep.add("p=2: (1,0) + (-1,0) = (0,1)", s == IntWittVector{0, 1}, vec_text(s));
  auto n = witt_neg(*sys, {1, 0});
  rep.add("p=2: witt_neg((1,0)) = (-1,-1)", n == IntWittVector{-1, -1}, vec_text(n));
  return rep;
}

inline Report criterion_4(SuiteLevel) {
  Report rep;
  for (const auto& c : hopf_cases()) {
    auto h = c.build();
    HopfCheckOptions opt;
    opt.full_basis = true;
    Report r = verify_hopf_axioms(h, opt);
    rep.add("axioms " + c.name(), r.passed(),
            r.passed() ? (h.antipode_is_negation ? "λ(t) = -t" : "λ(t) = " + clip(h.antipode[0].to_string(), 120))
                       : clip(r.to_string()));
  }
  return rep;
}

inline Report criterion_5(SuiteLevel) {
  Report rep;
  for (const auto& c : hopf_cases()) {
    auto h = c.build();
    bool ok = true;
    for (const auto& [idx, coef] : h.delta[0].terms()) ok = ok && in_base_field(coef);
    rep.add("Δ(t) coefficients in K " + c.name(), ok, std::to_string(h.delta[0].size()) + " terms");
  }
  return rep;
}

inline Report criterion_6(SuiteLevel) {
  Report rep;
  for (const auto& c : hopf_cases()) {
    if (c.r != c.n - 1) continue;
    auto h = c.build();
    bool ok = closed_form_delta(h) == h.delta[0];
    rep.add("closed form " + c.name(), ok, ok ? "" : clip((closed_form_delta(h) - h.delta[0]).to_string()));
  }
  for (std::int64_t p : {2, 3, 5, 7}) {
    PrimeField fp(p);
    auto fact = [&](std::int64_t k) {
      Coef r = 1;
      for (std::int64_t j = 2; j <= k; ++j) r = fp.mul(r, fp.reduce(j));
      return r;
    };
    bool ok = true;
    for (std::int64_t l = 1; l < p; ++l) {
      Coef denom = fp.mul(fact(l), fact(p - l));
      Coef lhs = fp.neg(fp.mul(fact(p - 1), fp.inv(denom)));
      ok = ok && lhs == fp.inv(denom);
    }
    rep.add("-(p-1)!/(l!(p-l)!) = 1/(l!(p-l)!) mod " + std::to_string(p), ok);
  }
  return rep;
}

inline Report criterion_7(SuiteLevel) {
  Report rep;
  for (const HopfCase& c : std::vector<HopfCase>{{2, 2, 1, "T1"}, {2, 3, 2, "T1"}, {2, 3, 1, "T1"}, {3, 2, 1, "T1"}}) {
    auto h = c.build();
    auto ext = make_extension(h.field, parse_ratfunc(h.field, "T1"), c.n);
    const std::int64_t q = ipow(c.p, c.n);
    for (std::int64_t i = 1; i < q; ++i) {
      if (i % c.p == 0) continue;
      auto co = build_coaction(h, ext, i);
      std::string tag = c.name() + " i=" + std::to_string(i);
      try {
        auto tri = galois_certificate(co, CertMode::Triangular);
        auto full = galois_certificate(co, CertMode::FullMatrix);
        rep.add(tag, tri.invertible && full.invertible && full.rank == static_cast<std::size_t>(q * q),
                "triangular ok, rank " + std::to_string(full.rank) + " of " + std::to_string(full.dimension));
      } catch (const Error& e) {
        rep.add(tag, false, e.what());
      }
    }
  }
  return rep;
}

inline Report criterion_8(SuiteLevel) {
  Report rep;
  for (const HopfCase& c : std::vector<HopfCase>{{2, 2, 1, "T1"}, {2, 3, 1, "T1"}, {3, 2, 1, "T1"}}) {
    auto h = c.build();
    auto en = enumerate_coactions(h, make_extension(h.field, parse_ratfunc(h.field, "T1"), c.n));
    rep.add("count " + c.name(), en.ok(),
            std::to_string(en.certified) + " certified, φ(p^n) = " + std::to_string(en.expected));
  }
  return rep;
}

inline Report criterion_9(SuiteLevel) {
  Report rep;
  for (const auto& c : dual_cases()) {
    auto dh = dual_structure(c.build());
    rep.append(verify_dual_structure(dh), c.name() + " ");
    rep.append(verify_dual_presentation(dh), c.name() + " ");
  }
  return rep;
}

inline Report criterion_10(SuiteLevel) {
  Report rep;
  for (const auto& c : dual_cases()) {
    auto h = c.build();
    auto dh = dual_structure(h);
    auto co = build_coaction(h, make_extension(h.field, parse_ratfunc(h.field, "T1"), c.n), 1);
    rep.append(verify_action_theorem(dual_action_table(dh, co)), c.name() + " ");
  }
  return rep;
}

inline Report criterion_11(SuiteLevel) {
  Report rep;
  Field F(2, 1, 1);
  const RatFunc T1 = RatFunc::variable(F, 0);
  auto ext = make_extension(F, T1, 2);
  for (const auto& h : {build_hopf(F, 2, 1, T1), primitive_hopf(F, 2)}) {
    auto dh = dual_structure(h);
    auto co = build_coaction(h, ext, 1);
    try {
      rep.append(verify_hg_extension(dh, dual_action_table(dh, co)), h.label() + " ");
    } catch (const Error& e) {
      rep.add(h.label() + " End-map", false, e.what());
    }
  }
  return rep;
}

inline Report criterion_12(SuiteLevel) {
  Report rep;
  Field F(2, 2, 1);
  auto H = [&](const char* f) { return build_hopf(F, 2, 1, parse_ratfunc(F, f)); };
  auto a = iso_test(H("T1"), H("T1^4"));
  rep.add("H_{2,1,T1} ≅ H_{2,1,T1^4} with g = T1",
          a.status == IsoStatus::Isomorphic && a.witness_verified && *a.witness == parse_ratfunc(F, "T1"), a.to_string());
  auto b = iso_test(H("T1"), H("T2"));
  rep.add("H_{2,1,T1} vs H_{2,1,T2} refuted by a valuation",
          b.status == IsoStatus::NotIsomorphic && b.power.status == PowerStatus::NotPower, b.to_string());
  Report fam = distinct_family(Field(3, 3, 1), 2, 1);
  rep.add("distinct family m=3, p=3, n=2, r=1", fam.passed() && fam.checks.size() == 3,
          std::to_string(fam.checks.size()) + " pairs");
  return rep;
}

inline Report criterion_13(SuiteLevel) {
  Report rep;
  Field F(2, 1, 1);
  const RatFunc T1 = RatFunc::variable(F, 0);
  auto h = build_hopf(F, 2, 1, T1);
  auto co = build_coaction(h, make_extension(F, T1, 2), 1);
  for (const char* g : {"T1", "T1+1"}) rep.add("y = g·x with g = " + std::string(g), verify_change_of_generator(co, parse_ratfunc(F, g)));
  return rep;
}

inline Report criterion_14(SuiteLevel level) {
  Report rep;
  Field F(2, 2, 1);
  const RatFunc T1 = RatFunc::variable(F, 0), T2 = RatFunc::variable(F, 1);
  auto ht = tensor_hopf({build_hopf(F, 2, 1, T1), build_hopf(F, 2, 1, T2)});
  rep.add("tensor H_{2,1,T1}⊗H_{2,1,T2}: dimension 16", ht.dimension() == 16);
  rep.append(verify_hopf_axioms(ht), "tensor ");
  auto ct = tensor_galois(ht, {make_extension(F, T1, 2, "x"), make_extension(F, T2, 2, "y")});
  rep.append(verify_comodule(ct), "tensor coaction ");
  auto hb = bigenic_example(F);
  rep.append(verify_hopf_axioms(hb), "bigenic ");
  auto cb = bigenic_coaction(hb);
  rep.append(verify_comodule(cb), "bigenic coaction ");
  for (const auto* c : {&ct, &cb}) {
    const std::string tag = c == &ct ? "tensor" : "bigenic";
    try {
      rep.add(tag + " triangular certificate", galois_certificate(*c, CertMode::Triangular).invertible);
      if (level == SuiteLevel::Full) {
        auto full = galois_certificate(*c, CertMode::FullMatrix);
        rep.add(tag + " 256×256 elimination", full.invertible && full.rank == 256, "rank " + std::to_string(full.rank));
      }
    } catch (const Error& e) {
      rep.add(tag + " certificate", false, e.what());
    }
  }
  return rep;
}

struct CriterionEntry {
  int id;
  const char* title;
  double budget_quick;
  double budget_full;
  Report (*run)(SuiteLevel);
};

inline const std::vector<CriterionEntry>& criteria() {
  static const std::vector<CriterionEntry> entries = {
      {1, "Witt polynomials", 10, 10, criterion_1},
      {2, "ghost additivity and associativity", 10, 10, criterion_2},
      {3, "inverse behaviour", 1, 1, criterion_3},
      {4, "Hopf axioms", 60, 60, criterion_4},
      {5, "integrality of Δ(t)", 1, 1, criterion_5},
      {6, "closed form for r = n-1", 5, 5, criterion_6},
      {7, "Galois certificates", 120, 120, criterion_7},
      {8, "coaction count", 60, 60, criterion_8},
      {9, "dual presentation", 60, 60, criterion_9},
      {10, "action theorem", 60, 60, criterion_10},
      {11, "Hopf-Galois extension duality", 30, 30, criterion_11},
      {12, "isomorphism", 10, 10, criterion_12},
      {13, "change of generator", 10, 10, criterion_13},
      {14, "modular and two-generator examples", 120, 600, criterion_14},
  };
  return entries;
}

}  // namespace detail

inline CriterionResult run_criterion(int id, SuiteLevel level) {
  for (const auto& entry : detail::criteria()) {
    if (entry.id != id) continue;
    CriterionResult res;
    res.id = id;
    res.title = entry.title;
    res.budget = level == SuiteLevel::Full ? entry.budget_full : entry.budget_quick;
    auto t0 = std::chrono::steady_clock::now();
    try {
      res.report = entry.run(level);
    } catch (const std::exception& e) {
      res.error = e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }
  throw Error(ErrorKind::InvalidParameters, "no criterion " + std::to_string(id));
}

/// Runs every criterion in order; `on_result` sees each one as it finishes.
inline std::vector<CriterionResult> run_suite(SuiteLevel level,
                                              const std::function<void(const CriterionResult&)>& on_result = {}) {
  std::vector<CriterionResult> out;
  for (const auto& entry : detail::criteria()) {
    out.push_back(run_criterion(entry.id, level));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace hopflab

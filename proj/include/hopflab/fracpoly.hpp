#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hopflab/error.hpp"
#include "hopflab/field.hpp"

namespace hopflab {

using Exponents = boost::container::small_vector<std::int64_t, 4>;

/// Polynomial in T_1^{1/p^D}, ..., T_m^{1/p^D} over F_p. Exponents are stored
/// as integer counts of 1/p^D; terms are kept sorted lexicographically
/// (T_1 most significant) with no zero coefficients.
class FracPoly {
 public:
  struct Term {
    Exponents exps;
    Coef coef;
  };

  FracPoly() = default;
  explicit FracPoly(const Field& field) : field_(field) {}

  static FracPoly constant(const Field& field, std::int64_t c) {
    FracPoly r(field);
    Coef v = field.fp().reduce(c);
    if (v) r.terms_.push_back({Exponents(field.m, 0), v});
    return r;
  }

  /// T_{index+1}^{units / p^D}.
  static FracPoly variable(const Field& field, int index, std::int64_t units) {
    if (index < 0 || index >= field.m)
      throw Error(ErrorKind::InvalidParameters, "variable T" + std::to_string(index + 1) + " out of range");
    Exponents e(field.m, 0);
    e[index] = units;
    return monomial(field, std::move(e), 1);
  }

  static FracPoly monomial(const Field& field, Exponents exps, Coef coef) {
    FracPoly r(field);
    coef = field.fp().reduce(coef);
    if (coef) r.terms_.push_back({std::move(exps), coef});
    return r;
  }

  /// Builds a polynomial from arbitrary (unsorted, possibly repeated) terms.
  static FracPoly from_terms(const Field& field, std::vector<Term> terms) {
    FracPoly r(field);
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
  }

  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(),
                                              [](std::int64_t e) { return e == 0; }));
  }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].coef == 1; }

  /// Lexicographically largest term. Precondition: nonzero.
  const Term& leading() const { return terms_.back(); }

  std::int64_t total_degree() const {
    std::int64_t best = 0;
    for (const auto& t : terms_) {
      std::int64_t s = 0;
      for (auto e : t.exps) s += e;
      best = std::max(best, s);
    }
    return best;
  }

  std::int64_t degree_in(int var) const {
    std::int64_t best = 0;
    for (const auto& t : terms_) best = std::max(best, t.exps[var]);
    return best;
  }

  std::int64_t order_in(int var) const {
    std::int64_t best = terms_.empty() ? 0 : terms_[0].exps[var];
    for (const auto& t : terms_) best = std::min(best, t.exps[var]);
    return best;
  }

  FracPoly operator-() const {
    FracPoly r = *this;
    auto fp = field_.fp();
    for (auto& t : r.terms_) t.coef = fp.neg(t.coef);
    return r;
  }

  friend FracPoly operator+(const FracPoly& a, const FracPoly& b) { return merge(a, b, false); }
  friend FracPoly operator-(const FracPoly& a, const FracPoly& b) { return merge(a, b, true); }

  friend FracPoly operator*(const FracPoly& a, const FracPoly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return FracPoly(a.field_);
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    auto fp = a.field_.fp();
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) {
        Term t{x.exps, fp.mul(x.coef, y.coef)};
        for (std::size_t i = 0; i < t.exps.size(); ++i) t.exps[i] += y.exps[i];
        out.push_back(std::move(t));
      }
    return from_terms(a.field_, std::move(out));
  }

  FracPoly scaled(Coef c) const {
    auto fp = field_.fp();
    c = fp.reduce(c);
    if (c == 0) return FracPoly(field_);
    FracPoly r = *this;
    for (auto& t : r.terms_) t.coef = fp.mul(t.coef, c);
    return r;
  }

  /// Multiplies every exponent by `factor` (Frobenius when factor = p^k).
  FracPoly stretched(std::int64_t factor) const {
    FracPoly r = *this;
    for (auto& t : r.terms_)
      for (auto& e : t.exps) e *= factor;
    return r;
  }

  /// Divides every exponent by `divisor`; nullopt if some exponent is not divisible.
  std::optional<FracPoly> shrunk(std::int64_t divisor) const {
    FracPoly r = *this;
    for (auto& t : r.terms_)
      for (auto& e : t.exps) {
        if (e % divisor != 0) return std::nullopt;
        e /= divisor;
      }
    return r;
  }

  /// Power by base-p digits: a^{p^k} is a Frobenius stretch in characteristic p.
  FracPoly pow(std::uint64_t e) const {
    FracPoly result = constant(field_, 1);
    FracPoly frob = *this;
    const auto p = static_cast<std::uint64_t>(field_.p);
    while (e) {
      std::uint64_t digit = e % p;
      for (std::uint64_t i = 0; i < digit; ++i) result = result * frob;
      e /= p;
      if (e) frob = frob.stretched(field_.p);
    }
    return result;
  }

  Exponents min_exponents() const {
    Exponents m(field_.m, 0);
    if (terms_.empty()) return m;
    m = terms_[0].exps;
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exps[i]);
    return m;
  }

  FracPoly shifted_down(const Exponents& by) const {
    FracPoly r = *this;
    for (auto& t : r.terms_)
      for (std::size_t i = 0; i < by.size(); ++i) t.exps[i] -= by[i];
    return r;
  }

  FracPoly times_monomial(const Exponents& by, Coef c) const {
    FracPoly r = scaled(c);
    for (auto& t : r.terms_)
      for (std::size_t i = 0; i < by.size(); ++i) t.exps[i] += by[i];
    return r;
  }

  /// Exact multivariate division in lex order; nullopt when `d` does not divide.
  std::optional<FracPoly> divide_exact(const FracPoly& d) const {
    require_same_field(field_, d.field_);
    if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (is_zero()) return FracPoly(field_);
    if (d.is_one()) return *this;
    auto fp = field_.fp();
    const Term& lt = d.leading();
    Coef lt_inv = fp.inv(lt.coef);
    if (d.is_monomial()) {
      FracPoly q = *this;
      for (auto& t : q.terms_) {
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
          t.exps[i] -= lt.exps[i];
          if (t.exps[i] < 0) return std::nullopt;
        }
        t.coef = fp.mul(t.coef, lt_inv);
      }
      return q;
    }
    std::vector<Term> quotient;
    FracPoly rem = *this;
    while (!rem.is_zero()) {
      const Term& r = rem.leading();
      Term q{r.exps, fp.mul(r.coef, lt_inv)};
      for (std::size_t i = 0; i < q.exps.size(); ++i) {
        q.exps[i] -= lt.exps[i];
        if (q.exps[i] < 0) return std::nullopt;
      }
      rem = rem - d.times_monomial(q.exps, q.coef);
      quotient.push_back(std::move(q));
    }
    return from_terms(field_, std::move(quotient));
  }

  friend bool operator==(const FracPoly& a, const FracPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].coef != b.terms_[i].coef || a.terms_[i].exps != b.terms_[i].exps) return false;
    return true;
  }

  /// Canonical text: terms in descending lex order joined by " + ".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += term_text(*it);
    }
    return out;
  }

 private:
  static bool exps_less(const Exponents& a, const Exponents& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return exps_less(a.exps, b.exps); });
    auto fp = field_.fp();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exps == t.exps)
        out.back().coef = fp.add(out.back().coef, t.coef);
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coef == 0; });
    terms_ = std::move(out);
  }

  static FracPoly merge(const FracPoly& a, const FracPoly& b, bool subtract) {
    require_same_field(a.field_, b.field_);
    auto fp = a.field_.fp();
    FracPoly r(a.field_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && exps_less(a.terms_[i].exps, b.terms_[j].exps))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || exps_less(b.terms_[j].exps, a.terms_[i].exps)) {
        Term t = b.terms_[j++];
        if (subtract) t.coef = fp.neg(t.coef);
        r.terms_.push_back(std::move(t));
      } else {
        Coef c = subtract ? fp.sub(a.terms_[i].coef, b.terms_[j].coef) : fp.add(a.terms_[i].coef, b.terms_[j].coef);
        if (c) r.terms_.push_back({a.terms_[i].exps, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::string exponent_text(std::int64_t units) const {
    std::int64_t den = field_.scale();
    std::int64_t g = std::gcd(units, den);
    std::int64_t a = units / g, b = den / g;
    if (b == 1) return a == 1 ? "" : "^" + std::to_string(a);
    return "^{" + std::to_string(a) + "/" + std::to_string(b) + "}";
  }

  std::string term_text(const Term& t) const {
    std::string vars;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "T" + std::to_string(i + 1) + exponent_text(t.exps[i]);
    }
    if (vars.empty()) return std::to_string(t.coef);
    if (t.coef == 1) return vars;
    return std::to_string(t.coef) + "*" + vars;
  }

  Field field_;
  std::vector<Term> terms_;
};

}  // namespace hopflab

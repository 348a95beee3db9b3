#pragma once

// Truncated algebras K^{p^-D}[t_1..t_k]/(t_i^{p^{N_i}}), optionally with
// x^{p^n} = b instead of 0 on chosen variables. Variables are grouped into
// tensor factors for printing (t*u^2⊗u).

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hopflab/error.hpp"
#include "hopflab/ratfunc.hpp"
#include "hopflab/witt.hpp"

namespace hopflab {

struct TruncVar {
  std::string name;
  int factor = 0;
  std::int64_t order = 1;
  /// x^order = *quotient when set, otherwise x^order = 0.
  std::optional<RatFunc> quotient;

  friend bool operator==(const TruncVar& a, const TruncVar& b) {
    if (a.name != b.name || a.factor != b.factor || a.order != b.order) return false;
    if (a.quotient.has_value() != b.quotient.has_value()) return false;
    return !a.quotient || *a.quotient == *b.quotient;
  }
};

using ExpVec = boost::container::small_vector<std::int64_t, 6>;

class TruncAlgebra {
 public:
  TruncAlgebra(Field field, std::vector<TruncVar> vars) : field_(field), vars_(std::move(vars)) {
    std::uint64_t dim = 1;
    weights_.assign(vars_.size(), 0);
    for (std::size_t i = vars_.size(); i-- > 0;) {
      const auto& v = vars_[i];
      std::int64_t q = v.order;
      while (q > 1 && q % field_.p == 0) q /= field_.p;
      if (v.order < 1 || q != 1)
        throw Error(ErrorKind::InvalidParameters, "nilpotency order of " + v.name + " is not a power of p");
      if (v.quotient) require_same_field(field_, v.quotient->field());
      weights_[i] = dim;
      if (dim > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(v.order))
        throw Error(ErrorKind::InvalidParameters, "truncated algebra too large");
      dim *= static_cast<std::uint64_t>(v.order);
    }
    dim_ = dim;
  }

  const Field& field() const { return field_; }
  const std::vector<TruncVar>& vars() const { return vars_; }
  int num_vars() const { return static_cast<int>(vars_.size()); }
  std::uint64_t dimension() const { return dim_; }

  std::uint64_t encode(const ExpVec& e) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) idx += weights_[i] * static_cast<std::uint64_t>(e[i]);
    return idx;
  }
  ExpVec decode(std::uint64_t idx) const {
    ExpVec e(vars_.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      e[i] = static_cast<std::int64_t>(idx / weights_[i]);
      idx %= weights_[i];
    }
    return e;
  }

  friend bool operator==(const TruncAlgebra& a, const TruncAlgebra& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_;
  }

 private:
  Field field_;
  std::vector<TruncVar> vars_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t dim_ = 1;
};

using AlgebraPtr = std::shared_ptr<const TruncAlgebra>;

inline AlgebraPtr make_algebra(const Field& field, std::vector<TruncVar> vars) {
  return std::make_shared<const TruncAlgebra>(field, std::move(vars));
}

/// Concatenates the variables of several algebras, one tensor factor per input
/// factor, in order.
inline AlgebraPtr tensor_algebra(const std::vector<AlgebraPtr>& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidParameters, "empty tensor product");
  std::vector<TruncVar> vars;
  int factor_base = 0;
  for (const auto& a : parts) {
    require_same_field(parts[0]->field(), a->field());
    int top = 0;
    for (auto v : a->vars()) {
      top = std::max(top, v.factor + 1);
      v.factor += factor_base;
      vars.push_back(std::move(v));
    }
    factor_base += top;
  }
  return make_algebra(parts[0]->field(), std::move(vars));
}

class TruncElement {
 public:
  using Term = std::pair<std::uint64_t, RatFunc>;

  TruncElement() = default;
  explicit TruncElement(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static TruncElement constant(AlgebraPtr alg, const RatFunc& c) {
    TruncElement r(std::move(alg));
    require_same_field(r.alg_->field(), c.field());
    if (!c.is_zero()) r.terms_.emplace_back(0, c);
    return r;
  }
  static TruncElement one(AlgebraPtr alg) {
    Field f = alg->field();
    return constant(std::move(alg), RatFunc(f, 1));
  }
  static TruncElement generator(AlgebraPtr alg, int var) {
    ExpVec e(alg->num_vars(), 0);
    e.at(var) = 1;
    Field f = alg->field();
    return monomial(std::move(alg), e, RatFunc(f, 1));
  }
  /// c·Π v_i^{e_i}, reducing exponents that reach the nilpotency order.
  static TruncElement monomial(AlgebraPtr alg, ExpVec e, const RatFunc& c) {
    TruncElement r(alg);
    RatFunc coef = c;
    for (int i = 0; i < alg->num_vars(); ++i) {
      const auto& v = alg->vars()[i];
      if (e[i] < 0) throw Error(ErrorKind::InvalidParameters, "negative exponent");
      if (e[i] >= v.order) {
        if (!v.quotient) return r;
        coef *= v.quotient->pow(e[i] / v.order);
        e[i] %= v.order;
      }
    }
    if (!coef.is_zero()) r.terms_.emplace_back(alg->encode(e), std::move(coef));
    return r;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Field& field() const { return alg_->field(); }

  RatFunc coefficient(const ExpVec& e) const {
    std::uint64_t idx = alg_->encode(e);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                               [](const Term& t, std::uint64_t k) { return t.first < k; });
    if (it != terms_.end() && it->first == idx) return it->second;
    return RatFunc(field());
  }

  friend TruncElement operator+(const TruncElement& a, const TruncElement& b) { return merge(a, b, false); }
  friend TruncElement operator-(const TruncElement& a, const TruncElement& b) { return merge(a, b, true); }
  TruncElement operator-() const {
    TruncElement r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  TruncElement& operator+=(const TruncElement& b) { return *this = *this + b; }
  TruncElement& operator-=(const TruncElement& b) { return *this = *this - b; }
  TruncElement& operator*=(const TruncElement& b) { return *this = *this * b; }

  TruncElement scaled(const RatFunc& c) const {
    if (c.is_zero()) return TruncElement(alg_);
    TruncElement r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  friend TruncElement operator*(const TruncElement& a, const TruncElement& b) {
    require_same_algebra(a, b);
    if (a.is_zero() || b.is_zero()) return TruncElement(a.alg_);
    const auto& alg = *a.alg_;
    const int nv = alg.num_vars();
    std::vector<ExpVec> ea, eb;
    ea.reserve(a.size());
    eb.reserve(b.size());
    for (const auto& t : a.terms_) ea.push_back(alg.decode(t.first));
    for (const auto& t : b.terms_) eb.push_back(alg.decode(t.first));
    std::unordered_map<std::uint64_t, RatFunc> acc;
    acc.reserve(a.size() * b.size());
    std::vector<int> wraps(nv);
    ExpVec e(nv, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        bool zero = false, wrapped = false;
        for (int v = 0; v < nv && !zero; ++v) {
          e[v] = ea[i][v] + eb[j][v];
          wraps[v] = 0;
          const auto& var = alg.vars()[v];
          if (e[v] >= var.order) {
            if (!var.quotient) {
              zero = true;
            } else {
              e[v] -= var.order;
              wraps[v] = 1;
              wrapped = true;
            }
          }
        }
        if (zero) continue;
        RatFunc c = a.terms_[i].second * b.terms_[j].second;
        if (wrapped)
          for (int v = 0; v < nv; ++v)
            if (wraps[v]) c *= *alg.vars()[v].quotient;
        auto [it, fresh] = acc.try_emplace(alg.encode(e), c);
        if (!fresh) it->second += c;
      }
    TruncElement r(a.alg_);
    r.terms_.reserve(acc.size());
    for (auto& [k, c] : acc)
      if (!c.is_zero()) r.terms_.emplace_back(k, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    return r;
  }

  /// a^p, computed termwise (characteristic p, commutative).
  TruncElement frobenius() const {
    const auto& alg = *alg_;
    const std::int64_t p = field().p;
    TruncElement r(alg_);
    for (const auto& [idx, c] : terms_) {
      ExpVec e = alg.decode(idx);
      for (auto& x : e) x *= p;
      r = r + monomial(alg_, e, c.pow(p));
    }
    return r;
  }

  TruncElement pow(std::uint64_t e) const {
    TruncElement result = one(alg_), frob = *this;
    const auto p = static_cast<std::uint64_t>(field().p);
    while (e) {
      for (std::uint64_t i = 0; i < e % p; ++i) result = result * frob;
      e /= p;
      if (e) frob = frob.frobenius();
    }
    return result;
  }

  friend bool operator==(const TruncElement& a, const TruncElement& b) {
    require_same_algebra(a, b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }

  /// Terms in display order: ascending total degree, then descending lex.
  std::vector<std::pair<ExpVec, RatFunc>> display_terms() const {
    std::vector<std::pair<ExpVec, RatFunc>> out;
    for (const auto& [idx, c] : terms_) out.emplace_back(alg_->decode(idx), c);
    auto degree = [](const ExpVec& e) {
      std::int64_t s = 0;
      for (auto x : e) s += x;
      return s;
    };
    std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
      auto dx = degree(x.first), dy = degree(y.first);
      if (dx != dy) return dx < dy;
      return std::lexicographical_compare(y.first.begin(), y.first.end(), x.first.begin(), x.first.end());
    });
    return out;
  }

  std::string monomial_text(const ExpVec& e) const {
    const auto& vars = alg_->vars();
    int factors = 0;
    for (const auto& v : vars) factors = std::max(factors, v.factor + 1);
    std::vector<std::string> parts(factors);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!e[i]) continue;
      auto& s = parts[vars[i].factor];
      if (!s.empty()) s += "*";
      s += vars[i].name;
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    std::string out;
    for (int f = 0; f < factors; ++f) {
      if (f) out += "⊗";
      out += parts[f].empty() ? "1" : parts[f];
    }
    return out;
  }

  /// "t⊗1 + 1⊗t + (T1)·t^2⊗t^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : display_terms()) {
      if (!out.empty()) out += " + ";
      if (!c.is_one()) {
        std::string s = c.to_string();
        out += (c.den().is_one() ? "(" + s + ")" : s) + "·";
      }
      out += monomial_text(e);
    }
    return out;
  }

 private:
  static void require_same_algebra(const TruncElement& a, const TruncElement& b) {
    if (!a.alg_ || !b.alg_) throw Error(ErrorKind::AlgebraMismatch, "element without an algebra");
    if (a.alg_ != b.alg_ && !(*a.alg_ == *b.alg_))
      throw Error(ErrorKind::AlgebraMismatch, "elements live in different truncated algebras");
  }

  static TruncElement merge(const TruncElement& a, const TruncElement& b, bool subtract) {
    require_same_algebra(a, b);
    TruncElement r(a.alg_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        RatFunc c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  AlgebraPtr alg_;
  std::vector<Term> terms_;
};

/// The algebra map sending variable i of e's algebra to images[i] in `target`.
/// Callers are responsible for the images satisfying the defining relations.
inline TruncElement apply_algebra_map(const TruncElement& e, const AlgebraPtr& target,
                                      const std::vector<TruncElement>& images) {
  const auto& src = *e.algebra();
  if (static_cast<int>(images.size()) != src.num_vars())
    throw Error(ErrorKind::InvalidParameters, "algebra map needs one image per variable");
  for (const auto& im : images)
    if (im.algebra() != target && !(*im.algebra() == *target))
      throw Error(ErrorKind::AlgebraMismatch, "algebra map image outside the target algebra");
  std::vector<std::map<std::int64_t, TruncElement>> cache(images.size());
  auto power = [&](int v, std::int64_t k) -> const TruncElement& {
    auto& c = cache[v];
    auto it = c.find(k);
    if (it != c.end()) return it->second;
    return c.emplace(k, images[v].pow(static_cast<std::uint64_t>(k))).first->second;
  };
  TruncElement out(target);
  for (const auto& [idx, c] : e.terms()) {
    ExpVec ex = src.decode(idx);
    TruncElement term = TruncElement::constant(target, c);
    for (int v = 0; v < src.num_vars() && !term.is_zero(); ++v)
      if (ex[v]) term = term * power(v, ex[v]);
    out += term;
  }
  return out;
}

/// Renames variable i of e's algebra to variable var_map[i] of `target`.
inline TruncElement embed_vars(const TruncElement& e, const AlgebraPtr& target, const std::vector<int>& var_map) {
  const auto& src = *e.algebra();
  if (static_cast<int>(var_map.size()) != src.num_vars())
    throw Error(ErrorKind::SlotMismatch, "variable map has the wrong length");
  std::vector<TruncElement> images;
  for (int i = 0; i < src.num_vars(); ++i) {
    const auto& a = src.vars()[i];
    const auto& b = target->vars().at(var_map[i]);
    if (a.order != b.order) throw Error(ErrorKind::SlotMismatch, a.name + " and " + b.name + " differ in order");
    images.push_back(TruncElement::generator(target, var_map[i]));
  }
  return apply_algebra_map(e, target, images);
}

/// All monomials of the algebra, in encoding order.
inline std::vector<TruncElement> basis_monomials(const AlgebraPtr& alg) {
  std::vector<TruncElement> out;
  RatFunc one(alg->field(), 1);
  for (std::uint64_t i = 0; i < alg->dimension(); ++i) out.push_back(TruncElement::monomial(alg, alg->decode(i), one));
  return out;
}

/// Sends an element of a one-factor algebra into factor `slot` of `target`
/// (t ↦ t⊗1 for slot 0, t ↦ 1⊗t for slot 1).
inline TruncElement tensor_embed(const TruncElement& e, int slot, const AlgebraPtr& target) {
  const auto& src = *e.algebra();
  std::vector<int> slot_vars;
  for (int i = 0; i < target->num_vars(); ++i)
    if (target->vars()[i].factor == slot) slot_vars.push_back(i);
  if (static_cast<int>(slot_vars.size()) != src.num_vars())
    throw Error(ErrorKind::SlotMismatch, "slot " + std::to_string(slot) + " has a different number of variables");
  std::vector<TruncElement> images;
  for (int i = 0; i < src.num_vars(); ++i) {
    const auto& a = src.vars()[i];
    const auto& b = target->vars()[slot_vars[i]];
    bool same_quotient = a.quotient.has_value() == b.quotient.has_value() && (!a.quotient || *a.quotient == *b.quotient);
    if (a.order != b.order || !same_quotient)
      throw Error(ErrorKind::SlotMismatch, "slot " + std::to_string(slot) + " has a different nilpotency order");
    images.push_back(TruncElement::generator(target, slot_vars[i]));
  }
  return apply_algebra_map(e, target, images);
}

/// S_d(left; right) evaluated in the truncated algebra, coefficients mod p.
inline TruncElement eval_addition_poly(const WittPolySystem& sys, int d, const std::vector<TruncElement>& left,
                                       const std::vector<TruncElement>& right) {
  if (left.empty()) throw Error(ErrorKind::InvalidParameters, "no arguments");
  const AlgebraPtr& alg = left[0].algebra();
  if (sys.p() != alg->field().p) throw Error(ErrorKind::FieldMismatch, "Witt system and algebra disagree on p");
  Field f = alg->field();
  return eval_addition_poly_mod_p(sys, d, left, right, TruncElement(alg), TruncElement::one(alg),
                                  [&](Coef c) { return TruncElement::constant(alg, RatFunc(f, c)); });
}

}  // namespace hopflab

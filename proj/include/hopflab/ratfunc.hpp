#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "hopflab/error.hpp"
#include "hopflab/field.hpp"
#include "hopflab/fracpoly.hpp"

namespace hopflab {

/// Element of K^{p^-D} as num/den. No gcd is ever taken: the canonical form
/// strips common monomial content and makes den's leading coefficient 1, and
/// equality is decided by cross multiplication.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const Field& field, std::int64_t c = 0)
      : num_(FracPoly::constant(field, c)), den_(FracPoly::constant(field, 1)) {}
  explicit RatFunc(FracPoly num) : num_(std::move(num)), den_(FracPoly::constant(num_.field(), 1)) {}
  RatFunc(FracPoly num, FracPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_field(num_.field(), den_.field());
    canonicalize_in_place();
  }

  /// T_{index+1} (true exponent 1).
  static RatFunc variable(const Field& field, int index) {
    return RatFunc(FracPoly::variable(field, index, field.scale()));
  }

  const Field& field() const { return num_.field(); }
  const FracPoly& num() const { return num_; }
  const FracPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (a.den_.is_one() && b.den_.is_one()) {
      RatFunc r(a.field());
      r.num_ = a.num_ * b.num_;
      return r;
    }
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  RatFunc scaled(Coef c) const {
    RatFunc r = *this;
    r.num_ = r.num_.scaled(c);
    if (r.num_.is_zero()) r.den_ = FracPoly::constant(field(), 1);
    return r;
  }

  RatFunc inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  /// Integer power; negative exponents invert first.
  RatFunc pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(field());
    r.num_ = num_.pow(static_cast<std::uint64_t>(e));
    r.den_ = den_.pow(static_cast<std::uint64_t>(e));
    return r;
  }

  /// Cross-multiplication equality.
  friend bool equals(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return equals(a, b); }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void canonicalize_in_place() {
    if (den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = FracPoly::constant(field(), 1);
      return;
    }
    Exponents a = num_.min_exponents(), b = den_.min_exponents();
    bool shift = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = std::min(a[i], b[i]);
      shift = shift || a[i] != 0;
    }
    if (shift) {
      num_ = num_.shifted_down(a);
      den_ = den_.shifted_down(a);
    }
    Coef lc = den_.leading().coef;
    if (lc != 1) {
      Coef inv = field().fp().inv(lc);
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  FracPoly num_;
  FracPoly den_;
};

/// Canonical representative; idempotent.
inline RatFunc canonicalize(const RatFunc& a) { return RatFunc(a.num(), a.den()); }

/// True iff every exponent of num and den lies on the integer lattice, i.e. a ∈ K.
inline bool in_base_field(const RatFunc& a) {
  const std::int64_t s = a.field().scale();
  for (const auto* poly : {&a.num(), &a.den()})
    for (const auto& t : poly->terms())
      for (auto e : t.exps)
        if (e % s != 0) return false;
  return true;
}

/// The unique r with r^{p^k} = a (F_p coefficients are Frobenius-fixed).
inline RatFunc p_root(const RatFunc& a, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidParameters, "negative root order");
  const std::int64_t q = ipow(a.field().p, k);
  auto num = a.num().shrunk(q);
  auto den = a.den().shrunk(q);
  if (!num || !den)
    throw Error(ErrorKind::DepthExceeded,
                "p^" + std::to_string(k) + "-th root of " + a.to_string() + " leaves the 1/p^D lattice");
  return RatFunc(std::move(*num), std::move(*den));
}

/// Re-expresses a in a field with the same p and m and a root depth at least as large.
inline RatFunc lift(const RatFunc& a, const Field& target) {
  const Field& src = a.field();
  if (src == target) return a;
  if (src.p != target.p || src.m != target.m || target.D < src.D)
    throw Error(ErrorKind::FieldMismatch, "cannot lift between these coefficient fields");
  const std::int64_t k = ipow(src.p, target.D - src.D);
  auto rebase = [&](const FracPoly& poly) {
    std::vector<FracPoly::Term> terms;
    for (auto t : poly.terms()) {
      for (auto& e : t.exps) e *= k;
      terms.push_back(std::move(t));
    }
    return FracPoly::from_terms(target, std::move(terms));
  };
  return RatFunc(rebase(a.num()), rebase(a.den()));
}

/// c ∈ K with c^p = a when one exists. Decided on num·den^{p-1} = (c·den)^p.
inline std::optional<RatFunc> is_pth_power_in_K(const RatFunc& a) {
  if (!in_base_field(a)) throw Error(ErrorKind::NotInBaseField, a.to_string() + " is not in K");
  if (a.is_zero()) throw Error(ErrorKind::InvalidParameters, "p-th power test of zero");
  const Field& f = a.field();
  FracPoly prod = a.num() * a.den().pow(static_cast<std::uint64_t>(f.p - 1));
  auto root = prod.shrunk(f.p);
  if (!root) return std::nullopt;
  // The root must itself lie on the K lattice.
  RatFunc c(std::move(*root), a.den());
  if (!in_base_field(c)) return std::nullopt;
  return c;
}

}  // namespace hopflab

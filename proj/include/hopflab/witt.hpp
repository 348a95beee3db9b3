#pragma once

// Witt polynomials w_d and Witt addition polynomials S_d over Z, and the
// length-(d+1) Witt vector group over Z, F_p(T) or any algebra that supplies
// +, * and a unit.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/error.hpp"
#include "hopflab/field.hpp"
#include "hopflab/intpoly.hpp"

namespace hopflab {

/// Variable layout shared by every IntPoly here: X_i (or Z_i) is variable i,
/// Y_i is variable kYOffset + i.
inline constexpr int kYOffset = 8;
inline constexpr int kMaxWittLength = 8;

inline std::string witt_var_name(int index, char x = 'X') {
  if (index >= kYOffset) return "Y" + std::to_string(index - kYOffset);
  return std::string(1, x) + std::to_string(index);
}

/// S_d reduced mod p, ready for evaluation in characteristic p.
struct FpPoly {
  std::vector<std::pair<Monomial, Coef>> terms;
};

class WittPolySystem {
 public:
  WittPolySystem(std::int64_t p, int d_max) : p_(p), d_max_(d_max) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidParameters, "p = " + std::to_string(p) + " is not prime");
    if (d_max < 0 || d_max >= kMaxWittLength)
      throw Error(ErrorKind::InvalidParameters, "Witt length must satisfy 0 <= d <= 7");
    BigInt top = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(d_max));
    if (top > Monomial::kMaxExponent)
      throw Error(ErrorKind::InvalidParameters, "p^d exceeds the supported exponent range (255)");
    build();
  }

  std::int64_t p() const { return p_; }
  int d_max() const { return d_max_; }

  const IntPoly& witt_polynomial(int d) const { return w_.at(check(d)); }
  const IntPoly& addition_polynomial(int d) const { return S_.at(check(d)); }
  const FpPoly& addition_polynomial_mod_p(int d) const { return S_mod_p_.at(check(d)); }

  /// w_d with X_i renamed into the variable block starting at `offset`.
  IntPoly witt_polynomial_in(int d, int offset) const { return w_.at(check(d)).relocated(0, offset, d + 1); }

 private:
  int check(int d) const {
    if (d < 0 || d > d_max_)
      throw Error(ErrorKind::InvalidParameters, "index " + std::to_string(d) + " outside 0.." + std::to_string(d_max_));
    return d;
  }

  void build() {
    const BigInt p = p_;
    for (int d = 0; d <= d_max_; ++d) {
      IntPoly w;
      BigInt pk = 1;
      for (int k = 0; k <= d; ++k) {
        w = w + IntPoly::monomial(Monomial::var(k, static_cast<unsigned>(ipow(p_, d - k))), pk);
        pk *= p;
      }
      w_.push_back(std::move(w));
    }

    // powers[k] holds S_k^{p^{d-k}} for the current d.
    std::vector<IntPoly> powers;
    BigInt pd = 1;
    for (int d = 0; d <= d_max_; ++d) {
      for (auto& q : powers) q = q.pow(static_cast<unsigned>(p_));
      IntPoly rhs = w_[d] + w_[d].relocated(0, kYOffset, d + 1);
      BigInt pk = 1;
      for (int k = 0; k < d; ++k) {
        rhs = rhs - powers[k].scaled(pk);
        pk *= p;
      }
      IntPoly s = rhs.divided_exactly(pd);
      // Back-substitution: w_d(S_0..S_d) must reproduce w_d(X) + w_d(Y).
      IntPoly lhs = s.scaled(pd);
      pk = 1;
      for (int k = 0; k < d; ++k) {
        lhs = lhs + powers[k].scaled(pk);
        pk *= p;
      }
      if (!(lhs == w_[d] + w_[d].relocated(0, kYOffset, d + 1)))
        throw Error(ErrorKind::InexactDivision, "S_" + std::to_string(d) + " fails the defining identity");
      powers.push_back(s);
      S_.push_back(std::move(s));
      pd *= p;
    }

    for (const auto& s : S_) {
      FpPoly r;
      for (const auto& [m, c] : s.terms()) {
        BigInt red = c % p;
        if (red < 0) red += p;
        if (red != 0) r.terms.emplace_back(m, static_cast<Coef>(red));
      }
      S_mod_p_.push_back(std::move(r));
    }
  }

  std::int64_t p_;
  int d_max_;
  std::vector<IntPoly> w_;
  std::vector<IntPoly> S_;
  std::vector<FpPoly> S_mod_p_;
};

/// Shared, lazily built systems. Readers only ever see fully constructed objects.
inline std::shared_ptr<const WittPolySystem> witt_system(std::int64_t p, int d) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const WittPolySystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot || slot->d_max() < d) slot = std::make_shared<const WittPolySystem>(p, d);
  return slot;
}

namespace detail {

/// Evaluates a sparse polynomial whose variables are X_0..X_d, Y_0..Y_d at
/// the given values. `lift` turns a coefficient into R; powers are cached.
template <class R, class Terms, class Lift>
R evaluate_terms(const Terms& terms, const std::vector<R>& xs, const std::vector<R>& ys, const R& zero,
                 const R& one, Lift&& lift) {
  const int len = static_cast<int>(xs.size());
  std::vector<std::map<unsigned, R>> cache(2 * len);
  auto value_at = [&](int slot) -> const R& { return slot < len ? xs[slot] : ys[slot - len]; };
  auto power = [&](int slot, unsigned e) -> const R& {
    auto& c = cache[slot];
    auto it = c.find(e);
    if (it != c.end()) return it->second;
    // Build from the largest cached power below e.
    R acc = one;
    unsigned have = 0;
    auto below = c.lower_bound(e);
    if (below != c.begin()) {
      --below;
      acc = below->second;
      have = below->first;
    }
    while (have < e) {
      acc = acc * value_at(slot);
      ++have;
    }
    return c.emplace(e, std::move(acc)).first->second;
  };
  R sum = zero;
  for (const auto& [m, c] : terms) {
    R term = lift(c);
    for (int i = 0; i < len; ++i) {
      if (unsigned e = m.exponent(i)) term = term * power(i, e);
      if (unsigned e = m.exponent(kYOffset + i)) term = term * power(len + i, e);
    }
    sum = sum + term;
  }
  return sum;
}

}  // namespace detail

/// S_d(xs; ys) over Z.
inline BigInt eval_addition_poly_int(const WittPolySystem& sys, int d, const std::vector<BigInt>& xs,
                                     const std::vector<BigInt>& ys) {
  std::vector<BigInt> x(xs.begin(), xs.begin() + d + 1), y(ys.begin(), ys.begin() + d + 1);
  return detail::evaluate_terms(sys.addition_polynomial(d).terms(), x, y, BigInt(0), BigInt(1),
                                [](const BigInt& c) { return c; });
}

/// S_d(xs; ys) in a characteristic-p ring R; `from_coef` maps F_p into R.
template <class R, class FromCoef>
R eval_addition_poly_mod_p(const WittPolySystem& sys, int d, const std::vector<R>& xs, const std::vector<R>& ys,
                           const R& zero, const R& one, FromCoef&& from_coef) {
  if (static_cast<int>(xs.size()) != d + 1 || static_cast<int>(ys.size()) != d + 1)
    throw Error(ErrorKind::InvalidParameters, "S_" + std::to_string(d) + " takes " + std::to_string(d + 1) +
                                                  " arguments on each side");
  return detail::evaluate_terms(sys.addition_polynomial_mod_p(d).terms, xs, ys, zero, one, from_coef);
}

using IntWittVector = std::vector<BigInt>;

/// (w_0(u), ..., w_d(u)).
inline IntWittVector ghost_map(const WittPolySystem& sys, const IntWittVector& u) {
  const int d = static_cast<int>(u.size()) - 1;
  if (d > sys.d_max()) throw Error(ErrorKind::InvalidParameters, "Witt vector longer than the system");
  IntWittVector g;
  for (int k = 0; k <= d; ++k) {
    BigInt acc = 0, pj = 1;
    for (int j = 0; j <= k; ++j) {
      acc += pj * boost::multiprecision::pow(u[j], static_cast<unsigned>(ipow(sys.p(), k - j)));
      pj *= sys.p();
    }
    g.push_back(acc);
  }
  return g;
}

inline IntWittVector witt_add(const WittPolySystem& sys, const IntWittVector& u, const IntWittVector& v) {
  if (u.size() != v.size()) throw Error(ErrorKind::InvalidParameters, "Witt vectors of different lengths");
  IntWittVector out;
  for (int d = 0; d < static_cast<int>(u.size()); ++d) out.push_back(eval_addition_poly_int(sys, d, u, v));
  return out;
}

/// Solves S_d(u; v) = 0 for v_d in increasing d. S_d = X_d + Y_d + (lower
/// indices), so each step is v_d = -S_d(u; v_0..v_{d-1}, 0).
inline IntWittVector witt_neg(const WittPolySystem& sys, const IntWittVector& u) {
  IntWittVector v(u.size(), 0);
  for (int d = 0; d < static_cast<int>(u.size()); ++d) v[d] = -eval_addition_poly_int(sys, d, u, v);
  return v;
}

/// Componentwise sum over a characteristic-p ring R.
template <class R, class FromCoef>
std::vector<R> witt_add_mod_p(const WittPolySystem& sys, const std::vector<R>& u, const std::vector<R>& v,
                              const R& zero, const R& one, FromCoef&& from_coef) {
  if (u.size() != v.size()) throw Error(ErrorKind::InvalidParameters, "Witt vectors of different lengths");
  std::vector<R> out;
  for (std::size_t d = 0; d < u.size(); ++d) {
    std::vector<R> x(u.begin(), u.begin() + d + 1), y(v.begin(), v.begin() + d + 1);
    out.push_back(eval_addition_poly_mod_p(sys, static_cast<int>(d), x, y, zero, one, from_coef));
  }
  return out;
}

template <class R, class FromCoef>
std::vector<R> witt_neg_mod_p(const WittPolySystem& sys, const std::vector<R>& u, const R& zero, const R& one,
                              FromCoef&& from_coef) {
  std::vector<R> v(u.size(), zero);
  for (std::size_t d = 0; d < u.size(); ++d) {
    std::vector<R> x(u.begin(), u.begin() + d + 1), y(v.begin(), v.begin() + d + 1);
    v[d] = zero - eval_addition_poly_mod_p(sys, static_cast<int>(d), x, y, zero, one, from_coef);
  }
  return v;
}

}  // namespace hopflab

#pragma once

// Reference computations used by the tests. Each one is derived from first
// principles and shares no algorithm with the library code it checks.

#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hopflab/hopflab.hpp"

namespace oracle {

using hopflab::BigInt;
using boost::multiprecision::cpp_rational;

inline std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a %= p;
  if (a < 0) a += p;
  for (; e > 0; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

/// 1/(ℓ!(p-ℓ)!) mod p through Fermat's little theorem.
inline std::int64_t closed_form_coefficient(std::int64_t p, std::int64_t l) {
  std::int64_t d = 1;
  for (std::int64_t k = 2; k <= l; ++k) d = d * k % p;
  for (std::int64_t k = 2; k <= p - l; ++k) d = d * k % p;
  return mod_pow(d, p - 2, p);
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  BigInt r = 1;
  for (std::int64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

/// X_1 + Y_1 - Σ_{i=1}^{p-1} ((p-1)!/(i!(p-i)!)) X_0^i Y_0^{p-i}, using (p-1)!/(i!(p-i)!) = C(p,i)/p.
inline hopflab::IntPoly displayed_s1(std::int64_t p) {
  using hopflab::IntPoly;
  using hopflab::Monomial;
  IntPoly s = IntPoly::monomial(Monomial::var(1)) + IntPoly::monomial(Monomial::var(hopflab::kYOffset + 1));
  for (std::int64_t i = 1; i < p; ++i) {
    Monomial m = Monomial::var(0, static_cast<unsigned>(i)) *
                 Monomial::var(hopflab::kYOffset, static_cast<unsigned>(p - i));
    s = s - IntPoly::monomial(m, binomial(p, i) / p);
  }
  return s;
}

/// Witt sum through ghost components: s_k = (G_k - Σ_{j<k} p^j s_j^{p^{k-j}}) / p^k
/// with G = ghost(u) + ghost(v), in exact rationals (a non-integer result would surface).
inline std::vector<cpp_rational> ghost_witt_sum(std::int64_t p, const std::vector<BigInt>& u,
                                                const std::vector<BigInt>& v) {
  auto ghost = [&](const std::vector<cpp_rational>& a, std::size_t k) {
    cpp_rational g = 0;
    BigInt pj = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      cpp_rational term = 1;
      const BigInt e = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k - j));
      for (BigInt c = 0; c < e; ++c) term *= a[j];
      g += cpp_rational(pj) * term;
      pj *= p;
    }
    return g;
  };
  std::vector<cpp_rational> ur(u.begin(), u.end()), vr(v.begin(), v.end()), s;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cpp_rational target = ghost(ur, k) + ghost(vr, k);
    s.push_back(0);
    cpp_rational lower = ghost(s, k);  // s_k = 0 in this evaluation
    s[k] = (target - lower) / cpp_rational(boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k)));
  }
  return s;
}

inline std::int64_t euler_phi(std::int64_t q) {
  std::int64_t c = 0;
  for (std::int64_t i = 1; i < q; ++i)
    if (std::gcd(i, q) == 1) ++c;
  return c;
}

/// Membership in K by inspecting the stored 1/p^D exponents directly.
inline bool exponents_integral(const hopflab::RatFunc& a) {
  const std::int64_t s = hopflab::ipow(a.field().p, a.field().D);
  for (const auto* poly : {&a.num(), &a.den()})
    for (const auto& t : poly->terms())
      for (auto e : t.exps)
        if (e % s != 0) return false;
  return true;
}

/// t⊗1 + 1⊗t + f Σ_ℓ (1/(ℓ!(p-ℓ)!)) t^{p^r ℓ}⊗t^{p^r(p-ℓ)} in h.HH.
inline hopflab::TruncElement closed_form_delta(const hopflab::HopfAlgebraData& h) {
  using hopflab::RatFunc;
  using hopflab::TruncElement;
  const std::int64_t p = h.field.p, pr = hopflab::ipow(p, h.r);
  auto mono = [&](std::int64_t a, std::int64_t b, const RatFunc& c) {
    return TruncElement::monomial(h.HH, hopflab::ExpVec{a, b}, c);
  };
  const RatFunc one(h.field, 1);
  TruncElement out = mono(1, 0, one) + mono(0, 1, one);
  for (std::int64_t l = 1; l < p; ++l)
    out += mono(pr * l, pr * (p - l), h.f->scaled(static_cast<hopflab::Coef>(closed_form_coefficient(p, l))));
  return out;
}

/// c·x^e in L = K[x]/(x^q - b), reduced.
inline hopflab::TruncElement reduced_power(const hopflab::AlgebraPtr& L, std::int64_t e, const hopflab::RatFunc& c) {
  const auto& var = L->vars().at(0);
  const std::int64_t q = var.order;
  return hopflab::TruncElement::monomial(L, hopflab::ExpVec{e % q}, c * var.quotient->pow(e / q));
}

/// The digit closed form of z_{p^s}(x^i), valid when r = n - 1:
/// s < r: i_(s) x^{i-p^s};  s = r: i_(r) x^{i-p^r} - i f x^{p^r(p-1)+i-1}.
inline hopflab::TruncElement digit_closed_form(const hopflab::AlgebraPtr& L, std::int64_t p, int r,
                                               const hopflab::RatFunc& f, int s, std::int64_t i) {
  using hopflab::RatFunc;
  const hopflab::Field& F = L->field();
  const std::int64_t ps = hopflab::ipow(p, s);
  const std::int64_t digit = (i / ps) % p;
  hopflab::TruncElement out(L);
  if (digit != 0) out += reduced_power(L, i - ps, RatFunc(F, digit));
  if (s == r && i % p != 0) {
    const std::int64_t pr = hopflab::ipow(p, r);
    out -= reduced_power(L, pr * (p - 1) + i - 1, f.scaled(static_cast<hopflab::Coef>(i % p)));
  }
  return out;
}

}  // namespace oracle

#pragma once

// Deciding H_{n,r,f} ≅ H_{n,r,f'} through f/f' ∈ (K^×)^N, N = p^{r+1} - 1.
// Monomial ratios are decided exactly; otherwise a valuation K^× → Z that
// misses N·Z refutes, and anything else is reported as unknown.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/error.hpp"
#include "hopflab/hopf.hpp"
#include "hopflab/ratfunc.hpp"
#include "hopflab/report.hpp"

namespace hopflab {

enum class PowerStatus { IsPower, NotPower, Unknown };

struct PowerTestResult {
  PowerStatus status = PowerStatus::Unknown;
  std::optional<RatFunc> root;  // IsPower: root^N = input
  std::string valuation;        // NotPower: name of the homomorphism
  std::int64_t value = 0;       // its value on the input
  std::int64_t N = 1;

  std::string to_string() const {
    switch (status) {
      case PowerStatus::IsPower: return "IsPower(" + root->to_string() + ")";
      case PowerStatus::NotPower:
        return "NotPower(" + valuation + " = " + std::to_string(value) + " ∉ " + std::to_string(N) + "Z)";
      case PowerStatus::Unknown: return "Unknown";
    }
    return "?";
  }
};

namespace detail {

struct Valuation {
  std::string name;
  std::int64_t value;
};

inline std::int64_t lowest_total_degree(const FracPoly& a) {
  std::int64_t best = -1;
  for (const auto& t : a.terms()) {
    std::int64_t s = 0;
    for (auto e : t.exps) s += e;
    if (best < 0 || s < best) best = s;
  }
  return best;
}

/// Values (in units of true exponents) of the homomorphisms K^× → Z used as
/// certificates: order at T_i, degree in T_i, total degree, order at the origin.
inline std::vector<Valuation> valuations(const RatFunc& a) {
  const Field& field = a.field();
  const std::int64_t s = field.scale();
  std::vector<Valuation> out;
  const auto& num = a.num();
  const auto& den = a.den();
  for (int i = 0; i < field.m; ++i)
    out.push_back({"ord_{T" + std::to_string(i + 1) + "}", (num.order_in(i) - den.order_in(i)) / s});
  for (int i = 0; i < field.m; ++i)
    out.push_back({"deg_{T" + std::to_string(i + 1) + "}", (num.degree_in(i) - den.degree_in(i)) / s});
  out.push_back({"total degree", (num.total_degree() - den.total_degree()) / s});
  out.push_back({"ord_{0}", (lowest_total_degree(num) - lowest_total_degree(den)) / s});
  return out;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace detail

/// Tri-state test of a ∈ (K^×)^N. IsPower roots are re-verified by exponentiation.
inline PowerTestResult nth_power_test(const RatFunc& a, std::int64_t N) {
  const Field& field = a.field();
  const std::int64_t p = field.p;
  if (N < 1 || N % p == 0) throw Error(ErrorKind::BadN, "N = " + std::to_string(N) + " must be positive and prime to p");
  if (a.is_zero()) throw Error(ErrorKind::InvalidParameters, "0 is not a unit");
  if (!in_base_field(a)) throw Error(ErrorKind::NotInBaseField, a.to_string() + " is not in K");

  PowerTestResult res;
  res.N = N;
  for (const auto& v : detail::valuations(a))
    if (v.value % N != 0) {
      res.status = PowerStatus::NotPower;
      res.valuation = v.name;
      res.value = v.value;
      return res;
    }

  if (a.num().is_monomial() && a.den().is_monomial()) {
    auto fp = field.fp();
    const auto& tn = a.num().terms()[0];
    const auto& td = a.den().terms()[0];
    const Coef c = fp.mul(tn.coef, fp.inv(td.coef));
    std::optional<Coef> croot;
    for (Coef x = 1; x < static_cast<Coef>(p) && !croot; ++x)
      if (fp.pow(x, static_cast<std::uint64_t>(N)) == c) croot = x;
    if (!croot) {
      // F_p^× / (F_p^×)^N is the certificate group here; report the class of c.
      res.status = PowerStatus::NotPower;
      res.valuation = "constant " + std::to_string(c) + " mod N-th powers of F_" + std::to_string(p) + "^×";
      res.value = c;
      return res;
    }
    Exponents num_e(field.m, 0), den_e(field.m, 0);
    for (int i = 0; i < field.m; ++i) {
      const std::int64_t e = tn.exps[i] - td.exps[i];  // divisible by N·scale: ord_{T_i} passed
      (e >= 0 ? num_e : den_e)[i] = (e >= 0 ? e : -e) / N;
    }
    RatFunc root(FracPoly::monomial(field, num_e, *croot), FracPoly::monomial(field, den_e, 1));
    if (!(root.pow(N) == a)) throw Error(ErrorKind::InvalidParameters, "N-th root failed re-verification");
    res.status = PowerStatus::IsPower;
    res.root = std::move(root);
    return res;
  }
  return res;
}

enum class IsoStatus { Isomorphic, NotIsomorphic, Unknown };

inline std::string to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Isomorphic: return "Isomorphic";
    case IsoStatus::NotIsomorphic: return "NotIsomorphic";
    case IsoStatus::Unknown: return "Unknown";
  }
  return "?";
}

struct IsoResult {
  IsoStatus status = IsoStatus::Unknown;
  /// Isomorphic: H1 → H2, t1 ↦ g·t2, checked as a coalgebra map.
  std::optional<RatFunc> witness;
  bool witness_verified = false;
  std::string certificate;  // reason for NotIsomorphic / Unknown
  PowerTestResult power;

  std::string to_string() const {
    std::string s = hopflab::to_string(status);
    if (witness) s += "(g = " + witness->to_string() + (witness_verified ? ", verified" : ", unverified") + ")";
    if (!certificate.empty()) s += "(" + certificate + ")";
    return s;
  }
};

/// H_{n,r,f1} ≅ H_{n,r,f2} iff f1/f2 = root^N; then g = root^{-1} satisfies
/// f1 = f2·g^{-N} and t1 ↦ g·t2 is the isomorphism.
inline IsoResult iso_test(const HopfAlgebraData& h1, const HopfAlgebraData& h2) {
  if (h1.kind != HopfKind::Monogenic || h2.kind != HopfKind::Monogenic)
    throw Error(ErrorKind::InvalidParameters, "iso_test compares monogenic algebras");
  require_same_field(h1.field, h2.field);
  IsoResult res;
  if (h1.n != h2.n || h1.r != h2.r) {
    res.status = IsoStatus::NotIsomorphic;
    res.certificate = "(n, r) = (" + std::to_string(h1.n) + ", " + std::to_string(h1.r) + ") vs (" +
                      std::to_string(h2.n) + ", " + std::to_string(h2.r) + ")";
    return res;
  }
  const std::int64_t N = ipow(h1.field.p, h1.r + 1) - 1;
  res.power = nth_power_test(*h1.f / *h2.f, N);
  switch (res.power.status) {
    case PowerStatus::NotPower:
      res.status = IsoStatus::NotIsomorphic;
      res.certificate = "f1/f2: " + res.power.to_string();
      break;
    case PowerStatus::Unknown:
      res.status = IsoStatus::Unknown;
      res.certificate = "no valuation refutes f1/f2 and it is not a monomial";
      break;
    case PowerStatus::IsPower: {
      RatFunc g = res.power.root->inverse();
      res.witness = g;
      res.witness_verified = verify_generator_map(h1, h2, g);
      res.status = res.witness_verified ? IsoStatus::Isomorphic : IsoStatus::Unknown;
      if (!res.witness_verified) res.certificate = "witness failed the coalgebra check";
      break;
    }
  }
  return res;
}

/// Pairwise comparison of H_{n,r,T_1}, ..., H_{n,r,T_m}: every pair must be refuted.
inline Report distinct_family(const Field& field, int n, int r) {
  if (field.m < 2) throw Error(ErrorKind::InvalidParameters, "need at least two variables");
  std::vector<HopfAlgebraData> family;
  for (int i = 0; i < field.m; ++i) family.push_back(build_hopf(field, n, r, RatFunc::variable(field, i)));
  Report rep;
  for (int i = 0; i < field.m; ++i)
    for (int j = i + 1; j < field.m; ++j) {
      IsoResult res = iso_test(family[i], family[j]);
      rep.add(family[i].label() + " vs " + family[j].label(), res.status == IsoStatus::NotIsomorphic, res.to_string());
    }
  return rep;
}

}  // namespace hopflab

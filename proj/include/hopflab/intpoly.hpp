#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hopflab/error.hpp"

namespace hopflab {

using BigInt = boost::multiprecision::cpp_int;

/// Monomial in at most 16 variables, one byte of exponent per variable.
/// Variable 0 occupies the most significant byte, so integer order is lex order.
class Monomial {
 public:
  static constexpr int kMaxVars = 16;
  static constexpr unsigned kMaxExponent = 255;

  constexpr Monomial() = default;

  static Monomial var(int index, unsigned exponent = 1) {
    Monomial m;
    m.set(index, exponent);
    return m;
  }

  unsigned exponent(int index) const {
    return static_cast<unsigned>((key_ >> shift(index)) & 0xFF);
  }

  void set(int index, unsigned exponent) {
    if (index < 0 || index >= kMaxVars) throw Error(ErrorKind::InvalidParameters, "monomial variable out of range");
    if (exponent > kMaxExponent) throw Error(ErrorKind::InvalidParameters, "monomial exponent exceeds 255");
    key_ &= ~(static_cast<unsigned __int128>(0xFF) << shift(index));
    key_ |= static_cast<unsigned __int128>(exponent) << shift(index);
  }

  unsigned total_degree() const {
    unsigned s = 0;
    for (int i = 0; i < kMaxVars; ++i) s += exponent(i);
    return s;
  }

  bool is_one() const { return key_ == 0; }

  /// Product; callers guarantee no byte overflows (checked in debug builds).
  friend Monomial operator*(Monomial a, Monomial b) {
    Monomial r;
    r.key_ = a.key_ + b.key_;
    return r;
  }

  /// Moves the exponents of variables [from, from+count) to [to, to+count).
  Monomial relocated(int from, int to, int count) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned e = exponent(i);
      if (!e) continue;
      int j = (i >= from && i < from + count) ? i - from + to : i;
      r.set(j, e);
    }
    return r;
  }

  unsigned __int128 key() const { return key_; }
  friend bool operator==(Monomial a, Monomial b) { return a.key_ == b.key_; }
  friend bool operator<(Monomial a, Monomial b) { return a.key_ < b.key_; }

 private:
  static int shift(int index) { return 8 * (kMaxVars - 1 - index); }
  unsigned __int128 key_ = 0;
};

struct MonomialHash {
  std::size_t operator()(Monomial m) const noexcept {
    auto k = m.key();
    auto lo = static_cast<std::uint64_t>(k), hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6) + (lo >> 2));
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Sparse multivariate polynomial over Z, terms sorted by ascending monomial key.
class IntPoly {
 public:
  using Term = std::pair<Monomial, BigInt>;

  IntPoly() = default;

  static IntPoly constant(const BigInt& c) {
    IntPoly r;
    if (c != 0) r.terms_.push_back({Monomial(), c});
    return r;
  }
  static IntPoly monomial(Monomial m, const BigInt& c = 1) {
    IntPoly r;
    if (c != 0) r.terms_.push_back({m, c});
    return r;
  }
  static IntPoly from_terms(std::vector<Term> terms) {
    IntPoly r;
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) { return merge(a, b, 1); }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return merge(a, b, -1); }
  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  IntPoly scaled(const BigInt& c) const {
    if (c == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::unordered_map<Monomial, BigInt, MonomialHash> acc;
    acc.reserve(a.size() * 2 + b.size() * 2);
    if (&a == &b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        acc[a.terms_[i].first * a.terms_[i].first] += a.terms_[i].second * a.terms_[i].second;
        for (std::size_t j = i + 1; j < a.size(); ++j)
          acc[a.terms_[i].first * a.terms_[j].first] += 2 * a.terms_[i].second * a.terms_[j].second;
      }
    } else {
      for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) out.emplace_back(m, std::move(c));
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    IntPoly r;
    r.terms_ = std::move(out);
    return r;
  }

  IntPoly pow(unsigned e) const {
    IntPoly result = constant(1), base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// Divides every coefficient by d; throws InexactDivision if any is not divisible.
  IntPoly divided_exactly(const BigInt& d) const {
    IntPoly r = *this;
    for (auto& [m, c] : r.terms_) {
      BigInt q, rem;
      boost::multiprecision::divide_qr(c, d, q, rem);
      if (rem != 0)
        throw Error(ErrorKind::InexactDivision, "coefficient " + c.str() + " is not divisible by " + d.str());
      c = std::move(q);
    }
    return r;
  }

  IntPoly relocated(int from, int to, int count) const {
    IntPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m.relocated(from, to, count), c);
    r.normalize();
    return r;
  }

  BigInt coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial k) { return t.first < k; });
    return (it != terms_.end() && it->first == m) ? it->second : BigInt(0);
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.terms_ == b.terms_; }

  /// Terms in display order: ascending total degree, then descending lex.
  std::vector<Term> display_order() const {
    std::vector<Term> out = terms_;
    std::stable_sort(out.begin(), out.end(), [](const Term& x, const Term& y) {
      unsigned dx = x.first.total_degree(), dy = y.first.total_degree();
      if (dx != dy) return dx < dy;
      return y.first < x.first;
    });
    return out;
  }

  /// `names[i]` names variable i.
  template <class NameFn>
  std::string to_string(NameFn&& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : display_order()) {
      bool negative = c < 0;
      BigInt mag = negative ? BigInt(-c) : c;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      std::string vars;
      for (int i = 0; i < Monomial::kMaxVars; ++i) {
        unsigned e = m.exponent(i);
        if (!e) continue;
        if (!vars.empty()) vars += "*";
        vars += name(i);
        if (e > 1) vars += "^" + std::to_string(e);
      }
      if (vars.empty())
        out += mag.str();
      else if (mag == 1)
        out += vars;
      else
        out += mag.str() + "*" + vars;
    }
    return out;
  }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first)
        out.back().second += t.second;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.second == 0; });
    terms_ = std::move(out);
  }

  static IntPoly merge(const IntPoly& a, const IntPoly& b, int sign) {
    IntPoly r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, sign * b.terms_[j].second);
        ++j;
      } else {
        BigInt c = a.terms_[i].second + sign * b.terms_[j].second;
        if (c != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

}  // namespace hopflab

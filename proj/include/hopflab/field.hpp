#pragma once

// Prime field F_p and the descriptor of the coefficient field K^{p^-D},
// K = F_p(T_1, ..., T_m).

#include <cstdint>
#include <numeric>
#include <string>

#include "hopflab/error.hpp"

namespace hopflab {

using Coef = std::uint32_t;

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Arithmetic in F_p for a runtime prime p < 2^31.
struct PrimeField {
  std::int64_t p;

  Coef reduce(std::int64_t v) const {
    v %= p;
    if (v < 0) v += p;
    return static_cast<Coef>(v);
  }
  Coef add(Coef a, Coef b) const { return static_cast<Coef>((std::uint64_t{a} + b) % p); }
  Coef sub(Coef a, Coef b) const { return static_cast<Coef>((std::uint64_t{a} + p - b) % p); }
  Coef neg(Coef a) const { return a == 0 ? 0 : static_cast<Coef>(p - a); }
  Coef mul(Coef a, Coef b) const { return static_cast<Coef>((std::uint64_t{a} * b) % p); }
  Coef pow(Coef a, std::uint64_t e) const {
    std::uint64_t r = 1 % p, b = a;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<Coef>(r);
  }
  Coef inv(Coef a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in F_p");
    return pow(a, static_cast<std::uint64_t>(p - 2));
  }
};

/// Session-wide description of K^{p^-D}: exponents of T_i are stored as
/// integer multiples of 1/p^D.
struct Field {
  std::int64_t p = 2;
  int m = 1;
  int D = 0;

  Field() = default;
  Field(std::int64_t prime, int vars, int depth) : p(prime), m(vars), D(depth) {
    if (!is_prime(p) || p >= (std::int64_t{1} << 31))
      throw Error(ErrorKind::InvalidParameters, "p = " + std::to_string(p) + " is not a supported prime");
    if (m < 0) throw Error(ErrorKind::InvalidParameters, "negative number of variables");
    if (D < 0) throw Error(ErrorKind::InvalidParameters, "negative root depth");
  }

  /// p^D, the denominator of the exponent lattice.
  std::int64_t scale() const { return ipow(p, D); }
  PrimeField fp() const { return PrimeField{p}; }

  friend bool operator==(const Field&, const Field&) = default;
};

inline void require_same_field(const Field& a, const Field& b) {
  if (!(a == b))
    throw Error(ErrorKind::FieldMismatch, "values live in different coefficient fields");
}

}  // namespace hopflab

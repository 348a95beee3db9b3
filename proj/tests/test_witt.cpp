#include <gtest/gtest.h>

#include <random>

#include "hopflab/hopflab.hpp"
#include "oracles.hpp"

using namespace hopflab;

namespace {

std::string text(const IntPoly& poly, char x = 'X') {
  return poly.to_string([x](int i) { return witt_var_name(i, x); });
}

IntWittVector random_vec(std::mt19937& rng, int len, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntWittVector v;
  for (int i = 0; i < len; ++i) v.push_back(d(rng));
  return v;
}

}  // namespace

TEST(WittPolynomial, Examples) {
  auto s2 = witt_system(2, 1);
  auto s3 = witt_system(3, 2);
  EXPECT_EQ(text(s2->witt_polynomial(0), 'Z'), "Z0");
  EXPECT_EQ(text(s2->witt_polynomial(1), 'Z'), "2*Z1 + Z0^2");
  IntPoly w2 = IntPoly::monomial(Monomial::var(0, 9)) + IntPoly::monomial(Monomial::var(1, 3), 3) +
               IntPoly::monomial(Monomial::var(2), 9);
  EXPECT_EQ(s3->witt_polynomial(2), w2);
}

TEST(AdditionPolynomial, S0AndS1MatchTheDisplayedFormula) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    auto sys = witt_system(p, 1);
    EXPECT_EQ(text(sys->addition_polynomial(0)), "X0 + Y0");
    EXPECT_EQ(sys->addition_polynomial(1), oracle::displayed_s1(p)) << "p = " << p;
  }
  EXPECT_EQ(text(witt_system(2, 1)->addition_polynomial(1)), "X1 + Y1 - X0*Y0");
}

TEST(AdditionPolynomial, IntegralThroughDegreeFour) {
  for (std::int64_t p : {2, 3}) {
    auto sys = witt_system(p, 4);
    for (int d = 0; d <= 4; ++d) {
      // S_d = X_d + Y_d + (terms in lower indices only).
      const IntPoly& s = sys->addition_polynomial(d);
      EXPECT_EQ(s.coefficient(Monomial::var(d)), 1);
      EXPECT_EQ(s.coefficient(Monomial::var(kYOffset + d)), 1);
    }
  }
}

TEST(AdditionPolynomial, GhostIdentityAsPolynomials) {
  // w_d(S_0, ..., S_d) = w_d(X) + w_d(Y), checked by composing polynomials.
  for (std::int64_t p : {2, 3}) {
    auto sys = witt_system(p, 2);
    for (int d = 0; d <= 2; ++d) {
      IntPoly lhs;
      BigInt pj = 1;
      for (int j = 0; j <= d; ++j) {
        lhs = lhs + sys->addition_polynomial(j).pow(static_cast<unsigned>(ipow(p, d - j))).scaled(pj);
        pj *= p;
      }
      EXPECT_EQ(lhs, sys->witt_polynomial(d) + sys->witt_polynomial_in(d, kYOffset)) << "p=" << p << " d=" << d;
    }
  }
}

TEST(Ghost, Examples) {
  EXPECT_EQ(ghost_map(*witt_system(2, 1), {0, 0}), (IntWittVector{0, 0}));
  EXPECT_EQ(ghost_map(*witt_system(2, 1), {1, 1}), (IntWittVector{1, 3}));
  EXPECT_EQ(ghost_map(*witt_system(3, 1), {2, 1}), (IntWittVector{2, 11}));
}

TEST(WittAdd, AgreesWithGhostInverseOracle) {
  std::mt19937 rng(11);
  for (std::int64_t p : {2, 3, 5}) {
    const int max_len = p == 5 ? 3 : 4;
    auto sys = witt_system(p, max_len - 1);
    for (int k = 0; k < 40; ++k) {
      auto u = random_vec(rng, 1 + k % max_len, 5), v = random_vec(rng, 1 + k % max_len, 5);
      auto s = witt_add(*sys, u, v);
      auto ref = oracle::ghost_witt_sum(p, u, v);
      ASSERT_EQ(s.size(), ref.size());
      for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(oracle::cpp_rational(s[i]), ref[i]) << "p=" << p;
    }
  }
}

TEST(WittAdd, IdentityAndSmallValues) {
  auto sys = witt_system(2, 1);
  EXPECT_EQ(witt_add(*sys, {5, -3}, {0, 0}), (IntWittVector{5, -3}));
  EXPECT_EQ(witt_add(*sys, {1, 0}, {1, 0}), (IntWittVector{2, -1}));
  EXPECT_EQ(witt_add(*sys, {1, 0}, {-1, 0}), (IntWittVector{0, 1}));
}

TEST(WittAdd, OverRationalFunctionsInCharacteristicThree) {
  Field F(3, 1, 0);
  auto sys = witt_system(3, 1);
  RatFunc T = RatFunc::variable(F, 0), zero(F), one(F, 1);
  auto lift = [&](Coef c) { return RatFunc(F, c); };
  auto s = witt_add_mod_p(*sys, std::vector<RatFunc>{T, zero}, std::vector<RatFunc>{T.scaled(2), zero}, zero, one, lift);
  EXPECT_TRUE(s[0].is_zero());
  // -(T·(2T)^2 + T^2·2T) = -6T^3 = 0 in characteristic 3.
  EXPECT_TRUE(s[1].is_zero());
  auto u = std::vector<RatFunc>{T, T + one};
  auto n = witt_neg_mod_p(*sys, u, zero, one, lift);
  auto back = witt_add_mod_p(*sys, u, n, zero, one, lift);
  EXPECT_TRUE(back[0].is_zero() && back[1].is_zero());
}

TEST(WittNeg, InverseAlways) {
  std::mt19937 rng(5);
  for (std::int64_t p : {2, 3, 5}) {
    auto sys = witt_system(p, 2);
    for (int k = 0; k < 20; ++k) {
      auto u = random_vec(rng, 1 + k % 3, 7);
      EXPECT_EQ(witt_add(*sys, u, witt_neg(*sys, u)), IntWittVector(u.size(), 0));
    }
  }
  EXPECT_EQ(witt_neg(*witt_system(3, 2), {0, 0, 0}), (IntWittVector{0, 0, 0}));
}

TEST(WittNeg, ComponentwiseOnlyForOddP) {
  std::mt19937 rng(9);
  for (std::int64_t p : {3, 5}) {
    auto sys = witt_system(p, 2);
    for (int k = 0; k < 20; ++k) {
      auto u = random_vec(rng, 3, 7);
      IntWittVector neg = u;
      for (auto& c : neg) c = -c;
      EXPECT_EQ(witt_neg(*sys, u), neg);
    }
  }
  auto sys = witt_system(2, 1);
  EXPECT_EQ(witt_neg(*sys, {1, 0}), (IntWittVector{-1, -1}));
  EXPECT_NE(witt_add(*sys, {1, 0}, {-1, 0}), (IntWittVector{0, 0}));
}

TEST(WittSystem, LengthChecks) {
  EXPECT_THROW(ghost_map(*witt_system(2, 1), {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}), Error);
  EXPECT_THROW(witt_add(*witt_system(2, 1), {1}, {1, 2}), Error);
}

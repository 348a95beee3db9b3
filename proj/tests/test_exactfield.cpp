#include <gtest/gtest.h>

#include <random>

#include "hopflab/hopflab.hpp"
#include "oracles.hpp"

using namespace hopflab;

namespace {

RatFunc P(const Field& F, const char* s) { return parse_ratfunc(F, s); }

RatFunc random_ratfunc(const Field& F, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(0, static_cast<int>(F.p) - 1), exp(0, 3), count(1, 3);
  auto poly = [&] {
    FracPoly acc(F);
    for (int k = count(rng); k > 0; --k) {
      Exponents e;
      for (int i = 0; i < F.m; ++i) e.push_back(exp(rng) * F.scale());
      acc = acc + FracPoly::monomial(F, e, static_cast<Coef>(coef(rng)));
    }
    return acc;
  };
  FracPoly den = poly();
  while (den.is_zero()) den = poly();
  return RatFunc(poly(), den);
}

}  // namespace

TEST(Field, RejectsComposite) {
  EXPECT_THROW(Field(4, 1, 0), Error);
  EXPECT_THROW(Field(1, 1, 0), Error);
  EXPECT_NO_THROW(Field(7, 2, 1));
}

TEST(PrimeField, InverseAndPow) {
  PrimeField fp{7};
  for (Coef a = 1; a < 7; ++a) EXPECT_EQ(fp.mul(a, fp.inv(a)), 1u);
  EXPECT_EQ(fp.pow(3, 6), 1u);
}

TEST(Canonicalize, StripsMonomialContent) {
  Field F(2, 1, 0);
  RatFunc a(P(F, "T1^2").num(), P(F, "T1").num());
  EXPECT_EQ(a.to_string(), "T1");
  EXPECT_TRUE(a.den().is_one());
}

TEST(Canonicalize, ZeroNumerator) {
  Field F(2, 1, 0);
  RatFunc a(FracPoly(F), P(F, "T1+1").num());
  EXPECT_TRUE(a.is_zero());
  EXPECT_TRUE(a.den().is_one());
}

TEST(Canonicalize, ScalesDenominator) {
  Field F(3, 2, 0);
  RatFunc a(P(F, "(T1+1)*T2").num(), P(F, "2*T2").num());
  EXPECT_TRUE(a.den().is_one());
  EXPECT_EQ(a, P(F, "2*T1+2"));
  EXPECT_TRUE(equals(a, P(F, "2*T1+2")));
  EXPECT_EQ(canonicalize(canonicalize(a)).to_string(), canonicalize(a).to_string());
}

TEST(PRoot, Basic) {
  Field F(2, 2, 1);
  EXPECT_EQ(p_root(P(F, "T1"), 1).to_string(), "T1^{1/2}");
  EXPECT_EQ(p_root(P(F, "T1+T2"), 1), P(F, "T1^(1/2)+T2^(1/2)"));
  EXPECT_EQ(p_root(P(F, "T1"), 1).pow(2), P(F, "T1"));
}

TEST(PRoot, DepthExceeded) {
  Field F(2, 1, 1);
  try {
    p_root(P(F, "T1^(1/2)"), 1);
    FAIL() << "expected DepthExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DepthExceeded);
  }
}

TEST(InBaseField, Lattice) {
  Field F(2, 1, 1);
  EXPECT_TRUE(in_base_field(P(F, "T1")));
  EXPECT_FALSE(in_base_field(P(F, "T1^(1/2)")));
  EXPECT_TRUE(in_base_field(P(F, "T1^(1/2)").pow(2)));
  EXPECT_FALSE(in_base_field(P(F, "1/(T1^(1/2)+1)")));
}

TEST(PthPower, Cases) {
  Field F(2, 2, 0);
  EXPECT_EQ(is_pth_power_in_K(P(F, "T1^2")).value(), P(F, "T1"));
  EXPECT_FALSE(is_pth_power_in_K(P(F, "T1")).has_value());
  auto c = is_pth_power_in_K(P(F, "(T1^2+T2^2)/T1^4"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, P(F, "(T1+T2)/T1^2"));
  EXPECT_EQ(c->pow(2), P(F, "(T1^2+T2^2)/T1^4"));
  EXPECT_FALSE(is_pth_power_in_K(P(F, "(T1+T2)/T1")).has_value());
}

TEST(Arith, Examples) {
  Field F2(2, 1, 0), F3(3, 1, 0);
  EXPECT_TRUE((P(F2, "T1") + P(F2, "T1")).is_zero());
  EXPECT_TRUE((P(F2, "1/T1") * P(F2, "T1")).is_one());
  RatFunc a = P(F3, "T1+1");
  EXPECT_EQ(a.pow(3), P(F3, "T1^3+1"));
  EXPECT_EQ(a * a * a, P(F3, "T1^3+1"));
  EXPECT_EQ(a.pow(-2) * a.pow(2), RatFunc(F3, 1));
}

TEST(Arith, DivisionByZero) {
  Field F(3, 1, 0);
  EXPECT_THROW(RatFunc(F, 0).inverse(), Error);
  EXPECT_THROW(P(F, "1/(T1-T1)"), Error);
}

TEST(Arith, FieldAxiomsOnRandomElements) {
  for (std::int64_t p : {2, 3, 5}) {
    for (int m : {1, 2}) {
      Field F(p, m, 0);
      std::mt19937 rng(static_cast<unsigned>(10 * p + m));
      for (int k = 0; k < 100; ++k) {
        RatFunc a = random_ratfunc(F, rng), b = random_ratfunc(F, rng), c = random_ratfunc(F, rng);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) {
          EXPECT_TRUE((a * a.inverse()).is_one());
        }
        // Frobenius is additive.
        EXPECT_EQ((a + b).pow(p), a.pow(p) + b.pow(p));
        if (!b.is_zero()) {
          EXPECT_EQ((a * b) / b, a);
        }
      }
    }
  }
}

TEST(Arith, FieldMismatch) {
  EXPECT_THROW(RatFunc::variable(Field(2, 1, 0), 0) + RatFunc::variable(Field(3, 1, 0), 0), Error);
}

TEST(Parse, RoundTripsCanonicalText) {
  Field F(3, 2, 2);
  for (const char* s : {"T1", "T1^(1/9)+2*T2", "(T1+1)/(T2^2+T1)", "-T1^3", "T_1*T_2^{-2}"}) {
    RatFunc a = P(F, s);
    EXPECT_EQ(P(F, a.to_string().c_str()), a) << s;
  }
}

TEST(Parse, Errors) {
  Field F(2, 1, 1);
  for (const char* s : {"T2", "T1^(1/3)", "T1^(1/4)", "(T1", "T1 +", "x"}) {
    try {
      P(F, s);
      ADD_FAILURE() << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse) << s << ": " << e.what();
    }
  }
}

TEST(Oracle, ExponentLattice) {
  Field F(3, 2, 2);
  for (const char* s : {"T1", "T1^(1/3)", "T2^(1/9)*T1^3", "T1^6/(T2^(1/3)+1)", "T1^9+T2^(3)"})
    EXPECT_EQ(in_base_field(P(F, s)), oracle::exponents_integral(P(F, s))) << s;
}

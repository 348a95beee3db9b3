#include <gtest/gtest.h>

#include "hopflab/hopflab.hpp"

using namespace hopflab;

namespace {

RatFunc P(const Field& F, const char* s) { return parse_ratfunc(F, s); }

}  // namespace

TEST(PowerTest, Examples) {
  Field F(2, 2, 0);
  auto a = nth_power_test(P(F, "T1^3"), 3);
  EXPECT_EQ(a.status, PowerStatus::IsPower);
  EXPECT_EQ(*a.root, P(F, "T1"));
  auto b = nth_power_test(P(F, "T1/T2"), 3);
  EXPECT_EQ(b.status, PowerStatus::NotPower);
  EXPECT_EQ(b.to_string(), "NotPower(ord_{T1} = 1 ∉ 3Z)");
  auto c = nth_power_test(P(F, "(T1+1)^2"), 3);
  EXPECT_EQ(c.status, PowerStatus::NotPower);
  EXPECT_EQ(c.valuation, "deg_{T1}");
  EXPECT_EQ(nth_power_test(P(F, "(T1+1)^3"), 3).status, PowerStatus::Unknown);
}

TEST(PowerTest, ConstantsAndNegativeExponents) {
  Field F(7, 1, 0);
  // 3 generates F_7^×, so it is not a square, while 2 = 3^2 is.
  EXPECT_EQ(nth_power_test(P(F, "3*T1^2"), 2).status, PowerStatus::NotPower);
  auto sq = nth_power_test(P(F, "2/T1^4"), 2);
  ASSERT_EQ(sq.status, PowerStatus::IsPower);
  EXPECT_EQ(sq.root->pow(2), P(F, "2/T1^4"));
  EXPECT_EQ(nth_power_test(P(F, "T1^(-3)"), 3).root.value(), P(F, "1/T1"));
}

TEST(PowerTest, Errors) {
  Field F(2, 1, 1);
  EXPECT_THROW(nth_power_test(P(F, "T1"), 2), Error);
  EXPECT_THROW(nth_power_test(P(F, "T1"), 0), Error);
  EXPECT_THROW(nth_power_test(RatFunc(F), 3), Error);
  EXPECT_THROW(nth_power_test(P(F, "T1^(1/2)"), 3), Error);
}

TEST(IsoTest, Examples) {
  Field F(2, 2, 1);
  auto H = [&](const char* f) { return build_hopf(F, 2, 1, P(F, f)); };
  auto same = iso_test(H("T1"), H("T1"));
  EXPECT_EQ(same.status, IsoStatus::Isomorphic);
  EXPECT_TRUE(same.witness->is_one());
  auto four = iso_test(H("T1"), H("T1^4"));
  EXPECT_EQ(four.status, IsoStatus::Isomorphic);
  EXPECT_TRUE(four.witness_verified);
  EXPECT_EQ(*four.witness, P(F, "T1"));
  auto other = iso_test(H("T1"), H("T2"));
  EXPECT_EQ(other.status, IsoStatus::NotIsomorphic);
  EXPECT_EQ(other.power.valuation, "ord_{T1}");
  EXPECT_EQ(other.power.value, 1);
}

TEST(IsoTest, WitnessDirection) {
  // With f2 = f1·g^N, t1 ↦ g·t2 maps H_{f1} to H_{f2}.
  Field F(2, 2, 1);
  auto h1 = build_hopf(F, 2, 1, P(F, "T1"));
  auto h2 = build_hopf(F, 2, 1, P(F, "T1*T2^3"));
  auto fwd = iso_test(h1, h2);
  EXPECT_EQ(fwd.status, IsoStatus::Isomorphic);
  EXPECT_EQ(*fwd.witness, P(F, "T2"));
  EXPECT_TRUE(verify_generator_map(h1, h2, *fwd.witness));
  auto back = iso_test(h2, h1);
  EXPECT_EQ(*back.witness, P(F, "1/T2"));
  EXPECT_TRUE(verify_generator_map(h2, h1, *back.witness));
}

TEST(IsoTest, DifferentShapes) {
  Field F(2, 1, 2);
  auto a = build_hopf(F, 3, 1, P(F, "T1"));
  auto b = build_hopf(F, 3, 2, P(F, "T1"));
  EXPECT_EQ(iso_test(a, b).status, IsoStatus::NotIsomorphic);
}

TEST(IsoTest, UnknownIsReportedHonestly) {
  Field F(2, 1, 1);
  auto a = build_hopf(F, 2, 1, P(F, "T1"));
  auto b = build_hopf(F, 2, 1, P(F, "T1*(T1+1)^3"));
  auto res = iso_test(a, b);
  EXPECT_EQ(res.status, IsoStatus::Unknown);
  // T1+1 is a witness; the valuation tests cannot find it.
  EXPECT_TRUE(verify_generator_map(a, b, P(F, "T1+1")));
}

TEST(DistinctFamily, Examples) {
  Report two = distinct_family(Field(2, 2, 1), 2, 1);
  EXPECT_TRUE(two.passed());
  EXPECT_EQ(two.checks.size(), 1u);
  Report three = distinct_family(Field(3, 3, 1), 2, 1);
  EXPECT_TRUE(three.passed());
  EXPECT_EQ(three.checks.size(), 3u);
  EXPECT_THROW(distinct_family(Field(2, 1, 1), 2, 1), Error);
}

#include <gtest/gtest.h>

#include <random>

#include "hopflab/hopflab.hpp"

using namespace hopflab;

namespace {

AlgebraPtr one_var(const Field& F, std::int64_t order, std::optional<RatFunc> quotient = std::nullopt) {
  return make_algebra(F, {TruncVar{"t", 0, order, std::move(quotient)}});
}

TruncElement random_element(const AlgebraPtr& A, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(0, static_cast<int>(A->field().p) - 1);
  TruncElement e(A);
  for (const auto& m : basis_monomials(A)) e += m.scaled(RatFunc(A->field(), c(rng)) * RatFunc::variable(A->field(), 0).pow(c(rng)));
  return e;
}

}  // namespace

TEST(Trunc, Truncation) {
  Field F(2, 1, 0);
  auto A = one_var(F, 4);
  auto t = TruncElement::generator(A, 0);
  EXPECT_TRUE((t.pow(3) * t).is_zero());
  EXPECT_EQ(A->dimension(), 4u);
}

TEST(Trunc, FreshmansDreamInTensorSquare) {
  for (std::int64_t p : {2, 3}) {
    Field F(p, 1, 0);
    auto A = one_var(F, p * p);
    auto AA = tensor_algebra({A, A});
    auto u = TruncElement::generator(AA, 0), v = TruncElement::generator(AA, 1);
    EXPECT_EQ((u + v).pow(p), u.pow(p) + v.pow(p));
  }
}

TEST(Trunc, OnePlusTToTheOrder) {
  for (std::int64_t p : {2, 3, 5}) {
    Field F(p, 1, 0);
    auto A = one_var(F, p * p);
    auto t = TruncElement::generator(A, 0);
    EXPECT_EQ((TruncElement::one(A) + t).pow(p * p), TruncElement::one(A));
  }
}

TEST(Trunc, QuotientReduction) {
  Field F(2, 1, 0);
  RatFunc T1 = RatFunc::variable(F, 0);
  auto L = one_var(F, 4, T1);
  auto x = TruncElement::generator(L, 0);
  EXPECT_EQ(x.pow(4), TruncElement::constant(L, T1));
  EXPECT_EQ(x.pow(6), TruncElement::monomial(L, ExpVec{2}, T1));
  EXPECT_EQ(TruncElement::monomial(L, ExpVec{9}, RatFunc(F, 1)), TruncElement::monomial(L, ExpVec{1}, T1.pow(2)));
}

TEST(Trunc, RingAxiomsOnRandomElements) {
  Field F(3, 1, 0);
  auto A = one_var(F, 9, RatFunc::variable(F, 0));
  std::mt19937 rng(3);
  for (int k = 0; k < 15; ++k) {
    auto a = random_element(A, rng), b = random_element(A, rng), c = random_element(A, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a.pow(3), a.frobenius());
  }
}

TEST(Trunc, TensorEmbed) {
  Field F(2, 1, 0);
  auto H = one_var(F, 4);
  auto HH = tensor_algebra({H, H});
  auto t = TruncElement::generator(H, 0);
  RatFunc f = RatFunc::variable(F, 0);
  EXPECT_EQ(tensor_embed(t, 0, HH).to_string(), "t⊗1");
  EXPECT_EQ(tensor_embed(t, 1, HH).to_string(), "1⊗t");
  EXPECT_EQ(tensor_embed(t.pow(2).scaled(f), 1, HH), TruncElement::monomial(HH, ExpVec{0, 2}, f));
}

TEST(Trunc, AlgebraMismatch) {
  Field F(2, 1, 0);
  auto a = TruncElement::generator(one_var(F, 4), 0);
  auto b = TruncElement::generator(one_var(F, 8), 0);
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(make_algebra(F, {TruncVar{"t", 0, 6, std::nullopt}}), Error);
}

TEST(Trunc, EvalAdditionPolynomial) {
  Field F(2, 1, 1);
  RatFunc f1 = p_root(RatFunc::variable(F, 0), 1);
  auto H = one_var(F, 4);
  auto HH = tensor_algebra({H, H});
  auto u = TruncElement::generator(HH, 0), v = TruncElement::generator(HH, 1);
  auto sys = witt_system(2, 1);
  EXPECT_EQ(eval_addition_poly(*sys, 0, {u}, {v}), u + v);
  auto s = eval_addition_poly(*sys, 1, {u.pow(2).scaled(f1), u}, {v.pow(2).scaled(f1), v});
  EXPECT_EQ(s, u + v + TruncElement::monomial(HH, ExpVec{2, 2}, f1.pow(2)));
  EXPECT_TRUE(eval_addition_poly(*sys, 1, {TruncElement(HH), TruncElement(HH)}, {TruncElement(HH), TruncElement(HH)}).is_zero());
}

TEST(Trunc, AlgebraMapIsMultiplicative) {
  Field F(3, 1, 0);
  auto H = one_var(F, 9);
  auto HH = tensor_algebra({H, H});
  std::mt19937 rng(4);
  auto a = random_element(H, rng), b = random_element(H, rng);
  std::vector<TruncElement> images = {TruncElement::generator(HH, 0) + TruncElement::generator(HH, 1)};
  EXPECT_EQ(apply_algebra_map(a * b, HH, images), apply_algebra_map(a, HH, images) * apply_algebra_map(b, HH, images));
}

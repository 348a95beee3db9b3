#include <gtest/gtest.h>

#include "hopflab/hopflab.hpp"
#include "oracles.hpp"

using namespace hopflab;

namespace {

struct Setup {
  HopfAlgebraData h;
  PrimitiveExtension ext;
};

Setup setup(std::int64_t p, int n, int r, const char* f = "T1", const char* b = "T1", int m = 1) {
  Field F(p, m, witt_depth(n, r));
  auto h = build_hopf(F, n, r, parse_ratfunc(F, f));
  return {h, make_extension(F, parse_ratfunc(F, b), n)};
}

TruncElement lh(const CoactionData& c, std::int64_t xe, std::int64_t te, const RatFunc& coef) {
  return TruncElement::monomial(c.LH, ExpVec{xe, te}, coef);
}

}  // namespace

TEST(Extension, Validation) {
  Field F(2, 2, 1);
  EXPECT_NO_THROW(make_extension(F, parse_ratfunc(F, "T1"), 2));
  EXPECT_NO_THROW(make_extension(F, parse_ratfunc(F, "(T1+T2)/T1"), 2));
  try {
    make_extension(F, parse_ratfunc(F, "T1^2"), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrimitive);
  }
  EXPECT_THROW(make_extension(F, parse_ratfunc(F, "T1^(1/2)"), 2), Error);
}

TEST(Coaction, AlphaExamples) {
  auto [h, ext] = setup(2, 2, 1);
  Field F = h.field;
  RatFunc one(F, 1), T1 = parse_ratfunc(F, "T1");
  auto c1 = build_coaction(h, ext, 1);
  EXPECT_EQ(c1.alpha[0], lh(c1, 1, 0, one) + lh(c1, 0, 1, one) + lh(c1, 2, 2, T1));
  auto c3 = build_coaction(h, ext, 3);
  EXPECT_EQ(*c3.alpha_xi, lh(c3, 3, 0, one) + lh(c3, 0, 1, one) + lh(c3, 2, 2, T1.pow(2)));
  // α is an algebra map, so α(x)^3 = α(x^3).
  EXPECT_EQ(c3.alpha[0].pow(3), *c3.alpha_xi);
  auto cp = build_coaction(primitive_hopf(F, 2), ext, 1);
  EXPECT_EQ(cp.alpha[0], lh(cp, 1, 0, one) + lh(cp, 0, 1, one));
}

TEST(Coaction, IndexValidation) {
  auto [h, ext] = setup(2, 2, 1);
  for (std::int64_t i : {0, 2, 4, 5}) EXPECT_THROW(build_coaction(h, ext, i), Error) << i;
  auto [h3, ext3] = setup(2, 3, 1);
  EXPECT_THROW(build_coaction(h, ext3, 1), Error);  // [L:K] ≠ dim H
}

TEST(Comodule, PassesAndNegativeControl) {
  auto [h, ext] = setup(2, 2, 1);
  auto c = build_coaction(h, ext, 1);
  EXPECT_TRUE(verify_comodule(c, true).passed());
  EXPECT_TRUE(verify_comodule(build_coaction(primitive_hopf(h.field, 2), ext, 1), true).passed());
  // Drop the f-term from α(x).
  TruncElement dropped = c.alpha[0] - lh(c, 2, 2, *h.f);
  Report rep = verify_comodule(with_alpha(c, {dropped}));
  EXPECT_FALSE(rep.passed());
  EXPECT_NE(rep.to_string().find("FAIL coassociativity"), std::string::npos) << rep.to_string();
}

TEST(Certificate, BothModesAtTheBaseCase) {
  auto [h, ext] = setup(2, 2, 1);
  auto c = build_coaction(h, ext, 1);
  auto tri = galois_certificate(c, CertMode::Triangular);
  EXPECT_TRUE(tri.invertible);
  EXPECT_EQ(tri.table.size(), 4u);
  for (const auto& e : tri.table) EXPECT_TRUE(e.ok);
  auto full = galois_certificate(c, CertMode::FullMatrix);
  EXPECT_TRUE(full.invertible);
  EXPECT_EQ(full.rank, 16u);
  EXPECT_EQ(full.domain_rank, 16u);
  auto prim = build_coaction(primitive_hopf(h.field, 2), ext, 1);
  EXPECT_TRUE(galois_certificate(prim, CertMode::FullMatrix).invertible);
  EXPECT_TRUE(galois_certificate(prim).invertible);
}

TEST(Certificate, NonCoprimeIndexIsRejected) {
  auto [h, ext] = setup(2, 2, 1);
  auto c = build_coaction_unchecked(h, ext, 2);
  EXPECT_TRUE(c.alpha.empty());
  for (CertMode mode : {CertMode::Triangular, CertMode::FullMatrix}) {
    try {
      galois_certificate(c, mode);
      ADD_FAILURE() << "certificate accepted p | i";
    } catch (const KernelError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
      EXPECT_FALSE(e.kernel().empty());
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotInvertible) << e.what();
    }
  }
}

TEST(Certificate, FullMatrixAgreesAcrossCases) {
  for (auto [p, n, r] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1}}) {
    auto [h, ext] = setup(p, n, r);
    const std::int64_t q = ipow(p, n);
    for (std::int64_t i = 1; i < q; ++i) {
      if (i % p == 0) continue;
      auto c = build_coaction(h, ext, i);
      EXPECT_TRUE(verify_comodule(c).passed());
      EXPECT_TRUE(galois_certificate(c).invertible);
      auto full = galois_certificate(c, CertMode::FullMatrix);
      EXPECT_EQ(full.rank, static_cast<std::size_t>(q * q)) << h.label() << " i=" << i;
    }
  }
}

TEST(Enumerate, CountsMatchBruteForcePhi) {
  for (auto [p, n, r] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1}}) {
    auto [h, ext] = setup(p, n, r);
    auto en = enumerate_coactions(h, ext);
    EXPECT_TRUE(en.ok());
    EXPECT_EQ(static_cast<std::int64_t>(en.certified), oracle::euler_phi(ipow(p, n))) << h.label();
  }
}

TEST(Enumerate, CoactionsAreDistinct) {
  auto [h, ext] = setup(3, 2, 1);
  std::vector<TruncElement> seen;
  for (std::int64_t i = 1; i < 9; ++i) {
    if (i % 3 == 0) continue;
    auto a = build_coaction(h, ext, i).alpha[0];
    for (const auto& s : seen) EXPECT_FALSE(a == s) << "i=" << i;
    seen.push_back(a);
  }
}

TEST(ChangeOfGenerator, Coherence) {
  auto [h, ext] = setup(2, 2, 1);
  auto c = build_coaction(h, ext, 1);
  for (const char* g : {"1", "T1", "T1+1", "1/T1"}) EXPECT_TRUE(verify_change_of_generator(c, parse_ratfunc(h.field, g))) << g;
  auto [h3, ext3] = setup(3, 2, 1, "T1", "T1+T2", 2);
  EXPECT_TRUE(verify_change_of_generator(build_coaction(h3, ext3, 1), parse_ratfunc(h3.field, "T2")));
}

TEST(Modular, TensorAndBigenic) {
  Field F(2, 2, 1);
  RatFunc T1 = RatFunc::variable(F, 0), T2 = RatFunc::variable(F, 1);
  auto ht = tensor_hopf({build_hopf(F, 2, 1, T1), build_hopf(F, 2, 1, T2)});
  auto ct = tensor_galois(ht, {make_extension(F, T1, 2, "x"), make_extension(F, T2, 2, "y")});
  EXPECT_TRUE(verify_comodule(ct, true).passed());
  EXPECT_TRUE(galois_certificate(ct).invertible);
  auto hb = bigenic_example(F);
  auto cb = bigenic_coaction(hb);
  EXPECT_TRUE(verify_comodule(cb, true).passed());
  EXPECT_TRUE(galois_certificate(cb).invertible);
  // α(y) = y⊗1 + 1⊗u.
  EXPECT_EQ(cb.alpha[1], TruncElement::generator(cb.LH, 1) + TruncElement::generator(cb.LH, 3));
  EXPECT_THROW(tensor_galois(ht, {make_extension(F, T1, 2)}), Error);
}

TEST(Modular, FullMatrixCertificates) {
  Field F(2, 2, 1);
  RatFunc T1 = RatFunc::variable(F, 0), T2 = RatFunc::variable(F, 1);
  auto ht = tensor_hopf({build_hopf(F, 2, 1, T1), build_hopf(F, 2, 1, T2)});
  auto ct = tensor_galois(ht, {make_extension(F, T1, 2, "x"), make_extension(F, T2, 2, "y")});
  EXPECT_EQ(galois_certificate(ct, CertMode::FullMatrix).rank, 256u);
  EXPECT_EQ(galois_certificate(bigenic_coaction(bigenic_example(F)), CertMode::FullMatrix).rank, 256u);
}

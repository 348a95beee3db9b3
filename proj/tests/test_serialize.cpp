#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hopflab/hopflab.hpp"

using namespace hopflab;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(HOPFLAB_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HopfAlgebraData H(std::int64_t p, int n, int r, const char* f) {
  Field F(p, 1, witt_depth(n, r));
  return build_hopf(F, n, r, parse_ratfunc(F, f));
}

}  // namespace

TEST(Serialize, SortedKeysAndVersion) {
  json j = to_json(H(2, 2, 1, "T1"));
  EXPECT_EQ(j.at("schema_version"), 1);
  std::string prev;
  for (auto it = j.begin(); it != j.end(); ++it) {
    EXPECT_LT(prev, it.key());
    prev = it.key();
  }
  EXPECT_EQ(dump(j), golden("hopf_p2_n2_r1_T1.json"));
}

TEST(Serialize, WittRoundTrip) {
  auto sys = witt_system(3, 2);
  json j = witt_to_json(*sys, 2);
  WittDump d = witt_from_json(json::parse(dump(j)));
  EXPECT_EQ(d.p, 3);
  EXPECT_EQ(d.d, 2);
  for (int k = 0; k <= 2; ++k) {
    EXPECT_EQ(d.S[k], sys->addition_polynomial(k));
    EXPECT_EQ(d.w[k], sys->witt_polynomial(k));
  }
  EXPECT_EQ(dump(witt_to_json(*witt_system(2, 2), 2)), golden("witt_p2_d2.json"));
}

TEST(Serialize, HopfRoundTrip) {
  for (auto [p, n, r, f] : std::vector<std::tuple<int, int, int, const char*>>{
           {2, 2, 1, "T1"}, {3, 2, 1, "T1+1"}, {2, 3, 1, "T1"}, {3, 3, 2, "1/T1"}}) {
    auto h = H(p, n, r, f);
    std::string text = dump(to_json(h));
    auto back = hopf_from_json(json::parse(text));
    EXPECT_EQ(back.delta[0], h.delta[0]);
    EXPECT_EQ(back.antipode[0], h.antipode[0]);
    EXPECT_EQ(back.label(), h.label());
    EXPECT_EQ(dump(to_json(back)), text);
  }
  Field F(2, 2, 1);
  auto bi = bigenic_example(F);
  std::string text = dump(to_json(bi));
  EXPECT_EQ(dump(to_json(hopf_from_json(json::parse(text)))), text);
}

TEST(Serialize, TruncRoundTrip) {
  auto h = H(3, 2, 1, "T1");
  auto e = h.delta[0].pow(2);
  auto back = trunc_from_json(json::parse(dump(to_json(e))));
  EXPECT_EQ(dump(to_json(back)), dump(to_json(e)));
  EXPECT_EQ(back.to_string(), e.to_string());
}

TEST(Serialize, CoactionRoundTrip) {
  auto h = H(2, 2, 1, "T1");
  auto c = build_coaction(h, make_extension(h.field, *h.f, 2), 3);
  std::string text = dump(to_json(c));
  auto back = coaction_from_json(json::parse(text));
  EXPECT_EQ(dump(to_json(back)), text);
  EXPECT_EQ(back.alpha[0], c.alpha[0]);
  EXPECT_TRUE(galois_certificate(back).invertible);
}

TEST(Serialize, CertificateRoundTrip) {
  auto h = H(2, 2, 1, "T1");
  auto c = build_coaction(h, make_extension(h.field, *h.f, 2), 1);
  for (CertMode mode : {CertMode::Triangular, CertMode::FullMatrix}) {
    std::string text = dump(to_json(galois_certificate(c, mode)));
    EXPECT_EQ(dump(to_json(certificate_from_json(json::parse(text)))), text);
  }
  json cert = to_json(galois_certificate(c));
  cert["comodule"] = to_json(verify_comodule(c));
  EXPECT_EQ(dump(cert), golden("certificate_p2_n2_r1_T1_b_T1.json"));
}

TEST(Serialize, DualAndActionGolden) {
  auto h = H(2, 2, 1, "T1");
  auto dh = dual_structure(h);
  std::string dtext = dump(to_json(dh));
  EXPECT_EQ(dtext, golden("dual_p2_n2_r1_T1.json"));
  DualDump dd = dual_from_json(json::parse(dtext));
  EXPECT_EQ(dd.q, 4);
  auto at = dual_action_table(dh, build_coaction(h, make_extension(h.field, *h.f, 2), 1));
  std::string atext = dump(to_json(at));
  EXPECT_EQ(atext, golden("action_p2_n2_r1_T1_b_T1.json"));
  auto entries = action_from_json(json::parse(atext));
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) EXPECT_EQ(entries[j][i].to_string(), at.at(j, i).to_string());
}

TEST(Serialize, IsoAndReportRoundTrip) {
  Field F(2, 1, 1);
  auto res = iso_test(build_hopf(F, 2, 1, parse_ratfunc(F, "T1")), build_hopf(F, 2, 1, parse_ratfunc(F, "T1^4")));
  std::string text = dump(to_json(res));
  EXPECT_EQ(text, golden("iso_p2_n2_r1_T1_T1pow4.json"));
  IsoDump d = iso_from_json(json::parse(text));
  EXPECT_EQ(d.status, "Isomorphic");
  EXPECT_EQ(d.witness.value(), "T1");
  Report rep = verify_hopf_axioms(H(2, 2, 1, "T1"));
  std::string rtext = dump(to_json(rep));
  EXPECT_EQ(dump(to_json(report_from_json(json::parse(rtext)))), rtext);
}

TEST(Serialize, Stability) {
  // Independent builds of the same object give identical bytes.
  EXPECT_EQ(dump(to_json(H(3, 3, 2, "T1+1"))), dump(to_json(H(3, 3, 2, "T1+1"))));
}

TEST(Serialize, ParseErrors) {
  EXPECT_THROW(hopf_from_json(json::object()), Error);
  EXPECT_THROW(field_from_json(json{{"p", 2}}), Error);
}

#pragma once

// JSON dumps (sorted keys, "schema_version": 1) and their parsers.
// Rational functions travel as their canonical text and are re-parsed.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hopflab/dual.hpp"
#include "hopflab/error.hpp"
#include "hopflab/galois.hpp"
#include "hopflab/hopf.hpp"
#include "hopflab/intpoly.hpp"
#include "hopflab/isotest.hpp"
#include "hopflab/parse.hpp"
#include "hopflab/report.hpp"
#include "hopflab/trunc.hpp"
#include "hopflab/witt.hpp"

namespace hopflab {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Two-space indented, keys sorted (nlohmann objects are ordered maps).
inline std::string dump(const json& j) { return j.dump(2, ' ', false) + "\n"; }

namespace detail {

template <class T>
T field_of(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad value for \"") + key + "\": " + e.what());
  }
}

inline int witt_var_index(const std::string& name) {
  if (name.size() < 2) throw Error(ErrorKind::Parse, "bad variable name " + name);
  int idx = std::stoi(name.substr(1));
  if (name[0] == 'Y') return kYOffset + idx;
  if (name[0] == 'X' || name[0] == 'Z') return idx;
  throw Error(ErrorKind::Parse, "bad variable name " + name);
}

}  // namespace detail

// ---- field -------------------------------------------------------------

inline json to_json(const Field& f) { return json{{"p", f.p}, {"m", f.m}, {"D", f.D}}; }

inline Field field_from_json(const json& j) {
  return Field(detail::field_of<std::int64_t>(j, "p"), detail::field_of<int>(j, "m"), detail::field_of<int>(j, "D"));
}

// ---- integer polynomials and Witt systems ------------------------------

inline json to_json(const IntPoly& poly, char x = 'X') {
  json terms = json::array();
  for (const auto& [m, c] : poly.display_order()) {
    json exps = json::object();
    for (int i = 0; i < Monomial::kMaxVars; ++i)
      if (m.exponent(i)) exps[witt_var_name(i, x)] = m.exponent(i);
    terms.push_back({{"coef", c.str()}, {"exps", exps}});
  }
  return terms;
}

inline IntPoly intpoly_from_json(const json& j) {
  std::vector<IntPoly::Term> terms;
  for (const auto& t : j) {
    Monomial m;
    const json exps = detail::field_of<json>(t, "exps");
    for (auto it = exps.begin(); it != exps.end(); ++it) m.set(detail::witt_var_index(it.key()), it.value().get<unsigned>());
    terms.emplace_back(m, BigInt(detail::field_of<std::string>(t, "coef")));
  }
  return IntPoly::from_terms(std::move(terms));
}

inline json witt_to_json(const WittPolySystem& sys, int d) {
  json w = json::array(), S = json::array();
  for (int k = 0; k <= d; ++k) {
    w.push_back(to_json(sys.witt_polynomial(k), 'Z'));
    S.push_back(to_json(sys.addition_polynomial(k)));
  }
  return json{{"schema_version", kSchemaVersion}, {"p", sys.p()}, {"d", d}, {"w", w}, {"S", S}};
}

struct WittDump {
  std::int64_t p = 0;
  int d = 0;
  std::vector<IntPoly> w, S;
};

inline WittDump witt_from_json(const json& j) {
  WittDump out{detail::field_of<std::int64_t>(j, "p"), detail::field_of<int>(j, "d"), {}, {}};
  for (const auto& x : detail::field_of<json>(j, "w")) out.w.push_back(intpoly_from_json(x));
  for (const auto& x : detail::field_of<json>(j, "S")) out.S.push_back(intpoly_from_json(x));
  return out;
}

// ---- truncated algebra elements ----------------------------------------

inline json to_json(const TruncAlgebra& alg) {
  json vars = json::array();
  for (const auto& v : alg.vars()) {
    json o{{"name", v.name}, {"factor", v.factor}, {"order", v.order}};
    if (v.quotient) o["quotient"] = v.quotient->to_string();
    vars.push_back(o);
  }
  return vars;
}

inline AlgebraPtr algebra_from_json(const Field& field, const json& vars) {
  std::vector<TruncVar> out;
  for (const auto& v : vars) {
    TruncVar tv{detail::field_of<std::string>(v, "name"), detail::field_of<int>(v, "factor"),
                detail::field_of<std::int64_t>(v, "order"), std::nullopt};
    if (v.contains("quotient")) tv.quotient = parse_ratfunc(field, v.at("quotient").get<std::string>());
    out.push_back(std::move(tv));
  }
  return make_algebra(field, std::move(out));
}

inline json terms_to_json(const TruncElement& e) {
  json terms = json::array();
  for (const auto& [exps, c] : e.display_terms())
    terms.push_back({{"coef", c.to_string()}, {"exps", std::vector<std::int64_t>(exps.begin(), exps.end())}});
  return terms;
}

inline TruncElement terms_from_json(const AlgebraPtr& alg, const json& terms) {
  TruncElement out(alg);
  for (const auto& t : terms) {
    auto exps = detail::field_of<std::vector<std::int64_t>>(t, "exps");
    if (static_cast<int>(exps.size()) != alg->num_vars()) throw Error(ErrorKind::Parse, "exponent vector length");
    out += TruncElement::monomial(alg, ExpVec(exps.begin(), exps.end()),
                                  parse_ratfunc(alg->field(), detail::field_of<std::string>(t, "coef")));
  }
  return out;
}

inline json to_json(const TruncElement& e) {
  return json{{"field", to_json(e.field())}, {"vars", to_json(*e.algebra())}, {"terms", terms_to_json(e)}};
}

inline TruncElement trunc_from_json(const json& j) {
  Field field = field_from_json(detail::field_of<json>(j, "field"));
  return terms_from_json(algebra_from_json(field, detail::field_of<json>(j, "vars")), detail::field_of<json>(j, "terms"));
}

// ---- Hopf algebras -----------------------------------------------------

inline json to_json(const HopfAlgebraData& h) {
  json gens = json::array(), delta = json::array(), antipode = json::array();
  for (const auto& v : h.H->vars()) gens.push_back({{"name", v.name}, {"order", v.order}});
  for (const auto& d : h.delta) delta.push_back(terms_to_json(d));
  for (const auto& a : h.antipode) antipode.push_back(terms_to_json(a));
  json j{{"schema_version", kSchemaVersion},
         {"kind", to_string(h.kind)},
         {"label", h.label()},
         {"field", to_json(h.field)},
         {"p", h.field.p},
         {"vars", h.field.m},
         {"generators", gens},
         {"delta", delta},
         {"delta_t", delta.at(0)},
         {"antipode", antipode},
         {"antipode_is_negation", h.antipode_is_negation}};
  if (h.kind == HopfKind::Monogenic || h.kind == HopfKind::Primitive) j["n"] = h.n;
  if (h.kind == HopfKind::Monogenic) {
    j["r"] = h.r;
    j["d"] = h.d;
    j["f"] = h.f->to_string();
    json seq = json::array();
    for (const auto& x : h.f_seq) seq.push_back(x.to_string());
    j["f_seq"] = seq;
  }
  return j;
}

/// Rebuilds H and Δ from a dump. Δ is taken as stored, so verification of
/// the result checks the file's data; the parameters are kept as metadata.
inline HopfAlgebraData hopf_from_json(const json& j) {
  Field field = field_from_json(detail::field_of<json>(j, "field"));
  std::vector<std::pair<std::string, std::int64_t>> gens;
  for (const auto& g : detail::field_of<json>(j, "generators"))
    gens.emplace_back(detail::field_of<std::string>(g, "name"), detail::field_of<std::int64_t>(g, "order"));
  AlgebraPtr H = generator_algebra(field, gens);
  AlgebraPtr HH = tensor_algebra({H, H});
  std::vector<TruncElement> delta;
  for (const auto& d : detail::field_of<json>(j, "delta")) delta.push_back(terms_from_json(HH, d));
  HopfAlgebraData h = custom_hopf(H, std::move(delta));
  const std::string kind = detail::field_of<std::string>(j, "kind");
  for (HopfKind k : {HopfKind::Monogenic, HopfKind::Primitive, HopfKind::Tensor, HopfKind::Bigenic, HopfKind::Custom})
    if (to_string(k) == kind) h.kind = k;
  if (j.contains("n")) h.n = j.at("n").get<int>();
  if (h.kind == HopfKind::Monogenic) {
    h.r = detail::field_of<int>(j, "r");
    h.d = detail::field_of<int>(j, "d");
    h.f = parse_ratfunc(field, detail::field_of<std::string>(j, "f"));
    for (const auto& x : detail::field_of<json>(j, "f_seq")) h.f_seq.push_back(parse_ratfunc(field, x.get<std::string>()));
  }
  return h;
}

// ---- reports, certificates, iso results ---------------------------------

inline json to_json(const Report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return json{{"schema_version", kSchemaVersion}, {"passed", rep.passed()}, {"checks", checks}};
}

inline Report report_from_json(const json& j) {
  Report rep;
  for (const auto& c : detail::field_of<json>(j, "checks"))
    rep.add(detail::field_of<std::string>(c, "name"), detail::field_of<bool>(c, "passed"),
            detail::field_of<std::string>(c, "detail"));
  return rep;
}

inline std::string to_string(CertMode m) { return m == CertMode::Triangular ? "triangular" : "full"; }

inline json to_json(const GaloisCertificate& cert) {
  json table = json::array();
  for (const auto& e : cert.table) {
    json row{{"index", e.index}, {"leading", e.leading}, {"ok", e.ok}};
    row["next_degree"] = e.next_degree ? json(*e.next_degree) : json(nullptr);
    table.push_back(row);
  }
  return json{{"schema_version", kSchemaVersion},
              {"mode", to_string(cert.mode)},
              {"status", cert.invertible ? "invertible" : "not_invertible"},
              {"leading_table", table},
              {"dimension", cert.dimension},
              {"rank", cert.rank},
              {"domain_rank", cert.domain_rank}};
}

inline GaloisCertificate certificate_from_json(const json& j) {
  GaloisCertificate cert;
  cert.mode = detail::field_of<std::string>(j, "mode") == "full" ? CertMode::FullMatrix : CertMode::Triangular;
  cert.invertible = detail::field_of<std::string>(j, "status") == "invertible";
  for (const auto& row : detail::field_of<json>(j, "leading_table")) {
    LeadingEntry e;
    e.index = detail::field_of<std::vector<std::int64_t>>(row, "index");
    e.leading = detail::field_of<std::string>(row, "leading");
    e.ok = detail::field_of<bool>(row, "ok");
    if (!row.at("next_degree").is_null()) e.next_degree = row.at("next_degree").get<std::int64_t>();
    cert.table.push_back(std::move(e));
  }
  cert.dimension = detail::field_of<std::size_t>(j, "dimension");
  cert.rank = detail::field_of<std::size_t>(j, "rank");
  cert.domain_rank = detail::field_of<std::size_t>(j, "domain_rank");
  return cert;
}

inline json to_json(const IsoResult& res) {
  json j{{"schema_version", kSchemaVersion},
         {"status", to_string(res.status)},
         {"witness", res.witness ? json(res.witness->to_string()) : json(nullptr)},
         {"witness_verified", res.witness_verified},
         {"certificate", res.certificate},
         {"power_test", res.power.to_string()}};
  return j;
}

struct IsoDump {
  std::string status;
  std::optional<std::string> witness;
  bool witness_verified = false;
  std::string certificate;
  std::string power_test;
};

inline IsoDump iso_from_json(const json& j) {
  IsoDump d;
  d.status = detail::field_of<std::string>(j, "status");
  if (!j.at("witness").is_null()) d.witness = j.at("witness").get<std::string>();
  d.witness_verified = detail::field_of<bool>(j, "witness_verified");
  d.certificate = detail::field_of<std::string>(j, "certificate");
  d.power_test = detail::field_of<std::string>(j, "power_test");
  return d;
}

// ---- coactions -----------------------------------------------------------

inline json to_json(const CoactionData& c) {
  json gens = json::array(), alpha = json::array();
  for (const auto& g : c.ext.gens) gens.push_back({{"name", g.name}, {"n", g.n}, {"b", g.b.to_string()}});
  for (const auto& a : c.alpha) alpha.push_back(terms_to_json(a));
  return json{{"schema_version", kSchemaVersion},
              {"hopf", to_json(c.hopf)},
              {"extension", gens},
              {"i", c.i},
              {"alpha", alpha},
              {"alpha_xi", c.alpha_xi ? terms_to_json(*c.alpha_xi) : json(nullptr)}};
}

/// Rebuilds the coaction exactly as stored; nothing is recomputed.
inline CoactionData coaction_from_json(const json& j) {
  HopfAlgebraData h = hopf_from_json(detail::field_of<json>(j, "hopf"));
  std::vector<PrimitiveExtension> parts;
  for (const auto& g : detail::field_of<json>(j, "extension"))
    parts.push_back(make_extension(h.field, parse_ratfunc(h.field, detail::field_of<std::string>(g, "b")),
                                   detail::field_of<int>(g, "n"), detail::field_of<std::string>(g, "name")));
  CoactionData c{h, modular_extension(parts), detail::field_of<std::int64_t>(j, "i"), {}, {}, {}, {}, std::nullopt, {}, {}, {}};
  detail::setup_algebras(c);
  for (const auto& a : detail::field_of<json>(j, "alpha")) c.alpha.push_back(terms_from_json(c.LH, a));
  if (!j.at("alpha_xi").is_null()) {
    c.alpha_xi = terms_from_json(c.LH, j.at("alpha_xi"));
    c.cert_gens = {detail::l_monomial(c.L, 0, c.i)};
    c.cert_images = {*c.alpha_xi};
  } else {
    c.cert_images = c.alpha;
    for (int k = 0; k < c.l_gens(); ++k) c.cert_gens.push_back(TruncElement::generator(c.L, k));
  }
  return c;
}

// ---- dual tables --------------------------------------------------------

inline json dual_vector_json(const DualVector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

/// mult_table lists the nonzero products z_{j1} z_{j2} with j1 <= j2 as full
/// coordinate vectors; comult_table lists the pairs (a, b) of Δ(z_j).
inline json to_json(const DualHopf& dh) {
  json mult = json::array(), comult = json::array();
  for (int a = 0; a < dh.q; ++a)
    for (int b = a; b < dh.q; ++b)
      if (!is_zero(dh.mult_table[a][b]))
        mult.push_back({{"left", a}, {"right", b}, {"product", dual_vector_json(dh.mult_table[a][b])}});
  for (int j = 0; j < dh.q; ++j) comult.push_back({{"j", j}, {"terms", dh.comult_table[j]}});
  json antipode = json::array();
  for (const auto& v : dh.antipode) antipode.push_back(dual_vector_json(v));
  return json{{"schema_version", kSchemaVersion},
              {"hopf", dh.source.label()},
              {"field", to_json(dh.field())},
              {"dimension", dh.q},
              {"mult_table", mult},
              {"comult_table", comult},
              {"antipode", antipode}};
}

struct DualDump {
  Field field;
  int q = 0;
  std::vector<std::vector<DualVector>> mult_table;
  std::vector<std::vector<std::pair<int, int>>> comult_table;
  std::vector<DualVector> antipode;
};

inline DualDump dual_from_json(const json& j) {
  DualDump d;
  d.field = field_from_json(detail::field_of<json>(j, "field"));
  d.q = detail::field_of<int>(j, "dimension");
  auto vec = [&](const json& arr) {
    DualVector v;
    for (const auto& c : arr) v.push_back(parse_ratfunc(d.field, c.get<std::string>()));
    return v;
  };
  d.mult_table.assign(d.q, std::vector<DualVector>(d.q, DualVector(d.q, RatFunc(d.field))));
  for (const auto& e : detail::field_of<json>(j, "mult_table")) {
    const int a = detail::field_of<int>(e, "left"), b = detail::field_of<int>(e, "right");
    d.mult_table[a][b] = d.mult_table[b][a] = vec(e.at("product"));
  }
  d.comult_table.resize(d.q);
  for (const auto& e : detail::field_of<json>(j, "comult_table"))
    d.comult_table.at(detail::field_of<int>(e, "j")) = e.at("terms").get<std::vector<std::pair<int, int>>>();
  for (const auto& v : detail::field_of<json>(j, "antipode")) d.antipode.push_back(vec(v));
  return d;
}

/// matrix[j][i] is the coefficient vector of z_j(x^i) in the basis 1, x, ..., x^{q-1}.
inline json to_json(const ActionTable& at) {
  json matrix = json::array();
  for (int j = 0; j < at.q; ++j) {
    json row = json::array();
    for (int i = 0; i < at.q; ++i) {
      json coeffs = json::array();
      for (int e = 0; e < at.q; ++e) coeffs.push_back(at.at(j, i).coefficient(ExpVec{e}).to_string());
      row.push_back(coeffs);
    }
    matrix.push_back(row);
  }
  return json{{"schema_version", kSchemaVersion},
              {"hopf", at.coaction.hopf.label()},
              {"field", to_json(at.coaction.hopf.field)},
              {"b", at.coaction.ext.b().to_string()},
              {"dimension", at.q},
              {"matrix", matrix}};
}

/// entries[j][i] = z_j(x^i) rebuilt in K[x]/(x^q - b).
inline std::vector<std::vector<TruncElement>> action_from_json(const json& j) {
  Field field = field_from_json(detail::field_of<json>(j, "field"));
  const int q = detail::field_of<int>(j, "dimension");
  RatFunc b = parse_ratfunc(field, detail::field_of<std::string>(j, "b"));
  AlgebraPtr L = make_algebra(field, {{"x", 0, q, b}});
  std::vector<std::vector<TruncElement>> out;
  for (const auto& row : detail::field_of<json>(j, "matrix")) {
    std::vector<TruncElement> r;
    for (const auto& coeffs : row) {
      TruncElement e(L);
      for (std::size_t k = 0; k < coeffs.size(); ++k)
        e += TruncElement::monomial(L, ExpVec{static_cast<std::int64_t>(k)}, parse_ratfunc(field, coeffs[k].get<std::string>()));
      r.push_back(std::move(e));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hopflab

#pragma once

// Primitive (and modular) purely inseparable extensions L = K(x), x^{p^n} = b,
// the coactions α: L → L⊗H, and the invertibility certificates for
// γ(a⊗b) = (a⊗1)α(b).

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/error.hpp"
#include "hopflab/hopf.hpp"
#include "hopflab/linalg.hpp"
#include "hopflab/ratfunc.hpp"
#include "hopflab/report.hpp"
#include "hopflab/trunc.hpp"

namespace hopflab {

/// NotInvertible / NotGalois failures carry the kernel vector that witnesses them.
class KernelError : public Error {
 public:
  KernelError(ErrorKind kind, const std::string& what, std::vector<std::string> kernel)
      : Error(kind, what), kernel_(std::move(kernel)) {}
  const std::vector<std::string>& kernel() const { return kernel_; }

 private:
  std::vector<std::string> kernel_;  // "coefficient·basis element" entries
};

struct ExtGen {
  std::string name;
  int n = 0;
  RatFunc b;
};

struct PrimitiveExtension {
  Field field;
  std::vector<ExtGen> gens;

  int n() const { return gens.at(0).n; }
  const RatFunc& b() const { return gens.at(0).b; }
  std::uint64_t degree() const {
    std::uint64_t deg = 1;
    for (const auto& g : gens) deg *= static_cast<std::uint64_t>(ipow(field.p, g.n));
    return deg;
  }
};

/// L = K(x) with x^{p^n} = b; b must lie in K but not in K^p.
inline PrimitiveExtension make_extension(const Field& field, const RatFunc& b_in, int n, std::string name = "x") {
  if (n < 1) throw Error(ErrorKind::InvalidParameters, "n must be positive");
  RatFunc b = lift(b_in, field);
  if (b.is_zero()) throw Error(ErrorKind::InvalidParameters, "b must be nonzero");
  if (!in_base_field(b)) throw Error(ErrorKind::NotInBaseField, "b = " + b.to_string() + " is not in K");
  if (auto c = is_pth_power_in_K(b))
    throw Error(ErrorKind::NotPrimitive, "b = " + b.to_string() + " is the p-th power of " + c->to_string());
  return PrimitiveExtension{field, {ExtGen{std::move(name), n, std::move(b)}}};
}

/// L_1 ⊗ ... ⊗ L_s. Primitivity of each factor is checked by make_extension;
/// linear disjointness is the caller's responsibility.
inline PrimitiveExtension modular_extension(const std::vector<PrimitiveExtension>& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidParameters, "empty modular extension");
  PrimitiveExtension out{parts[0].field, {}};
  for (const auto& e : parts) {
    require_same_field(out.field, e.field);
    for (const auto& g : e.gens) out.gens.push_back(g);
  }
  return out;
}

inline AlgebraPtr extension_algebra(const PrimitiveExtension& ext, const Field& field) {
  std::vector<TruncVar> vars;
  for (const auto& g : ext.gens) vars.push_back({g.name, 0, ipow(field.p, g.n), lift(g.b, field)});
  return make_algebra(field, std::move(vars));
}

struct CoactionData {
  HopfAlgebraData hopf;
  PrimitiveExtension ext;
  std::int64_t i = 1;
  AlgebraPtr L, LH, LHH, LL;
  /// Image of the chosen generator x^i (monogenic case) in L⊗H.
  std::optional<TruncElement> alpha_xi;
  /// α on each generator of L; empty when x^i does not generate L.
  std::vector<TruncElement> alpha;
  /// Generator of L paired with each H generator for the triangular certificate,
  /// with its image under α.
  std::vector<TruncElement> cert_gens;
  std::vector<TruncElement> cert_images;

  int l_gens() const { return L->num_vars(); }
};

namespace detail {

inline void setup_algebras(CoactionData& c) {
  const Field& field = c.hopf.field;
  c.L = extension_algebra(c.ext, field);
  c.LH = tensor_algebra({c.L, c.hopf.H});
  c.LHH = tensor_algebra({c.L, c.hopf.H, c.hopf.H});
  c.LL = tensor_algebra({c.L, c.L});
}

inline std::int64_t modular_inverse(std::int64_t a, std::int64_t m) {
  for (std::int64_t x = 1; x < m; ++x)
    if ((a * x) % m == 1) return x;
  throw Error(ErrorKind::BadIndex, std::to_string(a) + " is not invertible mod " + std::to_string(m));
}

inline TruncElement l_monomial(const AlgebraPtr& alg, int var, std::int64_t e) {
  ExpVec ex(alg->num_vars(), 0);
  ex[var] = e;
  return TruncElement::monomial(alg, ex, RatFunc(alg->field(), 1));
}

inline void require_coefficients_in_K(const TruncElement& e, const std::string& what) {
  for (const auto& [idx, c] : e.terms())
    if (!in_base_field(c))
      throw Error(ErrorKind::BaseFieldViolation, "coefficient " + c.to_string() + " of " + what + " is not in K");
}

/// α_i(x^i) = S_d((f_d x_i^{p^{dr}}⊗1, ..., x_i⊗1); (1⊗f_d t^{p^{dr}}, ..., 1⊗t)).
inline TruncElement coaction_image(const CoactionData& c, const TruncElement& xi_left) {
  const auto& h = c.hopf;
  auto sys = witt_system(h.field.p, h.d);
  TruncElement t = TruncElement::generator(c.LH, c.l_gens());
  auto left = witt_arguments(xi_left, h.f_seq, h.r);
  auto right = witt_arguments(t, h.f_seq, h.r);
  return eval_addition_poly(*sys, h.d, left, right);
}

inline CoactionData coaction_common(const HopfAlgebraData& h, const PrimitiveExtension& ext, std::int64_t i) {
  if (h.kind != HopfKind::Monogenic && h.kind != HopfKind::Primitive)
    throw Error(ErrorKind::InvalidParameters, "single-generator coaction needs a monogenic or primitive H");
  if (ext.gens.size() != 1) throw Error(ErrorKind::ShapeMismatch, "extension must have exactly one generator");
  if (ext.n() != h.n)
    throw Error(ErrorKind::ShapeMismatch, "[L:K] = p^" + std::to_string(ext.n()) + " but dim H = p^" + std::to_string(h.n));
  CoactionData c{h, ext, i, {}, {}, {}, {}, std::nullopt, {}, {}, {}};
  setup_algebras(c);
  return c;
}

}  // namespace detail

/// α_i for 1 ≤ i < p^n with gcd(i, p) = 1; α itself is recovered on x from
/// x = (x^i)^{i'} b^{-m}, where i·i' = 1 + m p^n.
inline CoactionData build_coaction(const HopfAlgebraData& h, const PrimitiveExtension& ext, std::int64_t i = 1) {
  const std::int64_t p = h.field.p;
  const std::int64_t q = ipow(p, h.n);
  if (i < 1 || i >= q) throw Error(ErrorKind::BadIndex, "i = " + std::to_string(i) + " outside 1..p^n-1");
  if (i % p == 0) throw Error(ErrorKind::BadIndex, "p divides i = " + std::to_string(i));
  CoactionData c = detail::coaction_common(h, ext, i);
  const RatFunc b = c.L->vars()[0].quotient.value();

  TruncElement xi = detail::l_monomial(c.LH, 0, i);
  TruncElement a_xi = detail::coaction_image(c, xi);
  detail::require_coefficients_in_K(a_xi, "α(x^" + std::to_string(i) + ")");
  TruncElement top = a_xi.pow(static_cast<std::uint64_t>(q));
  if (!(top == TruncElement::constant(c.LH, b.pow(i))))
    throw Error(ErrorKind::NotWellDefined, "α(x_i)^{p^n} differs from b^i⊗1");

  const std::int64_t ip = detail::modular_inverse(i % q, q);
  const std::int64_t m = (i * ip - 1) / q;
  TruncElement a_x = a_xi.pow(static_cast<std::uint64_t>(ip)).scaled(b.pow(-m));
  if (!(a_x.pow(static_cast<std::uint64_t>(q)) == TruncElement::constant(c.LH, b)))
    throw Error(ErrorKind::NotWellDefined, "α(x)^{p^n} differs from b⊗1");
  c.alpha_xi = a_xi;
  c.alpha = {a_x};
  c.cert_gens = {detail::l_monomial(c.L, 0, i)};
  c.cert_images = {a_xi};
  return c;
}

/// The same formula with every precondition on i skipped, for negative controls.
/// When p | i the coaction on x itself is not available.
inline CoactionData build_coaction_unchecked(const HopfAlgebraData& h, const PrimitiveExtension& ext, std::int64_t i) {
  CoactionData c = detail::coaction_common(h, ext, i);
  TruncElement a_xi = detail::coaction_image(c, detail::l_monomial(c.LH, 0, i));
  c.alpha_xi = a_xi;
  if (std::gcd(i, h.field.p) == 1) {
    const std::int64_t q = ipow(h.field.p, h.n);
    const std::int64_t ip = detail::modular_inverse(i % q, q);
    const std::int64_t m = (i * ip - 1) / q;
    c.alpha = {a_xi.pow(static_cast<std::uint64_t>(ip)).scaled(c.L->vars()[0].quotient->pow(-m))};
  }
  c.cert_gens = {detail::l_monomial(c.L, 0, i)};
  c.cert_images = {a_xi};
  return c;
}

/// Same coaction data with α(x) replaced (negative controls).
inline CoactionData with_alpha(const CoactionData& base, std::vector<TruncElement> alpha) {
  CoactionData c = base;
  c.alpha = std::move(alpha);
  c.cert_images = c.alpha;
  c.cert_gens.clear();
  for (int k = 0; k < c.l_gens(); ++k) c.cert_gens.push_back(TruncElement::generator(c.L, k));
  c.alpha_xi.reset();
  return c;
}

/// Factorwise coaction of H_1 ⊗ ... ⊗ H_s on L_1 ⊗ ... ⊗ L_s (i = 1 on each).
inline CoactionData tensor_galois(const HopfAlgebraData& h, const std::vector<PrimitiveExtension>& exts) {
  std::vector<HopfAlgebraData> parts = h.kind == HopfKind::Tensor ? h.factors : std::vector<HopfAlgebraData>{h};
  if (parts.size() != exts.size())
    throw Error(ErrorKind::ShapeMismatch, std::to_string(parts.size()) + " Hopf factors but " +
                                              std::to_string(exts.size()) + " extensions");
  if (parts.size() == 1) return build_coaction(parts[0], exts[0], 1);
  CoactionData c{h, modular_extension(exts), 1, {}, {}, {}, {}, std::nullopt, {}, {}, {}};
  detail::setup_algebras(c);
  const int Lg = c.l_gens();
  int l_off = 0, h_off = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    CoactionData local = build_coaction(parts[j], exts[j], 1);
    const int lg = local.l_gens(), hg = parts[j].num_generators();
    std::vector<int> map = detail::iota_map(lg, l_off);
    auto hmap = detail::iota_map(hg, Lg + h_off);
    map.insert(map.end(), hmap.begin(), hmap.end());
    for (const auto& a : local.alpha) c.alpha.push_back(embed_vars(a, c.LH, map));
    l_off += lg;
    h_off += hg;
  }
  c.cert_images = c.alpha;
  for (int k = 0; k < Lg; ++k) c.cert_gens.push_back(TruncElement::generator(c.L, k));
  return c;
}

/// The two-generator example: L = K(x, y), x^{p^2} = T_1, y^{p^2} = T_2,
/// α(x) = S_1((y^p⊗1, x⊗1); (1⊗u^p, 1⊗t)), α(y) = y⊗1 + 1⊗u.
inline CoactionData bigenic_coaction(const HopfAlgebraData& h) {
  if (h.kind != HopfKind::Bigenic) throw Error(ErrorKind::InvalidParameters, "needs the two-generator example");
  const Field& field = h.field;
  auto ex = make_extension(field, RatFunc::variable(field, 0), 2, "x");
  auto ey = make_extension(field, RatFunc::variable(field, 1), 2, "y");
  CoactionData c{h, modular_extension({ex, ey}), 1, {}, {}, {}, {}, std::nullopt, {}, {}, {}};
  detail::setup_algebras(c);
  auto x = TruncElement::generator(c.LH, 0), y = TruncElement::generator(c.LH, 1);
  auto t = TruncElement::generator(c.LH, 2), u = TruncElement::generator(c.LH, 3);
  auto sys = witt_system(field.p, 1);
  c.alpha = {eval_addition_poly(*sys, 1, {y.pow(field.p), x}, {u.pow(field.p), t}), y + u};
  c.cert_images = c.alpha;
  for (int k = 0; k < 2; ++k) c.cert_gens.push_back(TruncElement::generator(c.L, k));
  return c;
}

/// Coassociativity (α⊗1)α = (1⊗Δ)α, the counit law mult(1⊗ε)α = id and
/// α(x)^{p^n} = b⊗1 on generators; optionally on every basis monomial of L.
inline Report verify_comodule(const CoactionData& c, bool full_basis = false) {
  Report rep;
  if (c.alpha.empty()) {
    rep.add("coaction defined on generators", false, "x^i does not generate L");
    return rep;
  }
  const auto& h = c.hopf;
  const int Lg = c.l_gens(), G = h.num_generators();
  std::vector<int> lh_into_lhh = detail::iota_map(Lg + G, 0);
  std::vector<int> hh_into_lhh = detail::iota_map(2 * G, Lg);

  std::vector<TruncElement> lhs_images, rhs_images, counit_images;
  for (int k = 0; k < Lg; ++k) {
    lhs_images.push_back(embed_vars(c.alpha[k], c.LHH, lh_into_lhh));
    rhs_images.push_back(TruncElement::generator(c.LHH, k));
    counit_images.push_back(TruncElement::generator(c.L, k));
  }
  for (int k = 0; k < G; ++k) {
    lhs_images.push_back(TruncElement::generator(c.LHH, Lg + G + k));
    rhs_images.push_back(embed_vars(h.delta[k], c.LHH, hh_into_lhh));
    counit_images.push_back(TruncElement::constant(c.L, h.counit[k]));
  }

  auto check = [&](const std::string& tag, const TruncElement& y, const TruncElement& ay, bool all) {
    TruncElement a = apply_algebra_map(ay, c.LHH, lhs_images), b = apply_algebra_map(ay, c.LHH, rhs_images);
    bool ok = a == b;
    if (all || !ok) rep.add("coassociativity " + tag, ok, ok ? "" : clip((a - b).to_string()));
    TruncElement e = apply_algebra_map(ay, c.L, counit_images);
    ok = e == y;
    if (all || !ok) rep.add("counit " + tag, ok, ok ? "" : clip((e - y).to_string()));
  };

  for (int k = 0; k < Lg; ++k) {
    const auto& var = c.L->vars()[k];
    const std::string tag = "(" + var.name + ")";
    check(tag, TruncElement::generator(c.L, k), c.alpha[k], true);
    TruncElement top = c.alpha[k].pow(static_cast<std::uint64_t>(var.order));
    bool ok = top == TruncElement::constant(c.LH, *var.quotient);
    rep.add("well-defined " + tag, ok, ok ? "" : clip(top.to_string()));
  }
  if (full_basis) {
    std::size_t before = rep.checks.size();
    for (const auto& m : basis_monomials(c.L)) check("(" + m.to_string() + ")", m, apply_algebra_map(m, c.LH, c.alpha), false);
    rep.add("full basis (" + std::to_string(c.L->dimension()) + " monomials)", rep.checks.size() == before);
  }
  return rep;
}

/// γ on L⊗L as the algebra map x⊗1 ↦ x⊗1, 1⊗x ↦ α(x).
inline TruncElement apply_gamma(const CoactionData& c, const TruncElement& e) {
  if (c.alpha.empty()) throw Error(ErrorKind::InvalidParameters, "γ needs α on the generators of L");
  std::vector<TruncElement> images;
  for (int k = 0; k < c.l_gens(); ++k) images.push_back(TruncElement::generator(c.LH, k));
  for (const auto& a : c.alpha) images.push_back(a);
  return apply_algebra_map(e, c.LH, images);
}

enum class CertMode { Triangular, FullMatrix };

struct LeadingEntry {
  std::vector<std::int64_t> index;  // exponent of (1⊗x − x⊗1) per generator
  std::string leading;              // the 1⊗t^k term found
  std::optional<std::int64_t> next_degree;  // smallest H-degree among the other terms
  bool ok = false;
};

struct GaloisCertificate {
  CertMode mode = CertMode::Triangular;
  bool invertible = false;
  std::vector<LeadingEntry> table;  // triangular mode
  std::size_t dimension = 0;        // p^{2n}
  std::size_t rank = 0;             // full mode: rank of the γ image family
  std::size_t domain_rank = 0;      // full mode: rank of the domain family
};

namespace detail {

inline std::int64_t h_degree(const ExpVec& e, int Lg) {
  std::int64_t s = 0;
  for (std::size_t k = Lg; k < e.size(); ++k) s += e[k];
  return s;
}

inline std::vector<std::string> describe_kernel(const std::vector<RatFunc>& v, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) out.push_back("(" + v[j].to_string() + ")·" + names[j]);
  return out;
}

/// Multi-indices 0 ≤ k_j < orders[j], first index most significant.
inline std::vector<std::vector<std::int64_t>> multi_indices(const std::vector<std::int64_t>& orders) {
  std::vector<std::vector<std::int64_t>> out{{}};
  for (auto o : orders) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& prefix : out)
      for (std::int64_t k = 0; k < o; ++k) {
        auto v = prefix;
        v.push_back(k);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

/// Confirms that the chosen generators' monomials form a K-basis of L.
inline void check_generators(const CoactionData& c) {
  const int Lg = c.l_gens();
  std::vector<std::int64_t> orders;
  for (const auto& v : c.L->vars()) orders.push_back(v.order);
  auto idx = multi_indices(orders);
  SparseMatrix M(c.hopf.field, c.L->dimension(), idx.size());
  std::vector<std::string> names;
  for (std::size_t col = 0; col < idx.size(); ++col) {
    TruncElement m = TruncElement::one(c.L);
    for (int k = 0; k < Lg; ++k) m = m * c.cert_gens[k].pow(static_cast<std::uint64_t>(idx[col][k]));
    for (const auto& [row, coef] : m.terms()) M.set(row, col, coef);
    std::string nm;
    for (int k = 0; k < Lg; ++k)
      nm += (k ? "*" : "") + std::string("(") + c.cert_gens[k].to_string() + ")^" + std::to_string(idx[col][k]);
    names.push_back(nm);
  }
  auto res = rank_and_kernel(M);
  if (res.rank < idx.size())
    throw KernelError(ErrorKind::NotInvertible,
                      "powers of the chosen generator span only rank " + std::to_string(res.rank) + " of " +
                          std::to_string(idx.size()) + " in L",
                      describe_kernel(*res.kernel, names));
}

}  // namespace detail

/// Triangular mode: for every multi-index k, γ(Π(1⊗x_j − x_j⊗1)^{k_j}) must be
/// 1⊗t^k plus terms of strictly larger H-degree. Full mode: rank of the
/// p^{2n} images γ(x^a⊗x^b) in the basis {x^a⊗t^c} (x-degree major).
inline GaloisCertificate galois_certificate(const CoactionData& c, CertMode mode = CertMode::Triangular) {
  const auto& h = c.hopf;
  const int Lg = c.l_gens(), G = h.num_generators();
  if (Lg != G) throw Error(ErrorKind::ShapeMismatch, "L and H have different numbers of generators");
  GaloisCertificate cert;
  cert.mode = mode;
  cert.dimension = static_cast<std::size_t>(c.L->dimension() * h.dimension());

  std::vector<std::int64_t> orders;
  for (const auto& v : c.L->vars()) orders.push_back(v.order);
  auto indices = detail::multi_indices(orders);

  if (mode == CertMode::Triangular) {
    detail::check_generators(c);
    std::vector<TruncElement> w;
    for (int k = 0; k < Lg; ++k) {
      TruncElement g_left = embed_vars(c.cert_gens[k], c.LH, detail::iota_map(Lg, 0));
      w.push_back(c.cert_images[k] - g_left);
    }
    std::vector<std::vector<TruncElement>> powers(Lg);
    for (int k = 0; k < Lg; ++k) {
      powers[k].push_back(TruncElement::one(c.LH));
      for (std::int64_t e = 1; e < orders[k]; ++e) powers[k].push_back(powers[k].back() * w[k]);
    }
    bool all_ok = true;
    for (const auto& idx : indices) {
      TruncElement v = TruncElement::one(c.LH);
      for (int k = 0; k < Lg; ++k) v = v * powers[k][idx[k]];
      ExpVec lead(Lg + G, 0);
      std::int64_t deg = 0;
      for (int k = 0; k < G; ++k) {
        lead[Lg + k] = idx[k];
        deg += idx[k];
      }
      LeadingEntry entry;
      entry.index = idx;
      RatFunc lc = v.coefficient(lead);
      entry.leading = lc.is_zero() ? "0" : TruncElement::monomial(c.LH, lead, lc).to_string();
      bool ok = lc.is_one();
      const std::uint64_t lead_idx = c.LH->encode(lead);
      for (const auto& [key, coef] : v.terms()) {
        if (key == lead_idx) continue;
        std::int64_t dk = detail::h_degree(c.LH->decode(key), Lg);
        if (!entry.next_degree || dk < *entry.next_degree) entry.next_degree = dk;
        if (dk <= deg) ok = false;
      }
      entry.ok = ok;
      all_ok = all_ok && ok;
      cert.table.push_back(std::move(entry));
    }
    cert.invertible = all_ok;
    if (!all_ok) throw Error(ErrorKind::NotInvertible, "γ fails the triangular leading-term shape");
    return cert;
  }

  // Full mode: domain family {g^a ⊗ g^b} and its images (a major, b minor).
  std::vector<TruncElement> gen_pows_left;  // Π g_j^{a_j} in L
  for (const auto& idx : indices) {
    TruncElement m = TruncElement::one(c.L);
    for (int k = 0; k < Lg; ++k) m = m * c.cert_gens[k].pow(static_cast<std::uint64_t>(idx[k]));
    gen_pows_left.push_back(m);
  }
  std::vector<TruncElement> image_pows;  // Π α(g_j)^{b_j} in L⊗H
  for (const auto& idx : indices) {
    TruncElement m = TruncElement::one(c.LH);
    for (int k = 0; k < Lg; ++k) m = m * c.cert_images[k].pow(static_cast<std::uint64_t>(idx[k]));
    image_pows.push_back(m);
  }
  const std::size_t D = cert.dimension;
  SparseMatrix dom(h.field, D, D), img(h.field, D, D);
  std::vector<std::string> names;
  std::vector<int> right_slot = detail::iota_map(Lg, Lg);
  std::vector<int> left_slot = detail::iota_map(Lg, 0);
  std::vector<int> left_in_lh = detail::iota_map(Lg, 0);
  std::size_t col = 0;
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b, ++col) {
      TruncElement d = embed_vars(gen_pows_left[a], c.LL, left_slot) * embed_vars(gen_pows_left[b], c.LL, right_slot);
      for (const auto& [row, coef] : d.terms()) dom.set(row, col, coef);
      TruncElement g = embed_vars(gen_pows_left[a], c.LH, left_in_lh) * image_pows[b];
      for (const auto& [row, coef] : g.terms()) img.set(row, col, coef);
      names.push_back(gen_pows_left[a].to_string() + "⊗" + gen_pows_left[b].to_string());
    }
  auto dres = rank_and_kernel(dom);
  cert.domain_rank = dres.rank;
  if (dres.rank < D)
    throw KernelError(ErrorKind::NotInvertible, "domain family has rank " + std::to_string(dres.rank),
                      detail::describe_kernel(*dres.kernel, names));
  auto ires = rank_and_kernel(img);
  cert.rank = ires.rank;
  if (ires.rank < D)
    throw KernelError(ErrorKind::NotInvertible, "γ has rank " + std::to_string(ires.rank) + " < " + std::to_string(D),
                      detail::describe_kernel(*ires.kernel, names));
  cert.invertible = true;
  return cert;
}

inline std::int64_t euler_phi_prime_power(std::int64_t p, int n) { return ipow(p, n - 1) * (p - 1); }

struct CoactionEnumeration {
  std::vector<std::int64_t> indices;
  std::size_t certified = 0;
  std::int64_t expected = 0;
  bool full_matrix_checked = false;
  bool ok() const { return static_cast<std::int64_t>(certified) == expected && expected == static_cast<std::int64_t>(indices.size()); }
};

/// Every α_i, 1 ≤ i < p^n, gcd(i, p) = 1, with comodule and triangular
/// certificates (and full-matrix ones on request).
inline CoactionEnumeration enumerate_coactions(const HopfAlgebraData& h, const PrimitiveExtension& ext,
                                               bool full_matrix = false) {
  if (h.kind != HopfKind::Monogenic) throw Error(ErrorKind::InvalidParameters, "enumeration needs a monogenic H");
  CoactionEnumeration out;
  out.expected = euler_phi_prime_power(h.field.p, h.n);
  out.full_matrix_checked = full_matrix;
  const std::int64_t q = ipow(h.field.p, h.n);
  for (std::int64_t i = 1; i < q; ++i) {
    if (i % h.field.p == 0) continue;
    out.indices.push_back(i);
    CoactionData c = build_coaction(h, ext, i);
    if (!verify_comodule(c).passed()) continue;
    if (!galois_certificate(c, CertMode::Triangular).invertible) continue;
    if (full_matrix && !galois_certificate(c, CertMode::FullMatrix).invertible) continue;
    ++out.certified;
  }
  if (static_cast<std::int64_t>(out.indices.size()) != out.expected)
    throw Error(ErrorKind::InvalidParameters, "coprime index count differs from φ(p^n)");
  return out;
}

/// For y = g·x: (1⊗φ)α'(y) = g·α(x), where α' is the coaction of
/// H' = H_{n,r,f·g^{1-p^{r+1}}} on L = K(y) and φ: H' → H, t' ↦ g·t.
inline bool verify_change_of_generator(const CoactionData& c, const RatFunc& g_in) {
  const auto& h = c.hopf;
  RatFunc g = lift(g_in, h.field);
  Substitution sub = substitute_generator(h, g);
  if (!sub.verified) return false;
  PrimitiveExtension ext_y = make_extension(h.field, c.ext.b() * g.pow(ipow(h.field.p, h.n)), h.n, "y");
  CoactionData cy = build_coaction(sub.hopf, ext_y, 1);
  // L = K(y) → K(x): y ↦ g·x, and H' → H: t' ↦ g·t.
  std::vector<TruncElement> images = {TruncElement::generator(c.LH, 0).scaled(g),
                                      TruncElement::generator(c.LH, 1).scaled(g)};
  TruncElement lhs = apply_algebra_map(cy.alpha[0], c.LH, images);
  return lhs == c.alpha[0].scaled(g);
}

}  // namespace hopflab

#pragma once

// The Hopf algebras H_{n,r,f} = K[t]/(t^{p^n}) with Witt-vector comultiplication,
// the primitive (Chase) algebra, tensor products and the two-generator example.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/error.hpp"
#include "hopflab/ratfunc.hpp"
#include "hopflab/report.hpp"
#include "hopflab/trunc.hpp"
#include "hopflab/witt.hpp"

namespace hopflab {

enum class HopfKind { Monogenic, Primitive, Tensor, Bigenic, Custom };

inline std::string to_string(HopfKind k) {
  switch (k) {
    case HopfKind::Monogenic: return "monogenic";
    case HopfKind::Primitive: return "primitive";
    case HopfKind::Tensor: return "tensor";
    case HopfKind::Bigenic: return "bigenic";
    case HopfKind::Custom: return "custom";
  }
  return "unknown";
}

struct HopfAlgebraData {
  Field field;
  HopfKind kind = HopfKind::Custom;
  int n = 0;
  int r = 0;
  int d = 0;
  std::optional<RatFunc> f;
  std::vector<RatFunc> f_seq;
  std::vector<HopfAlgebraData> factors;

  AlgebraPtr H, HH, HHH;
  std::vector<TruncElement> delta;     // Δ(g_k) in H⊗H
  std::vector<RatFunc> counit;         // ε(g_k)
  std::vector<TruncElement> antipode;  // λ(g_k) in H
  bool antipode_is_negation = true;    // λ(g_k) = -g_k for every k

  int num_generators() const { return H->num_vars(); }
  std::uint64_t dimension() const { return H->dimension(); }
  TruncElement generator(int k = 0) const { return TruncElement::generator(H, k); }

  std::string label() const {
    switch (kind) {
      case HopfKind::Monogenic:
        return "H_{" + std::to_string(n) + "," + std::to_string(r) + "," + f->to_string() + "}";
      case HopfKind::Primitive: return "primitive(" + std::to_string(n) + ")";
      case HopfKind::Bigenic: return "bigenic(" + std::to_string(field.p) + ")";
      case HopfKind::Tensor: {
        std::string s;
        for (const auto& h : factors) s += (s.empty() ? "" : " ⊗ ") + h.label();
        return s;
      }
      case HopfKind::Custom: return "custom";
    }
    return "?";
  }
};

/// d = ⌈n/r⌉ - 1.
inline int witt_depth(int n, int r) {
  if (r <= 0) throw Error(ErrorKind::InvalidParameters, "r must be positive");
  return (n + r - 1) / r - 1;
}

namespace detail {

inline std::vector<int> iota_map(int count, int start) {
  std::vector<int> m(count);
  for (int i = 0; i < count; ++i) m[i] = start + i;
  return m;
}

/// mult(left ⊗ right): H⊗H → H for maps given by generator images in H.
inline TruncElement mult_pair(const HopfAlgebraData& h, const TruncElement& e, const std::vector<TruncElement>& left,
                              const std::vector<TruncElement>& right) {
  std::vector<TruncElement> images = left;
  images.insert(images.end(), right.begin(), right.end());
  return apply_algebra_map(e, h.H, images);
}

inline std::vector<TruncElement> identity_images(const HopfAlgebraData& h) {
  std::vector<TruncElement> out;
  for (int k = 0; k < h.num_generators(); ++k) out.push_back(h.generator(k));
  return out;
}

inline std::vector<TruncElement> counit_images(const HopfAlgebraData& h) {
  std::vector<TruncElement> out;
  for (const auto& c : h.counit) out.push_back(TruncElement::constant(h.H, c));
  return out;
}

/// ε extended multiplicatively to an element of H.
inline RatFunc apply_counit(const HopfAlgebraData& h, const TruncElement& e) {
  TruncElement v = apply_algebra_map(e, h.H, counit_images(h));
  return v.coefficient(ExpVec(h.H->num_vars(), 0));
}

}  // namespace detail

/// Solves mult(1⊗λ)Δ(g) = ε(g) for λ by successive correction starting at
/// λ(g) = -g. Each pass raises the t-adic order of the error, so the loop
/// ends within the nilpotency bound.
inline std::vector<TruncElement> solve_antipode(const HopfAlgebraData& h) {
  std::vector<TruncElement> lambda;
  for (int k = 0; k < h.num_generators(); ++k) lambda.push_back(-h.generator(k));
  std::int64_t bound = 2;
  for (const auto& v : h.H->vars()) bound += v.order;
  const auto left = detail::identity_images(h);
  for (std::int64_t iter = 0; iter <= bound; ++iter) {
    bool done = true;
    std::vector<TruncElement> next = lambda;
    for (int k = 0; k < h.num_generators(); ++k) {
      TruncElement residual = detail::mult_pair(h, h.delta[k], left, lambda) - TruncElement::constant(h.H, h.counit[k]);
      if (!residual.is_zero()) {
        done = false;
        next[k] = lambda[k] - residual;
      }
    }
    if (done) return lambda;
    lambda = std::move(next);
  }
  throw Error(ErrorKind::NotWellDefined, "antipode iteration did not stabilise");
}

/// Fills H⊗H, H⊗H⊗H and the antipode once H, delta and counit are set.
inline void finish_hopf(HopfAlgebraData& h) {
  if (static_cast<int>(h.delta.size()) != h.num_generators() || static_cast<int>(h.counit.size()) != h.num_generators())
    throw Error(ErrorKind::InvalidParameters, "one Δ and one ε image per generator required");
  if (!h.HH) h.HH = tensor_algebra({h.H, h.H});
  if (!h.HHH) h.HHH = tensor_algebra({h.H, h.H, h.H});
  h.antipode = solve_antipode(h);
  h.antipode_is_negation = true;
  for (int k = 0; k < h.num_generators(); ++k)
    h.antipode_is_negation = h.antipode_is_negation && h.antipode[k] == -h.generator(k);
}

/// (f_1, ..., f_d) with f_1 = f^{1/p}, f_i = f^{p^{-i}} f_{i-1}^{p^r}, cross-checked
/// against the closed form f_i = (f^{E_i})^{p^{-i}}, E_i = Σ_{j<i} p^{j(r+1)}.
inline std::vector<RatFunc> f_sequence(const RatFunc& f, int r, int d) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidParameters, "f must be nonzero");
  const std::int64_t p = f.field().p;
  std::vector<RatFunc> seq;
  for (int i = 1; i <= d; ++i) {
    RatFunc fi = (i == 1) ? p_root(f, 1) : p_root(f, i) * seq.back().pow(ipow(p, r));
    std::int64_t E = 0;
    for (int j = 0; j < i; ++j) E += ipow(p, j * (r + 1));
    if (!(p_root(f.pow(E), i) == fi))
      throw Error(ErrorKind::InvalidParameters, "f_" + std::to_string(i) + " disagrees with its closed form");
    if (!in_base_field(fi.pow(ipow(p, i))))
      throw Error(ErrorKind::BaseFieldViolation, "f_" + std::to_string(i) + "^{p^" + std::to_string(i) + "} not in K");
    seq.push_back(std::move(fi));
  }
  return seq;
}

inline AlgebraPtr generator_algebra(const Field& field, const std::vector<std::pair<std::string, std::int64_t>>& gens) {
  std::vector<TruncVar> vars;
  for (const auto& [name, order] : gens) vars.push_back({name, 0, order, std::nullopt});
  return make_algebra(field, std::move(vars));
}

/// The Witt arguments (f_d g^{p^{dr}}, ..., f_1 g^{p^r}, g) for a generator image g.
inline std::vector<TruncElement> witt_arguments(const TruncElement& g, const std::vector<RatFunc>& f_seq, int r) {
  const int d = static_cast<int>(f_seq.size());
  const std::int64_t p = g.field().p;
  std::vector<TruncElement> out;
  for (int k = 0; k <= d; ++k) {
    int j = d - k;
    TruncElement v = g.pow(static_cast<std::uint64_t>(ipow(p, j * r)));
    out.push_back(j == 0 ? v : v.scaled(f_seq[j - 1]));
  }
  return out;
}

inline HopfAlgebraData primitive_hopf(const Field& field, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameters, "primitive(n) needs n >= 1");
  HopfAlgebraData h;
  h.field = field;
  h.kind = HopfKind::Primitive;
  h.n = n;
  h.H = generator_algebra(field, {{"t", ipow(field.p, n)}});
  h.HH = tensor_algebra({h.H, h.H});
  h.delta = {TruncElement::generator(h.HH, 0) + TruncElement::generator(h.HH, 1)};
  h.counit = {RatFunc(field)};
  finish_hopf(h);
  return h;
}

/// H_{n,r,f}. The field must have root depth at least d; f is lifted into it.
inline HopfAlgebraData build_hopf(const Field& field, int n, int r, const RatFunc& f_in) {
  if (!(0 < r && r < n)) throw Error(ErrorKind::InvalidParameters, "r must satisfy 0 < r < n");
  if (ipow(field.p, n) > 4096) throw Error(ErrorKind::InvalidParameters, "p^n too large");
  const int d = witt_depth(n, r);
  if (field.D < d)
    throw Error(ErrorKind::DepthExceeded, "root depth " + std::to_string(field.D) + " below d = " + std::to_string(d));
  RatFunc f = lift(f_in, field);
  if (f.is_zero()) throw Error(ErrorKind::InvalidParameters, "f must be nonzero");
  if (!in_base_field(f)) throw Error(ErrorKind::NotInBaseField, "f = " + f.to_string() + " is not in K");

  HopfAlgebraData h;
  h.field = field;
  h.kind = HopfKind::Monogenic;
  h.n = n;
  h.r = r;
  h.d = d;
  h.f = f;
  h.f_seq = f_sequence(f, r, d);
  h.H = generator_algebra(field, {{"t", ipow(field.p, n)}});
  h.HH = tensor_algebra({h.H, h.H});

  auto sys = witt_system(field.p, d);
  auto left = witt_arguments(TruncElement::generator(h.HH, 0), h.f_seq, r);
  auto right = witt_arguments(TruncElement::generator(h.HH, 1), h.f_seq, r);
  TruncElement delta = eval_addition_poly(*sys, d, left, right);
  for (const auto& [idx, c] : delta.terms())
    if (!in_base_field(c))
      throw Error(ErrorKind::BaseFieldViolation, "coefficient " + c.to_string() + " of Δ(t) is not in K");
  h.delta = {delta};
  h.counit = {RatFunc(field)};
  finish_hopf(h);
  return h;
}

/// A Hopf algebra from user-supplied Δ on generators (ε = 0 on generators).
inline HopfAlgebraData custom_hopf(const AlgebraPtr& H, std::vector<TruncElement> delta) {
  HopfAlgebraData h;
  h.field = H->field();
  h.kind = HopfKind::Custom;
  h.H = H;
  h.HH = tensor_algebra({H, H});
  for (auto& e : delta)
    if (!(*e.algebra() == *h.HH)) throw Error(ErrorKind::AlgebraMismatch, "Δ image outside H⊗H");
  h.delta = std::move(delta);
  h.counit.assign(H->num_vars(), RatFunc(h.field));
  h.HHH = tensor_algebra({H, H, H});
  // Custom data may not admit an antipode; keep -g and let verification report it.
  for (int k = 0; k < H->num_vars(); ++k) h.antipode.push_back(-h.generator(k));
  try {
    h.antipode = solve_antipode(h);
  } catch (const Error&) {
  }
  h.antipode_is_negation = true;
  for (int k = 0; k < H->num_vars(); ++k)
    h.antipode_is_negation = h.antipode_is_negation && h.antipode[k] == -h.generator(k);
  return h;
}

/// Same algebra data with Δ replaced; the antipode is kept as -g for the
/// negative controls.
inline HopfAlgebraData with_delta(const HopfAlgebraData& base, std::vector<TruncElement> delta) {
  HopfAlgebraData h = base;
  h.kind = HopfKind::Custom;
  h.delta = std::move(delta);
  h.antipode.clear();
  for (int k = 0; k < h.num_generators(); ++k) h.antipode.push_back(-h.generator(k));
  h.antipode_is_negation = true;
  return h;
}

inline HopfAlgebraData tensor_hopf(const std::vector<HopfAlgebraData>& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidParameters, "empty tensor product");
  for (const auto& h : parts) require_same_field(parts[0].field, h.field);
  if (parts.size() == 1) return parts[0];
  HopfAlgebraData h;
  h.field = parts[0].field;
  h.kind = HopfKind::Tensor;
  h.factors = parts;
  std::vector<std::pair<std::string, std::int64_t>> gens;
  for (const auto& part : parts)
    for (const auto& v : part.H->vars()) gens.emplace_back("t" + std::to_string(gens.size() + 1), v.order);
  h.H = generator_algebra(h.field, gens);
  h.HH = tensor_algebra({h.H, h.H});
  const int G = static_cast<int>(gens.size());
  int offset = 0;
  for (const auto& part : parts) {
    const int g = part.num_generators();
    std::vector<int> map = detail::iota_map(g, offset);
    auto right = detail::iota_map(g, G + offset);
    map.insert(map.end(), right.begin(), right.end());
    for (int k = 0; k < g; ++k) {
      h.delta.push_back(embed_vars(part.delta[k], h.HH, map));
      h.counit.push_back(part.counit[k]);
    }
    offset += g;
  }
  finish_hopf(h);
  return h;
}

/// K[t,u]/(t^{p^2}, u^{p^2}) with Δ(t) = S_1((u^p⊗1, t⊗1); (1⊗u^p, 1⊗t)),
/// Δ(u) = u⊗1 + 1⊗u.
inline HopfAlgebraData bigenic_example(const Field& field) {
  if (field.m < 2) throw Error(ErrorKind::InvalidParameters, "the two-generator example needs m >= 2");
  HopfAlgebraData h;
  h.field = field;
  h.kind = HopfKind::Bigenic;
  h.n = 2;
  const std::int64_t p = field.p;
  h.H = generator_algebra(field, {{"t", p * p}, {"u", p * p}});
  h.HH = tensor_algebra({h.H, h.H});
  auto t1 = TruncElement::generator(h.HH, 0), u1 = TruncElement::generator(h.HH, 1);
  auto t2 = TruncElement::generator(h.HH, 2), u2 = TruncElement::generator(h.HH, 3);
  auto sys = witt_system(p, 1);
  h.delta = {eval_addition_poly(*sys, 1, {u1.pow(p), t1}, {u2.pow(p), t2}), u1 + u2};
  h.counit = {RatFunc(field), RatFunc(field)};
  finish_hopf(h);
  return h;
}

/// t⊗1 + 1⊗t + f Σ_{ℓ=1}^{p-1} (ℓ!(p-ℓ)!)^{-1} t^{p^r ℓ}⊗t^{p^r(p-ℓ)}, for r = n-1.
inline TruncElement closed_form_delta(const HopfAlgebraData& h) {
  if (h.kind != HopfKind::Monogenic || h.r != h.n - 1)
    throw Error(ErrorKind::ScopeError, "closed form needs a monogenic algebra with r = n-1");
  const std::int64_t p = h.field.p;
  auto fp = h.field.fp();
  const std::int64_t q = ipow(p, h.r);
  TruncElement out = TruncElement::generator(h.HH, 0) + TruncElement::generator(h.HH, 1);
  for (std::int64_t l = 1; l <= p - 1; ++l) {
    Coef fact = 1;
    for (std::int64_t k = 2; k <= l; ++k) fact = fp.mul(fact, fp.reduce(k));
    for (std::int64_t k = 2; k <= p - l; ++k) fact = fp.mul(fact, fp.reduce(k));
    RatFunc c = h.f->scaled(fp.inv(fact));
    out += TruncElement::monomial(h.HH, ExpVec{q * l, q * (p - l)}, c);
  }
  return out;
}

struct HopfCheckOptions {
  bool full_basis = false;
  std::uint64_t full_basis_limit = 64;
};

/// Exact checks of coassociativity, both counit laws, the antipode law,
/// well-definedness and cocommutativity on generators, plus optionally every
/// basis monomial.
inline Report verify_hopf_axioms(const HopfAlgebraData& h, HopfCheckOptions opt = {}) {
  Report rep;
  const int G = h.num_generators();
  const auto id = detail::identity_images(h);
  const auto eps = detail::counit_images(h);

  // Δ⊗id and id⊗Δ as algebra maps H⊗H → H⊗H⊗H.
  std::vector<TruncElement> lhs_images, rhs_images;
  std::vector<int> first_two = detail::iota_map(2 * G, 0), last_two = detail::iota_map(2 * G, G);
  for (int k = 0; k < G; ++k) {
    lhs_images.push_back(embed_vars(h.delta[k], h.HHH, first_two));
    rhs_images.push_back(TruncElement::generator(h.HHH, k));
  }
  for (int k = 0; k < G; ++k) {
    lhs_images.push_back(TruncElement::generator(h.HHH, 2 * G + k));
    rhs_images.push_back(embed_vars(h.delta[k], h.HHH, last_two));
  }
  std::vector<TruncElement> swap_images;
  for (int k = 0; k < G; ++k) swap_images.push_back(TruncElement::generator(h.HH, G + k));
  for (int k = 0; k < G; ++k) swap_images.push_back(TruncElement::generator(h.HH, k));

  auto check_element = [&](const std::string& tag, const TruncElement& x, const TruncElement& dx, bool all) {
    TruncElement a = apply_algebra_map(dx, h.HHH, lhs_images), b = apply_algebra_map(dx, h.HHH, rhs_images);
    bool ok = a == b;
    if (all || !ok) rep.add("coassociativity " + tag, ok, ok ? "" : clip((a - b).to_string()));
    TruncElement r = detail::mult_pair(h, dx, id, eps);
    ok = r == x;
    if (all || !ok) rep.add("right counit " + tag, ok, ok ? "" : clip((r - x).to_string()));
    TruncElement l = detail::mult_pair(h, dx, eps, id);
    ok = l == x;
    if (all || !ok) rep.add("left counit " + tag, ok, ok ? "" : clip((l - x).to_string()));
    TruncElement s = detail::mult_pair(h, dx, id, h.antipode);
    TruncElement target = TruncElement::constant(h.H, detail::apply_counit(h, x));
    ok = s == target;
    if (all || !ok) rep.add("antipode " + tag, ok, ok ? "" : clip((s - target).to_string()));
    TruncElement sw = apply_algebra_map(dx, h.HH, swap_images);
    ok = sw == dx;
    if (all || !ok) rep.add("cocommutativity " + tag, ok, ok ? "" : clip((sw - dx).to_string()));
  };

  for (int k = 0; k < G; ++k) {
    const std::string tag = "(" + h.H->vars()[k].name + ")";
    check_element(tag, h.generator(k), h.delta[k], true);
    TruncElement top = h.delta[k].pow(static_cast<std::uint64_t>(h.H->vars()[k].order));
    rep.add("well-defined " + tag, top.is_zero(), top.is_zero() ? "" : clip(top.to_string()));
  }
  if (opt.full_basis && h.dimension() <= opt.full_basis_limit) {
    bool all_ok = true;
    std::size_t before = rep.checks.size();
    for (const auto& m : basis_monomials(h.H)) {
      TruncElement dm = apply_algebra_map(m, h.HH, h.delta);
      check_element("(" + m.to_string() + ")", m, dm, false);
    }
    all_ok = rep.checks.size() == before;
    rep.add("full basis (" + std::to_string(h.dimension()) + " monomials)", all_ok);
  }
  return rep;
}

/// φ: H1 → H2, t1 ↦ g·t2 is a coalgebra map iff (φ⊗φ)Δ1(t1) = g·Δ2(t2).
inline bool verify_generator_map(const HopfAlgebraData& h1, const HopfAlgebraData& h2, const RatFunc& g) {
  if (h1.num_generators() != 1 || h2.num_generators() != 1 || h1.dimension() != h2.dimension()) return false;
  std::vector<TruncElement> images = {TruncElement::generator(h2.HH, 0).scaled(g),
                                      TruncElement::generator(h2.HH, 1).scaled(g)};
  return apply_algebra_map(h1.delta[0], h2.HH, images) == h2.delta[0].scaled(g);
}

struct Substitution {
  HopfAlgebraData hopf;  // H_{n,r,f·g^{1-p^{r+1}}}
  RatFunc g;             // its generator maps to g·t
  bool verified = false;
};

/// Rewrites H_{n,r,f} in the generator u = g·t.
inline Substitution substitute_generator(const HopfAlgebraData& h, const RatFunc& g_in) {
  if (h.kind != HopfKind::Monogenic) throw Error(ErrorKind::InvalidParameters, "substitution needs a monogenic algebra");
  RatFunc g = lift(g_in, h.field);
  if (g.is_zero() || !in_base_field(g)) throw Error(ErrorKind::NotInBaseField, "g must lie in K^×");
  const std::int64_t N = ipow(h.field.p, h.r + 1) - 1;
  RatFunc f_new = *h.f * g.pow(-N);
  Substitution s{build_hopf(h.field, h.n, h.r, f_new), g, false};
  s.verified = verify_generator_map(s.hopf, h, g);
  return s;
}

}  // namespace hopflab

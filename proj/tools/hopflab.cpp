// hopflab command-line front end.
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hopflab/hopflab.hpp"

using namespace hopflab;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::int64_t p = 2;
  std::optional<int> vars;
  int n = 2;
  int r = 1;
  int d = 1;
  std::string f = "T1";
  std::string f1, f2;
  std::string b = "T1";
  std::int64_t i = 1;
  std::string mode = "triangular";
  bool enumerate = false;
  std::string format = "text";
  std::string level = "quick";
  std::string input;
};

/// Text output uses the typeset minus and middle dot.
std::string typeset(std::string s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '*') {
      out += "·";
    } else if (s[k] == '-' && (k == 0 || s[k - 1] == ' ')) {
      out += "−";
    } else {
      out += s[k];
    }
  }
  return out;
}

int inferred_vars(const Options& o, std::initializer_list<const std::string*> exprs) {
  if (o.vars) {
    if (*o.vars < 1 || *o.vars > 8) throw UsageError("--vars: must be between 1 and 8");
    return *o.vars;
  }
  int m = 1;
  static const std::regex tvar("T([0-9]+)");
  for (const auto* e : exprs)
    for (std::sregex_iterator it(e->begin(), e->end(), tvar), end; it != end; ++it)
      m = std::max(m, std::stoi((*it)[1].str()));
  return m;
}

void check_prime(std::int64_t p) {
  if (p < 2) throw UsageError("--p: must be a prime");
  for (std::int64_t k = 2; k * k <= p; ++k)
    if (p % k == 0) throw UsageError("--p: " + std::to_string(p) + " is not prime");
}

void check_nr(const Options& o) {
  check_prime(o.p);
  if (o.n < 1) throw UsageError("--n: must be positive");
  if (!(0 < o.r && o.r < o.n)) throw UsageError("--r: r must satisfy 0 < r < n");
}

void check_format(const Options& o) {
  if (o.format != "text" && o.format != "json") throw UsageError("--format: must be text or json");
}

RatFunc parse_flag(const Field& F, const std::string& flag, const std::string& text) {
  try {
    return parse_ratfunc(F, text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

HopfAlgebraData hopf_from_options(const Options& o, std::initializer_list<const std::string*> extra = {}) {
  check_nr(o);
  std::vector<const std::string*> exprs = {&o.f};
  exprs.insert(exprs.end(), extra.begin(), extra.end());
  int m = 1;
  for (const auto* e : exprs) m = std::max(m, inferred_vars(o, {e}));
  Field F(o.p, m, witt_depth(o.n, o.r));
  return build_hopf(F, o.n, o.r, parse_flag(F, "--f", o.f));
}

PrimitiveExtension extension_from_options(const Options& o, const HopfAlgebraData& h) {
  return make_extension(h.field, parse_flag(h.field, "--b", o.b), o.n);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--input: cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("--input: " + std::string(e.what()));
  }
}

void print_report(const Report& rep, const Options& o) {
  if (o.format == "json")
    std::cout << dump(to_json(rep));
  else
    std::cout << rep.to_string() << (rep.passed() ? "PASSED\n" : "FAILED\n");
}

// ---- subcommands -----------------------------------------------------------

int cmd_gen_witt(const Options& o) {
  check_prime(o.p);
  check_format(o);
  if (o.d < 0) throw UsageError("--d: must be nonnegative");
  auto sys = witt_system(o.p, o.d);
  if (o.format == "json") {
    std::cout << dump(witt_to_json(*sys, o.d));
    return kOk;
  }
  auto xname = [](int i) { return witt_var_name(i, 'X'); };
  for (int k = 0; k <= o.d; ++k) std::cout << "w_" << k << " = " << typeset(sys->witt_polynomial(k).to_string(xname)) << "\n";
  for (int k = 0; k <= o.d; ++k)
    std::cout << "S_" << k << " = " << typeset(sys->addition_polynomial(k).to_string(xname)) << "\n";
  return kOk;
}

void print_hopf_text(const HopfAlgebraData& h) {
  std::cout << h.label() << ", dimension " << h.dimension();
  if (h.kind == HopfKind::Monogenic) std::cout << ", d = " << h.d;
  std::cout << "\n";
  const auto& vars = h.H->vars();
  for (int k = 0; k < h.num_generators(); ++k) {
    const std::string& g = vars[k].name;
    std::cout << "Δ(" << g << ") = " << h.delta[k].to_string() << "\n";
    std::cout << "ε(" << g << ") = " << h.counit[k].to_string() << "\n";
    std::cout << "λ(" << g << ") = " << h.antipode[k].to_string() << "\n";
  }
}

int cmd_build_hopf(const Options& o) {
  check_format(o);
  auto h = hopf_from_options(o);
  if (o.format == "json")
    std::cout << dump(to_json(h));
  else
    print_hopf_text(h);
  return kOk;
}

int cmd_verify_hopf(const Options& o) {
  check_format(o);
  HopfAlgebraData h = o.input.empty() ? hopf_from_options(o) : hopf_from_json(read_json_file(o.input));
  HopfCheckOptions opt;
  opt.full_basis = h.dimension() <= 64;
  Report rep = verify_hopf_axioms(h, opt);
  for (std::size_t k = 0; k < h.delta.size(); ++k) {
    bool ok = true;
    for (const auto& [idx, c] : h.delta[k].terms()) ok = ok && in_base_field(c);
    rep.add("coefficients of Δ(g" + std::to_string(k) + ") lie in K", ok);
  }
  if (h.kind == HopfKind::Monogenic && h.r == h.n - 1)
    rep.add("Δ(t) matches the r = n-1 closed form", closed_form_delta(h) == h.delta[0]);
  print_report(rep, o);
  return rep.passed() ? kOk : kFailed;
}

CertMode mode_from_options(const Options& o) {
  if (o.mode == "triangular") return CertMode::Triangular;
  if (o.mode == "full") return CertMode::FullMatrix;
  throw UsageError("--mode: must be triangular or full");
}

int cmd_build_galois(const Options& o) {
  check_format(o);
  auto h = hopf_from_options(o, {&o.b});
  auto c = build_coaction(h, extension_from_options(o, h), o.i);
  if (o.format == "json") {
    std::cout << dump(to_json(c));
  } else {
    std::cout << h.label() << " on K(x), x^" << ipow(o.p, o.n) << " = " << c.ext.b().to_string() << ", i = " << o.i
              << "\n";
    std::cout << "α(x^" << o.i << ") = " << c.alpha_xi->to_string() << "\n";
    std::cout << "α(x) = " << c.alpha[0].to_string() << "\n";
  }
  return kOk;
}

int cmd_verify_galois(const Options& o) {
  check_format(o);
  const CertMode mode = mode_from_options(o);
  auto h = hopf_from_options(o, {&o.b});
  auto ext = extension_from_options(o, h);
  if (o.enumerate) {
    auto en = enumerate_coactions(h, ext, mode == CertMode::FullMatrix);
    if (o.format == "json") {
      std::cout << dump(json{{"schema_version", kSchemaVersion},
                             {"indices", en.indices},
                             {"certified", en.certified},
                             {"expected", en.expected},
                             {"mode", to_string(mode)},
                             {"ok", en.ok()}});
    } else {
      std::cout << "indices:";
      for (auto i : en.indices) std::cout << " " << i;
      std::cout << "\ncertified " << en.certified << " of φ(p^n) = " << en.expected << (en.ok() ? "\nPASSED\n" : "\nFAILED\n");
    }
    return en.ok() ? kOk : kFailed;
  }
  auto c = build_coaction(h, ext, o.i);
  Report comodule = verify_comodule(c);
  GaloisCertificate cert;
  try {
    cert = galois_certificate(c, mode);
  } catch (const KernelError& e) {
    std::cout << comodule.to_string() << e.what() << "\nFAILED\n";
    return kFailed;
  }
  const bool ok = comodule.passed() && cert.invertible;
  if (o.format == "json") {
    json j = to_json(cert);
    j["comodule"] = to_json(comodule);
    std::cout << dump(j);
  } else {
    std::cout << comodule.to_string();
    std::cout << "certificate (" << to_string(cert.mode) << "): " << (cert.invertible ? "invertible" : "not invertible")
              << "\n";
    for (const auto& e : cert.table) {
      std::cout << "  index";
      for (auto k : e.index) std::cout << " " << k;
      std::cout << ": leading " << e.leading;
      if (e.next_degree) std::cout << ", next degree " << *e.next_degree;
      std::cout << (e.ok ? "" : " (bad)") << "\n";
    }
    if (cert.mode == CertMode::FullMatrix)
      std::cout << "  rank " << cert.rank << " of " << cert.dimension << ", domain rank " << cert.domain_rank << "\n";
    std::cout << (ok ? "PASSED\n" : "FAILED\n");
  }
  return ok ? kOk : kFailed;
}

int cmd_dual(const Options& o) {
  check_format(o);
  auto dh = dual_structure(hopf_from_options(o));
  if (o.format == "json") {
    std::cout << dump(to_json(dh));
    return kOk;
  }
  std::cout << "dual of " << dh.source.label() << ", basis z_0..z_" << dh.q - 1 << "\n";
  for (int a = 0; a < dh.q; ++a)
    for (int b = a; b < dh.q; ++b)
      if (!is_zero(dh.mult_table[a][b]))
        std::cout << "z_" << a << "·z_" << b << " = " << dual_to_string(dh.mult_table[a][b]) << "\n";
  for (int j = 0; j < dh.q; ++j) {
    std::cout << "Δ(z_" << j << ") =";
    bool first = true;
    for (auto [a, b] : dh.comult_table[j]) {
      std::cout << (first ? " " : " + ") << "z_" << a << "⊗z_" << b;
      first = false;
    }
    std::cout << "\n";
  }
  for (int j = 0; j < dh.q; ++j) std::cout << "S(z_" << j << ") = " << dual_to_string(dh.antipode[j]) << "\n";
  return kOk;
}

int cmd_action_table(const Options& o) {
  check_format(o);
  auto h = hopf_from_options(o, {&o.b});
  auto dh = dual_structure(h);
  auto at = dual_action_table(dh, build_coaction(h, extension_from_options(o, h), o.i));
  if (o.format == "json") {
    std::cout << dump(to_json(at));
    return kOk;
  }
  for (int j = 0; j < at.q; ++j)
    for (int i = 0; i < at.q; ++i) std::cout << "z_" << j << "(x^" << i << ") = " << at.at(j, i).to_string() << "\n";
  return kOk;
}

int cmd_iso_test(const Options& o) {
  check_format(o);
  check_nr(o);
  if (o.f1.empty() || o.f2.empty()) throw UsageError("--f1/--f2: both are required");
  const int m = std::max(inferred_vars(o, {&o.f1}), inferred_vars(o, {&o.f2}));
  Field F(o.p, m, witt_depth(o.n, o.r));
  auto h1 = build_hopf(F, o.n, o.r, parse_flag(F, "--f1", o.f1));
  auto h2 = build_hopf(F, o.n, o.r, parse_flag(F, "--f2", o.f2));
  IsoResult res = iso_test(h1, h2);
  if (o.format == "json")
    std::cout << dump(to_json(res));
  else
    std::cout << h1.label() << " vs " << h2.label() << ": " << res.to_string() << "\n";
  // A witness that fails its own check is the only failure mode.
  return res.witness && !res.witness_verified ? kFailed : kOk;
}

int cmd_suite(const Options& o) {
  check_format(o);
  SuiteLevel level;
  try {
    level = effective_level(parse_level(o.level));
  } catch (const Error& e) {
    throw UsageError(std::string("--level / HOPFLAB_LEVEL: ") + e.what());
  }
  const bool as_json = o.format == "json";
  auto results = run_suite(level, [&](const CriterionResult& r) {
    if (as_json) return;
    std::cout << r.line() << "\n";
    if (!r.error.empty()) std::cout << "  error: " << r.error << "\n";
    for (const auto& c : r.report.checks)
      if (!c.passed) std::cout << "  FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    std::cout.flush();
  });
  const bool ok = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed(); });
  if (as_json) {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"id", r.id},
                     {"title", r.title},
                     {"passed", r.passed()},
                     {"seconds", r.seconds},
                     {"budget", r.budget},
                     {"error", r.error},
                     {"report", to_json(r.report)}});
    std::cout << dump(json{{"schema_version", kSchemaVersion},
                           {"level", level == SuiteLevel::Full ? "full" : "quick"},
                           {"passed", ok},
                           {"criteria", arr}});
  }
  return ok ? kOk : kFailed;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NotGalois:
    case ErrorKind::NotWellDefined:
    case ErrorKind::NotInvertible:
    case ErrorKind::BaseFieldViolation:
    case ErrorKind::InexactDivision: return kFailed;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of monogenic local-local Hopf algebras in characteristic p"};
  app.require_subcommand(1);
  Options o;

  auto format = [&](CLI::App* sc) { sc->add_option("--format", o.format, "text or json"); };
  auto params = [&](CLI::App* sc) {
    sc->add_option("--p", o.p, "characteristic");
    sc->add_option("--vars", o.vars, "number of indeterminates T1..Tm (default: highest index used)");
    sc->add_option("--n", o.n, "dim H = p^n");
    sc->add_option("--r", o.r, "0 < r < n");
    format(sc);
  };

  auto* gw = app.add_subcommand("gen-witt", "Witt polynomials w_0..w_d and S_0..S_d");
  gw->add_option("--p", o.p, "prime");
  gw->add_option("--d", o.d, "top index");
  format(gw);

  auto* bh = app.add_subcommand("build-hopf", "construct H_{n,r,f}");
  params(bh);
  bh->add_option("--f", o.f, "f in K");

  auto* vh = app.add_subcommand("verify-hopf", "check the Hopf axioms of H_{n,r,f} or a JSON dump");
  params(vh);
  vh->add_option("--f", o.f, "f in K");
  vh->add_option("--input", o.input, "JSON dump from build-hopf");

  auto* bg = app.add_subcommand("build-galois", "the coaction α_i on K(x), x^{p^n} = b");
  params(bg);
  bg->add_option("--f", o.f, "f in K");
  bg->add_option("--b", o.b, "b in K \\ K^p");
  bg->add_option("--i", o.i, "index prime to p");

  auto* vg = app.add_subcommand("verify-galois", "comodule laws and Galois certificate");
  params(vg);
  vg->add_option("--f", o.f, "f in K");
  vg->add_option("--b", o.b, "b in K \\ K^p");
  vg->add_option("--i", o.i, "index prime to p");
  vg->add_option("--mode", o.mode, "triangular or full");
  vg->add_flag("--enumerate", o.enumerate, "certify every α_i");

  auto* du = app.add_subcommand("dual", "multiplication and comultiplication tables of H*");
  params(du);
  du->add_option("--f", o.f, "f in K");

  auto* ac = app.add_subcommand("action-table", "z_j(x^i) for the coaction α_i");
  params(ac);
  ac->add_option("--f", o.f, "f in K");
  ac->add_option("--b", o.b, "b in K \\ K^p");
  ac->add_option("--i", o.i, "index prime to p");

  auto* it = app.add_subcommand("iso-test", "decide H_{n,r,f1} ≅ H_{n,r,f2}");
  params(it);
  it->add_option("--f1", o.f1, "first f");
  it->add_option("--f2", o.f2, "second f");

  auto* su = app.add_subcommand("suite", "run the acceptance criteria");
  su->add_option("--level", o.level, "quick or full (HOPFLAB_LEVEL overrides)");
  format(su);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gw) return cmd_gen_witt(o);
    if (*bh) return cmd_build_hopf(o);
    if (*vh) return cmd_verify_hopf(o);
    if (*bg) return cmd_build_galois(o);
    if (*vg) return cmd_verify_galois(o);
    if (*du) return cmd_dual(o);
    if (*ac) return cmd_action_table(o);
    if (*it) return cmd_iso_test(o);
    if (*su) return cmd_suite(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

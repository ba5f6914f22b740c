// Command-line driver: verification suites, the symbolic C polynomial,
// subalgebra classification tables, Jacobson correspondence reports, surface
// numerics, and automorphism-group checks. Exit codes: 0 pass/flagged,
// 1 fail, 2 usage.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "witt/autgroup.hpp"
#include "witt/jacobson.hpp"
#include "witt/reslie.hpp"
#include "witt/suites.hpp"
#include "witt/surfsing.hpp"
#include "witt/truncalg.hpp"
#include "witt/wittalg.hpp"

using namespace witt;

namespace {

unsigned long long seed_from_env() {
  const char* env = std::getenv("WITT_SEED");
  if (!env) return 0;
  return std::strtoull(env, nullptr, 10);
}

FieldRef field_for(i64 p, const std::string& base, int ext_degree) {
  if (base == "prime") return ext_degree > 1 ? Field::extension(p, ext_degree) : Field::prime(p);
  if (base == "ratfunc") return Field::ratfunc(p);
  fail("BadParams", "unknown base field kind " + base);
}

int cmd_verify(const std::string& suite, i64 p, const std::string& omega, long long seed_opt,
               bool json_out) {
  SuiteParams params;
  if (p > 0) params.p = p;
  if (!omega.empty()) params.omega = omega;
  params.seed = seed_opt >= 0 ? static_cast<unsigned long long>(seed_opt) : seed_from_env();
  SuiteReport rep = run_suite(suite, params);
  if (json_out)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.text();
  return rep.failed() ? 1 : 0;
}

int cmd_cmap(i64 p, bool json_out) {
  MultiPoly c = c_polynomial_symbolic(p);
  if (json_out)
    std::cout << c.to_json().dump(2) << "\n";
  else
    std::cout << c.str() << "\n";
  return 0;
}

int cmd_classify(i64 p, int fingerprint_ext) {
  FieldRef f = Field::prime(p);
  WittAlgebra wa(f, f->zero());
  ReducedPart red = reduced_subalgebra(wa);
  auto records = subalgebra_enumeration(wa.lie(), &red.space, fingerprint_ext);
  json rows = json::array();
  for (const auto& rec : records) {
    json row;
    row["dim"] = rec.space.dim();
    row["transitive"] = rec.transitive;
    row["fingerprint"] = rec.fp.to_json();
    rows.push_back(row);
  }
  std::cout << json{{"algebra", wa.lie().name()}, {"subalgebras", rows}}.dump(2) << "\n";
  return 0;
}

int cmd_jacobson(i64 p, const std::string& base, const std::string& mu_text,
                 const std::string& derivations) {
  FieldRef e = field_for(p, base, 1);
  std::vector<FElem> mu;
  std::stringstream ss(mu_text);
  std::string part;
  while (std::getline(ss, part, ',')) mu.push_back(parse_scalar(e, part));
  InsepExtension ext = make_insep_extension(e, mu);
  DerivationSet h = parse_derivation_set(ext, derivations);
  DegreeReport dr = degree_identity_check(h);
  InertiaKernel ik = inertia_kernel(h);
  json out{{"p", p},
           {"r", ext.r()},
           {"is_field", ext.is_field},
           {"fixed_dim", dr.fixed_dim},
           {"rank", dr.rank},
           {"inertia_dim", ik.kernel_dim},
           {"degree_check", dr.identity_holds}};
  std::cout << out.dump(2) << "\n";
  return dr.identity_holds ? 0 : 1;
}

int cmd_surfaces_example1(i64 p, i64 d, int sing_ext) {
  Example1Invariants inv = example1_invariants(p, d);
  json out{{"p", p},         {"d", d},        {"n", inv.n},     {"c1sq", inv.c1sq},
           {"c2", inv.c2},   {"chi", inv.chi}, {"chi_alt", inv.chi_alt},
           {"hypotheses_ok", inv.hypotheses_ok}};
  out["phi_bound"] = phi_bound({inv.c1sq, inv.c2}).str();
  out["psi_bound"] = psi_bound(inv.c1sq).str();
  if (p != 3) {
    SingularLocusReport loc = example1_singular_locus(p, d, sing_ext);
    json pts = json::array();
    for (const auto& [x, y] : loc.interior) pts.push_back(json::array({x.str(), y.str()}));
    out["interior_singular_points"] = pts;
    out["boundary_count"] = loc.boundary.size();
    out["minus27_mod_p"] = loc.minus27_mod_p;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_surfaces_adetect(const std::string& input, int precision) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "cannot open " << input << "\n";
    return 2;
  }
  json j;
  in >> j;
  PowerSeries3 f = PowerSeries3::from_json(j);
  ATypeResult res = recognize_a_type(f, precision);
  json out{{"ok", res.ok},
           {"n", res.n},
           {"type", res.ok ? "A_" + std::to_string(res.n - 1) : "none"},
           {"certified_precision", res.certified_precision},
           {"precision_exhausted", res.precision_exhausted},
           {"verified", res.verified}};
  std::cout << out.dump(2) << "\n";
  return res.ok ? 0 : 1;
}

int cmd_surfaces_raynaud(i64 p, i64 n, i64 d) {
  RaynaudInvariants inv = raynaud_invariants(p, n, d);
  json out{{"p", p},     {"n", n},          {"d", d},
           {"c1sq", inv.c1sq}, {"c2", inv.c2}, {"Gsq", inv.Gsq},
           {"Gprime_sq", inv.Gprime_sq}, {"Dsq", inv.Dsq},
           {"routes_agree", inv.routes_agree}, {"chi_integral", inv.chi_integral}};
  std::cout << out.dump(2) << "\n";
  return inv.routes_agree ? 0 : 1;
}

int cmd_autgroup(i64 p, const std::string& omega_str, const std::string& check) {
  if (check == "rational-points") {
    FieldRef k = Field::ratfunc(p);
    FElem omega = parse_scalar(k, omega_str);
    RationalPointsReport rp = rational_points_unique(k, omega, p);
    json out{{"p", p},
             {"omega", omega.str()},
             {"omega_is_p_power", rp.omega_is_p_power},
             {"neutral_is_member", rp.neutral_is_member},
             {"unique_rational_point", rp.unique}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (check == "witness") {
    NonNormalityWitness nw = non_normality_witness(p, Field::prime(p));
    json out{{"p", p},
             {"conjugated", nw.rendered},
             {"inverse_of_g", rpoly_str(nw.inverse_of_g)},
             {"leaves_reduced_part", nw.leaves_reduced_part},
             {"matches_display", nw.matches_display}};
    std::cout << out.dump(2) << "\n";
    return nw.matches_display ? 0 : 1;
  }
  std::cerr << "unknown --check " << check << "\n";
  return 2;
}

int cmd_fingerprint(const std::string& input) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "cannot open " << input << "\n";
    return 2;
  }
  json j;
  in >> j;
  ResLieAlgebra g = ResLieAlgebra::from_json(j);
  Rng rng(seed_from_env());
  AxiomReport rep = verify_axioms(g, rng);
  json out{{"name", g.name()},
           {"dim", g.dim()},
           {"axioms_pass", rep.passed},
           {"fingerprint", fingerprint(g).to_json()}};
  std::cout << out.dump(2) << "\n";
  return rep.passed ? 0 : 1;
}

int cmd_emit(const std::string& kind, i64 p, i64 omega_idx, const std::string& format,
             const std::string& suite) {
  if (kind == "c-polynomial") return cmd_cmap(p, format == "json");
  if (kind == "structure-constants") {
    FieldRef f = Field::prime(p);
    WittAlgebra wa(f, f->nth(omega_idx));
    std::cout << wa.lie().to_json().dump(2) << "\n";
    return 0;
  }
  if (kind == "report") {
    SuiteParams params;
    params.seed = seed_from_env();
    SuiteReport rep = run_suite(suite, params);
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.failed() ? 1 : 0;
  }
  std::cerr << "unknown emit kind " << kind << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"witt: exact computations with restricted Lie algebras, Witt algebras, and their automorphism groups"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  i64 vp = 0;
  std::string vomega;
  long long vseed = -1;
  bool vjson = false;
  verify->add_option("--suite", suite, "axioms | witt | autgroup | jacobson | surfaces | classify | all");
  verify->add_option("--p", vp, "prime parameter (suite-specific)");
  verify->add_option("--omega,--omega-str", vomega, "omega expression");
  verify->add_option("--seed", vseed, "RNG seed (default: WITT_SEED or 0)");
  verify->add_flag("--json", vjson, "emit the canonical JSON report");

  // cmap
  auto* cmap = app.add_subcommand("cmap", "emit the symbolic C polynomial");
  i64 cp = 5;
  bool cjson = false;
  cmap->add_option("--p", cp, "prime (<= 7)")->required();
  cmap->add_flag("--json", cjson, "emit JSON");

  // classify-subalgebras
  auto* classify = app.add_subcommand("classify-subalgebras", "enumerate subalgebras of witt(p, 0) over F_p");
  i64 clp = 3;
  int clext = 2;
  classify->add_option("--p", clp, "prime (<= 5)")->required();
  classify->add_option("--fingerprint-ext", clext, "extension degree for fingerprints (default 2)");

  // jacobson
  auto* jac = app.add_subcommand("jacobson", "Jacobson correspondence report");
  i64 jp = 3;
  std::string jbase = "ratfunc", jmu = "theta", jders = "d1";
  jac->add_option("--p", jp, "prime")->required();
  jac->add_option("--base", jbase, "base field kind (ratfunc)");
  jac->add_option("--mu", jmu, "comma-separated mu expressions, e.g. \"theta, theta+1\"")->required();
  jac->add_option("--derivations", jders, "semicolon-separated generators, e.g. \"d1; T1*d1\"")->required();

  // surfaces
  auto* surfaces = app.add_subcommand("surfaces", "surface-example numerics");
  auto* ex1 = surfaces->add_subcommand("example1", "invariants and singular locus of the first example family");
  i64 sp = 5, sd = 4;
  int sext = 1;
  ex1->add_option("--p", sp, "prime (p != 3)")->required();
  ex1->add_option("--d", sd, "degree parameter (>= 4)")->required();
  ex1->add_option("--sing-ext", sext, "extension degree for the locus enumeration");
  auto* adetect = surfaces->add_subcommand("adetect", "A-type recognition from a series JSON file");
  std::string ainput;
  int aprec = 12;
  adetect->add_option("--input", ainput, "series JSON file")->required();
  adetect->add_option("--precision", aprec, "working precision");
  auto* raynaud = surfaces->add_subcommand("raynaud", "Raynaud-surface invariants");
  i64 rp = 3, rn = 2, rd = 1;
  raynaud->add_option("--p", rp)->required();
  raynaud->add_option("--n", rn)->required();
  raynaud->add_option("--d", rd)->required();

  // autgroup
  auto* autg = app.add_subcommand("autgroup", "automorphism group functor checks");
  i64 ap = 2;
  std::string aomega = "theta", acheck = "rational-points";
  autg->add_option("--p", ap, "prime")->required();
  autg->add_option("--omega-str", aomega, "omega expression over F_p(theta)");
  autg->add_option("--check", acheck, "rational-points | witness");

  // fingerprint (structure-constants loader)
  auto* fing = app.add_subcommand("fingerprint", "load a structure-constants JSON file and fingerprint it");
  std::string finput;
  fing->add_option("--input", finput, "structure-constants JSON file")->required();

  // emit
  auto* emit = app.add_subcommand("emit", "emit canonical artifacts");
  std::string ekind = "c-polynomial", eformat = "text", esuite = "all";
  i64 ep = 3, eomega = 0;
  emit->add_option("--kind", ekind, "c-polynomial | structure-constants | report")->required();
  emit->add_option("--p", ep, "prime");
  emit->add_option("--omega", eomega, "omega index for structure constants");
  emit->add_option("--format", eformat, "text | json");
  emit->add_option("--suite", esuite, "suite name for --kind report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(suite, vp, vomega, vseed, vjson);
    if (*cmap) return cmd_cmap(cp, cjson);
    if (*classify) return cmd_classify(clp, clext);
    if (*jac) return cmd_jacobson(jp, jbase, jmu, jders);
    if (*ex1) return cmd_surfaces_example1(sp, sd, sext);
    if (*adetect) return cmd_surfaces_adetect(ainput, aprec);
    if (*raynaud) return cmd_surfaces_raynaud(rp, rn, rd);
    if (*autg) return cmd_autgroup(ap, aomega, acheck);
    if (*fing) return cmd_fingerprint(finput);
    if (*emit) return cmd_emit(ekind, ep, eomega, eformat, esuite);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == "BadParams" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

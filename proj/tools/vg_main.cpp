// Command-line front end: arrangement I/O, the built-in catalog, all
// computations as subcommands, JSON/DOT reports, and the verification runner.
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 invariant violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vg/catalog.hpp"
#include "vg/reconstruct.hpp"
#include "vg/verify.hpp"

namespace {

using namespace vg;

Arrangement load_input(const std::string& spec) {
  if (spec == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return Arrangement::from_json_text(os.str());
  }
  if (std::filesystem::exists(spec)) {
    std::ifstream in(spec);
    std::ostringstream os;
    os << in.rdbuf();
    return Arrangement::from_json_text(os.str());
  }
  for (const auto& nm : catalog_names())
    if (nm == spec) return catalog_load(spec).arrangement;
  throw UsageError("input '" + spec + "' is neither a file, '-', nor a catalog name");
}

uint64_t default_seed() {
  if (const char* env = std::getenv("VG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("VG_SEED is not an integer");
    }
  }
  return 0;
}

struct CommonOpts {
  std::string field = "Q";
  bool allow_char2 = false;
  unsigned jobs = 1;

  FieldSpec make_field() const { return FieldSpec::parse(field, allow_char2); }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--field", opts.field, "coefficient field: Q or Fp:<p>");
  cmd->add_flag("--allow-char2", opts.allow_char2,
                "permit characteristic 2 (disables the odd-characteristic shortcuts)");
  cmd->add_option("--jobs", opts.jobs,
                  "worker count accepted for compatibility; results never depend on it")
      ->check(CLI::PositiveNumber);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

nlohmann::json report_header(const char* kind, const Arrangement& a) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["report"] = kind;
  j["arrangement_hash"] = a.hash();
  j["chamber_order"] = "lex-v1";
  return j;
}

int cmd_chambers(const std::string& input, const std::string& out) {
  Arrangement a = load_input(input);
  ChamberSet cs = ChamberSet::enumerate(a);
  nlohmann::json j = report_header("chambers", a);
  j["count"] = cs.size();
  nlohmann::json list = nlohmann::json::array();
  for (size_t c = 0; c < cs.size(); ++c) {
    nlohmann::json e;
    e["signs"] = sign_vector_str(cs.chamber(c));
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : cs.witness(c)) w.push_back(rational_str(x));
    e["witness"] = w;
    list.push_back(e);
  }
  j["chambers"] = list;
  emit(j.dump(2) + "\n", out);
  return 0;
}

int cmd_charpoly(const std::string& input, const std::string& out) {
  Arrangement a = load_input(input);
  std::vector<mpz_class> chi = char_poly(a);
  nlohmann::json j = report_header("charpoly", a);
  nlohmann::json coeffs = nlohmann::json::array();
  for (size_t d = chi.size(); d-- > 0;) coeffs.push_back(chi[d].get_str());
  j["coefficients_desc"] = coeffs;
  nlohmann::json b = nlohmann::json::array();
  for (const auto& x : betti(a)) b.push_back(x.get_str());
  j["betti"] = b;
  j["chambers_zaslavsky"] = zaslavsky_count(a).get_str();
  j["generic_codim2"] = is_generic_codim2(a);
  emit(j.dump(2) + "\n", out);
  return 0;
}

int cmd_topegraph(const std::string& input, const std::string& format,
                  const std::string& out) {
  Arrangement a = load_input(input);
  ChamberSet cs = ChamberSet::enumerate(a);
  Graph g = tope_graph(cs);
  if (format == "dot") {
    std::vector<std::string> labels;
    for (size_t c = 0; c < cs.size(); ++c) labels.push_back(sign_vector_str(cs.chamber(c)));
    emit(g.to_dot(&labels), out);
    return 0;
  }
  nlohmann::json j = report_header("topegraph", a);
  j["vertices"] = g.num_vertices();
  nlohmann::json adj = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) adj.push_back({u, v});
  j["edges"] = adj;
  nlohmann::json labels = nlohmann::json::array();
  for (size_t c = 0; c < cs.size(); ++c) labels.push_back(sign_vector_str(cs.chamber(c)));
  j["vertex_signs"] = labels;
  emit(j.dump(2) + "\n", out);
  return 0;
}

int cmd_circuits(const std::string& input, const std::string& out) {
  Arrangement a = load_input(input);
  SignedCircuitSet c = signed_circuits(a);
  nlohmann::json j = report_header("circuits", a);
  j["count"] = c.circuits.size();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& sv : c.circuits) list.push_back(sign_vector_str(sv));
  j["circuits"] = list;
  emit(j.dump(2) + "\n", out);
  return 0;
}

int cmd_gheav(const std::string& input, const CommonOpts& opts, const std::string& out) {
  Arrangement a = load_input(input);
  VGSpace space(a, opts.make_field());
  std::vector<VGElement> gh = space.gheav_bruteforce();
  nlohmann::json j = report_header("gheav", a);
  j["field"] = space.field().name();
  j["count"] = gh.size();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& y : gh) {
    nlohmann::json e;
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& x : y.values) vals.push_back(rational_str(space.field().normalize(x)));
    e["values"] = vals;
    nlohmann::json sup = nlohmann::json::array();
    for (size_t i : space.support(y)) sup.push_back(i + 1);
    e["support"] = sup;
    list.push_back(e);
  }
  j["elements"] = list;
  emit(j.dump(2) + "\n", out);
  return 0;
}

int cmd_sqzero(const std::string& input, const CommonOpts& opts, const std::string& out) {
  Arrangement a = load_input(input);
  VGSpace space(a, opts.make_field());
  FilChain fc(space);
  std::vector<la::Vec> lines = sqzero(space, fc);
  nlohmann::json j = report_header("sqzero", a);
  j["field"] = space.field().name();
  j["count"] = lines.size();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& l : lines) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : l) row.push_back(rational_str(space.field().normalize(x)));
    list.push_back(row);
  }
  j["lines"] = list;
  emit(j.dump(2) + "\n", out);
  return 0;
}

int cmd_autgroups(const std::string& input, const CommonOpts& opts, const std::string& out) {
  Arrangement a = load_input(input);
  VGSpace space(a, opts.make_field());
  AutGroups ag = aut_groups(space);
  nlohmann::json j = report_header("autgroups", a);
  j["tope_graph_order"] = ag.graph_order;
  j["filtered_algebra_order"] = ag.filt_order;
  j["chamber_permutations_order"] = ag.set_order.get_str();
  j["graph_group_inside_filtered"] = ag.graph_inside_filt;
  emit(j.dump(2) + "\n", out);
  return 0;
}

HarnessMode parse_mode(const std::string& mode, uint64_t seed, size_t trials) {
  if (mode == "exhaustive") return HarnessMode::exhaustive();
  if (mode == "random") {
    if (trials == 0) throw UsageError("random mode needs --trials > 0");
    return HarnessMode::random(seed, trials);
  }
  throw UsageError("mode must be 'exhaustive' or 'random'");
}

int cmd_harness(const std::string& input, const CommonOpts& opts, bool graded,
                const std::string& mode, uint64_t seed, size_t trials,
                const std::string& out) {
  Arrangement a = load_input(input);
  VGSpace space(a, opts.make_field());
  HarnessMode m = parse_mode(mode, seed, trials);
  HarnessReport rep;
  if (graded) {
    FilChain fc(space);
    rep = conjecture_harness_graded(space, fc, m);
  } else {
    rep = conjecture_harness_filtered(space, m);
  }
  emit(rep.to_json(), out);
  return 0;
}

int cmd_recover_circuits(const std::string& input, const CommonOpts& opts,
                         const std::string& scalars, const std::string& out) {
  Arrangement a = load_input(input);
  VGSpace space(a, opts.make_field());
  FilChain fc(space);
  std::vector<Scalar> mu(a.n(), Scalar(1));
  if (!scalars.empty()) {
    std::stringstream ss(scalars);
    std::string tok;
    size_t i = 0;
    while (std::getline(ss, tok, ',')) {
      if (i >= mu.size()) throw UsageError("too many scalars");
      mu[i++] = parse_rational(tok);
    }
    if (i != mu.size()) throw UsageError("need one scalar per hyperplane");
  }
  RecoverVerdict v = recover_and_compare(space, fc, mu);
  nlohmann::json j = report_header("recover-circuits", a);
  j["field"] = space.field().name();
  j["good_generators"] = v.good;
  j["equivalent"] = v.equivalent;
  j["pure_reorientation"] = v.pure_reorientation;
  j["detail"] = v.detail;
  nlohmann::json truth = nlohmann::json::array();
  for (const auto& sv : signed_circuits(a).circuits) truth.push_back(sign_vector_str(sv));
  j["geometric_circuits"] = truth;
  emit(j.dump(2) + "\n", out);
  return 0;
}

int cmd_compare(const std::string& in1, const std::string& in2,
                const std::string& what, const CommonOpts& opts) {
  Arrangement a1 = load_input(in1);
  Arrangement a2 = load_input(in2);
  if (what == "lattice") {
    if (lattice_isomorphic(a1, a2))
      std::cout << "lattice: isomorphic\n";
    else
      std::cout << "lattice: NOT isomorphic\n";
    return 0;
  }
  if (what == "topegraph") {
    Graph g1 = tope_graph(ChamberSet::enumerate(a1));
    Graph g2 = tope_graph(ChamberSet::enumerate(a2));
    if (graph_isomorphic(g1, g2)) {
      std::cout << "topegraph: isomorphic\n";
    } else if (g1.degree_profile() != g2.degree_profile()) {
      auto count6 = [](const Graph& g) {
        size_t k = 0;
        for (size_t v = 0; v < g.num_vertices(); ++v)
          if (g.degree(v) == 6) ++k;
        return k;
      };
      std::cout << "topegraph: NOT isomorphic: degree profiles differ ("
                << count6(g1) << " degree-6 vertices vs " << count6(g2) << ")\n";
    } else {
      std::cout << "topegraph: NOT isomorphic\n";
    }
    return 0;
  }
  if (what == "filtered-vg") {
    FieldSpec F = opts.make_field();
    if (!is_generic_codim2(a1) || !is_generic_codim2(a2))
      throw DomainError(
          "filtered-vg comparison runs the generic-in-codimension-2 pipeline; "
          "an input is outside that hypothesis (use the conjecture harness)");
    VGSpace s1(a1, F), s2(a2, F);
    size_t g1 = s1.gheav_bruteforce().size(), g2 = s2.gheav_bruteforce().size();
    std::cout << "gHeav cardinalities: " << g1 << " vs " << g2 << "\n";
    Graph r1 = recover_tope_graph_from_heav(s1);
    Graph r2 = recover_tope_graph_from_heav(s2);
    if (g1 == g2 && graph_isomorphic(r1, r2))
      std::cout << "filtered-vg: recovered tope graphs isomorphic\n";
    else
      std::cout << "filtered-vg: NOT isomorphic (recovered tope graphs differ)\n";
    return 0;
  }
  if (what == "graded-vg-invariants") {
    FieldSpec F = opts.make_field();
    VGSpace s1(a1, F), s2(a2, F);
    FilChain f1(s1), f2(s2);
    auto b1 = betti(a1), b2 = betti(a2);
    auto l1 = sqzero(s1, f1), l2 = sqzero(s2, f2);
    auto hist = [](const SignedCircuitSet& c) {
      std::map<size_t, size_t> h;
      for (const auto& sv : c.circuits) {
        size_t s = 0;
        for (int8_t x : sv)
          if (x != 0) ++s;
        ++h[s];
      }
      return h;
    };
    auto h1 = hist(signed_circuits(a1)), h2 = hist(signed_circuits(a2));
    auto betti_str = [](const std::vector<mpz_class>& b) {
      std::string s = "(";
      for (size_t i = 0; i < b.size(); ++i)
        s += (i ? "," : "") + b[i].get_str();
      return s + ")";
    };
    std::cout << "betti: " << betti_str(b1) << " vs " << betti_str(b2) << "\n";
    std::cout << "sqzero line counts: " << l1.size() << " vs " << l2.size() << "\n";
    bool differ = b1 != b2 || l1.size() != l2.size() || h1 != h2;
    if (differ)
      std::cout << "graded-vg-invariants: graded VG algebras non-isomorphic\n";
    else
      std::cout << "graded-vg-invariants: no distinguishing invariant found "
                   "(this detector never proves isomorphism)\n";
    return 0;
  }
  throw UsageError("unknown comparison '" + what + "'");
}

int cmd_catalog(const std::string& name, bool verify_entry) {
  if (name.empty()) {
    for (const auto& nm : catalog_names()) std::cout << nm << "\n";
    return 0;
  }
  if (verify_entry) {
    CatalogValidation v = catalog_validate(name);
    for (const auto& f : v.failures) std::cout << "FAIL " << f << "\n";
    for (const auto& n : v.notes) std::cout << "NOTE " << n << "\n";
    std::cout << (v.ok ? "catalog entry verified\n" : "catalog entry FAILED\n");
    return v.ok ? 0 : 3;
  }
  std::cout << catalog_load(name).arrangement.to_json_text();
  return 0;
}

int cmd_verify(bool all, bool acceptance, std::vector<std::string> modules) {
  std::vector<CheckResult> results;
  if (all) {
    modules = verify_module_names();
    acceptance = true;
  }
  for (const auto& m : modules)
    for (auto& r : run_module_checks(m)) results.push_back(std::move(r));
  if (acceptance)
    for (auto& r : run_acceptance()) results.push_back(std::move(r));
  if (results.empty())
    throw UsageError("nothing to verify: pass --all, --acceptance or module names");
  size_t failed = 0;
  std::string first_failure;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.pass || r.detail != "ok") std::cout << " -- " << r.detail;
    std::cout << "\n";
    if (!r.pass && failed++ == 0) first_failure = r.name;
  }
  std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  if (failed > 0) {
    std::cout << "first failure: " << first_failure << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chamber algebra toolkit for central hyperplane arrangements"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string input, input2, out, format = "dot", what = "topegraph";
  std::string mode = "exhaustive", scalars, catalog_name;
  uint64_t seed = 0;
  size_t trials = 0;
  bool verify_all = false, verify_acceptance = false, catalog_check = false;
  std::vector<std::string> verify_targets;

  auto* chambers = app.add_subcommand("chambers", "enumerate chambers with witnesses");
  chambers->add_option("input", input, "arrangement file, '-', or catalog name")->required();
  chambers->add_option("--out", out, "write the report to a file");

  auto* charpoly = app.add_subcommand("charpoly", "intersection-lattice invariants");
  charpoly->add_option("input", input)->required();
  charpoly->add_option("--out", out);

  auto* topegraph = app.add_subcommand("topegraph", "tope graph in DOT or JSON");
  topegraph->add_option("input", input)->required();
  topegraph->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  topegraph->add_option("--out", out);

  auto* circuits = app.add_subcommand("circuits", "signed circuits");
  circuits->add_option("input", input)->required();
  circuits->add_option("--out", out);

  auto* gheav = app.add_subcommand("gheav", "generalized Heaviside functions");
  gheav->add_option("input", input)->required();
  gheav->add_option("--out", out);
  add_common(gheav, opts);

  auto* sqz = app.add_subcommand("sqzero", "square-zero lines in the graded algebra");
  sqz->add_option("input", input)->required();
  sqz->add_option("--out", out);
  add_common(sqz, opts);

  auto* aut = app.add_subcommand("autgroups", "automorphism group orders");
  aut->add_option("input", input)->required();
  aut->add_option("--out", out);
  add_common(aut, opts);

  auto* rf = app.add_subcommand("reconstruct-filtered",
                                "generalized-tope-graph conjecture harness");
  rf->add_option("input", input)->required();
  rf->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random"}));
  rf->add_option("--seed", seed, "random-mode seed (default: VG_SEED or 0)");
  rf->add_option("--trials", trials);
  rf->add_option("--out", out);
  add_common(rf, opts);

  auto* rg = app.add_subcommand("reconstruct-graded",
                                "good-generator circuit-recovery harness");
  rg->add_option("input", input)->required();
  rg->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random"}));
  rg->add_option("--seed", seed);
  rg->add_option("--trials", trials);
  rg->add_option("--out", out);
  add_common(rg, opts);

  auto* rc = app.add_subcommand("recover-circuits",
                                "recover signed circuits from square-zero generators");
  rc->add_option("input", input)->required();
  rc->add_option("--scalars", scalars, "comma-separated unit scalars, one per hyperplane");
  rc->add_option("--out", out);
  add_common(rc, opts);

  auto* cmp = app.add_subcommand("compare", "compare two arrangements");
  cmp->add_option("first", input)->required();
  cmp->add_option("second", input2)->required();
  cmp->add_option("--what", what)
      ->check(CLI::IsMember({"lattice", "topegraph", "filtered-vg",
                             "graded-vg-invariants"}));
  add_common(cmp, opts);

  auto* cat = app.add_subcommand("catalog", "list or print built-in arrangements");
  cat->add_option("name", catalog_name);
  cat->add_flag("--verify", catalog_check, "re-derive the entry's tagged invariants");

  auto* ver = app.add_subcommand("verify", "run invariant suites and acceptance criteria");
  ver->add_flag("--all", verify_all, "all module suites plus the acceptance criteria");
  ver->add_flag("--acceptance", verify_acceptance, "acceptance criteria only");
  ver->add_option("modules", verify_targets, "module suites to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (seed == 0) seed = default_seed();
    if (chambers->parsed()) return cmd_chambers(input, out);
    if (charpoly->parsed()) return cmd_charpoly(input, out);
    if (topegraph->parsed()) return cmd_topegraph(input, format, out);
    if (circuits->parsed()) return cmd_circuits(input, out);
    if (gheav->parsed()) return cmd_gheav(input, opts, out);
    if (sqz->parsed()) return cmd_sqzero(input, opts, out);
    if (aut->parsed()) return cmd_autgroups(input, opts, out);
    if (rf->parsed()) return cmd_harness(input, opts, false, mode, seed, trials, out);
    if (rg->parsed()) return cmd_harness(input, opts, true, mode, seed, trials, out);
    if (rc->parsed()) return cmd_recover_circuits(input, opts, scalars, out);
    if (cmp->parsed()) return cmd_compare(input, input2, what, opts);
    if (cat->parsed()) return cmd_catalog(catalog_name, catalog_check);
    if (ver->parsed()) return cmd_verify(verify_all, verify_acceptance, verify_targets);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

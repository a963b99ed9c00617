#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <exchci/exchange.hpp>
#include <exchci/files.hpp>
#include <exchci/graph.hpp>
#include <exchci/model.hpp>
#include <exchci/table.hpp>
#include <exchci/verify.hpp>

namespace {

using namespace exchci;

std::string statement_text(const GroundSet& gr, const Statement& s) {
  return gr.set_name(s.a) + " ; " + gr.set_name(s.b) + " ; " + gr.set_name(s.c);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << text;
}

std::string one_line(std::string s) {
  for (char& ch : s) {
    if (ch == '\t' || ch == '\n' || ch == '\r') ch = ' ';
  }
  return s;
}

int run_classify(const std::string& path, double tol, std::uint64_t seed) {
  CIOracle oracle = [&] {
    if (detect_file_kind(path) == FileKind::Table) {
      return oracle_from_table(read_table_file(path), tol);
    }
    return oracle_from_model(read_model_file(path));
  }();
  if (oracle.ground.kind() != GroundKind::Network) {
    throw std::invalid_argument("classify requires a network ground set");
  }
  const GroundSet ground = oracle.ground;
  Regime r = classify_regime(oracle, ground.nodes(), seed);
  std::cout << "regime: " << regime_name(r.tag) << '\n';
  if (r.disjoint_witness) {
    std::cout << "disjoint-witness: " << ground.set_name(*r.disjoint_witness) << '\n';
  }
  if (r.sharing_witness) {
    std::cout << "sharing-witness: " << ground.set_name(*r.sharing_witness) << '\n';
  }
  if (r.conflict) {
    std::cout << "conflict-with-probe: " << ground.set_name(r.conflict->first) << '\n';
    std::cout << "conflict-without-probe: " << ground.set_name(r.conflict->second) << '\n';
  }
  return r.tag == RegimeTag::Inconsistent ? 1 : 0;
}

int run_closure(const std::string& model_path, const std::vector<std::string>& with_names,
                bool orbit, const std::string& out_path) {
  IndependenceModel m = read_model_file(model_path);
  if (orbit) m = orbit_closure(m);
  std::vector<Property> props;
  for (const auto& w : with_names) {
    auto p = property_from_name(w);
    if (!p) throw std::invalid_argument("unknown property: " + w);
    props.push_back(*p);
  }
  m = props.empty() ? semigraphoid_closure(m) : closure_with(m, props);
  write_output(model_to_string(m), out_path);
  return 0;
}

int run_check(const std::string& model_path, const std::string& prop_name) {
  auto prop = property_from_name(prop_name);
  if (!prop) throw std::invalid_argument("unknown property: " + prop_name);
  IndependenceModel m = read_model_file(model_path);
  PropertyReport rep = check_property(m, *prop);
  std::cout << (rep.holds ? "holds" : "fails") << '\n';
  if (!rep.holds && rep.witness) {
    for (const auto& s : rep.witness->antecedents) {
      std::cout << "antecedent: " << statement_text(m.ground(), s) << '\n';
    }
    for (const auto& s : rep.witness->consequents) {
      std::cout << "missing: " << statement_text(m.ground(), s) << '\n';
    }
  }
  return rep.holds ? 0 : 1;
}

int run_dual(const std::string& model_path, const std::string& out_path) {
  write_output(model_to_string(dual(read_model_file(model_path))), out_path);
  return 0;
}

int run_skeleton(const std::string& model_path, bool dot) {
  IndependenceModel m = read_model_file(model_path);
  MixedGraph g = skeleton_of_model(m);
  if (dot) {
    std::cout << to_dot(g);
    return 0;
  }
  const GroundSet& gr = m.ground();
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v)) {
        std::cout << gr.element_name(u) << " -- " << gr.element_name(v) << '\n';
      }
    }
  }
  return 0;
}

int run_sep(const std::string& graph_spec, const std::string& a_str,
            const std::string& b_str, const std::string& c_str) {
  MixedGraph g = parse_graph_spec(graph_spec);
  VarSet a = parse_set(g.ground(), a_str);
  VarSet b = parse_set(g.ground(), b_str);
  VarSet c = parse_set(g.ground(), c_str);
  const bool sep = separates(g, a, b, c);
  std::cout << (sep ? "separated" : "connected") << '\n';
  return sep ? 0 : 1;
}

int run_gen(const std::string& family, int n) {
  auto fam = family_from_name(family);
  if (!fam) {
    throw std::invalid_argument("unknown family: " + family +
                                " (expected empty, L-, Lbi, Lc-, Lcbi, complete)");
  }
  std::cout << to_dot(family_graph(*fam, n));
  return 0;
}

int run_faithful(const std::string& model_path, const std::string& graph_spec) {
  IndependenceModel m = read_model_file(model_path);
  MixedGraph g = parse_graph_spec(graph_spec);
  FaithfulnessReport rep = faithfulness_report(m, g);
  std::cout << "markovian: " << (rep.markovian ? "yes" : "no") << '\n';
  std::cout << "faithful: " << (rep.faithful ? "yes" : "no") << '\n';
  if (rep.failing_triple) {
    const auto& f = *rep.failing_triple;
    std::cout << "failing: " << statement_text(m.ground(), f.triple)
              << (f.separated_in_graph ? " (separated in graph, absent from model)"
                                       : " (held in model, not separated in graph)")
              << '\n';
  }
  return rep.faithful ? 0 : 1;
}

int run_verify_cmd(const VerifyOptions& opts, bool tsv) {
  std::vector<VerifyResult> results = run_verify(opts);
  int failed = 0;
  char secs[32];
  for (const auto& r : results) {
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    if (tsv) {
      std::cout << r.id << '\t' << (r.pass ? "pass" : "fail") << '\t' << secs << '\t'
                << one_line(r.detail) << '\t' << r.repro << '\n';
    } else {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " (" << secs << "s)";
      if (!r.detail.empty()) std::cout << ' ' << r.detail;
      std::cout << '\n';
      if (!r.pass) std::cout << "  repro: " << r.repro << '\n';
    }
    if (!r.pass) ++failed;
  }
  if (!tsv) {
    std::cout << results.size() - failed << " passed, " << failed << " failed, "
              << results.size() << " total\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conditional-independence structure of exchangeable vectors and networks"};
  app.require_subcommand(1);

  auto* c_classify = app.add_subcommand(
      "classify", "classify a network distribution or model into its independence regime");
  std::string classify_file;
  double classify_tol = kCiTolerance;
  std::uint64_t classify_seed = kDefaultSeed;
  c_classify->add_option("file", classify_file, "distribution or model file")->required();
  c_classify->add_option("--tol", classify_tol, "CI tolerance for table queries");
  c_classify->add_option("--seed", classify_seed, "seed for the exchangeability spot-checks");

  auto* c_closure = app.add_subcommand("closure", "close a model under semi-graphoid rules");
  std::string closure_model, closure_out;
  std::vector<std::string> closure_with;
  bool closure_orbit = false;
  c_closure->add_option("--model", closure_model, "model file")->required();
  c_closure->add_option("--with", closure_with,
                        "additional closure properties (repeatable), e.g. intersection");
  c_closure->add_flag("--orbit", closure_orbit, "close under ground-set symmetry first");
  c_closure->add_option("-o,--output", closure_out, "output file (default stdout)");

  auto* c_check = app.add_subcommand("check", "test one property of a closed model");
  std::string check_model, check_prop;
  c_check->add_option("--model", check_model, "model file")->required();
  c_check->add_option("--property", check_prop, "property name, e.g. composition")->required();

  auto* c_dual = app.add_subcommand("dual", "complement every conditioning set");
  std::string dual_model, dual_out;
  c_dual->add_option("--model", dual_model, "model file")->required();
  c_dual->add_option("-o,--output", dual_out, "output file (default stdout)");

  auto* c_skeleton = app.add_subcommand("skeleton", "print the dependence skeleton of a model");
  std::string skeleton_model;
  bool skeleton_dot = false;
  c_skeleton->add_option("--model", skeleton_model, "model file")->required();
  c_skeleton->add_flag("--dot", skeleton_dot, "emit DOT instead of an edge list");

  auto* c_sep = app.add_subcommand("sep", "test graph separation");
  std::string sep_graph, sep_a, sep_b, sep_c;
  c_sep->add_option("--graph", sep_graph, "graph as <family>:<n>")->required();
  c_sep->add_option("--A", sep_a, "first element set")->required();
  c_sep->add_option("--B", sep_b, "second element set")->required();
  c_sep->add_option("--C", sep_c, "conditioning set (may be empty)")->expected(0, 1);

  auto* c_gen = app.add_subcommand("gen", "emit a canonical graph family as DOT");
  std::string gen_family;
  int gen_n = 0;
  bool gen_dot = false;
  c_gen->add_option("--family", gen_family, "empty, L-, Lbi, Lc-, Lcbi, or complete")
      ->required();
  c_gen->add_option("--n", gen_n, "node count")->required();
  c_gen->add_flag("--dot", gen_dot, "emit DOT (the default and only format)");

  auto* c_faithful = app.add_subcommand("faithful", "compare a model against a graph");
  std::string faithful_model, faithful_graph;
  c_faithful->add_option("--model", faithful_model, "model file")->required();
  c_faithful->add_option("--graph", faithful_graph, "graph as <family>:<n>")->required();

  auto* c_verify = app.add_subcommand("verify", "run the registered invariant checks");
  VerifyOptions vopts;
  bool verify_tsv = false;
  c_verify->add_option("--suite", vopts.suite, "all, vector, network, or appendix");
  c_verify->add_option("--nmax", vopts.nmax, "largest ground size the checks may use");
  c_verify->add_option("--seed", vopts.seed, "seed for randomized checks");
  c_verify->add_option("--threads", vopts.threads, "worker threads (0: hardware count)");
  c_verify->add_option("--only", vopts.only, "restrict to these check ids (repeatable)");
  c_verify->add_flag("--tsv", verify_tsv, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_classify) return run_classify(classify_file, classify_tol, classify_seed);
    if (*c_closure) return run_closure(closure_model, closure_with, closure_orbit, closure_out);
    if (*c_check) return run_check(check_model, check_prop);
    if (*c_dual) return run_dual(dual_model, dual_out);
    if (*c_skeleton) return run_skeleton(skeleton_model, skeleton_dot);
    if (*c_sep) return run_sep(sep_graph, sep_a, sep_b, sep_c);
    if (*c_gen) return run_gen(gen_family, gen_n);
    if (*c_faithful) return run_faithful(faithful_model, faithful_graph);
    if (*c_verify) return run_verify_cmd(vopts, verify_tsv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

// sizecsp command-line interface.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "sizecsp/classification.hpp"
#include "sizecsp/error.hpp"
#include "sizecsp/gadgets.hpp"
#include "sizecsp/io.hpp"
#include "sizecsp/solver.hpp"

using namespace sizecsp;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kGuard = 3, kDivergence = 4 };

ValueSet parse_value_list(const std::string& s) {
  ValueSet out{0};
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const int v = std::stoi(item);
    if (v < 0 || v > kMaxDelta) throw std::invalid_argument("value " + item + " outside 0..7");
    out.insert(v);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

void emit(const std::string& path, const std::string& content, const std::string& banner) {
  if (path.empty()) {
    std::cout << "# " << banner << "\n" << content;
  } else {
    write_file(path, content);
  }
}

int cmd_analyze(const std::string& lang_path, bool dump) {
  const Language g = parse_language(read_file(lang_path));
  const std::string d = dump_analysis(g);
  if (dump) {
    std::cout << d;
    return kOk;
  }
  std::cout << "Language " << lang_path << ": " << g.size() << " relation(s) over " << g.domain().to_string() << "\n";
  std::istringstream in(d);
  std::string line;
  while (std::getline(in, line)) std::cout << "  " << line << "\n";
  return kOk;
}

int cmd_classify(const std::string& lang_path, const std::string& problem, bool dump) {
  const Language g = cc0_normalize(parse_language(read_file(lang_path)));
  if (problem == "ocsp") {
    const OcspReport r = classify_ocsp(g);
    if (dump) std::cout << dump_ocsp_report(r);
    else {
      std::cout << "size-constrained: " << to_string(r.verdict) << "\n";
      if (r.witness)
        std::cout << "  D1 = " << r.witness->d1.to_string() << ", D2 = " << r.witness->d2.to_string()
                  << ", contraction " << r.witness->contraction.to_string() << ", counterexample "
                  << r.witness->counterexample.to_string() << "\n";
      else
        std::cout << "  " << r.evidence.size() << " pairs checked\n";
    }
    return r.verdict == OcspVerdict::fpt ? kOk : kNegative;
  }
  const CcspReport r = classify_ccsp(g);
  if (dump) std::cout << dump_ccsp_report(r);
  else {
    std::cout << "cardinality-constrained: " << to_string(r.verdict) << "\n";
    for (const auto& w : r.minimal_witnesses)
      std::cout << "  D' = " << w.dprime.to_string() << " (" << to_string(w.family) << "), counterexample "
                << w.counterexample.to_string() << "\n";
  }
  return r.verdict == CcspVerdict::fpt ? kOk : kNegative;
}

int cmd_solve(const std::string& lang_path, const std::string& inst_path, bool oracle) {
  const Language g = parse_language(read_file(lang_path));
  const Instance inst = parse_instance(read_file(inst_path), g);
  SolveResult r;
  bool hard = false;
  try {
    r = inst.pi ? solve_ccsp(inst, g) : solve_ocsp(inst, g);
  } catch (const HardLanguageError& e) {
    hard = true;
    std::cerr << "note: " << e.what() << "; falling back to exhaustive search\n";
    r = brute_force(inst);
    r.stats.path = "brute_force";
  }
  std::cout << dump_solve(r);
  if (oracle && !hard) {
    const SolveResult b = brute_force(inst);
    std::cout << "oracle: " << (b.found ? "solution" : "no_solution") << "\n";
    if (b.found != r.found) {
      std::cerr << "error: solver and exhaustive search disagree\n";
      return kDivergence;
    }
  }
  return r.found ? kOk : kNegative;
}

struct GadgetArgs {
  std::string lang, reduction, graph, sizes = "z", values, out, lang_out, map;
  int k = -1;
};

int cmd_gadget(const GadgetArgs& a) {
  const Graph graph = parse_graph(read_file(a.graph));
  if (a.reduction == "clique2mimp") {
    if (a.k < 1) throw CLI::ValidationError("--k", "clique2mimp needs --k >= 1");
    const MimpInstance m = clique_to_mimp(graph, a.k);
    std::cerr << "groups: " << m.t << ", padded_vertices: " << m.padded_vertices << "\n";
    emit(a.out, serialize_graph(m.graph), "graph");
    return kOk;
  }
  if (a.lang.empty()) throw CLI::ValidationError("lang", "a language file is needed for this reduction");
  const Language g = parse_language(read_file(a.lang));
  const ValueSet dprime = a.values.empty() ? g.domain() : parse_value_list(a.values);
  SizeSpec sizes;
  if (a.sizes == "z") sizes = SizeSpec::z_constants();
  else if (a.sizes == "unit") sizes = SizeSpec::unit(dprime, std::nullopt);
  else sizes = parse_sizes(read_file(a.sizes));
  if (a.k >= 0) sizes.k = a.k;
  if (sizes.mode == SizeMode::custom && !sizes.k) {
    // a multicolored solution picks one gadget per group
    int per_gadget = 0;
    for (Value d : dprime.nonzero()) per_gadget += sizes.custom[d];
    sizes.k = per_gadget * static_cast<int>(graph.groups.size());
  }
  const ReductionOutput r = a.reduction == "mis" ? reduce_mis(g, dprime, graph, sizes)
                                                 : reduce_implications(g, dprime, graph, sizes);
  std::cout << dump_reduction(r);
  if (!a.lang_out.empty()) write_file(a.lang_out, serialize_language(r.language));
  if (!a.out.empty()) write_file(a.out, serialize_instance(r.instance));
  if (!a.map.empty()) write_file(a.map, gadget_map(r.gadgets));
  return kOk;
}

struct EncodeArgs {
  std::string kind, graph, parts, out, lang_out;
  int t = 0, p = 2;
  bool pc = false, cardinality = false;
};

int cmd_encode(const EncodeArgs& a) {
  const auto kind = graph_problem_from_string(a.kind);
  if (!kind) throw CLI::ValidationError("--kind", "unknown problem '" + a.kind + "'");
  EncodeParams params;
  params.t = a.t;
  params.p = a.p;
  params.multicolored_variant = !a.pc;
  params.cardinality = a.cardinality;
  if (!a.parts.empty()) params.part_sizes = parse_int_list(a.parts);
  const EncodedProblem e = encode_graph_problem(*kind, parse_graph(read_file(a.graph)), params);
  emit(a.lang_out, serialize_language(e.language), "language");
  emit(a.out, serialize_instance(e.instance), "instance");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Size- and cardinality-constrained CSP toolkit"};
  app.require_subcommand(1);

  std::string lang, inst, problem = "ocsp";
  bool dump = false, oracle = false;

  auto* analyze = app.add_subcommand("analyze", "value types, components, core, contractions, weak separability");
  analyze->add_option("lang", lang, "language file")->required();
  analyze->add_flag("--dump", dump, "machine-readable key: value output");

  auto* classify = app.add_subcommand("classify", "FPT / hardness classification");
  classify->add_option("lang", lang, "language file")->required();
  classify->add_option("--problem", problem, "ocsp or ccsp")->check(CLI::IsMember({"ocsp", "ccsp"}));
  classify->add_flag("--dump", dump, "machine-readable key: value output");

  auto* solve = app.add_subcommand("solve", "solve an instance (ccsp when it has a card line)");
  solve->add_option("lang", lang, "language file")->required();
  solve->add_option("inst", inst, "instance file")->required();
  solve->add_flag("--oracle", oracle, "cross-check against exhaustive search");

  GadgetArgs ga;
  auto* gadget = app.add_subcommand("gadget", "build a hardness reduction instance");
  gadget->add_option("lang", ga.lang, "language file (not needed for clique2mimp)");
  gadget->add_option("--reduction", ga.reduction, "mis, implications or clique2mimp")
      ->required()
      ->check(CLI::IsMember({"mis", "implications", "clique2mimp"}));
  gadget->add_option("--graph", ga.graph, "graph file")->required();
  gadget->add_option("--sizes", ga.sizes, "z, unit or a sizes file");
  gadget->add_option("--values", ga.values, "comma-separated value subset D' (default: whole domain)");
  gadget->add_option("--k", ga.k, "size parameter (custom sizes / clique size)");
  gadget->add_option("--out", ga.out, "instance (or graph) output file");
  gadget->add_option("--lang-out", ga.lang_out, "language output file");
  gadget->add_option("--map", ga.map, "gadget map output file");

  EncodeArgs ea;
  auto* encode = app.add_subcommand("encode", "encode a graph problem as a constraint instance");
  encode->add_option("--kind", ea.kind, "problem kind")->required();
  encode->add_option("--graph", ea.graph, "graph file")->required();
  encode->add_option("--t", ea.t, "solution size");
  encode->add_option("--p", ea.p, "number of colours (p_colorable_subgraph)");
  encode->add_option("--parts", ea.parts, "comma-separated part sizes (p_partite_complete_subgraph)");
  encode->add_flag("--pc", ea.pc, "p_partite_clique: binary relation plus unaries");
  encode->add_flag("--cardinality", ea.cardinality, "emit a card line where optional");
  encode->add_option("--out", ea.out, "instance output file");
  encode->add_option("--lang-out", ea.lang_out, "language output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(lang, dump);
    if (*classify) return cmd_classify(lang, problem, dump);
    if (*solve) return cmd_solve(lang, inst, oracle);
    if (*gadget) return cmd_gadget(ga);
    if (*encode) return cmd_encode(ea);
  } catch (const GuardError& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

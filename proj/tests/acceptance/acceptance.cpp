// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "gadget_checks.hpp"
#include "oracles.hpp"
#include "sizecsp/error.hpp"
#include "sizecsp/io.hpp"

using namespace sizecsp;

namespace {

// Runtime limits in seconds; 0 means no limit.
constexpr double kLimit1 = 5, kLimit2 = 0, kLimit3 = 30, kLimit4 = 600, kLimit5 = 0, kLimit6 = 0, kLimit7 = 0,
                 kLimit8 = 60, kLimit9 = 300, kLimit10 = 0;

constexpr int kCorpusLanguages = 1000;
constexpr int kUniqueProbes = 200;
constexpr int kOcspToCcspInstances = 500;

Language load(const std::string& name) {
  return parse_language(read_file(std::string(SIZECSP_DATA_DIR) + "/languages/" + name));
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

int failures = 0;

void run(int id, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && secs >= limit) {
    std::ostringstream os;
    os << "runtime " << secs << " s exceeds " << limit << " s";
    o.fail(os.str());
  }
  std::printf("criterion %-2d %s  %7.2f s%s  %s\n", id, o.ok ? "PASS" : "FAIL", secs,
              limit > 0 ? (" (limit " + std::to_string(static_cast<int>(limit)) + " s)").c_str() : "",
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

// ---- shared random corpus (criteria 4-6) ----

struct CorpusEntry {
  Language language;
  bool ocsp_fpt = false, ccsp_fpt = false, weakly_separable = false;
  std::vector<Instance> instances;  // without pi for OCSP, with pi for CCSP
};

std::vector<CorpusEntry> build_corpus() {
  std::mt19937_64 rng(20261014);
  std::vector<CorpusEntry> corpus;
  std::uniform_int_distribution<int> delta(1, 2), n(1, 8), k(0, 4), m(0, 6);
  while (static_cast<int>(corpus.size()) < kCorpusLanguages) {
    CorpusEntry e;
    e.language = cc0_complete(oracle::random_language(rng, delta(rng), 3, 3));
    e.ocsp_fpt = classify_ocsp(e.language).verdict == OcspVerdict::fpt;
    e.ccsp_fpt = classify_ccsp(e.language).verdict == CcspVerdict::fpt;
    if (!e.ocsp_fpt && !e.ccsp_fpt) continue;
    e.weakly_separable = is_weakly_separable(e.language);
    for (int rep = 0; rep < 2; ++rep) {
      if (e.ocsp_fpt) e.instances.push_back(oracle::random_instance(rng, e.language, n(rng), m(rng), k(rng), false));
      if (e.ccsp_fpt) e.instances.push_back(oracle::random_instance(rng, e.language, n(rng), m(rng), k(rng), true));
    }
    corpus.push_back(std::move(e));
  }
  return corpus;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build_corpus();
  return c;
}

// Exact search for a decomposition of f into pairwise disjoint members of mins.
bool decomposes(Assignment rest, const std::vector<Assignment>& mins) {
  const auto v = std::find_if(rest.begin(), rest.end(), [](Value x) { return x != 0; });
  if (v == rest.end()) return true;
  const std::size_t pos = static_cast<std::size_t>(v - rest.begin());
  for (const Assignment& m : mins) {
    if (m[pos] == 0 || !oracle::extends(rest, m)) continue;
    Assignment next = rest;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) next[i] = 0;
    if (decomposes(next, mins)) return true;
  }
  return false;
}

std::string show(const ValueSet& s) { return s.to_string(); }

}  // namespace

int main() {
  run(1, kLimit1, [] {
    Outcome o;
    const Language g = load("types.lang");
    const TypeAnalysis t = analyze_types(g);
    const std::map<Value, ValueType> want{{1, ValueType::semiregular},
                                          {2, ValueType::self_producing},
                                          {3, ValueType::degenerate},
                                          {4, ValueType::regular},
                                          {5, ValueType::regular}};
    std::string got;
    for (auto [v, ty] : want) {
      got += std::to_string(v) + ":" + to_string(t.type[v]) + " ";
      o.require(t.type[v] == ty, "value " + std::to_string(v) + " typed " + to_string(t.type[v]));
    }
    o.require(g.domain().nonzero().size() == 5, "unexpected domain");
    if (o.ok) o.detail = got;
    return o;
  });

  run(2, kLimit2, [] {
    Outcome o;
    const Language g = load("produces.lang");
    o.require(produces(g, 1, 1) && produces(g, 2, 1), "1 not produced by 1 and 2");
    o.require(!produces(g, 1, 2) && !produces(g, 2, 2), "2 is produced");
    if (o.ok) o.detail = "produces(1,1)=produces(2,1)=true, produces(1,2)=produces(2,2)=false";
    return o;
  });

  run(3, kLimit3, [] {
    Outcome o;
    o.require(classify_ccsp(load("ccsphard1.lang")).verdict == CcspVerdict::fpt, "ccsphard1 not FPT");
    const CcspReport r2 = classify_ccsp(load("ccsphard2.lang"));
    o.require(r2.verdict != CcspVerdict::fpt, "ccsphard2 not hard");
    o.require(r2.witness && r2.witness->dprime == ValueSet{0, 1, 2, 3}, "ccsphard2 witness differs from {0,1,2,3}");
    o.require(classify_ocsp(load("nonweaklysepeasy.lang")).verdict == OcspVerdict::fpt, "nonweaklysepeasy not FPT");
    o.require(classify_ocsp(load("nonweaklysep-easy.lang")).verdict == OcspVerdict::fpt, "nonweaklysep-easy not FPT");
    o.require(classify_ocsp(load("is.lang")).verdict == OcspVerdict::w1_hard, "{R_IS} not hard");
    o.require(classify_ccsp(load("bc.lang")).verdict != CcspVerdict::fpt, "{R_BC} not hard");
    if (o.ok) o.detail = "fixture verdicts match; ccsphard2 witness " + show(r2.witness->dprime);
    return o;
  });

  run(4, kLimit4, [] {
    Outcome o;
    long ocsp = 0, ccsp = 0, found = 0;
    for (const CorpusEntry& e : corpus())
      for (const Instance& inst : e.instances) {
        const SolveResult r = inst.pi ? solve_ccsp(inst, e.language) : solve_ocsp(inst, e.language);
        const SolveResult truth = brute_force(inst);
        ++(inst.pi ? ccsp : ocsp);
        found += truth.found;
        if (r.found != truth.found) {
          o.fail("status mismatch on " + serialize_instance(inst));
          return o;
        }
        if (r.found && !is_solution(inst, r.assignment)) {
          o.fail("invalid solution " + assignment_to_string(r.assignment));
          return o;
        }
      }
    o.detail = std::to_string(corpus().size()) + " languages, " + std::to_string(ocsp) + " OCSP + " +
               std::to_string(ccsp) + " CCSP instances (" + std::to_string(found) + " satisfiable), 100% agreement";
    o.require(ocsp > 0 && ccsp > 0, "corpus lacks one problem kind");
    return o;
  });

  run(5, kLimit5, [] {
    Outcome o;
    long ext_checks = 0, mult_checks = 0;
    for (const CorpusEntry& e : corpus()) {
      const BoundFunctions b = BoundFunctions::of(e.language);
      for (const Instance& inst : e.instances) {
        const int k = inst.k;
        for (int v = 0; v < inst.num_vars; ++v)
          for (Value d : inst.domain.nonzero()) {
            const auto ext = minimal_extensions(inst, delta_assignment(inst.num_vars, v, d), k);
            ++ext_checks;
            if (ext.size() > b.d_prime(k)) {
              o.fail("minimal_extensions count " + std::to_string(ext.size()) + " > d'(k)");
              return o;
            }
          }
        const auto mins = minimal_assignments(inst, k);
        for (int v = 0; v < inst.num_vars; ++v) {
          const auto mult = std::count_if(mins.begin(), mins.end(), [&](const Assignment& m) { return m[v] != 0; });
          ++mult_checks;
          if (static_cast<std::uint64_t>(mult) > b.d(k)) {
            o.fail("multiplicity " + std::to_string(mult) + " > d(k)");
            return o;
          }
        }
      }
    }
    o.detail = std::to_string(ext_checks) + " extension counts, " + std::to_string(mult_checks) +
               " multiplicities, zero violations";
    return o;
  });

  run(6, kLimit6, [] {
    Outcome o;
    long languages = 0, assignments = 0;
    for (const CorpusEntry& e : corpus()) {
      if (!e.weakly_separable) continue;
      ++languages;
      for (const Instance& inst : e.instances) {
        const auto mins = minimal_assignments(inst, 4);
        bool bad = false;
        oracle::for_each_sparse(inst.num_vars, inst.domain, 4, [&](const Assignment& f) {
          if (oracle::nnz(f) == 0 || !oracle::satisfied(inst, f)) return false;
          ++assignments;
          if (!decomposes(f, mins)) {
            o.fail("no decomposition of " + assignment_to_string(f));
            bad = true;
          }
          return bad;
        });
        if (bad) return o;
      }
    }
    const Language im = load("im.lang");
    const Instance neg = parse_instance(read_file(std::string(SIZECSP_DATA_DIR) + "/instances/nonweaklysep.inst"), im);
    const Assignment all_ones{1, 1, 1};
    o.require(oracle::satisfied(neg, all_ones), "negative control (1,1,1) does not satisfy");
    o.require(!decomposes(all_ones, minimal_assignments(neg, 3)), "negative control decomposes");
    if (o.ok)
      o.detail = std::to_string(languages) + " weakly separable languages, " + std::to_string(assignments) +
                 " assignments decomposed; (1,1,1) control has no decomposition";
    return o;
  });

  run(7, kLimit7, [] {
    Outcome o;
    std::mt19937_64 rng(7);
    long probes = 0, inside = 0;
    for (int t = 1; t <= 5; ++t)
      for (int delta = 1; delta <= 5; ++delta) {
        std::vector<BigCount> z = z_set(t, delta);
        std::sort(z.begin(), z.end());
        z.erase(std::unique(z.begin(), z.end()), z.end());  // the lemma treats Z as a set of numbers
        BigCount bound = 1;
        for (int i = 0; i < 2 * t * delta; ++i) bound *= 4 * t * delta;
        for (int p = 0; p < kUniqueProbes; ++p) {
          std::vector<BigCount> a;
          for (const BigCount& x : z)
            if (rng() % 2) a.push_back(x);
          BigCount sum_a = 0;
          for (const BigCount& x : a) sum_a += x;
          // Adversary: greedy descending fill of sum_a with random skips and one random overshoot.
          std::vector<BigCount> b;
          BigCount rest = sum_a;
          for (auto it = z.rbegin(); it != z.rend(); ++it)
            while (*it <= rest && rng() % 8 != 0) {
              b.push_back(*it);
              rest -= *it;
            }
          if (rng() % 4 == 0) b.push_back(z[rng() % z.size()]);
          BigCount sum_b = 0;
          for (const BigCount& x : b) sum_b += x;
          ++probes;
          const BigCount diff = sum_a > sum_b ? BigCount(sum_a - sum_b) : BigCount(sum_b - sum_a);
          if (diff >= bound) continue;
          ++inside;
          std::sort(b.begin(), b.end());
          if (std::adjacent_find(b.begin(), b.end()) != b.end() || b != a) {
            o.fail("violation at t=" + std::to_string(t) + " delta=" + std::to_string(delta));
            return o;
          }
        }
      }
    // near-boundary: t=2, delta=1, base 8; A={Z_{1,1}}, B = 4 x Z_{2,1}
    const BigCount z11 = z_constant(2, 1, 1, 1), z21 = z_constant(2, 1, 2, 1);
    const BigCount diff = z11 - 4 * z21;
    o.require(diff >= BigCount(4096), "near-boundary difference below (4t delta)^(2t delta)");
    o.require(diff < z11, "near-boundary B not close to A");
    if (o.ok)
      o.detail = std::to_string(probes) + " probes (" + std::to_string(inside) +
                 " within the bound), no violation; near-boundary difference " + diff.str() + " >= 4096 with B != A";
    return o;
  });

  run(8, kLimit8, [] {
    Outcome o;
    long checks = 0;
    for (const char* name : {"is.lang", "im.lang"}) {
      const Language g = load(name);
      for (bool imp : {false, true}) {
        const auto t = gadget_checks::check_link_lemma(g, g.domain(), 1, imp);
        checks += t.checks;
        o.require(t.checks > 0, std::string(name) + ": nothing checked");
        o.require(t.violations == 0, std::string(name) + ": " + t.first_violation);
      }
    }
    if (o.ok) o.detail = std::to_string(checks) + " link-property checks over all assignments, zero violations";
    return o;
  });

  run(9, kLimit9, [] {
    Outcome o;
    // (a) bipartite graphs up to reordering of the left side, sides up to 5 + 5, t <= 2
    long graphs = 0;
    for (int a = 1; a <= 5; ++a)
      for (int b = 1; b <= 5; ++b) {
        std::vector<int> rows(a, 0);
        const int full = 1 << b;
        while (true) {
          Graph gr;
          gr.n = a + b;
          gr.groups.assign(2, {});
          for (int i = 0; i < a; ++i) gr.groups[0].push_back(i);
          for (int j = 0; j < b; ++j) gr.groups[1].push_back(a + j);
          for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
              if (rows[i] >> j & 1) gr.edges.push_back({i, a + j});
          for (int t = 1; t <= 2; ++t) {
            bool truth = false;
            oracle::for_each_subset(a, t, [&](const std::vector<int>& s) {
              int common = full - 1;
              for (int i : s) common &= rows[i];
              truth = truth || std::popcount(static_cast<unsigned>(common)) >= t;
              return truth;
            });
            EncodeParams p;
            p.t = t;
            const auto enc = encode_graph_problem(GraphProblem::biclique, gr, p);
            if (brute_force(enc.instance).found != truth) {
              o.fail("(a) mismatch on " + serialize_graph(gr));
              return o;
            }
          }
          ++graphs;
          int i = a - 1;  // next non-decreasing row sequence
          while (i >= 0 && rows[i] == full - 1) --i;
          if (i < 0) break;
          ++rows[i];
          for (int j = i + 1; j < a; ++j) rows[j] = rows[i];
        }
      }
    // (b) clique to multicolored implications
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> nv(1, 7);
    std::uniform_real_distribution<double> dens(0.3, 0.9), sparse(0.1, 0.8);
    int cliques = 0, mimp_checked = 0;
    while (mimp_checked < 300) {
      Graph g = oracle::random_graph(rng, nv(rng), sparse(rng));
      if (mimp_checked % 3 == 0)  // triangle-free: keep only edges across parity classes
        std::erase_if(g.edges, [](const auto& e) { return (e.first + e.second) % 2 == 0; });
      if (g.n > static_cast<int>(g.edges.size())) continue;
      for (int k = 1; k <= 3; ++k) {
        const MimpInstance mi = clique_to_mimp(g, k);
        const bool truth = oracle::has_clique(g, k);
        if (k == 3) cliques += truth;
        if (find_multicolored_implication_set(mi.graph).has_value() != truth) {
          o.fail("(b) mismatch at k=" + std::to_string(k) + " on " + serialize_graph(g));
          return o;
        }
      }
      ++mimp_checked;
    }
    // (c) unit-size reductions on up to 6 vertices
    const Language is = load("is.lang"), im = load("im.lang");
    int reductions = 0;
    for (int rep = 0; rep < 400; ++rep) {
      const int n = 1 + rep % 6, t = 1 + (rep / 6) % std::min(n, 3);
      Graph gr = oracle::random_graph(rng, n, dens(rng));
      std::bernoulli_distribution arc(0.3);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (u != v && arc(rng)) gr.arcs.push_back({u, v});
      gr.groups.assign(t, {});
      for (int v = 0; v < n; ++v) gr.groups[rng() % t].push_back(v);
      if (std::any_of(gr.groups.begin(), gr.groups.end(), [](const auto& g) { return g.empty(); })) continue;
      Graph undirected = gr;
      undirected.arcs.clear();
      const auto mis = reduce_mis(is, is.domain(), undirected, SizeSpec::unit(is.domain(), t));
      if (brute_force(mis.instance).found != oracle::has_multicolored_independent_set(undirected)) {
        o.fail("(c) reduce_mis mismatch on " + serialize_graph(undirected));
        return o;
      }
      Graph directed = gr;
      directed.edges.clear();
      const auto imp = reduce_implications(im, im.domain(), directed, SizeSpec::unit(im.domain(), t));
      // unit bags do not force one gadget per group, so the target is plain implications of size t
      if (brute_force(imp.instance).found != oracle::has_implication_set(directed, t)) {
        o.fail("(c) reduce_implications mismatch on " + serialize_graph(directed));
        return o;
      }
      const bool mc = oracle::has_multicolored_implications(directed);
      if (imp.forward != (mc ? ForwardStatus::verified : ForwardStatus::no_source_solution)) {
        o.fail("(c) forward check disagrees on " + serialize_graph(directed));
        return o;
      }
      reductions += 2;
    }
    o.detail = "(a) " + std::to_string(graphs) + " bipartite graphs x t<=2, (b) " + std::to_string(mimp_checked) +
               " graphs x k<=3 (" + std::to_string(cliques) + " with triangles), (c) " + std::to_string(reductions) +
               " reductions";
    return o;
  });

  run(10, kLimit10, [] {
    Outcome o;
    std::mt19937_64 rng(10);
    int done = 0, yes = 0;
    while (done < kOcspToCcspInstances) {
      const Language g = oracle::random_language(rng, 1 + done % 2, 3, 3);
      const Instance inst = oracle::random_instance(rng, g, 1 + done % 7, done % 5, done % 5, false);
      const bool truth = brute_force(inst).found;
      bool any = false;
      for (const Instance& c : ocsp_to_ccsp(inst)) any = any || brute_force(c).found;
      if (any != truth) {
        o.fail("disagreement on " + serialize_instance(inst));
        return o;
      }
      yes += truth;
      ++done;
    }
    o.detail = std::to_string(done) + " instances (" + std::to_string(yes) + " satisfiable), 100% agreement";
    return o;
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}

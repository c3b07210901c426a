#include "sizecsp/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "sizecsp/error.hpp"

namespace sizecsp {

namespace {

constexpr std::int64_t kMaxGadgetVars = 2'000'000;

BigCount big_pow(int base, int e) {
  BigCount r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

RelationPtr rel(const std::string& name, int arity, std::vector<Tuple> tuples) {
  return make_relation(name, arity, std::move(tuples));
}

}  // namespace

BigCount z_constant(int t, int delta, int i, int d) {
  if (t < 1 || delta < 1) throw std::invalid_argument("z_constant: t and delta must be positive");
  if (i < 1 || i > t) throw std::invalid_argument("z_constant: group index out of range");
  if (d < 1 || d > delta) throw std::invalid_argument("z_constant: value out of range");
  const int base = 4 * t * delta;
  const int pos = i * delta + d;
  return big_pow(base, 2 * t * delta + pos) + big_pow(base, 5 * t * delta - pos);
}

std::vector<BigCount> z_set(int t, int delta) {
  std::vector<BigCount> out;
  for (int i = 1; i <= t; ++i)
    for (int d = 1; d <= delta; ++d) out.push_back(z_constant(t, delta, i, d));
  return out;
}

std::vector<int> base_digits(BigCount x, int base) {
  if (base < 2) throw std::invalid_argument("base_digits: base must be at least 2");
  std::vector<int> digits;
  while (x > 0) {
    digits.push_back(static_cast<int>(x % base));
    x /= base;
  }
  return digits;
}

void Graph::validate() const {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  auto check = [&](int v) {
    if (v < 0 || v >= n) throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range");
  };
  for (auto [u, v] : edges) {
    check(u);
    check(v);
  }
  for (auto [u, v] : arcs) {
    check(u);
    check(v);
  }
  std::vector<char> seen(n, 0);
  for (const auto& grp : groups)
    for (int v : grp) {
      check(v);
      if (seen[v]) throw std::invalid_argument("graph: vertex " + std::to_string(v) + " in two groups");
      seen[v] = 1;
    }
}

bool Graph::adjacent(int u, int v) const {
  for (auto [a, b] : edges)
    if ((a == u && b == v) || (a == v && b == u)) return true;
  return false;
}

Value Gadget::value_of(int var) const {
  for (Value d = 1; d <= kMaxDelta; ++d)
    if (std::find(bags[d].begin(), bags[d].end(), var) != bags[d].end()) return d;
  return 0;
}

int VariableAllocator::allocate(int count) {
  if (count < 0) throw std::invalid_argument("allocate: negative count");
  const int start = next_;
  if (static_cast<std::int64_t>(next_) + count > kMaxGadgetVars) throw GuardError("gadget variable limit exceeded");
  next_ += count;
  return start;
}

GadgetBuilder::GadgetBuilder(const Language& g, ValueSet dprime, std::uint64_t constraint_limit)
    : g_(g), dprime_(dprime), limit_(constraint_limit) {
  if (!dprime.contains(0)) throw std::invalid_argument("gadget: 0 missing from the value set");
  if (!dprime.subset_of(g.domain())) throw std::invalid_argument("gadget: value set outside the domain");
  restricted_ = restrict_language(g, dprime);
}

RelationPtr GadgetBuilder::supp(std::size_t relation_index, const Tuple& t) {
  auto key = std::make_pair(relation_index, t);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  auto r = std::make_shared<const Relation>(substitute_outside_support(g_[relation_index], t));
  // equal relations (by extension and name) share a pointer
  for (const auto& u : used_)
    if (u->name() == r->name() && *u == *r) return cache_.emplace(key, u).first->second;
  used_.push_back(r);
  return cache_.emplace(key, r).first->second;
}

void GadgetBuilder::emit(std::size_t relation_index, const Tuple& t1, const Gadget& a, const Tuple& t2,
                         const Gadget& b, std::vector<Constraint>& out) {
  const Tuple u = tuple_union(t1, t2);
  std::vector<const std::vector<int>*> choices;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (t1[i] != 0) choices.push_back(&a.bags[t1[i]]);
    else if (t2[i] != 0) choices.push_back(&b.bags[t2[i]]);
  }
  if (choices.empty()) return;
  std::uint64_t combos = 1;
  for (const auto* c : choices) {
    if (c->empty()) return;
    combos *= c->size();
    if (combos > limit_) throw GuardError("gadget constraint limit exceeded");
  }
  emitted_ += combos;
  if (emitted_ > limit_) throw GuardError("gadget constraint limit exceeded");
  const RelationPtr r = supp(relation_index, u);
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    std::vector<int> scope(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i) scope[i] = (*choices[i])[idx[i]];
    out.push_back({std::move(scope), r});
    int j = static_cast<int>(choices.size()) - 1;
    while (j >= 0 && ++idx[j] == choices[j]->size()) idx[j--] = 0;
    if (j < 0) break;
  }
}

Gadget GadgetBuilder::mvm(const std::array<int, kMaxDelta + 1>& bag_sizes, VariableAllocator& alloc,
                          std::vector<Constraint>& out, int group, int item) {
  Gadget gadget;
  gadget.group = group;
  gadget.item = item;
  for (Value d : dprime_.nonzero()) {
    if (bag_sizes[d] <= 0) throw std::invalid_argument("gadget: bag size for value " + std::to_string(d) + " must be positive");
    const int start = alloc.allocate(bag_sizes[d]);
    for (int i = 0; i < bag_sizes[d]; ++i) gadget.bags[d].push_back(start + i);
  }
  for (std::size_t ri = 0; ri < g_.size(); ++ri) {
    const Tuple zero(g_[ri].arity(), 0);
    for (const Tuple& t : g_[ri].tuples()) {
      if (is_zero(t) || !contained_in(t, dprime_)) continue;
      emit(ri, t, gadget, zero, gadget, out);
    }
  }
  return gadget;
}

void GadgetBuilder::nand(const Gadget& a, const Gadget& b, std::vector<Constraint>& out) {
  for (std::size_t ri = 0; ri < g_.size(); ++ri) {
    const auto& tuples = g_[ri].tuples();
    for (const Tuple& t1 : tuples) {
      if (is_zero(t1) || !contained_in(t1, dprime_)) continue;
      for (const Tuple& t2 : tuples) {
        if (is_zero(t2) || !contained_in(t2, dprime_) || !disjoint(t1, t2)) continue;
        emit(ri, t1, a, t2, b, out);
      }
    }
  }
}

void GadgetBuilder::imp(const Gadget& a, const Gadget& b, std::vector<Constraint>& out) {
  for (std::size_t ri = 0; ri < g_.size(); ++ri) {
    const auto& tuples = g_[ri].tuples();
    for (const Tuple& t2 : tuples) {
      if (is_zero(t2) || !contained_in(t2, dprime_)) continue;
      for (const Tuple& u : tuples) {
        if (!contained_in(u, dprime_) || !is_extension(u, t2)) continue;
        const Tuple t1 = tuple_difference(u, t2);
        if (is_zero(t1)) continue;
        emit(ri, t1, a, t2, b, out);
      }
    }
  }
}

Language GadgetBuilder::used_language() const { return Language(g_.domain(), used_); }

std::pair<Gadget, std::vector<Constraint>> build_mvm_gadget(const Language& g, ValueSet dprime,
                                                            const std::array<int, kMaxDelta + 1>& bag_sizes) {
  GadgetBuilder b(g, dprime);
  VariableAllocator alloc;
  std::vector<Constraint> out;
  Gadget gadget = b.mvm(bag_sizes, alloc, out);
  return {std::move(gadget), std::move(out)};
}

std::vector<Constraint> link_nand(const Gadget& a, const Gadget& b, const Language& g, ValueSet dprime) {
  GadgetBuilder builder(g, dprime);
  std::vector<Constraint> out;
  builder.nand(a, b, out);
  return out;
}

std::vector<Constraint> link_imp(const Gadget& a, const Gadget& b, const Language& g, ValueSet dprime) {
  GadgetBuilder builder(g, dprime);
  std::vector<Constraint> out;
  builder.imp(a, b, out);
  return out;
}

void set_standard(const Gadget& gadget, Assignment& f) {
  for (Value d = 1; d <= kMaxDelta; ++d)
    for (int v : gadget.bags[d]) f.at(v) = d;
}

MultiMorphism induced_morphism(const Gadget& gadget, const Assignment& f, ValueSet dprime) {
  MultiMorphism m;
  m.source = dprime;
  m.map[0] = ValueSet{0};
  for (Value d : dprime.nonzero())
    for (int v : gadget.bags[d]) m.map[d].insert(f.at(v));
  return m;
}

SizeSpec SizeSpec::unit(ValueSet dprime, std::optional<int> k) {
  SizeSpec s;
  s.mode = SizeMode::custom;
  for (Value d : dprime.nonzero()) s.custom[d] = 1;
  s.k = k;
  return s;
}

const char* to_string(ForwardStatus s) {
  switch (s) {
    case ForwardStatus::verified: return "verified";
    case ForwardStatus::no_source_solution: return "no_source_solution";
    case ForwardStatus::skipped: return "skipped";
  }
  return "?";
}

namespace {

std::vector<int> group_of(const Graph& graph) {
  std::vector<int> g(graph.n, -1);
  for (int i = 0; i < static_cast<int>(graph.groups.size()); ++i)
    for (int v : graph.groups[i]) g[v] = i;
  return g;
}

// One vertex per group in group order; `ok(chosen, v)` decides whether v can
// join the current partial choice.
std::optional<std::vector<int>> pick_one_per_group(const Graph& graph, std::uint64_t limit,
                                                   const std::function<bool(const std::vector<int>&, int)>& ok,
                                                   const std::function<bool(const std::vector<int>&)>& final_check) {
  std::vector<int> chosen;
  std::uint64_t nodes = 0;
  std::function<bool(std::size_t)> rec = [&](std::size_t gi) -> bool {
    if (++nodes > limit) throw GuardError("multicolored search limit exceeded");
    if (gi == graph.groups.size()) return final_check(chosen);
    for (int v : graph.groups[gi]) {
      if (!ok(chosen, v)) continue;
      chosen.push_back(v);
      if (rec(gi + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(0)) return chosen;
  return std::nullopt;
}

std::vector<std::vector<char>> adjacency(const Graph& graph) {
  std::vector<std::vector<char>> adj(graph.n, std::vector<char>(graph.n, 0));
  for (auto [u, v] : graph.edges) adj[u][v] = adj[v][u] = 1;
  return adj;
}

}  // namespace

std::optional<std::vector<int>> find_multicolored_independent_set(const Graph& graph, std::uint64_t limit) {
  graph.validate();
  const auto adj = adjacency(graph);
  return pick_one_per_group(
      graph, limit,
      [&](const std::vector<int>& chosen, int v) {
        if (adj[v][v]) return false;
        return std::none_of(chosen.begin(), chosen.end(), [&](int u) { return adj[u][v]; });
      },
      [](const std::vector<int>&) { return true; });
}

std::optional<std::vector<int>> find_multicolored_implication_set(const Graph& graph, std::uint64_t limit) {
  graph.validate();
  const auto grp = group_of(graph);
  std::vector<std::vector<int>> out(graph.n);
  for (auto [u, v] : graph.arcs) out[u].push_back(v);
  auto closed = [&](const std::vector<int>& chosen, bool partial) {
    std::vector<char> in(graph.n, 0);
    for (int v : chosen) in[v] = 1;
    const int decided = static_cast<int>(chosen.size());
    for (int u : chosen)
      for (int v : out[u]) {
        if (in[v]) continue;
        if (!partial || grp[v] < 0 || grp[v] < decided) return false;
      }
    return true;
  };
  return pick_one_per_group(
      graph, limit,
      [&](const std::vector<int>& chosen, int v) {
        std::vector<int> c = chosen;
        c.push_back(v);
        return closed(c, true);
      },
      [&](const std::vector<int>& chosen) { return closed(chosen, false); });
}

namespace {

struct Layout {
  int t = 0;
  std::vector<Value> values;                             // nonzero dprime values
  std::vector<std::array<int, kMaxDelta + 1>> group_sizes;  // bag sizes per group
  int k = 0;
  bool faithful = false;
};

Layout plan_sizes(const Graph& graph, ValueSet dprime, const SizeSpec& sizes) {
  Layout l;
  l.t = static_cast<int>(graph.groups.size());
  l.values = dprime.nonzero().values();
  if (l.t == 0) throw std::invalid_argument("reduction: the graph needs vertex groups");
  std::vector<char> covered(graph.n, 0);
  for (const auto& g : graph.groups)
    for (int v : g) covered[v] = 1;
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    throw std::invalid_argument("reduction: every vertex must belong to a group");
  const int delta = static_cast<int>(l.values.size());
  l.group_sizes.resize(l.t);
  if (sizes.mode == SizeMode::z_constants) {
    l.faithful = true;
    BigCount total_vars = 0, k = 0;
    for (int x = 0; x < l.t; ++x) {
      for (int j = 0; j < delta; ++j) {
        const BigCount z = z_constant(l.t, delta, x + 1, j + 1);
        if (z > kMaxGadgetVars) throw GuardError("reduction: bag size " + z.str() + " exceeds the variable limit");
        l.group_sizes[x][l.values[j]] = static_cast<int>(z);
        k += z;
        total_vars += z * static_cast<int>(graph.groups[x].size());
      }
    }
    if (total_vars > kMaxGadgetVars) throw GuardError("reduction: " + total_vars.str() + " variables exceed the limit");
    l.k = static_cast<int>(k);
  } else {
    if (!sizes.k) throw std::invalid_argument("reduction: custom sizes need an explicit size parameter");
    for (int x = 0; x < l.t; ++x)
      for (Value d : l.values) l.group_sizes[x][d] = sizes.custom[d];
    l.k = *sizes.k;
  }
  return l;
}

template <class Link, class Source>
ReductionOutput build_reduction(const Language& g, ValueSet dprime, const Graph& graph, const SizeSpec& sizes,
                                const Counterexample& ce, Link link, Source source) {
  graph.validate();
  const Layout l = plan_sizes(graph, dprime, sizes);
  GadgetBuilder builder(g, dprime);
  VariableAllocator alloc;
  std::vector<Constraint> cons;
  ReductionOutput out;
  out.gadgets.resize(graph.n);
  for (int x = 0; x < l.t; ++x)
    for (int y = 0; y < static_cast<int>(graph.groups[x].size()); ++y) {
      const int v = graph.groups[x][y];
      out.gadgets[v] = builder.mvm(l.group_sizes[x], alloc, cons, x, y);
    }
  link(builder, out.gadgets, cons);
  out.instance.num_vars = alloc.count();
  out.instance.domain = g.domain();
  out.instance.constraints = std::move(cons);
  out.instance.k = l.k;
  out.instance.validate();
  out.language = builder.used_language();
  out.faithful = l.faithful;
  out.counterexample = ce;

  std::optional<std::vector<int>> sol;
  try {
    sol = source();
  } catch (const GuardError&) {
    out.forward = ForwardStatus::skipped;
    return out;
  }
  if (!sol) {
    out.forward = ForwardStatus::no_source_solution;
    return out;
  }
  Assignment f(out.instance.num_vars, 0);
  for (int v : *sol) set_standard(out.gadgets[v], f);
  if (assignment_size(f) != out.instance.k) {
    out.forward = ForwardStatus::skipped;
    return out;
  }
  if (!is_solution(out.instance, f)) throw std::logic_error("reduction: forward direction failed on the standard assignment");
  out.forward = ForwardStatus::verified;
  return out;
}

}  // namespace

ReductionOutput reduce_mis(const Language& g, ValueSet dprime, const Graph& graph, const SizeSpec& sizes) {
  const Language h = restrict_language(g, dprime);
  auto ce = find_counterexample(h, true, Counterexample::Kind::union_kind);
  if (!ce) throw std::invalid_argument("reduce_mis: no union counterexample in the restricted language");
  return build_reduction(
      g, dprime, graph, sizes, *ce,
      [&](GadgetBuilder& b, const std::vector<Gadget>& gadgets, std::vector<Constraint>& cons) {
        for (auto [u, v] : graph.edges) b.nand(gadgets[u], gadgets[v], cons);
        for (const auto& grp : graph.groups)
          for (std::size_t i = 0; i < grp.size(); ++i)
            for (std::size_t j = i + 1; j < grp.size(); ++j) b.nand(gadgets[grp[i]], gadgets[grp[j]], cons);
      },
      [&] { return find_multicolored_independent_set(graph); });
}

ReductionOutput reduce_implications(const Language& g, ValueSet dprime, const Graph& graph, const SizeSpec& sizes) {
  const Language h = restrict_language(g, dprime);
  auto ce = find_counterexample(h, true, Counterexample::Kind::difference_kind);
  if (!ce) throw std::invalid_argument("reduce_implications: no difference counterexample in the restricted language");
  return build_reduction(
      g, dprime, graph, sizes, *ce,
      [&](GadgetBuilder& b, const std::vector<Gadget>& gadgets, std::vector<Constraint>& cons) {
        for (auto [u, v] : graph.arcs) b.imp(gadgets[u], gadgets[v], cons);
      },
      [&] { return find_multicolored_implication_set(graph); });
}

MimpInstance clique_to_mimp(const Graph& graph, int k) {
  graph.validate();
  if (k < 1) throw std::invalid_argument("clique_to_mimp: k must be positive");
  const int m = static_cast<int>(graph.edges.size());
  if (graph.n > m)
    throw std::invalid_argument("clique_to_mimp: more vertices than edges; remove acyclic components first");
  for (auto [u, v] : graph.edges)
    if (u == v) throw std::invalid_argument("clique_to_mimp: self-loops are not supported");
  MimpInstance out;
  out.padded_vertices = m - graph.n;
  const int n = m;
  out.t = k + k * (k - 1) / 2;
  out.graph.n = out.t * n;
  for (int i = 0; i < out.t; ++i) {
    std::vector<int> grp;
    for (int j = 0; j < n; ++j) grp.push_back(i * n + j);
    out.graph.groups.push_back(std::move(grp));
  }
  int pair_group = k;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j, ++pair_group)
      for (int s = 0; s < m; ++s) {
        const int a = std::min(graph.edges[s].first, graph.edges[s].second);
        const int b = std::max(graph.edges[s].first, graph.edges[s].second);
        out.graph.arcs.push_back({pair_group * n + s, i * n + a});
        out.graph.arcs.push_back({pair_group * n + s, j * n + b});
      }
  return out;
}

const char* to_string(GraphProblem p) {
  switch (p) {
    case GraphProblem::independent_set: return "independent_set";
    case GraphProblem::vertex_cover: return "vertex_cover";
    case GraphProblem::implications: return "implications";
    case GraphProblem::biclique: return "biclique";
    case GraphProblem::general_biclique: return "general_biclique";
    case GraphProblem::p_partite_clique: return "p_partite_clique";
    case GraphProblem::p_colorable_subgraph: return "p_colorable_subgraph";
    case GraphProblem::p_partite_complete_subgraph: return "p_partite_complete_subgraph";
  }
  return "?";
}

std::optional<GraphProblem> graph_problem_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(GraphProblem::p_partite_complete_subgraph); ++i) {
    const auto p = static_cast<GraphProblem>(i);
    if (s == to_string(p)) return p;
  }
  return std::nullopt;
}

EncodedProblem encode_graph_problem(GraphProblem kind, const Graph& graph, const EncodeParams& params) {
  graph.validate();
  if (params.t < 0) throw std::invalid_argument("encode: negative solution size");
  const auto adj = adjacency(graph);
  EncodedProblem out;
  Instance& inst = out.instance;
  inst.num_vars = graph.n;
  auto unary = [](Value i) { return rel("R_" + std::to_string(i), 1, {{0}, {i}}); };
  auto set_pi = [&](const std::vector<int>& counts) {
    CardinalityMap p;
    for (std::size_t i = 0; i < counts.size(); ++i) p.counts[i + 1] = counts[i];
    inst.pi = p;
    inst.k = p.total();
  };

  switch (kind) {
    case GraphProblem::independent_set:
    case GraphProblem::vertex_cover:
    case GraphProblem::implications: {
      RelationPtr r;
      if (kind == GraphProblem::independent_set) r = rel("R_IS", 2, {{0, 0}, {1, 0}, {0, 1}});
      else if (kind == GraphProblem::vertex_cover) r = rel("R_VC", 2, {{0, 1}, {1, 0}, {1, 1}});
      else r = rel("R_IM", 2, {{0, 0}, {0, 1}, {1, 1}});
      out.language = Language(1, {r});
      inst.domain = ValueSet{0, 1};
      const auto& pairs = kind == GraphProblem::implications ? graph.arcs : graph.edges;
      for (auto [u, v] : pairs) inst.constraints.push_back({{u, v}, r});
      inst.k = params.t;
      if (params.cardinality) set_pi({params.t});
      break;
    }
    case GraphProblem::biclique: {
      if (graph.groups.size() != 2) throw std::invalid_argument("biclique: expected two groups (the sides A and B)");
      const auto r = rel("R_BC", 2, {{0, 0}, {1, 0}, {0, 2}});
      const auto u1 = unary(1), u2 = unary(2);
      out.language = Language(2, {r, u1, u2});
      inst.domain = ValueSet{0, 1, 2};
      for (int v : graph.groups[0]) inst.constraints.push_back({{v}, u1});
      for (int w : graph.groups[1]) inst.constraints.push_back({{w}, u2});
      for (int v : graph.groups[0])
        for (int w : graph.groups[1])
          if (!adj[v][w]) inst.constraints.push_back({{v, w}, r});
      set_pi({params.t, params.t});
      break;
    }
    case GraphProblem::general_biclique: {
      const auto r = rel("R_2-CS", 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {2, 2}});
      out.language = Language(2, {r});
      inst.domain = ValueSet{0, 1, 2};
      for (int v = 0; v < graph.n; ++v)
        for (int w = v + 1; w < graph.n; ++w)
          if (!adj[v][w]) inst.constraints.push_back({{v, w}, r});
      set_pi({params.t, params.t});
      break;
    }
    case GraphProblem::p_partite_clique: {
      const int p = static_cast<int>(graph.groups.size());
      if (p < 2 || p > kMaxDelta) throw std::invalid_argument("p_partite_clique: need 2..7 groups");
      inst.domain = ValueSet::range(0, p);
      std::vector<RelationPtr> unaries;
      for (int i = 1; i <= p; ++i) unaries.push_back(unary(i));
      for (int i = 0; i < p; ++i)
        for (int v : graph.groups[i]) inst.constraints.push_back({{v}, unaries[i]});
      if (params.multicolored_variant) {
        if (p > kMaxArity) throw std::invalid_argument("p_partite_clique: the multicolored relation needs p <= 6");
        std::vector<Tuple> tuples;
        Tuple t(p, 0);
        std::function<void(int)> gen = [&](int i) {
          if (i == p) {
            bool full = true;
            for (int j = 0; j < p; ++j) full = full && t[j] == j + 1;
            if (!full) tuples.push_back(t);
            return;
          }
          t[i] = 0;
          gen(i + 1);
          t[i] = i + 1;
          gen(i + 1);
        };
        gen(0);
        const auto r = rel("R_" + std::to_string(p) + "-MC", p, std::move(tuples));
        std::vector<RelationPtr> rels{r};
        rels.insert(rels.end(), unaries.begin(), unaries.end());
        out.language = Language(p, rels);
        std::vector<int> pick(p);
        std::function<void(int)> tuples_of = [&](int i) {
          if (i == p) {
            bool some_gap = false;
            for (int a = 0; a < p && !some_gap; ++a)
              for (int b = a + 1; b < p && !some_gap; ++b) some_gap = !adj[pick[a]][pick[b]];
            if (some_gap) inst.constraints.push_back({pick, r});
            return;
          }
          for (int v : graph.groups[i]) {
            pick[i] = v;
            tuples_of(i + 1);
          }
        };
        tuples_of(0);
      } else {
        std::vector<Tuple> tuples{{0, 0}};
        for (int i = 1; i <= p; ++i) {
          tuples.push_back({i, 0});
          tuples.push_back({0, i});
        }
        const auto r = rel("R_" + std::to_string(p) + "-PC", 2, std::move(tuples));
        std::vector<RelationPtr> rels{r};
        rels.insert(rels.end(), unaries.begin(), unaries.end());
        out.language = Language(p, rels);
        for (int i = 0; i < p; ++i)
          for (int j = i + 1; j < p; ++j)
            for (int v : graph.groups[i])
              for (int w : graph.groups[j])
                if (!adj[v][w]) inst.constraints.push_back({{v, w}, r});
      }
      set_pi(std::vector<int>(p, params.t));
      break;
    }
    case GraphProblem::p_colorable_subgraph: {
      const int p = params.p;
      if (p < 1 || p > kMaxDelta) throw std::invalid_argument("p_colorable_subgraph: p must be in 1..7");
      std::vector<Tuple> tuples;
      for (int a = 0; a <= p; ++a)
        for (int b = 0; b <= p; ++b)
          if (a == 0 || a != b) tuples.push_back({a, b});
      const auto r = rel("R_" + std::to_string(p) + "-COL", 2, std::move(tuples));
      out.language = Language(p, {r});
      inst.domain = ValueSet::range(0, p);
      for (auto [u, v] : graph.edges) inst.constraints.push_back({{u, v}, r});
      inst.k = params.t;
      break;
    }
    case GraphProblem::p_partite_complete_subgraph: {
      const int p = static_cast<int>(params.part_sizes.size());
      if (p < 1 || p > kMaxDelta) throw std::invalid_argument("p_partite_complete_subgraph: need 1..7 part sizes");
      std::vector<Tuple> tuples{{0, 0}};
      for (int i = 1; i <= p; ++i) {
        tuples.push_back({i, 0});
        tuples.push_back({0, i});
        tuples.push_back({i, i});
      }
      const auto r = rel("R_" + std::to_string(p) + "-CS", 2, std::move(tuples));
      out.language = Language(p, {r});
      inst.domain = ValueSet::range(0, p);
      for (int v = 0; v < graph.n; ++v)
        for (int w = v + 1; w < graph.n; ++w)
          if (!adj[v][w]) inst.constraints.push_back({{v, w}, r});
      set_pi(params.part_sizes);
      break;
    }
  }
  inst.validate();
  return out;
}

}  // namespace sizecsp

// Exhaustive reference implementations used to cross-check the library.
// Written directly from the definitions, without pruning or caching.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "sizecsp/gadgets.hpp"
#include "sizecsp/instance.hpp"
#include "sizecsp/language.hpp"
#include "sizecsp/morphism.hpp"

namespace oracle {

using namespace sizecsp;

// ---- maps -------------------------------------------------------------

// Every zero-preserving map source -> target, as a table indexed by value.
inline std::vector<std::array<Value, kMaxDelta + 1>> all_maps(ValueSet source, ValueSet target) {
  const auto src = source.nonzero().values();
  const auto tgt = target.values();
  std::vector<std::array<Value, kMaxDelta + 1>> out;
  std::vector<std::size_t> idx(src.size(), 0);
  while (true) {
    std::array<Value, kMaxDelta + 1> m{};
    for (std::size_t i = 0; i < src.size(); ++i) m[src[i]] = tgt[idx[i]];
    out.push_back(m);
    std::size_t j = 0;
    while (j < src.size() && ++idx[j] == tgt.size()) idx[j++] = 0;
    if (j == src.size()) break;
  }
  return out;
}

inline bool tuple_inside(const Tuple& t, ValueSet s) {
  return std::all_of(t.begin(), t.end(), [&](Value v) { return s.contains(v); });
}

inline bool is_morphism(const Language& g, ValueSet source, const std::array<Value, kMaxDelta + 1>& m) {
  for (const auto& r : g.relations())
    for (const Tuple& t : r->tuples()) {
      if (!tuple_inside(t, source)) continue;
      Tuple u(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) u[i] = m[t[i]];
      if (!r->contains(u)) return false;
    }
  return true;
}

inline std::vector<std::array<Value, kMaxDelta + 1>> endomorphisms(const Language& g, ValueSet source,
                                                                  ValueSet target) {
  std::vector<std::array<Value, kMaxDelta + 1>> out;
  for (const auto& m : all_maps(source, target))
    if (is_morphism(g, source, m)) out.push_back(m);
  return out;
}

// Full product check of a set-valued map.
inline bool is_multi_morphism(const Language& g, ValueSet source, const ImageTable& phi) {
  for (const auto& r : g.relations())
    for (const Tuple& t : r->tuples()) {
      if (!tuple_inside(t, source)) continue;
      std::vector<std::vector<Value>> choices;
      for (Value v : t) choices.push_back(v == 0 ? std::vector<Value>{0} : phi[v].values());
      std::vector<std::size_t> idx(t.size(), 0);
      bool done = t.empty();
      if (done && !r->contains({})) return false;
      while (!done) {
        Tuple u(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) u[i] = choices[i][idx[i]];
        if (!r->contains(u)) return false;
        std::size_t j = 0;
        while (j < t.size() && ++idx[j] == choices[j].size()) idx[j++] = 0;
        done = j == t.size();
      }
    }
  return true;
}

// Every set-valued map over dom(g) with nonempty images (0 -> {0}).
inline void for_each_multi_map(const Language& g, const std::function<void(const ImageTable&)>& visit) {
  const auto src = g.domain().nonzero().values();
  const std::uint32_t full = g.domain().bits();
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m <= full; ++m)
    if ((m & ~full) == 0) masks.push_back(m);
  std::vector<std::size_t> idx(src.size(), 0);
  while (true) {
    ImageTable phi{};
    phi[0] = ValueSet{0};
    for (std::size_t i = 0; i < src.size(); ++i) phi[src[i]] = ValueSet::from_bits(masks[idx[i]]);
    visit(phi);
    std::size_t j = 0;
    while (j < src.size() && ++idx[j] == masks.size()) idx[j++] = 0;
    if (j == src.size()) break;
  }
}

inline bool produces(const Language& g, Value x, Value y) {
  ImageTable phi{};
  for (Value v : g.domain()) phi[v] = ValueSet{0};
  phi[x] = ValueSet{0, y};
  return is_multi_morphism(g, g.domain(), phi);
}

// Value type straight from the definition, enumerating all set-valued maps.
inline ValueType value_type(const Language& g, Value y) {
  bool some = false;
  for_each_multi_map(g, [&](const ImageTable& phi) {
    if (some) return;
    for (Value x : g.domain().nonzero())
      if (phi[x].contains(0) && phi[x].contains(y) && is_multi_morphism(g, g.domain(), phi)) {
        some = true;
        return;
      }
  });
  if (!some) return ValueType::regular;
  std::vector<Value> producers;
  for (Value x : g.domain().nonzero())
    if (oracle::produces(g, x, y)) producers.push_back(x);
  if (producers.empty()) return ValueType::semiregular;
  if (!oracle::produces(g, y, y)) return ValueType::degenerate;
  for (Value x : producers)
    if (!oracle::produces(g, y, x)) return ValueType::degenerate;
  return ValueType::self_producing;
}

inline bool is_component(const Language& g, ValueSet c) {
  std::array<Value, kMaxDelta + 1> m{};
  for (Value v : g.domain()) m[v] = c.contains(v) ? v : 0;
  return is_morphism(g, g.domain(), m);
}

// Smallest component containing x, by exhaustive subset scan.
inline ValueSet component_generated(const Language& g, ValueSet x) {
  ValueSet best = g.domain().nonzero();
  const std::uint32_t full = g.domain().nonzero().bits();
  for (std::uint32_t m = 1; m <= full; ++m) {
    if ((m & ~full) != 0) continue;
    const ValueSet c = ValueSet::from_bits(m);
    if (x.subset_of(c) && oracle::is_component(g, c) && c.size() < best.size()) best = c;
  }
  return best;
}

inline bool weakly_separable(const Language& g) {
  for (const auto& r : g.relations())
    for (const Tuple& a : r->tuples())
      for (const Tuple& b : r->tuples()) {
        bool disj = true;
        for (std::size_t i = 0; i < a.size(); ++i) disj = disj && (a[i] == 0 || b[i] == 0);
        if (!disj) continue;
        Tuple u(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) u[i] = a[i] + b[i];
        if (!r->contains(u)) return false;  // union
      }
  for (const auto& r : g.relations())
    for (const Tuple& big : r->tuples())
      for (const Tuple& small : r->tuples()) {
        bool ext = true;
        for (std::size_t i = 0; i < big.size(); ++i) ext = ext && (small[i] == 0 || small[i] == big[i]);
        if (!ext) continue;
        Tuple d(big.size());
        for (std::size_t i = 0; i < big.size(); ++i) d[i] = small[i] == 0 ? big[i] : 0;
        if (!r->contains(d)) return false;  // difference
      }
  return true;
}

// ---- instances --------------------------------------------------------

// Every assignment with at most kmax nonzero entries over the domain.
inline void for_each_sparse(int n, ValueSet domain, int kmax, const std::function<bool(const Assignment&)>& visit) {
  const auto vals = domain.nonzero().values();
  Assignment f(n, 0);
  std::function<bool(int, int)> rec = [&](int start, int left) -> bool {
    if (visit(f)) return true;
    if (left == 0) return false;
    for (int v = start; v < n; ++v)
      for (Value d : vals) {
        f[v] = d;
        if (rec(v + 1, left - 1)) return true;
        f[v] = 0;
      }
    return false;
  };
  rec(0, kmax);
}

inline bool satisfied(const Instance& inst, const Assignment& f) {
  for (const auto& c : inst.constraints) {
    Tuple t;
    for (int v : c.scope) t.push_back(f[v]);
    if (!c.relation->contains(t)) return false;
  }
  return true;
}

inline bool solution(const Instance& inst, const Assignment& f) {
  int size = 0;
  std::array<int, kMaxDelta + 1> cnt{};
  for (Value v : f) {
    if (!inst.domain.contains(v)) return false;
    if (v) ++size, ++cnt[v];
  }
  if (size != inst.k) return false;
  if (inst.pi)
    for (Value d = 1; d <= kMaxDelta; ++d)
      if (cnt[d] != inst.pi->counts[d]) return false;
  return satisfied(inst, f);
}

inline std::optional<Assignment> solve(const Instance& inst) {
  std::optional<Assignment> out;
  for_each_sparse(inst.num_vars, inst.domain, inst.k, [&](const Assignment& f) {
    if (solution(inst, f)) {
      out = f;
      return true;
    }
    return false;
  });
  return out;
}

// h agrees with f wherever f is nonzero
inline bool extends(const Assignment& h, const Assignment& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0 && h[i] != f[i]) return false;
  return true;
}

inline int nnz(const Assignment& f) { return static_cast<int>(std::count_if(f.begin(), f.end(), [](Value v) { return v != 0; })); }

// Minimal satisfying extensions of f of size <= k, as a sorted set.
inline std::set<Assignment> minimal_extensions(const Instance& inst, const Assignment& f, int k) {
  std::vector<Assignment> sat;
  for_each_sparse(inst.num_vars, inst.domain, k, [&](const Assignment& h) {
    if (extends(h, f) && satisfied(inst, h)) sat.push_back(h);
    return false;
  });
  std::set<Assignment> out;
  for (const auto& h : sat) {
    bool minimal = true;
    for (const auto& h2 : sat)
      if (h2 != h && extends(h, h2) && extends(h2, f)) minimal = false;
    if (minimal) out.insert(h);
  }
  return out;
}

inline std::set<Assignment> minimal_assignments(const Instance& inst, int k) {
  std::set<Assignment> out;
  const Assignment zero(inst.num_vars, 0);
  for_each_sparse(inst.num_vars, inst.domain, k, [&](const Assignment& h) {
    if (nnz(h) == 0 || !satisfied(inst, h)) return false;
    bool minimal = true;
    for_each_sparse(inst.num_vars, inst.domain, nnz(h) - 1, [&](const Assignment& h2) {
      if (nnz(h2) > 0 && extends(h, h2) && satisfied(inst, h2)) {
        minimal = false;
        return true;
      }
      return false;
    });
    if (minimal) out.insert(h);
    return false;
  });
  return out;
}

// ---- graphs -----------------------------------------------------------

inline std::vector<std::vector<char>> adjacency(const Graph& g) {
  std::vector<std::vector<char>> a(g.n, std::vector<char>(g.n, 0));
  for (auto [u, v] : g.edges) a[u][v] = a[v][u] = 1;
  return a;
}

inline void for_each_subset(int n, int size, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<bool(int)> rec = [&](int start) -> bool {
    if (static_cast<int>(cur.size()) == size) return visit(cur);
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      if (rec(v + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  rec(0);
}

inline bool has_independent_set(const Graph& g, int t) {
  const auto a = adjacency(g);
  bool found = false;
  for_each_subset(g.n, t, [&](const std::vector<int>& s) {
    for (int u : s)
      for (int v : s)
        if (a[u][v]) return false;
    return found = true;
  });
  return found;
}

inline bool has_vertex_cover(const Graph& g, int t) {
  bool found = false;
  for_each_subset(g.n, t, [&](const std::vector<int>& s) {
    std::vector<char> in(g.n, 0);
    for (int v : s) in[v] = 1;
    for (auto [u, v] : g.edges)
      if (!in[u] && !in[v]) return false;
    return found = true;
  });
  return found;
}

// t vertices closed under the arcs
inline bool has_implication_set(const Graph& g, int t) {
  bool found = false;
  for_each_subset(g.n, t, [&](const std::vector<int>& s) {
    std::vector<char> in(g.n, 0);
    for (int v : s) in[v] = 1;
    for (auto [u, v] : g.arcs)
      if (in[u] && !in[v]) return false;
    return found = true;
  });
  return found;
}

inline bool has_clique(const Graph& g, int k) {
  const auto a = adjacency(g);
  bool found = false;
  for_each_subset(g.n, k, [&](const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!a[s[i]][s[j]]) return false;
    return found = true;
  });
  return found;
}

// subsets of the given list
inline void for_each_subset_of(const std::vector<int>& items, int size,
                               const std::function<bool(const std::vector<int>&)>& visit) {
  for_each_subset(static_cast<int>(items.size()), size, [&](const std::vector<int>& idx) {
    std::vector<int> s;
    for (int i : idx) s.push_back(items[i]);
    return visit(s);
  });
}

// Disjoint vertex sets S_1..S_p of the given sizes, every cross pair adjacent.
// With `parts`, S_i must lie inside parts[i].
inline bool has_complete_multipartite(const Graph& g, const std::vector<int>& sizes,
                                      const std::vector<std::vector<int>>* parts = nullptr) {
  const auto a = adjacency(g);
  std::vector<std::vector<int>> chosen;
  std::vector<char> used(g.n, 0);
  std::vector<int> all(g.n);
  for (int v = 0; v < g.n; ++v) all[v] = v;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == sizes.size()) return true;
    const std::vector<int>& pool = parts ? (*parts)[i] : all;
    bool found = false;
    for_each_subset_of(pool, sizes[i], [&](const std::vector<int>& s) {
      for (int v : s)
        if (used[v]) return false;
      for (const auto& prev : chosen)
        for (int u : prev)
          for (int v : s)
            if (!a[u][v]) return false;
      for (int v : s) used[v] = 1;
      chosen.push_back(s);
      found = rec(i + 1);
      chosen.pop_back();
      for (int v : s) used[v] = 0;
      return found;
    });
    return found;
  };
  return rec(0);
}

// t vertices whose induced subgraph has a proper p-colouring
inline bool has_colorable_subgraph(const Graph& g, int t, int p) {
  const auto a = adjacency(g);
  bool found = false;
  for_each_subset(g.n, t, [&](const std::vector<int>& s) {
    std::vector<int> colour(s.size(), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
      if (i == s.size()) return true;
      for (int c = 1; c <= p; ++c) {
        bool ok = !a[s[i]][s[i]];
        for (std::size_t j = 0; j < i && ok; ++j) ok = !(a[s[i]][s[j]] && colour[j] == c);
        if (!ok) continue;
        colour[i] = c;
        if (rec(i + 1)) return true;
      }
      return false;
    };
    return found = rec(0);
  });
  return found;
}

// one vertex per group, closed under arcs (full product enumeration)
inline bool has_multicolored_implications(const Graph& g) {
  const std::size_t t = g.groups.size();
  std::vector<std::size_t> idx(t, 0);
  for (const auto& grp : g.groups)
    if (grp.empty()) return false;
  while (true) {
    std::vector<char> in(g.n, 0);
    for (std::size_t i = 0; i < t; ++i) in[g.groups[i][idx[i]]] = 1;
    bool ok = true;
    for (auto [u, v] : g.arcs)
      if (in[u] && !in[v]) ok = false;
    if (ok) return true;
    std::size_t j = 0;
    while (j < t && ++idx[j] == g.groups[j].size()) idx[j++] = 0;
    if (j == t) return false;
  }
}

inline bool has_multicolored_independent_set(const Graph& g) {
  const auto a = adjacency(g);
  const std::size_t t = g.groups.size();
  std::vector<std::size_t> idx(t, 0);
  for (const auto& grp : g.groups)
    if (grp.empty()) return false;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < t && ok; ++i)
      for (std::size_t j = 0; j < t && ok; ++j)
        if (i != j && a[g.groups[i][idx[i]]][g.groups[j][idx[j]]]) ok = false;
    for (std::size_t i = 0; i < t && ok; ++i) ok = !a[g.groups[i][idx[i]]][g.groups[i][idx[i]]];
    if (ok) return true;
    std::size_t j = 0;
    while (j < t && ++idx[j] == g.groups[j].size()) idx[j++] = 0;
    if (j == t) return false;
  }
}

// ---- random generation ------------------------------------------------

// Random 0-valid relation over {0..delta} of the given arity.
inline RelationPtr random_relation(std::mt19937_64& rng, const std::string& name, int delta, int arity,
                                   double density) {
  std::vector<Tuple> tuples{Tuple(arity, 0)};
  std::bernoulli_distribution keep(density);
  Tuple t(arity, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == arity) {
      if (!is_zero(t) && keep(rng)) tuples.push_back(t);
      return;
    }
    for (Value v = 0; v <= delta; ++v) {
      t[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return make_relation(name, arity, tuples);
}

inline Language random_language(std::mt19937_64& rng, int delta, int max_arity, int max_relations) {
  std::uniform_int_distribution<int> nrel(1, max_relations), ar(1, max_arity);
  std::uniform_real_distribution<double> dens(0.2, 0.8);
  std::vector<RelationPtr> rels;
  const int m = nrel(rng);
  for (int i = 0; i < m; ++i) rels.push_back(random_relation(rng, "R" + std::to_string(i), delta, ar(rng), dens(rng)));
  return Language(delta, rels);
}

inline Instance random_instance(std::mt19937_64& rng, const Language& g, int n, int m, int k, bool with_pi) {
  Instance inst;
  inst.num_vars = n;
  inst.domain = g.domain();
  inst.k = k;
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  std::uniform_int_distribution<int> var(0, n - 1);
  for (int i = 0; i < m && g.size() > 0; ++i) {
    const RelationPtr& r = g.relations()[pick(rng)];
    std::vector<int> scope;
    for (int j = 0; j < r->arity(); ++j) scope.push_back(var(rng));
    inst.constraints.push_back({scope, r});
  }
  if (with_pi) {
    CardinalityMap pi;
    const auto vals = g.domain().nonzero().values();
    std::uniform_int_distribution<std::size_t> pv(0, vals.size() - 1);
    for (int i = 0; i < k; ++i) ++pi.counts[vals[pv(rng)]];
    inst.pi = pi;
  }
  return inst;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g;
  g.n = n;
  std::bernoulli_distribution e(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (e(rng)) g.edges.push_back({u, v});
  return g;
}

}  // namespace oracle

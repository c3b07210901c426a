#include "sizecsp/morphism.hpp"

#include <algorithm>
#include <stdexcept>

#include "sizecsp/error.hpp"

namespace sizecsp {

namespace {

struct TupleRef {
  const Relation* rel;
  const Tuple* tuple;
};

// Tuples of R|source bucketed by the position (in ascending source order) of
// their largest nonzero value.
struct Buckets {
  std::vector<Value> order;
  std::vector<std::vector<TupleRef>> by_level;
};

Buckets bucketize(const Language& g, ValueSet source) {
  Buckets b;
  b.order = source.nonzero().values();
  std::array<int, kMaxDelta + 1> pos{};
  for (std::size_t i = 0; i < b.order.size(); ++i) pos[b.order[i]] = static_cast<int>(i);
  b.by_level.resize(b.order.size());
  for (const auto& r : g.relations()) {
    for (const Tuple& t : r->tuples()) {
      int level = -1;
      bool inside = true;
      for (Value v : t) {
        if (!source.contains(v)) {
          inside = false;
          break;
        }
        if (v != 0) level = std::max(level, pos[v]);
      }
      if (inside && level >= 0) b.by_level[level].push_back({r.get(), &t});
    }
  }
  return b;
}

bool product_in(const Relation& r, const Tuple& t, const ImageTable& img, std::size_t i, std::uint32_t code) {
  if (i == t.size()) return r.contains_code(code);
  const ValueSet s = t[i] == 0 ? ValueSet{0} : img[t[i]];
  for (Value v : s)
    if (!product_in(r, t, img, i + 1, code | (static_cast<std::uint32_t>(v) << (3 * i)))) return false;
  return true;
}

bool bucket_ok(const std::vector<TupleRef>& bucket, const ImageTable& img) {
  for (const auto& ref : bucket)
    if (!product_in(*ref.rel, *ref.tuple, img, 0, 0)) return false;
  return true;
}

bool lex_less(const SingleMorphism& a, const SingleMorphism& b) { return a.map < b.map; }

}  // namespace

Tuple SingleMorphism::apply(const Tuple& t) const {
  Tuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = map.at(t[i]);
  return out;
}

ValueSet SingleMorphism::image() const {
  ValueSet s;
  for (Value x : source) s.insert(map[x]);
  return s;
}

SingleMorphism SingleMorphism::identity(ValueSet source) {
  SingleMorphism m;
  m.source = source;
  for (Value x : source) m.map[x] = x;
  return m;
}

SingleMorphism SingleMorphism::zero(ValueSet source) {
  SingleMorphism m;
  m.source = source;
  return m;
}

std::string SingleMorphism::to_string() const {
  std::string s;
  for (Value x : source.nonzero()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x) + "->" + std::to_string(map[x]);
  }
  return s;
}

MultiMorphism MultiMorphism::from_single(const SingleMorphism& h) {
  MultiMorphism m;
  m.source = h.source;
  for (Value x : h.source) m.map[x] = ValueSet{h.map[x]};
  return m;
}

std::string MultiMorphism::to_string() const {
  std::string s;
  for (Value x : source.nonzero()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x) + "->" + map[x].to_string();
  }
  return s;
}

SingleMorphism retract(ValueSet source, ValueSet x) {
  if (x.contains(0)) throw std::invalid_argument("retract: the retained set must not contain 0");
  SingleMorphism m;
  m.source = source;
  for (Value v : source) m.map[v] = x.contains(v) ? v : 0;
  return m;
}

bool check_single_morphism(const Language& g, const SingleMorphism& m) {
  if (m.map[0] != 0) return false;
  for (const auto& r : g.relations()) {
    for (const Tuple& t : r->tuples()) {
      std::uint32_t code = 0;
      bool inside = true;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!m.source.contains(t[i])) {
          inside = false;
          break;
        }
        code |= static_cast<std::uint32_t>(m.map[t[i]]) << (3 * i);
      }
      if (inside && !r->contains_code(code)) return false;
    }
  }
  return true;
}

bool check_multi_morphism(const Language& g, const MultiMorphism& m) {
  if (m.map[0] != ValueSet{0}) return false;
  for (Value x : m.source)
    if (m.map[x].empty()) return false;
  for (const auto& r : g.relations()) {
    for (const Tuple& t : r->tuples()) {
      if (!std::all_of(t.begin(), t.end(), [&](Value v) { return m.source.contains(v); })) continue;
      if (!product_in(*r, t, m.map, 0, 0)) return false;
    }
  }
  return true;
}

SingleMorphism compose(const SingleMorphism& a, const SingleMorphism& b) {
  if (!a.image().subset_of(b.source)) throw std::invalid_argument("compose: image outside the second source");
  SingleMorphism m;
  m.source = a.source;
  for (Value x : a.source) m.map[x] = b.map[a.map[x]];
  return m;
}

MultiMorphism compose(const MultiMorphism& a, const MultiMorphism& b) {
  MultiMorphism m;
  m.source = a.source;
  for (Value x : a.source) {
    if (!a.map[x].subset_of(b.source)) throw std::invalid_argument("compose: image outside the second source");
    for (Value y : a.map[x]) m.map[x] |= b.map[y];
  }
  return m;
}

MultiMorphism compose(const MultiMorphism& a, const SingleMorphism& b) {
  MultiMorphism m;
  m.source = a.source;
  for (Value x : a.source) {
    if (!a.map[x].subset_of(b.source)) throw std::invalid_argument("compose: image outside the second source");
    for (Value y : a.map[x]) m.map[x].insert(b.map[y]);
  }
  return m;
}

MultiMorphism compose(const SingleMorphism& a, const MultiMorphism& b) {
  if (!a.image().subset_of(b.source)) throw std::invalid_argument("compose: image outside the second source");
  MultiMorphism m;
  m.source = a.source;
  for (Value x : a.source) m.map[x] = b.map[a.map[x]];
  return m;
}

bool search_morphisms(const Language& g, const MorphismQuery& q,
                      const std::function<bool(const ImageTable&)>& visit) {
  if (!q.source.contains(0)) throw std::invalid_argument("morphism source must contain 0");
  const Buckets b = bucketize(g, q.source);
  ImageTable img{};
  img[0] = ValueSet{0};
  for (Value x : b.order)
    if (q.options[x].empty()) return false;
  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j == b.order.size()) return visit(img);
    const Value x = b.order[j];
    for (const ValueSet& opt : q.options[x]) {
      img[x] = opt;
      if (bucket_ok(b.by_level[j], img) && rec(j + 1)) return true;
    }
    img[x] = ValueSet{};
    return false;
  };
  return rec(0);
}

std::vector<ValueSet> singleton_options(ValueSet values) {
  std::vector<ValueSet> out;
  for (Value v : values) out.push_back(ValueSet{v});
  return out;
}

void for_each_single_morphism(const Language& g, ValueSet source,
                              const std::array<ValueSet, kMaxDelta + 1>& candidates,
                              const std::function<bool(const SingleMorphism&)>& visit) {
  MorphismQuery q;
  q.source = source;
  for (Value x : source.nonzero()) q.options[x] = singleton_options(candidates[x]);
  search_morphisms(g, q, [&](const ImageTable& img) {
    SingleMorphism m;
    m.source = source;
    for (Value x : source.nonzero()) m.map[x] = img[x].min();
    return visit(m);
  });
}

std::optional<SingleMorphism> find_single_morphism(const Language& g, ValueSet source,
                                                   const std::array<ValueSet, kMaxDelta + 1>& candidates) {
  std::optional<SingleMorphism> found;
  for_each_single_morphism(g, source, candidates, [&](const SingleMorphism& m) {
    found = m;
    return true;
  });
  return found;
}

bool produces(const Language& g, Value x, Value y) {
  if (x == 0 || y == 0) throw std::invalid_argument("produces: arguments must be nonzero");
  const ValueSet dom = g.domain();
  if (!dom.contains(x) || !dom.contains(y)) throw std::invalid_argument("produces: value outside the domain");
  MultiMorphism m;
  m.source = dom;
  for (Value z : dom) m.map[z] = ValueSet{0};
  m.map[x] = ValueSet{0, y};
  return check_multi_morphism(g, m);
}

const char* to_string(ValueType t) {
  switch (t) {
    case ValueType::regular: return "regular";
    case ValueType::semiregular: return "semiregular";
    case ValueType::self_producing: return "self-producing";
    case ValueType::degenerate: return "degenerate";
  }
  return "?";
}

ValueSet TypeAnalysis::producers_of(Value y) const {
  ValueSet s;
  for (Value x : domain.nonzero())
    if (produced[x].contains(y)) s.insert(x);
  return s;
}

ValueSet TypeAnalysis::of_type(ValueType t) const {
  ValueSet s;
  for (Value y : domain.nonzero())
    if (type[y] == t) s.insert(y);
  return s;
}

TypeAnalysis analyze_types(const Language& g) {
  TypeAnalysis a;
  a.domain = g.domain();
  const ValueSet nz = a.domain.nonzero();
  for (Value x : nz)
    for (Value y : nz)
      if (produces(g, x, y)) a.produced[x].insert(y);
  for (Value y : nz) {
    // a producer is itself a witness; otherwise search φ(x) = {0,y} with
    // singleton images elsewhere (sub-maps of an MVM are MVMs)
    for (Value x : nz) {
      if (a.produced[x].contains(y)) {
        MultiMorphism m;
        m.source = a.domain;
        for (Value z : a.domain) m.map[z] = ValueSet{0};
        m.map[x] = ValueSet{0, y};
        a.witness[y] = m;
        break;
      }
    }
    for (Value x : nz) {
      if (a.witness[y]) break;
      MorphismQuery q;
      q.source = a.domain;
      for (Value z : nz) q.options[z] = z == x ? std::vector<ValueSet>{ValueSet{0, y}} : singleton_options(a.domain);
      search_morphisms(g, q, [&](const ImageTable& img) {
        MultiMorphism m;
        m.source = a.domain;
        m.map = img;
        a.witness[y] = m;
        return true;
      });
    }
    const ValueSet producers = a.producers_of(y);
    if (!a.witness[y]) {
      a.type[y] = ValueType::regular;
    } else if (producers.empty()) {
      a.type[y] = ValueType::semiregular;
    } else if (a.produced[y].contains(y) && producers.subset_of(a.produced[y])) {
      a.type[y] = ValueType::self_producing;
    } else {
      a.type[y] = ValueType::degenerate;
    }
  }
  return a;
}

ValueType value_type(const Language& g, Value y) {
  if (y == 0) throw std::invalid_argument("value_type: argument must be nonzero");
  if (!g.domain().contains(y)) throw std::invalid_argument("value_type: value outside the domain");
  return analyze_types(g).type[y];
}

bool is_component(const Language& g, ValueSet c) {
  if (c.empty() || c.contains(0)) throw std::invalid_argument("is_component: need a nonempty set of nonzero values");
  if (!c.subset_of(g.domain())) return false;
  return check_single_morphism(g, retract(g.domain(), c));
}

ValueSet component_generated(const Language& g, ValueSet x) {
  if (x.empty() || x.contains(0)) throw std::invalid_argument("component_generated: need a nonempty set of nonzero values");
  const ValueSet nz = g.domain().nonzero();
  if (!x.subset_of(nz)) throw std::invalid_argument("component_generated: value outside the domain");
  ValueSet result = nz;
  for (ValueSet c : subsets_containing(nz, x))
    if (is_component(g, c)) result &= c;
  return result;
}

ValueSet core(const Language& g, const TypeAnalysis& types) {
  const ValueSet nondegenerate = g.domain().nonzero() - types.of_type(ValueType::degenerate);
  if (nondegenerate.empty()) return {};
  return component_generated(g, nondegenerate);
}

ValueSet core(const Language& g) { return core(g, analyze_types(g)); }

bool is_core(const Language& g) { return core(g) == g.domain().nonzero(); }

std::optional<SingleMorphism> find_contraction_into(const Language& g, ValueSet target) {
  std::array<ValueSet, kMaxDelta + 1> cand{};
  for (Value x : g.domain().nonzero()) cand[x] = target.nonzero() & g.domain();
  return find_single_morphism(g, g.domain(), cand);
}

std::optional<SingleMorphism> find_proper_contraction(const Language& g) {
  for (Value e : g.domain().nonzero())
    if (auto h = find_contraction_into(g, g.domain().without(e))) return h;
  return std::nullopt;
}

SingleMorphism find_min_contraction(const Language& g) {
  const ValueSet nz = g.domain().nonzero();
  for (int s = 1; s < nz.size(); ++s) {
    std::optional<SingleMorphism> best;
    for (ValueSet t : subsets_containing(nz, ValueSet())) {
      if (t.size() != s) continue;
      auto h = find_contraction_into(g, t);
      if (h && (!best || lex_less(*h, *best))) best = h;
    }
    if (best) return *best;
  }
  return SingleMorphism::identity(g.domain());
}

bool is_closed(const Language& g, ValueSet dprime) {
  if (!dprime.contains(0)) throw std::invalid_argument("is_closed: 0 missing from the value set");
  const ValueSet dom = g.domain();
  if (!dprime.subset_of(dom)) throw std::invalid_argument("is_closed: set not inside the domain");
  const ValueSet outside = dom - dprime;
  if (outside.empty()) return true;
  for (Value x : dprime.nonzero()) {
    std::array<ValueSet, kMaxDelta + 1> cand{};
    for (Value z : dprime.nonzero()) cand[z] = z == x ? outside : dom;
    if (find_single_morphism(g, dprime, cand)) return false;
  }
  return true;
}

std::string Counterexample::to_string() const {
  return "(" + (relation ? relation->name() : std::string("?")) + "," + tuple_to_string(t1) + "," +
         tuple_to_string(t2) + ")";
}

std::optional<Counterexample> find_counterexample(const Language& g, bool component_normalized,
                                                  std::optional<Counterexample::Kind> only) {
  using Kind = Counterexample::Kind;
  std::vector<ValueSet> comps;
  if (component_normalized)
    for (Value a : g.domain().nonzero()) comps.push_back(component_generated(g, ValueSet{a}));
  auto in_component = [&](const Tuple& t) {
    if (!component_normalized) return true;
    return std::any_of(comps.begin(), comps.end(), [&](ValueSet c) { return contained_in(t, c); });
  };
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Relation& r = g[i];
    if (!only || *only == Kind::union_kind) {
      for (const Tuple& t2 : r.tuples())
        for (const Tuple& t1 : r.tuples()) {
          if (!disjoint(t1, t2) || r.contains(tuple_union(t1, t2))) continue;
          if (!in_component(t1) || !in_component(t2)) continue;
          return Counterexample{Kind::union_kind, i, g.relations()[i], t1, t2};
        }
    }
    if (!only || *only == Kind::difference_kind) {
      for (const Tuple& t2 : r.tuples())
        for (const Tuple& s : r.tuples()) {
          if (!is_extension(s, t2)) continue;
          Tuple t1 = tuple_difference(s, t2);
          if (r.contains(t1) || !in_component(s)) continue;
          return Counterexample{Kind::difference_kind, i, g.relations()[i], std::move(t1), t2};
        }
    }
  }
  return std::nullopt;
}

bool is_weakly_separable(const Language& g) { return !find_counterexample(g, false); }

bool value_weakly_separable(const Language& g, Value d) {
  if (d == 0) throw std::invalid_argument("value_weakly_separable: argument must be nonzero");
  return is_weakly_separable(restrict_language(g, ValueSet{0, d}));
}

bool valid_counterexample(const Counterexample& c) {
  if (!c.relation || c.t1.size() != c.t2.size() || static_cast<int>(c.t1.size()) != c.relation->arity())
    return false;
  const Relation& r = *c.relation;
  if (!disjoint(c.t1, c.t2)) return false;
  const Tuple u = tuple_union(c.t1, c.t2);
  if (c.kind == Counterexample::Kind::union_kind) return r.contains(c.t1) && r.contains(c.t2) && !r.contains(u);
  return r.contains(c.t2) && r.contains(u) && !r.contains(c.t1);
}

std::optional<BadPartitionSet> find_bad_partition_set(const Language& g) {
  const ValueSet dom = g.domain();
  const std::vector<Value> nz = dom.nonzero().values();
  const int m = static_cast<int>(nz.size());
  if (m < 2) return std::nullopt;
  constexpr std::uint64_t kBudget = 20'000'000;
  std::uint64_t work = 0;
  std::optional<BadPartitionSet> best;
  int best_size = m + 1;

  // restricted growth strings enumerate set partitions in lexicographic order
  std::vector<int> rgs(m, 0);
  while (true) {
    const int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (blocks >= 2) {
      std::vector<std::vector<SingleMorphism>> options(blocks);
      bool feasible = true;
      for (int b = 0; b < blocks && feasible; ++b) {
        std::array<ValueSet, kMaxDelta + 1> cand{};
        for (int i = 0; i < m; ++i) cand[nz[i]] = rgs[i] == b ? dom.nonzero() : ValueSet{0};
        for_each_single_morphism(g, dom, cand, [&](const SingleMorphism& p) {
          options[b].push_back(p);
          if (++work > kBudget) throw GuardError("find_bad_partition_set: enumeration budget exceeded");
          return false;
        });
        feasible = !options[b].empty();
      }
      if (feasible) {
        std::vector<std::size_t> pick(blocks, 0);
        while (true) {
          if (++work > kBudget) throw GuardError("find_bad_partition_set: enumeration budget exceeded");
          SingleMorphism sum = SingleMorphism::zero(dom);
          for (int i = 0; i < m; ++i) sum.map[nz[i]] = options[rgs[i]][pick[rgs[i]]].map[nz[i]];
          const int size = sum.image().nonzero().size();
          if (size < best_size && !check_single_morphism(g, sum)) {
            BadPartitionSet bad;
            for (int b = 0; b < blocks; ++b) bad.parts.push_back(options[b][pick[b]]);
            bad.sum = sum;
            best = std::move(bad);
            best_size = size;
          }
          int j = blocks - 1;
          while (j >= 0 && ++pick[j] == options[j].size()) pick[j--] = 0;
          if (j < 0) break;
        }
      }
    }
    // next restricted growth string
    int i = m - 1;
    while (i > 0) {
      const int mx = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= mx) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      --i;
    }
    if (i == 0) break;
  }
  return best;
}

bool is_recoverable(const Language& g, const SingleMorphism& h, const Tuple& t) {
  if (!check_single_morphism(g, h)) throw std::invalid_argument("is_recoverable: h is not an inner homomorphism");
  for (Value a : t)
    if (!h.source.contains(a)) throw std::invalid_argument("is_recoverable: tuple outside the source of h");
  const ValueSet dom = g.domain();
  ImageTable need{};
  for (Value a : t) {
    if (a == 0) continue;
    const Value b = h.map[a];
    if (b == 0 || !dom.contains(b)) return false;
    need[b].insert(a);
  }
  MorphismQuery q;
  q.source = dom;
  for (Value b : dom.nonzero())
    q.options[b] = need[b].empty() ? singleton_options(dom) : std::vector<ValueSet>{need[b]};
  return search_morphisms(g, q, [](const ImageTable&) { return true; });
}

void naive_for_each_map(ValueSet source, ValueSet target,
                        const std::function<bool(const SingleMorphism&)>& visit) {
  const auto nz = source.nonzero().values();
  const auto tv = target.values();
  std::vector<std::size_t> idx(nz.size(), 0);
  while (true) {
    SingleMorphism m = SingleMorphism::zero(source);
    for (std::size_t i = 0; i < nz.size(); ++i) m.map[nz[i]] = tv[idx[i]];
    if (visit(m)) return;
    // most significant position is the smallest source value
    int j = static_cast<int>(nz.size()) - 1;
    while (j >= 0 && ++idx[j] == tv.size()) idx[j--] = 0;
    if (j < 0) return;
  }
}

}  // namespace sizecsp

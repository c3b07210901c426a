#include "sizecsp/instance.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace sizecsp {

int assignment_size(const Assignment& f) {
  return static_cast<int>(std::count_if(f.begin(), f.end(), [](Value v) { return v != 0; }));
}

Assignment delta_assignment(int num_vars, int v, Value d) {
  Assignment f(num_vars, 0);
  f.at(v) = d;
  return f;
}

std::string assignment_to_string(const Assignment& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(f[i]);
  }
  return s;
}

int CardinalityMap::total() const {
  int s = 0;
  for (int d = 1; d <= kMaxDelta; ++d) s += counts[d];
  return s;
}

CardinalityMap signature_of(const Assignment& f) {
  CardinalityMap m;
  for (Value v : f)
    if (v != 0) ++m.counts[v];
  return m;
}

void Instance::validate() const {
  if (num_vars < 0) throw std::invalid_argument("negative number of variables");
  if (!domain.contains(0)) throw std::invalid_argument("instance domain must contain 0");
  if (k < 0) throw std::invalid_argument("negative size parameter");
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    if (!c.relation) throw std::invalid_argument("constraint " + std::to_string(i) + " has no relation");
    if (static_cast<int>(c.scope.size()) != c.relation->arity())
      throw std::invalid_argument("constraint " + std::to_string(i) + ": scope length " +
                                  std::to_string(c.scope.size()) + " differs from arity of " +
                                  c.relation->name());
    for (int v : c.scope)
      if (v < 0 || v >= num_vars)
        throw std::invalid_argument("constraint " + std::to_string(i) + ": variable " +
                                    std::to_string(v) + " out of range");
  }
  if (pi) {
    if (pi->total() != k) throw std::invalid_argument("cardinality map does not sum to the size parameter");
    for (int d = 1; d <= kMaxDelta; ++d) {
      if (pi->counts[d] < 0) throw std::invalid_argument("negative cardinality");
      if (pi->counts[d] > 0 && !domain.contains(d))
        throw std::invalid_argument("cardinality given for value " + std::to_string(d) +
                                    " outside the domain");
    }
  }
}

bool constraint_satisfied(const Constraint& c, const Assignment& f) {
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < c.scope.size(); ++i) {
    const Value v = f[c.scope[i]];
    if (v < 0 || v > kMaxDelta) return false;
    code |= static_cast<std::uint32_t>(v) << (3 * i);
  }
  return c.relation->contains_code(code);
}

bool satisfies(const Instance& inst, const Assignment& f) {
  if (static_cast<int>(f.size()) != inst.num_vars) return false;
  return std::all_of(inst.constraints.begin(), inst.constraints.end(),
                     [&](const Constraint& c) { return constraint_satisfied(c, f); });
}

bool is_solution(const Instance& inst, const Assignment& f) {
  if (static_cast<int>(f.size()) != inst.num_vars) return false;
  for (Value v : f)
    if (!inst.domain.contains(v)) return false;
  if (assignment_size(f) != inst.k) return false;
  if (inst.pi && signature_of(f) != *inst.pi) return false;
  return satisfies(inst, f);
}

Lift Lift::identity(int num_vars) {
  Lift l;
  l.var_map.resize(num_vars);
  for (int i = 0; i < num_vars; ++i) l.var_map[i] = i;
  l.fixed.assign(num_vars, 0);
  return l;
}

Assignment Lift::apply(const Assignment& child) const {
  Assignment out = fixed;
  for (std::size_t i = 0; i < var_map.size(); ++i) out[var_map[i]] = child.at(i);
  return out;
}

Lift Lift::then(const Lift& inner) const {
  // inner: grandchild -> child; this: child -> source
  Lift out;
  out.fixed = apply(inner.fixed);
  out.var_map.resize(inner.var_map.size());
  for (std::size_t i = 0; i < inner.var_map.size(); ++i) out.var_map[i] = var_map[inner.var_map[i]];
  return out;
}

std::optional<Substituted> substitute_assignment(const Instance& inst, const Assignment& f) {
  if (static_cast<int>(f.size()) != inst.num_vars)
    throw std::invalid_argument("substitute_assignment: assignment length mismatch");
  Substituted out;
  Instance& r = out.instance;
  r.domain = inst.domain;
  const int size = assignment_size(f);
  r.k = inst.k - size;
  if (r.k < 0) return std::nullopt;
  if (inst.pi) {
    CardinalityMap p = *inst.pi;
    for (Value v : f)
      if (v != 0 && --p.counts[v] < 0) return std::nullopt;
    r.pi = p;
  }
  std::vector<int> new_index(inst.num_vars, -1);
  for (int v = 0; v < inst.num_vars; ++v) {
    if (f[v] == 0) {
      new_index[v] = r.num_vars++;
      out.lift.var_map.push_back(v);
    }
  }
  out.lift.fixed = f;
  using Key = std::tuple<const Relation*, std::vector<int>, std::vector<Value>>;
  std::map<Key, RelationPtr> cache;
  for (const auto& c : inst.constraints) {
    std::vector<int> positions;
    std::vector<Value> values;
    std::vector<int> scope;
    for (std::size_t i = 0; i < c.scope.size(); ++i) {
      const int v = c.scope[i];
      if (f[v] != 0) {
        positions.push_back(static_cast<int>(i));
        values.push_back(f[v]);
      } else {
        scope.push_back(new_index[v]);
      }
    }
    if (positions.empty()) {
      r.constraints.push_back({std::move(scope), c.relation});
      continue;
    }
    if (!constraint_satisfied(c, f)) return std::nullopt;
    if (scope.empty()) continue;
    Key key{c.relation.get(), positions, values};
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, std::make_shared<const Relation>(substitute_constants(*c.relation, positions, values)))
               .first;
    r.constraints.push_back({std::move(scope), it->second});
  }
  return out;
}

Instance restrict_instance(const Instance& inst, ValueSet d) {
  Instance r = inst;
  r.domain = inst.domain & d;
  std::map<const Relation*, RelationPtr> cache;
  for (auto& c : r.constraints) {
    auto it = cache.find(c.relation.get());
    if (it == cache.end())
      it = cache.emplace(c.relation.get(), std::make_shared<const Relation>(restrict(*c.relation, d))).first;
    c.relation = it->second;
  }
  if (r.pi)
    for (int v = 1; v <= kMaxDelta; ++v)
      if (!r.domain.contains(v) && r.pi->counts[v] != 0)
        throw std::invalid_argument("restrict_instance: cardinality demanded for a removed value");
  return r;
}

}  // namespace sizecsp

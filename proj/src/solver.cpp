#include "sizecsp/solver.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <set>
#include <stdexcept>

#include "sizecsp/error.hpp"

namespace sizecsp {

namespace {

constexpr std::uint64_t kSaturated = UINT64_MAX;
constexpr std::uint64_t kFrequentBranchLimit = 2'000'000;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_pow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = sat_mul(r, b);
  return r;
}

void check_k(int k) {
  if (k > kMaxK) throw GuardError("size parameter " + std::to_string(k) + " exceeds the limit " + std::to_string(kMaxK));
}

void check_instance(const Instance& inst) {
  if (inst.num_vars > kMaxVars) throw GuardError("too many variables");
  check_k(inst.k);
  inst.validate();
}

// Bounded search tree over an instance. Keeps the constraint incidence so the
// first unsatisfied constraint can be found from the nonzero variables alone.
class Search {
 public:
  explicit Search(const Instance& inst) : inst_(inst), incident_(inst.num_vars) {
    const Assignment zero(inst.num_vars, 0);
    for (int i = 0; i < static_cast<int>(inst.constraints.size()); ++i) {
      const auto& c = inst.constraints[i];
      if (!constraint_satisfied(c, zero)) zero_unsat_.push_back(i);
      for (int v : c.scope)
        if (incident_[v].empty() || incident_[v].back() != i) incident_[v].push_back(i);
    }
    values_ = inst.domain.nonzero().values();
  }

  const Instance& instance() const { return inst_; }
  const std::vector<int>& incident(int v) const { return incident_[v]; }

  int first_unsatisfied(const Assignment& f, const std::vector<int>& nz) const {
    int best = INT_MAX;
    for (int i : zero_unsat_) {
      if (!constraint_satisfied(inst_.constraints[i], f)) {
        best = i;
        break;
      }
    }
    for (int v : nz) {
      for (int i : incident_[v]) {
        if (i >= best) break;
        if (!constraint_satisfied(inst_.constraints[i], f)) {
          best = i;
          break;
        }
      }
    }
    return best == INT_MAX ? -1 : best;
  }

  // Leaves of the search tree below f (all satisfying, size <= |f| + budget).
  // visit(f, nz) returns true to stop. Returns true if stopped.
  bool leaves(Assignment& f, std::vector<int>& nz, int budget, SolveStats* stats,
              const std::function<bool(Assignment&, std::vector<int>&)>& visit) const {
    if (stats) ++stats->nodes;
    const int c = first_unsatisfied(f, nz);
    if (c < 0) return visit(f, nz);
    if (budget == 0) return false;
    const auto& scope = inst_.constraints[c].scope;
    for (std::size_t i = 0; i < scope.size(); ++i) {
      const int v = scope[i];
      if (f[v] != 0) continue;
      if (std::find(scope.begin(), scope.begin() + i, v) != scope.begin() + i) continue;
      nz.push_back(v);
      for (Value d : values_) {
        f[v] = d;
        if (leaves(f, nz, budget - 1, stats, visit)) {
          f[v] = 0;
          nz.pop_back();
          return true;
        }
      }
      f[v] = 0;
      nz.pop_back();
    }
    return false;
  }

  // No assignment keeping nz[0..fixed) and a proper subset of nz[fixed..)
  // satisfies the instance. With fixed == 0 the empty subset is not tried.
  bool minimal_over(Assignment& f, const std::vector<int>& nz, std::size_t fixed) const {
    const std::size_t m = nz.size() - fixed;
    const std::uint32_t full = (1u << m) - 1;
    std::vector<int> sub;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      if (fixed == 0 && mask == 0) continue;
      sub.assign(nz.begin(), nz.begin() + fixed);
      std::vector<std::pair<int, Value>> saved;
      for (std::size_t j = 0; j < m; ++j) {
        const int v = nz[fixed + j];
        if ((mask >> j) & 1u) {
          sub.push_back(v);
        } else {
          saved.push_back({v, f[v]});
          f[v] = 0;
        }
      }
      const bool sat = first_unsatisfied(f, sub) < 0;
      for (auto [v, d] : saved) f[v] = d;
      if (sat) return false;
    }
    return true;
  }

 private:
  const Instance& inst_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> zero_unsat_;
  std::vector<Value> values_;
};

SparseAssignment sparse_of(const Assignment& f, const std::vector<int>& nz) {
  SparseAssignment s;
  for (int v : nz) s.push_back({v, f[v]});
  std::sort(s.begin(), s.end());
  return s;
}

// Minimal satisfying extensions of the assignment held in f/nz.
void for_each_minimal_extension(const Search& s, Assignment& f, std::vector<int>& nz, int k, SolveStats* stats,
                                const std::function<void(const SparseAssignment&)>& emit) {
  const std::size_t fixed = nz.size();
  const int budget = k - static_cast<int>(fixed);
  if (budget < 0) return;
  std::set<SparseAssignment> seen;
  s.leaves(f, nz, budget, stats, [&](Assignment& g, std::vector<int>& gnz) {
    SparseAssignment key = sparse_of(g, gnz);
    if (seen.count(key)) return false;
    seen.insert(key);
    if (s.minimal_over(g, gnz, fixed)) emit(key);
    return false;
  });
}

std::vector<int> nonzero_vars(const Assignment& f) {
  std::vector<int> nz;
  for (int v = 0; v < static_cast<int>(f.size()); ++v)
    if (f[v] != 0) nz.push_back(v);
  return nz;
}

bool extension_exists(const Search& s, Assignment& f, std::vector<int>& nz, int k, SolveStats* stats) {
  const int budget = k - static_cast<int>(nz.size());
  if (budget < 0) return false;
  return s.leaves(f, nz, budget, stats, [](Assignment&, std::vector<int>&) { return true; });
}

std::vector<int> support_of_value(const Search& s, Value d, SolveStats* stats) {
  const Instance& inst = s.instance();
  std::vector<int> out;
  Assignment f(inst.num_vars, 0);
  std::vector<int> nz;
  for (int v = 0; v < inst.num_vars; ++v) {
    f[v] = d;
    nz.assign(1, v);
    if (extension_exists(s, f, nz, inst.k, stats)) out.push_back(v);
    f[v] = 0;
  }
  return out;
}

// Lexicographic k-subsets of items; visit returns true to stop.
bool for_each_subset(const std::vector<int>& items, int size, const std::function<bool(const std::vector<int>&)>& visit) {
  if (size < 0 || size > static_cast<int>(items.size())) return false;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  std::vector<int> pick(size);
  while (true) {
    for (int i = 0; i < size; ++i) pick[i] = items[idx[i]];
    if (visit(pick)) return true;
    int i = size - 1;
    while (i >= 0 && idx[i] == static_cast<int>(items.size()) - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void verify_lifted(const Instance& original, const Assignment& f, const char* where) {
  if (!is_solution(original, f)) throw std::logic_error(std::string(where) + ": lifted assignment is not a solution");
}

}  // namespace

BoundFunctions::BoundFunctions(int domain_size, int r_max) : domain_size_(domain_size), r_max_(std::max(1, r_max)) {
  if (domain_size < 1) throw std::invalid_argument("domain size must be positive");
}

BoundFunctions BoundFunctions::of(const Language& g) { return BoundFunctions(g.domain().size(), g.max_arity()); }

std::uint64_t BoundFunctions::d_prime(int k) const {
  return sat_pow(sat_mul(static_cast<std::uint64_t>(domain_size_ - 1), static_cast<std::uint64_t>(r_max_)), k);
}

std::uint64_t BoundFunctions::d(int k) const { return sat_mul(static_cast<std::uint64_t>(domain_size_ - 1), d_prime(k)); }

std::uint64_t BoundFunctions::K(int k) const { return sat_mul(static_cast<std::uint64_t>(k), d(k)); }

std::uint64_t BoundFunctions::F(int k) const {
  const std::uint64_t kk = sat_mul(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(k));
  return sat_mul(kk, sat_add(static_cast<std::uint64_t>(domain_size_), d(k)));
}

SparseAssignment to_sparse(const Assignment& f) {
  SparseAssignment s;
  for (int v = 0; v < static_cast<int>(f.size()); ++v)
    if (f[v] != 0) s.push_back({v, f[v]});
  return s;
}

Assignment to_dense(const SparseAssignment& f, int num_vars) {
  Assignment out(num_vars, 0);
  for (auto [v, d] : f) out.at(v) = d;
  return out;
}

std::vector<Assignment> minimal_extensions(const Instance& inst, const Assignment& f, int k, SolveStats* stats) {
  check_k(k);
  if (static_cast<int>(f.size()) != inst.num_vars) throw std::invalid_argument("minimal_extensions: assignment length mismatch");
  Search s(inst);
  Assignment work = f;
  std::vector<int> nz = nonzero_vars(f);
  std::vector<Assignment> out;
  for_each_minimal_extension(s, work, nz, k, stats,
                             [&](const SparseAssignment& g) { out.push_back(to_dense(g, inst.num_vars)); });
  return out;
}

bool has_satisfying_extension(const Instance& inst, const Assignment& f, int k, SolveStats* stats) {
  check_k(k);
  if (static_cast<int>(f.size()) != inst.num_vars) throw std::invalid_argument("has_satisfying_extension: assignment length mismatch");
  Search s(inst);
  Assignment work = f;
  std::vector<int> nz = nonzero_vars(f);
  return extension_exists(s, work, nz, k, stats);
}

std::vector<SparseAssignment> minimal_assignments_sparse(const Instance& inst, int k, SolveStats* stats) {
  check_k(k);
  std::vector<SparseAssignment> out;
  if (k == 0) return out;
  Search s(inst);
  std::set<SparseAssignment> seen;
  std::vector<int> multiplicity(inst.num_vars, 0);
  Assignment f(inst.num_vars, 0);
  std::vector<int> nz;
  for (int v = 0; v < inst.num_vars; ++v) {
    for (Value d : inst.domain.nonzero()) {
      f[v] = d;
      nz.assign(1, v);
      for_each_minimal_extension(s, f, nz, k, stats, [&](const SparseAssignment& g) {
        if (seen.count(g)) return;
        seen.insert(g);
        // global minimality: no nonzero proper subset is satisfying
        Assignment h = to_dense(g, inst.num_vars);
        std::vector<int> gnz;
        for (auto [u, val] : g) gnz.push_back(u);
        if (!s.minimal_over(h, gnz, 0)) return;
        out.push_back(g);
        for (auto [u, val] : g) ++multiplicity[u];
      });
      f[v] = 0;
    }
  }
  if (stats) {
    stats->minimal_assignments += out.size();
    for (int m : multiplicity) stats->max_multiplicity = std::max(stats->max_multiplicity, m);
  }
  return out;
}

std::vector<Assignment> minimal_assignments(const Instance& inst, int k, SolveStats* stats) {
  std::vector<Assignment> out;
  for (const auto& g : minimal_assignments_sparse(inst, k, stats)) out.push_back(to_dense(g, inst.num_vars));
  return out;
}

std::vector<Reduced> reduce_to_0valid(const Instance& inst, SolveStats* stats) {
  check_instance(inst);
  std::vector<Reduced> out;
  const Assignment zero(inst.num_vars, 0);
  for (const Assignment& g : minimal_extensions(inst, zero, inst.k, stats)) {
    if (auto sub = substitute_assignment(inst, g)) out.push_back({std::move(sub->instance), std::move(sub->lift)});
  }
  return out;
}

SolveResult solve_weakly_separable(const Instance& inst, const Language& g) {
  if (!is_weakly_separable(g)) throw std::invalid_argument("solve_weakly_separable: language is not weakly separable");
  check_instance(inst);
  SolveResult res;
  res.stats.path = "weakly_separable";
  const int k = inst.k;
  const int n = inst.num_vars;
  if (k == 0) {
    Assignment zero(n, 0);
    if (is_solution(inst, zero)) {
      res.found = true;
      res.assignment = zero;
    }
    return res;
  }
  const auto mins = minimal_assignments_sparse(inst, k, &res.stats);
  const std::uint64_t bound = BoundFunctions::of(g).K(k);
  std::map<std::array<int, kMaxDelta + 1>, std::uint64_t> kept;
  std::vector<const SparseAssignment*> items;
  std::vector<std::array<int, kMaxDelta + 1>> sigs;
  for (const auto& m : mins) {
    std::array<int, kMaxDelta + 1> sig{};
    for (auto [v, d] : m) ++sig[d];
    if (kept[sig]++ >= bound) continue;
    items.push_back(&m);
    sigs.push_back(sig);
  }

  std::array<int, kMaxDelta + 1> remaining{};
  int remaining_total = k;
  if (inst.pi) remaining = inst.pi->counts;
  std::vector<char> used(n, 0);
  std::vector<std::size_t> chosen;

  std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
    ++res.stats.nodes;
    if (remaining_total == 0) return true;
    for (std::size_t j = start; j < items.size(); ++j) {
      const auto& m = *items[j];
      if (static_cast<int>(m.size()) > remaining_total) continue;
      bool ok = true;
      if (inst.pi)
        for (int d = 1; d <= kMaxDelta && ok; ++d) ok = sigs[j][d] <= remaining[d];
      for (auto [v, d] : m) ok = ok && !used[v];
      if (!ok) continue;
      for (auto [v, d] : m) used[v] = 1;
      for (int d = 1; d <= kMaxDelta; ++d) remaining[d] -= sigs[j][d];
      remaining_total -= static_cast<int>(m.size());
      chosen.push_back(j);
      if (dfs(j + 1)) return true;
      chosen.pop_back();
      remaining_total += static_cast<int>(m.size());
      for (int d = 1; d <= kMaxDelta; ++d) remaining[d] += sigs[j][d];
      for (auto [v, d] : m) used[v] = 0;
    }
    return false;
  };
  if (!dfs(0)) return res;
  Assignment f(n, 0);
  for (std::size_t j : chosen)
    for (auto [v, d] : *items[j]) f[v] = d;
  if (!is_solution(inst, f)) throw std::logic_error("solve_weakly_separable: disjoint union is not a solution");
  res.found = true;
  res.assignment = std::move(f);
  return res;
}

std::vector<int> frequency_support(const Instance& inst, Value d, SolveStats* stats) {
  check_k(inst.k);
  Search s(inst);
  return support_of_value(s, d, stats);
}

std::vector<FrequentInstance> reduce_to_frequent(const Instance& inst, const Language& g, std::uint64_t c,
                                                 SolveStats* stats) {
  check_instance(inst);
  std::vector<FrequentInstance> out;
  std::uint64_t produced = 0;
  std::function<void(const Instance&, const Lift&)> process = [&](const Instance& cur, const Lift& lift) {
    if (++produced > kFrequentBranchLimit) throw GuardError("reduce_to_frequent: branching limit exceeded");
    Search s(cur);
    for (Value d : cur.domain.nonzero()) {
      const std::vector<int> support = support_of_value(s, d, stats);
      if (support.size() >= c) continue;
      const ValueSet next_domain = cur.domain.without(d);
      std::vector<int> sizes;
      if (cur.pi) {
        sizes.push_back(cur.pi->counts[d]);
      } else {
        for (int sz = 0; sz <= std::min<int>(cur.k, static_cast<int>(support.size())); ++sz) sizes.push_back(sz);
      }
      for (int sz : sizes) {
        for_each_subset(support, sz, [&](const std::vector<int>& pick) {
          Assignment a(cur.num_vars, 0);
          for (int v : pick) a[v] = d;
          std::vector<Assignment> exts;
          if (satisfies(cur, a)) {
            if (assignment_size(a) <= cur.k) exts.push_back(a);
          } else {
            Assignment work = a;
            std::vector<int> nz = pick;
            for_each_minimal_extension(s, work, nz, cur.k, stats, [&](const SparseAssignment& e) {
              exts.push_back(to_dense(e, cur.num_vars));
            });
          }
          for (const Assignment& e : exts) {
            auto sub = substitute_assignment(cur, e);
            if (!sub) continue;
            if (sub->instance.pi && sub->instance.pi->counts[d] != 0) continue;
            Instance next = restrict_instance(sub->instance, next_domain);
            process(next, lift.then(sub->lift));
          }
          return false;
        });
      }
      return;
    }
    out.push_back({cur, restrict_language(g, cur.domain), lift});
  };
  process(inst, Lift::identity(inst.num_vars));
  if (stats) stats->frequent_branches += out.size();
  return out;
}

// ---------------------------------------------------------------------------

OcspSolver::OcspSolver(const Language& g) : lang_(cc0_normalize(g)), report_(classify_ocsp(lang_)) {}

const OcspSolver::Analysis& OcspSolver::analysis(ValueSet d1) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(d1.bits());
  if (it != cache_.end()) return *it->second;
  auto a = std::make_shared<Analysis>();
  const Language l1 = restrict_language(lang_, d1);
  a->contraction = find_min_contraction(l1);
  a->d2 = a->contraction.image();
  const TypeAnalysis types = analyze_types(l1);
  for (Value v : d1.nonzero()) {
    const ValueType t = types.type[v];
    if ((t == ValueType::degenerate || t == ValueType::self_producing) && value_weakly_separable(l1, v)) {
      const ValueSet producers = types.producers_of(v);
      if (producers.empty()) continue;
      a->easy_value = v;
      a->producer = producers.min();
      break;
    }
  }
  a->restricted = restrict_language(lang_, a->d2);
  if (a->easy_value == 0 && !is_weakly_separable(a->restricted))
    throw std::logic_error("OcspSolver: contracted language is not weakly separable on a tractable classification");
  return *cache_.emplace(d1.bits(), std::move(a)).first->second;
}

SolveResult OcspSolver::solve(const Instance& inst) const {
  if (!tractable()) throw HardLanguageError("OCSP is W[1]-hard for this language; use brute_force");
  check_instance(inst);
  if (inst.pi) throw std::invalid_argument("OcspSolver: instance carries a cardinality map");
  if (inst.domain != lang_.domain()) throw std::invalid_argument("OcspSolver: instance domain differs from the language domain");
  SolveResult res;
  for (const Reduced& r0 : reduce_to_0valid(inst, &res.stats)) {
    const auto branches = reduce_to_frequent(r0.instance, lang_, static_cast<std::uint64_t>(inst.k), &res.stats);
    for (const FrequentInstance& fi : branches) {
      const Instance& cur = fi.instance;
      std::optional<Assignment> sol;
      std::string path;
      if (cur.k == 0) {
        Assignment zero(cur.num_vars, 0);
        if (is_solution(cur, zero)) sol = zero;
        path = "zero";
      } else {
        const Analysis& a = analysis(cur.domain);
        if (a.easy_value != 0) {
          const std::vector<int> support = frequency_support(cur, a.producer, &res.stats);
          if (static_cast<int>(support.size()) < cur.k)
            throw std::logic_error("OcspSolver: frequent instance lacks variables for the producer");
          Assignment f(cur.num_vars, 0);
          for (int i = 0; i < cur.k; ++i) f[support[i]] = a.easy_value;
          if (!is_solution(cur, f)) throw std::logic_error("OcspSolver: produced-value construction failed");
          sol = f;
          path = "produced_value";
        } else {
          const Instance restricted = restrict_instance(cur, a.d2);
          SolveResult ws = solve_weakly_separable(restricted, a.restricted);
          res.stats.nodes += ws.stats.nodes;
          res.stats.minimal_assignments += ws.stats.minimal_assignments;
          res.stats.max_multiplicity = std::max(res.stats.max_multiplicity, ws.stats.max_multiplicity);
          if (ws.found) sol = ws.assignment;
          path = "contraction_weakly_separable";
        }
      }
      if (sol) {
        Assignment full = r0.lift.then(fi.lift).apply(*sol);
        verify_lifted(inst, full, "OcspSolver");
        res.found = true;
        res.assignment = std::move(full);
        res.stats.path = path;
        return res;
      }
    }
  }
  res.stats.path = "exhausted";
  return res;
}

CcspSolver::CcspSolver(const Language& g) : lang_(cc0_normalize(g)), report_(classify_ccsp(lang_)) {}

const CcspSolver::Analysis& CcspSolver::analysis(ValueSet d) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(d.bits());
  if (it != cache_.end()) return *it->second;
  auto a = std::make_shared<Analysis>();
  a->core = core(restrict_language(lang_, d));
  a->core_language = restrict_language(lang_, a->core.with(0));
  if (!is_weakly_separable(a->core_language))
    throw std::logic_error("CcspSolver: core is not weakly separable on a tractable classification");
  return *cache_.emplace(d.bits(), std::move(a)).first->second;
}

std::optional<Assignment> CcspSolver::ubiquitous_extend(const Instance& inst, SolveStats& stats) const {
  Instance cur = inst;
  Lift total = Lift::identity(inst.num_vars);
  while (true) {
    ++stats.nodes;
    if (cur.domain.nonzero().empty()) {
      if (cur.k != 0) return std::nullopt;
      return total.apply(Assignment(cur.num_vars, 0));
    }
    const Analysis& a = analysis(cur.domain);
    if (a.core.empty()) return std::nullopt;
    std::vector<std::vector<int>> incident(cur.num_vars);
    for (int i = 0; i < static_cast<int>(cur.constraints.size()); ++i)
      for (int v : cur.constraints[i].scope)
        if (incident[v].empty() || incident[v].back() != i) incident[v].push_back(i);
    Assignment f(cur.num_vars, 0);
    Assignment probe(cur.num_vars, 0);
    for (Value d : a.core) {
      int need = cur.pi ? cur.pi->counts[d] : 0;
      for (int v = 0; v < cur.num_vars && need > 0; ++v) {
        if (f[v] != 0) continue;
        probe[v] = d;
        const bool ok = std::all_of(incident[v].begin(), incident[v].end(),
                                    [&](int i) { return constraint_satisfied(cur.constraints[i], probe); });
        probe[v] = 0;
        if (!ok) continue;
        f[v] = d;
        --need;
      }
      if (need > 0) return std::nullopt;
    }
    auto sub = substitute_assignment(cur, f);
    if (!sub) return std::nullopt;
    total = total.then(sub->lift);
    cur = restrict_instance(sub->instance, cur.domain - a.core);
  }
}

SolveResult CcspSolver::solve(const Instance& inst) const {
  if (!tractable()) throw HardLanguageError("CCSP is hard for this language; use brute_force");
  check_instance(inst);
  if (!inst.pi) throw std::invalid_argument("CcspSolver: instance has no cardinality map");
  if (inst.domain != lang_.domain()) throw std::invalid_argument("CcspSolver: instance domain differs from the language domain");
  SolveResult res;
  const std::uint64_t c = BoundFunctions::of(lang_).F(inst.k);
  for (const Reduced& r0 : reduce_to_0valid(inst, &res.stats)) {
    for (const FrequentInstance& fi : reduce_to_frequent(r0.instance, lang_, c, &res.stats)) {
      const Instance& cur = fi.instance;
      std::optional<Assignment> sol;
      if (cur.domain.nonzero().empty()) {
        Assignment zero(cur.num_vars, 0);
        if (is_solution(cur, zero)) sol = zero;
      } else {
        const Analysis& a = analysis(cur.domain);
        Instance on_core = cur;
        CardinalityMap p = *cur.pi;
        for (int d = 1; d <= kMaxDelta; ++d)
          if (!a.core.contains(d)) p.counts[d] = 0;
        on_core.pi = p;
        on_core.k = p.total();
        on_core = restrict_instance(on_core, a.core.with(0));
        SolveResult ws = solve_weakly_separable(on_core, a.core_language);
        res.stats.nodes += ws.stats.nodes;
        res.stats.minimal_assignments += ws.stats.minimal_assignments;
        res.stats.max_multiplicity = std::max(res.stats.max_multiplicity, ws.stats.max_multiplicity);
        if (!ws.found) continue;
        auto sub = substitute_assignment(cur, ws.assignment);
        if (!sub) throw std::logic_error("CcspSolver: core solution does not substitute");
        const Instance rest = restrict_instance(sub->instance, cur.domain - a.core);
        auto ext = ubiquitous_extend(rest, res.stats);
        if (!ext) throw std::logic_error("CcspSolver: greedy extension over the degenerate values failed");
        sol = sub->lift.apply(*ext);
      }
      if (sol) {
        Assignment full = r0.lift.then(fi.lift).apply(*sol);
        verify_lifted(inst, full, "CcspSolver");
        res.found = true;
        res.assignment = std::move(full);
        res.stats.path = cur.domain.nonzero().empty() ? "zero" : "core_ubiquitous";
        return res;
      }
    }
  }
  res.stats.path = "exhausted";
  return res;
}

SolveResult solve_ocsp(const Instance& inst, const Language& g) { return OcspSolver(g).solve(inst); }

SolveResult solve_ccsp(const Instance& inst, const Language& g) { return CcspSolver(g).solve(inst); }

std::vector<Instance> ocsp_to_ccsp(const Instance& inst) {
  if (inst.pi) throw std::invalid_argument("ocsp_to_ccsp: instance already has a cardinality map");
  const std::vector<Value> values = inst.domain.nonzero().values();
  std::vector<Instance> out;
  CardinalityMap p;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 >= values.size()) {
      if (values.empty()) {
        if (left != 0) return;
      } else {
        p.counts[values[i]] = left;
      }
      Instance c = inst;
      c.pi = p;
      out.push_back(std::move(c));
      if (!values.empty()) p.counts[values[i]] = 0;
      return;
    }
    for (int x = left; x >= 0; --x) {
      p.counts[values[i]] = x;
      rec(i + 1, left - x);
    }
    p.counts[values[i]] = 0;
  };
  rec(0, inst.k);
  return out;
}

SolveResult brute_force(const Instance& inst) {
  inst.validate();
  const std::vector<Value> vals = inst.domain.values();
  const int n = inst.num_vars;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total = sat_mul(total, vals.size());
    if (total > kBruteForceLimit) throw GuardError("brute_force: search space exceeds the limit");
  }
  std::vector<std::vector<int>> by_last(n);
  for (int i = 0; i < static_cast<int>(inst.constraints.size()); ++i) {
    const auto& scope = inst.constraints[i].scope;
    if (scope.empty()) continue;
    by_last[*std::max_element(scope.begin(), scope.end())].push_back(i);
  }
  SolveResult res;
  res.stats.path = "brute_force";
  for (const auto& c : inst.constraints)
    if (c.scope.empty() && !c.relation->contains(Tuple{})) return res;
  Assignment f(n, 0);
  std::array<int, kMaxDelta + 1> used{};
  int count = 0;
  std::function<bool(int)> rec = [&](int i) -> bool {
    ++res.stats.nodes;
    if (i == n) return count == inst.k;
    if (count + (n - i) < inst.k) return false;
    for (Value v : vals) {
      if (v != 0) {
        if (count == inst.k) continue;
        if (inst.pi && used[v] >= inst.pi->counts[v]) continue;
      }
      f[i] = v;
      bool ok = true;
      for (int c : by_last[i])
        if (!constraint_satisfied(inst.constraints[c], f)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (v != 0) {
        ++count;
        ++used[v];
      }
      if (rec(i + 1)) return true;
      if (v != 0) {
        --count;
        --used[v];
      }
    }
    f[i] = 0;
    return false;
  };
  if (rec(0)) {
    res.found = true;
    res.assignment = f;
  }
  return res;
}

}  // namespace sizecsp

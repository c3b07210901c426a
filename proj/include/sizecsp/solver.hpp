#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sizecsp/classification.hpp"
#include "sizecsp/instance.hpp"

namespace sizecsp {

inline constexpr int kMaxK = 10;
inline constexpr int kMaxVars = 10000;
inline constexpr std::uint64_t kBruteForceLimit = 100'000'000;

struct SolveStats {
  std::uint64_t nodes = 0;                // search-tree nodes over all enumerations
  std::uint64_t minimal_assignments = 0;  // minimal assignments enumerated
  std::uint64_t frequent_branches = 0;    // instances produced by the frequency reduction
  int max_multiplicity = 0;               // largest number of minimal assignments sharing a variable
  std::string path;                       // which algorithm branch produced the answer
};

struct SolveResult {
  bool found = false;
  Assignment assignment;
  SolveStats stats;
};

// Worst-case counting functions of the enumeration lemmas, saturating at
// UINT64_MAX. |D| is the domain size including 0.
class BoundFunctions {
 public:
  BoundFunctions(int domain_size, int r_max);
  static BoundFunctions of(const Language& g);

  std::uint64_t d_prime(int k) const;  // ((|D|-1) r_max)^k
  std::uint64_t d(int k) const;        // (|D|-1) d'(k)
  std::uint64_t K(int k) const;        // k d(k)
  std::uint64_t F(int k) const;        // k^2 (|D| + d(k))

 private:
  int domain_size_;
  int r_max_;
};

// Sparse view of an assignment: (variable, nonzero value) pairs by variable.
using SparseAssignment = std::vector<std::pair<int, Value>>;
SparseAssignment to_sparse(const Assignment& f);
Assignment to_dense(const SparseAssignment& f, int num_vars);

// Minimal satisfying extensions of f of size at most k, in discovery order.
std::vector<Assignment> minimal_extensions(const Instance& inst, const Assignment& f, int k,
                                           SolveStats* stats = nullptr);
// Whether f has some satisfying extension of size at most k.
bool has_satisfying_extension(const Instance& inst, const Assignment& f, int k, SolveStats* stats = nullptr);

// Minimal satisfying assignments of size at most k of a 0-valid instance.
std::vector<SparseAssignment> minimal_assignments_sparse(const Instance& inst, int k, SolveStats* stats = nullptr);
std::vector<Assignment> minimal_assignments(const Instance& inst, int k, SolveStats* stats = nullptr);

// A derived instance and the way back to the instance it came from.
struct Reduced {
  Instance instance;
  Lift lift;
};

// One 0-valid instance per minimal satisfying extension of the all-zero
// assignment (the instance itself when it is already 0-valid).
std::vector<Reduced> reduce_to_0valid(const Instance& inst, SolveStats* stats = nullptr);

// Requires g weakly separable (checked; throws std::invalid_argument).
SolveResult solve_weakly_separable(const Instance& inst, const Language& g);

struct FrequentInstance {
  Instance instance;
  Language language;  // g restricted to the instance domain
  Lift lift;
};
// Branches on infrequent values until every remaining nonzero value can
// appear on at least c variables. inst must be 0-valid over g.
std::vector<FrequentInstance> reduce_to_frequent(const Instance& inst, const Language& g, std::uint64_t c,
                                                 SolveStats* stats = nullptr);
// Variables where value d appears in some satisfying assignment of size <= k.
std::vector<int> frequency_support(const Instance& inst, Value d, SolveStats* stats = nullptr);

// FPT solver for size constraints. The language is cc0-normalized and
// classified on construction; solve() throws HardLanguageError when the
// classification is W1_hard.
class OcspSolver {
 public:
  explicit OcspSolver(const Language& g);
  const Language& language() const { return lang_; }
  const OcspReport& report() const { return report_; }
  bool tractable() const { return report_.verdict == OcspVerdict::fpt; }
  SolveResult solve(const Instance& inst) const;

 private:
  struct Analysis {
    SingleMorphism contraction;
    ValueSet d2;
    Value easy_value = 0;  // weakly separable degenerate/self-producing value, or 0
    Value producer = 0;    // a value producing easy_value
    Language restricted;   // g|d2
  };
  const Analysis& analysis(ValueSet d1) const;

  Language lang_;
  OcspReport report_;
  mutable std::mutex mutex_;
  mutable std::map<std::uint32_t, std::shared_ptr<const Analysis>> cache_;
};

class CcspSolver {
 public:
  explicit CcspSolver(const Language& g);
  const Language& language() const { return lang_; }
  const CcspReport& report() const { return report_; }
  bool tractable() const { return report_.verdict == CcspVerdict::fpt; }
  SolveResult solve(const Instance& inst) const;

 private:
  struct Analysis {
    ValueSet core;
    Language core_language;  // g|core∪{0}
  };
  const Analysis& analysis(ValueSet d) const;
  // Greedy extension over the degenerate remainder; nullopt if it gets stuck.
  std::optional<Assignment> ubiquitous_extend(const Instance& inst, SolveStats& stats) const;

  Language lang_;
  CcspReport report_;
  mutable std::mutex mutex_;
  mutable std::map<std::uint32_t, std::shared_ptr<const Analysis>> cache_;
};

SolveResult solve_ocsp(const Instance& inst, const Language& g);
SolveResult solve_ccsp(const Instance& inst, const Language& g);

// One instance per cardinality map with total k over the nonzero domain values.
std::vector<Instance> ocsp_to_ccsp(const Instance& inst);

// Exhaustive search in lexicographic order; throws GuardError beyond
// kBruteForceLimit assignments.
SolveResult brute_force(const Instance& inst);

}  // namespace sizecsp

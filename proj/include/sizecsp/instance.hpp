#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sizecsp/language.hpp"
#include "sizecsp/relation.hpp"

namespace sizecsp {

// Total assignment: one value per variable.
using Assignment = std::vector<Value>;

int assignment_size(const Assignment& f);
// δ_{v,d}
Assignment delta_assignment(int num_vars, int v, Value d);
std::string assignment_to_string(const Assignment& f);

// π: required number of occurrences of each nonzero value.
struct CardinalityMap {
  std::array<int, kMaxDelta + 1> counts{};  // counts[0] is unused and kept at 0

  int total() const;
  bool all_zero() const { return total() == 0; }
  bool operator==(const CardinalityMap&) const = default;
};

CardinalityMap signature_of(const Assignment& f);

struct Constraint {
  std::vector<int> scope;
  RelationPtr relation;
};

struct Instance {
  int num_vars = 0;
  ValueSet domain = ValueSet{0, 1};
  std::vector<Constraint> constraints;
  int k = 0;
  std::optional<CardinalityMap> pi;

  // Throws std::invalid_argument on a broken invariant.
  void validate() const;
};

bool constraint_satisfied(const Constraint& c, const Assignment& f);
// All constraints hold (size and cardinality are ignored).
bool satisfies(const Instance& inst, const Assignment& f);
// Satisfying, values inside the domain, size k and matching π when present.
bool is_solution(const Instance& inst, const Assignment& f);

// Maps a solution of a derived instance back to its source instance:
// source[var_map[i]] = child[i], every other source variable takes `fixed`.
struct Lift {
  std::vector<int> var_map;
  Assignment fixed;

  static Lift identity(int num_vars);
  Assignment apply(const Assignment& child) const;
  // this ∘ inner, where inner lifts into the instance this lifts from
  Lift then(const Lift& inner) const;
};

struct Substituted {
  Instance instance;
  Lift lift;
};

// Substitutes the nonzero values of the satisfying assignment f as constants.
// Returns nullopt if f violates a constraint, or the size/cardinality budget
// would become negative.
std::optional<Substituted> substitute_assignment(const Instance& inst, const Assignment& f);

// Every constraint relation intersected with d^n; the domain becomes
// inst.domain ∩ d.
Instance restrict_instance(const Instance& inst, ValueSet d);

}  // namespace sizecsp

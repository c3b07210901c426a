#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sizecsp/language.hpp"

namespace sizecsp {

using ImageTable = std::array<ValueSet, kMaxDelta + 1>;

// Zero-preserving map from `source` into the domain.
struct SingleMorphism {
  ValueSet source;
  std::array<Value, kMaxDelta + 1> map{};

  Value operator()(Value x) const { return map[x]; }
  Tuple apply(const Tuple& t) const;
  ValueSet image() const;
  static SingleMorphism identity(ValueSet source);
  static SingleMorphism zero(ValueSet source);
  // "1->2 2->1 3->2"
  std::string to_string() const;
  bool operator==(const SingleMorphism&) const = default;
};

// Zero-preserving set-valued map from `source`.
struct MultiMorphism {
  ValueSet source;
  ImageTable map{};

  static MultiMorphism from_single(const SingleMorphism& h);
  // "1->{0,2} 2->{1}"
  std::string to_string() const;
  bool operator==(const MultiMorphism&) const = default;
};

// pr_X over `source`: fixes X, sends the rest to 0. Throws if 0 ∈ x.
SingleMorphism retract(ValueSet source, ValueSet x);

// For every R and t ∈ R|source: m(t) ∈ R.
bool check_single_morphism(const Language& g, const SingleMorphism& m);
// For every R and t ∈ R|source: m(t_1)×…×m(t_r) ⊆ R.
bool check_multi_morphism(const Language& g, const MultiMorphism& m);

// Left-to-right products: (a∘b)(x) applies a first.
SingleMorphism compose(const SingleMorphism& a, const SingleMorphism& b);
MultiMorphism compose(const MultiMorphism& a, const MultiMorphism& b);
MultiMorphism compose(const MultiMorphism& a, const SingleMorphism& b);
MultiMorphism compose(const SingleMorphism& a, const MultiMorphism& b);

// Backtracking search over maps whose image of each nonzero source value is
// drawn from `options[x]` (0 is fixed to {0}). Tuples are checked as soon as
// all their values are assigned. Choices are visited in lexicographic order
// of option indices over ascending source values; `visit` returns true to
// stop the search. Returns true if the search was stopped.
struct MorphismQuery {
  ValueSet source;
  std::array<std::vector<ValueSet>, kMaxDelta + 1> options;
};
bool search_morphisms(const Language& g, const MorphismQuery& q,
                      const std::function<bool(const ImageTable&)>& visit);

std::vector<ValueSet> singleton_options(ValueSet values);
// Single-valued search: nonzero x ranges over candidates[x].
std::optional<SingleMorphism> find_single_morphism(const Language& g, ValueSet source,
                                                   const std::array<ValueSet, kMaxDelta + 1>& candidates);
void for_each_single_morphism(const Language& g, ValueSet source,
                              const std::array<ValueSet, kMaxDelta + 1>& candidates,
                              const std::function<bool(const SingleMorphism&)>& visit);

// φ(x) = {0,y}, φ(z) = {0} for z ≠ x.
bool produces(const Language& g, Value x, Value y);

enum class ValueType { regular = 1, semiregular = 2, self_producing = 3, degenerate = 4 };
const char* to_string(ValueType t);

struct TypeAnalysis {
  ValueSet domain;
  std::array<ValueSet, kMaxDelta + 1> produced{};   // produced[x] = {y : x produces y}
  std::array<ValueType, kMaxDelta + 1> type{};
  // for non-regular y: an MVM with φ(x) = {0,y} and singleton images elsewhere
  std::array<std::optional<MultiMorphism>, kMaxDelta + 1> witness{};

  ValueSet producers_of(Value y) const;
  ValueSet of_type(ValueType t) const;
};
TypeAnalysis analyze_types(const Language& g);
ValueType value_type(const Language& g, Value y);

bool is_component(const Language& g, ValueSet c);
// Intersection of all components containing x.
ValueSet component_generated(const Language& g, ValueSet x);
// Component generated by the nondegenerate values (empty for domain {0}).
ValueSet core(const Language& g);
ValueSet core(const Language& g, const TypeAnalysis& types);
bool is_core(const Language& g);

// Zero-free endomorphism with the smallest image; the lexicographically first
// among those. The identity when no proper contraction exists.
SingleMorphism find_min_contraction(const Language& g);
// A zero-free endomorphism whose image is a proper subset of the domain.
std::optional<SingleMorphism> find_proper_contraction(const Language& g);
// Zero-free endomorphism of g with all images inside target.
std::optional<SingleMorphism> find_contraction_into(const Language& g, ValueSet target);

// No inner homomorphism from dprime to dom(g) sends a member of dprime outside it.
bool is_closed(const Language& g, ValueSet dprime);

struct Counterexample {
  enum class Kind { union_kind, difference_kind };
  Kind kind = Kind::union_kind;
  std::size_t relation_index = 0;
  RelationPtr relation;
  Tuple t1, t2;

  std::string kind_name() const { return kind == Kind::union_kind ? "union" : "difference"; }
  // "(R,(1,0),(0,1))"
  std::string to_string() const;
};

// Relations in order; within a relation union counterexamples first, then
// difference counterexamples. With component_normalized the tuples must lie
// in components generated by single values (one for both in the difference case).
std::optional<Counterexample> find_counterexample(const Language& g, bool component_normalized,
                                                  std::optional<Counterexample::Kind> only = std::nullopt);
bool is_weakly_separable(const Language& g);
bool value_weakly_separable(const Language& g, Value d);
// Checks the defining conditions of a counterexample against g.
bool valid_counterexample(const Counterexample& c);

struct BadPartitionSet {
  std::vector<SingleMorphism> parts;
  SingleMorphism sum;
};
// A partition set of endomorphisms whose pointwise sum is not an
// endomorphism, minimizing the size of the combined image.
std::optional<BadPartitionSet> find_bad_partition_set(const Language& g);

// h must be an inner homomorphism of g. True iff some MVM φ of g has
// t ∈ φ(h(t)).
bool is_recoverable(const Language& g, const SingleMorphism& h, const Tuple& t);

// Exhaustive enumeration of all zero-preserving maps source -> target,
// without pruning. Used to cross-check the backtracking search.
void naive_for_each_map(ValueSet source, ValueSet target,
                        const std::function<bool(const SingleMorphism&)>& visit);

}  // namespace sizecsp

#pragma once

#include <string_view>
#include <vector>

#include "sizecsp/relation.hpp"
#include "sizecsp/value_set.hpp"

namespace sizecsp {

// A finite constraint language over an explicit domain containing 0.
// The domain is the declared one (0..delta unless restricted); it is the set
// every derived analysis ranges over.
class Language {
 public:
  Language() = default;
  Language(int delta, std::vector<RelationPtr> relations, bool cc0 = false);
  Language(ValueSet domain, std::vector<RelationPtr> relations, bool cc0 = false);

  ValueSet domain() const { return domain_; }
  int delta() const { return domain_.max(); }
  const std::vector<RelationPtr>& relations() const { return relations_; }
  std::size_t size() const { return relations_.size(); }
  const Relation& operator[](std::size_t i) const { return *relations_[i]; }

  bool zero_valid() const;
  // cc0 flag as certified by the producer (cc0_complete, restriction of a cc0
  // language, zero_valid_sublanguage). Use is_cc0() to compute it.
  bool cc0() const { return cc0_; }
  int max_arity() const;

  RelationPtr find(std::string_view name) const;

 private:
  ValueSet domain_ = ValueSet{0};
  std::vector<RelationPtr> relations_;
  bool cc0_ = false;
};

// Γ|D': every relation intersected with D'^n, duplicates dropped.
Language restrict_language(const Language& g, ValueSet dprime);

// The 0-valid relations of g, flagged cc0.
Language zero_valid_sublanguage(const Language& g);

// All relations obtainable by (possibly empty) substitution of constants,
// originals first. 0-ary results are left out.
Language cc_closure(const Language& g);

// Closure of a 0-valid language under substitutions with 0-valid results.
// Throws if some relation is not 0-valid.
Language cc0_complete(const Language& g);

// Every relation is 0-valid and every 0-valid substitution result is
// (extensionally) already in g.
bool is_cc0(const Language& g);

// Normalizes an arbitrary language to the cc0-language the algorithms work on:
// cc0_complete if all relations are 0-valid, otherwise the 0-valid part of the
// cc-closure.
Language cc0_normalize(const Language& g);

}  // namespace sizecsp

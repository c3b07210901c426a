#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sizecsp/value_set.hpp"

namespace sizecsp {

using Tuple = std::vector<Value>;

// Tuple algebra. Tuples are compared position-wise; 0 is the "absent" value.
bool is_zero(const Tuple& t);
int support_size(const Tuple& t);
ValueSet values_of(const Tuple& t);
bool disjoint(const Tuple& a, const Tuple& b);
// big agrees with small wherever small is nonzero
bool is_extension(const Tuple& big, const Tuple& small);
// every nonzero entry lies in c
bool contained_in(const Tuple& t, ValueSet c);
Tuple tuple_union(const Tuple& t1, const Tuple& t2);
Tuple tuple_difference(const Tuple& big, const Tuple& small);
std::string tuple_to_string(const Tuple& t);

// 3 bits per coordinate; valid for values <= 7 and arity <= 6.
inline std::uint32_t encode_tuple(const Tuple& t) {
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < t.size(); ++i) code |= static_cast<std::uint32_t>(t[i]) << (3 * i);
  return code;
}

class Relation {
 public:
  Relation() = default;
  // Validates arity/value guards, sorts and deduplicates the tuples.
  Relation(std::string name, int arity, std::vector<Tuple> tuples);

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  std::size_t size() const { return tuples_.size(); }
  bool empty() const { return tuples_.empty(); }

  bool contains(const Tuple& t) const;
  bool contains_code(std::uint32_t code) const { return (bitmap_[code >> 6] >> (code & 63)) & 1u; }
  bool zero_valid() const;
  ValueSet values() const;

  Relation renamed(std::string name) const;

  // Extensional equality: names are ignored.
  bool operator==(const Relation& o) const { return arity_ == o.arity_ && tuples_ == o.tuples_; }

 private:
  std::string name_;
  int arity_ = 0;
  std::vector<Tuple> tuples_;
  std::vector<std::uint64_t> bitmap_;
};

using RelationPtr = std::shared_ptr<const Relation>;

RelationPtr make_relation(std::string name, int arity, std::vector<Tuple> tuples);

// R^{|i1..iq;d1..dq}: keep tuples with the given values at the given (0-based)
// positions and drop those coordinates.
Relation substitute_constants(const Relation& r, const std::vector<int>& positions,
                              const std::vector<Value>& values);
// Name used for substitution results: "R|i1,..;d1,.." with 1-based positions.
std::string substitution_name(const std::string& base, const std::vector<int>& positions,
                              const std::vector<Value>& values);

// R ∩ (D')^n
Relation restrict(const Relation& r, ValueSet dprime);

// Substitute 0 into every coordinate outside supp(t). For the all-zero tuple
// the result is the 0-ary relation holding the empty tuple.
Relation supp_substitute(const Relation& r, const Tuple& t);
// Same substitution without requiring t ∈ r; only supp(t) matters.
Relation substitute_outside_support(const Relation& r, const Tuple& t);

}  // namespace sizecsp

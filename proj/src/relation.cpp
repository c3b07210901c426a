#include "sizecsp/relation.hpp"

#include "sizecsp/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace sizecsp {

bool is_zero(const Tuple& t) {
  return std::all_of(t.begin(), t.end(), [](Value v) { return v == 0; });
}

int support_size(const Tuple& t) {
  return static_cast<int>(std::count_if(t.begin(), t.end(), [](Value v) { return v != 0; }));
}

ValueSet values_of(const Tuple& t) {
  ValueSet s;
  for (Value v : t) s.insert(v);
  return s;
}

static void require_same_length(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tuple length mismatch");
}

bool disjoint(const Tuple& a, const Tuple& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

bool is_extension(const Tuple& big, const Tuple& small) {
  require_same_length(big, small);
  for (std::size_t i = 0; i < big.size(); ++i)
    if (small[i] != 0 && big[i] != small[i]) return false;
  return true;
}

bool contained_in(const Tuple& t, ValueSet c) {
  for (Value v : t)
    if (v != 0 && !c.contains(v)) return false;
  return true;
}

Tuple tuple_union(const Tuple& t1, const Tuple& t2) {
  if (!disjoint(t1, t2)) throw std::invalid_argument("tuple_union: tuples are not disjoint");
  Tuple out(t1.size());
  for (std::size_t i = 0; i < t1.size(); ++i) out[i] = t1[i] != 0 ? t1[i] : t2[i];
  return out;
}

Tuple tuple_difference(const Tuple& big, const Tuple& small) {
  if (!is_extension(big, small)) throw std::invalid_argument("tuple_difference: not an extension");
  Tuple out(big.size());
  for (std::size_t i = 0; i < big.size(); ++i) out[i] = small[i] == 0 ? big[i] : 0;
  return out;
}

std::string tuple_to_string(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

Relation::Relation(std::string name, int arity, std::vector<Tuple> tuples)
    : name_(std::move(name)), arity_(arity), tuples_(std::move(tuples)) {
  if (arity_ < 0) throw std::invalid_argument("relation " + name_ + ": negative arity");
  if (arity_ > kMaxArity)
    throw GuardError("relation " + name_ + ": arity " + std::to_string(arity_) +
                                " outside 0.." + std::to_string(kMaxArity));
  for (const Tuple& t : tuples_) {
    if (static_cast<int>(t.size()) != arity_)
      throw std::invalid_argument("relation " + name_ + ": tuple " + tuple_to_string(t) +
                                  " has wrong length");
    for (Value v : t)
      if (v < 0) throw std::invalid_argument("relation " + name_ + ": negative value");
      else if (v > kMaxDelta)
        throw GuardError("relation " + name_ + ": value " + std::to_string(v) +
                                    " outside 0.." + std::to_string(kMaxDelta));
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
  const std::size_t bits = std::size_t{1} << (3 * arity_);
  bitmap_.assign((bits + 63) / 64, 0);
  for (const Tuple& t : tuples_) {
    const std::uint32_t c = encode_tuple(t);
    bitmap_[c >> 6] |= std::uint64_t{1} << (c & 63);
  }
}

bool Relation::contains(const Tuple& t) const {
  if (static_cast<int>(t.size()) != arity_) return false;
  for (Value v : t)
    if (v < 0 || v > kMaxDelta) return false;
  return contains_code(encode_tuple(t));
}

bool Relation::zero_valid() const { return !bitmap_.empty() && (bitmap_[0] & 1u); }

ValueSet Relation::values() const {
  ValueSet s;
  for (const Tuple& t : tuples_) s |= values_of(t);
  return s;
}

Relation Relation::renamed(std::string name) const {
  Relation r = *this;
  r.name_ = std::move(name);
  return r;
}

RelationPtr make_relation(std::string name, int arity, std::vector<Tuple> tuples) {
  return std::make_shared<const Relation>(std::move(name), arity, std::move(tuples));
}

std::string substitution_name(const std::string& base, const std::vector<int>& positions,
                              const std::vector<Value>& values) {
  std::string s = base + "|";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(positions[i] + 1);
  }
  s += ';';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

Relation substitute_constants(const Relation& r, const std::vector<int>& positions,
                              const std::vector<Value>& values) {
  if (positions.size() != values.size())
    throw std::invalid_argument("substitute_constants: positions/values length mismatch");
  std::vector<char> fixed(r.arity(), 0);
  std::vector<Value> want(r.arity(), 0);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const int p = positions[i];
    if (p < 0 || p >= r.arity())
      throw std::out_of_range("substitute_constants: position " + std::to_string(p + 1) +
                              " outside arity " + std::to_string(r.arity()));
    if (fixed[p]) throw std::invalid_argument("substitute_constants: repeated position");
    fixed[p] = 1;
    want[p] = values[i];
  }
  std::vector<Tuple> out;
  for (const Tuple& t : r.tuples()) {
    bool match = true;
    for (int i = 0; i < r.arity() && match; ++i)
      if (fixed[i] && t[i] != want[i]) match = false;
    if (!match) continue;
    Tuple rest;
    rest.reserve(r.arity() - positions.size());
    for (int i = 0; i < r.arity(); ++i)
      if (!fixed[i]) rest.push_back(t[i]);
    out.push_back(std::move(rest));
  }
  if (positions.empty()) return r;
  return Relation(substitution_name(r.name(), positions, values),
                  r.arity() - static_cast<int>(positions.size()), std::move(out));
}

Relation restrict(const Relation& r, ValueSet dprime) {
  if (!dprime.contains(0)) throw std::invalid_argument("restrict: 0 missing from the value set");
  std::vector<Tuple> out;
  for (const Tuple& t : r.tuples())
    if (std::all_of(t.begin(), t.end(), [&](Value v) { return dprime.contains(v); })) out.push_back(t);
  return Relation(r.name(), r.arity(), std::move(out));
}

Relation supp_substitute(const Relation& r, const Tuple& t) {
  if (!r.contains(t)) throw std::invalid_argument("supp_substitute: tuple " + tuple_to_string(t) +
                                                  " is not in " + r.name());
  return substitute_outside_support(r, t);
}

Relation substitute_outside_support(const Relation& r, const Tuple& t) {
  if (static_cast<int>(t.size()) != r.arity())
    throw std::invalid_argument("substitute_outside_support: tuple length differs from arity of " + r.name());
  std::vector<int> positions;
  for (int i = 0; i < r.arity(); ++i)
    if (t[i] == 0) positions.push_back(i);
  return substitute_constants(r, positions, std::vector<Value>(positions.size(), 0));
}

}  // namespace sizecsp

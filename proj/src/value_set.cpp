#include "sizecsp/value_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace sizecsp {

void ValueSet::insert(Value v) {
  if (v < 0 || v > kMaxDelta) throw std::out_of_range("value " + std::to_string(v) + " outside 0..7");
  bits_ |= 1u << v;
}

std::vector<Value> ValueSet::values() const {
  std::vector<Value> out;
  for (Value v : *this) out.push_back(v);
  return out;
}

std::string ValueSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Value v : *this) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

bool size_lex_less(ValueSet a, ValueSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto va = a.values();
  auto vb = b.values();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

std::vector<ValueSet> subsets_containing(ValueSet universe, ValueSet required) {
  std::vector<ValueSet> out;
  if (!required.subset_of(universe)) return out;
  const std::uint32_t free = (universe - required).bits();
  // iterate all submasks of `free`
  std::uint32_t sub = free;
  while (true) {
    out.push_back(ValueSet::from_bits(sub | required.bits()));
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

}  // namespace sizecsp

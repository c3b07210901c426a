#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sizecsp {

using Value = int;

inline constexpr int kMaxDelta = 7;
inline constexpr int kMaxArity = 6;

// Set of domain values {0..7} stored as a bitmask.
class ValueSet {
 public:
  constexpr ValueSet() = default;
  ValueSet(std::initializer_list<Value> values) {
    for (Value v : values) insert(v);
  }

  static constexpr ValueSet from_bits(std::uint32_t bits) {
    ValueSet s;
    s.bits_ = bits & 0xFFu;
    return s;
  }
  // {lo, ..., hi}
  static ValueSet range(Value lo, Value hi) {
    ValueSet s;
    for (Value v = lo; v <= hi; ++v) s.insert(v);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  bool contains(Value v) const { return v >= 0 && v <= kMaxDelta && ((bits_ >> v) & 1u); }
  void insert(Value v);
  void erase(Value v) {
    if (v >= 0 && v <= kMaxDelta) bits_ &= ~(1u << v);
  }
  ValueSet with(Value v) const {
    ValueSet s = *this;
    s.insert(v);
    return s;
  }
  ValueSet without(Value v) const {
    ValueSet s = *this;
    s.erase(v);
    return s;
  }
  ValueSet nonzero() const { return without(0); }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  Value min() const { return empty() ? -1 : std::countr_zero(bits_); }
  Value max() const { return empty() ? -1 : 31 - std::countl_zero(bits_); }
  std::vector<Value> values() const;

  bool subset_of(ValueSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(ValueSet o) const { return (bits_ & o.bits_) != 0; }

  ValueSet operator|(ValueSet o) const { return from_bits(bits_ | o.bits_); }
  ValueSet operator&(ValueSet o) const { return from_bits(bits_ & o.bits_); }
  ValueSet operator-(ValueSet o) const { return from_bits(bits_ & ~o.bits_); }
  ValueSet& operator|=(ValueSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  ValueSet& operator&=(ValueSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  bool operator==(const ValueSet&) const = default;

  // "{0,1,3}"
  std::string to_string() const;

  class iterator {
   public:
    explicit iterator(std::uint32_t rest) : rest_(rest) {}
    Value operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint32_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint32_t bits_ = 0;
};

// Order used for every subset enumeration: by size, then lexicographically
// on the ascending list of members.
bool size_lex_less(ValueSet a, ValueSet b);

// All subsets of `universe` that contain `required`, in size_lex order.
std::vector<ValueSet> subsets_containing(ValueSet universe, ValueSet required);

}  // namespace sizecsp

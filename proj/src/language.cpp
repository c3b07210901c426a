#include "sizecsp/language.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sizecsp {

namespace {

void check_domain(ValueSet domain) {
  if (!domain.contains(0)) throw std::invalid_argument("language domain must contain 0");
}

// appends r unless an extensionally equal relation is present
void push_unique(std::vector<RelationPtr>& out, RelationPtr r) {
  for (const auto& q : out)
    if (*q == *r) return;
  out.push_back(std::move(r));
}

struct Substitution {
  std::vector<int> positions;
  std::vector<Value> values;
};

// Visits all nonempty proper position subsets in increasing mask order.
template <typename F>
void for_each_position_subset(int arity, F&& f) {
  for (std::uint32_t mask = 1; mask + 1 < (1u << arity); ++mask) {
    std::vector<int> pos;
    for (int i = 0; i < arity; ++i)
      if (mask >> i & 1u) pos.push_back(i);
    f(pos);
  }
}

}  // namespace

Language::Language(int delta, std::vector<RelationPtr> relations, bool cc0)
    : Language(ValueSet::range(0, delta), std::move(relations), cc0) {
  if (delta < 0 || delta > kMaxDelta)
    throw std::invalid_argument("domain size " + std::to_string(delta) + " outside 0.." +
                                std::to_string(kMaxDelta));
}

Language::Language(ValueSet domain, std::vector<RelationPtr> relations, bool cc0)
    : domain_(domain), relations_(std::move(relations)), cc0_(cc0) {
  check_domain(domain_);
  for (const auto& r : relations_) {
    if (!r) throw std::invalid_argument("null relation");
    if (!r->values().subset_of(domain_))
      throw std::invalid_argument("relation " + r->name() + " uses values outside the domain " +
                                  domain_.to_string());
  }
}

bool Language::zero_valid() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const RelationPtr& r) { return r->zero_valid(); });
}

int Language::max_arity() const {
  int m = 0;
  for (const auto& r : relations_) m = std::max(m, r->arity());
  return m;
}

RelationPtr Language::find(std::string_view name) const {
  for (const auto& r : relations_)
    if (r->name() == name) return r;
  return nullptr;
}

Language restrict_language(const Language& g, ValueSet dprime) {
  if (!dprime.contains(0)) throw std::invalid_argument("restrict: 0 missing from the value set");
  std::vector<RelationPtr> out;
  for (const auto& r : g.relations()) push_unique(out, std::make_shared<const Relation>(restrict(*r, dprime)));
  return Language(dprime & g.domain(), std::move(out), g.cc0());
}

Language zero_valid_sublanguage(const Language& g) {
  std::vector<RelationPtr> out;
  for (const auto& r : g.relations())
    if (r->zero_valid()) out.push_back(r);
  return Language(g.domain(), std::move(out), true);
}

Language cc_closure(const Language& g) {
  std::vector<RelationPtr> out;
  for (const auto& r : g.relations()) push_unique(out, r);
  const auto dom = g.domain().values();
  for (const auto& r : g.relations()) {
    for_each_position_subset(r->arity(), [&](const std::vector<int>& pos) {
      // odometer over dom^|pos|
      std::vector<std::size_t> idx(pos.size(), 0);
      while (true) {
        std::vector<Value> vals(pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i) vals[i] = dom[idx[i]];
        push_unique(out, std::make_shared<const Relation>(substitute_constants(*r, pos, vals)));
        std::size_t j = 0;
        while (j < idx.size() && ++idx[j] == dom.size()) idx[j++] = 0;
        if (j == idx.size()) break;
      }
    });
  }
  return Language(g.domain(), std::move(out), false);
}

Language cc0_complete(const Language& g) {
  for (const auto& r : g.relations())
    if (!r->zero_valid())
      throw std::invalid_argument("cc0_complete: relation " + r->name() + " is not 0-valid");
  std::vector<RelationPtr> out;
  for (const auto& r : g.relations()) push_unique(out, r);
  for (const auto& r : g.relations()) {
    for_each_position_subset(r->arity(), [&](const std::vector<int>& pos) {
      // the result is 0-valid exactly when some tuple vanishes off `pos`
      std::vector<std::vector<Value>> seen;
      for (const Tuple& t : r->tuples()) {
        bool zero_outside = true;
        std::size_t p = 0;
        for (int i = 0; i < r->arity(); ++i) {
          if (p < pos.size() && pos[p] == i) {
            ++p;
            continue;
          }
          if (t[i] != 0) zero_outside = false;
        }
        if (!zero_outside) continue;
        std::vector<Value> vals;
        for (int i : pos) vals.push_back(t[i]);
        seen.push_back(std::move(vals));
      }
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      for (const auto& vals : seen)
        push_unique(out, std::make_shared<const Relation>(substitute_constants(*r, pos, vals)));
    });
  }
  return Language(g.domain(), std::move(out), true);
}

bool is_cc0(const Language& g) {
  if (!g.zero_valid()) return false;
  const Language closed = cc0_complete(g);
  return closed.size() == [&] {
    std::vector<RelationPtr> uniq;
    for (const auto& r : g.relations()) push_unique(uniq, r);
    return uniq.size();
  }();
}

Language cc0_normalize(const Language& g) {
  if (g.zero_valid()) return cc0_complete(g);
  return zero_valid_sublanguage(cc_closure(g));
}

}  // namespace sizecsp

#include "sizecsp/classification.hpp"

#include <map>

#include "sizecsp/error.hpp"

namespace sizecsp {

const char* to_string(OcspVerdict v) { return v == OcspVerdict::fpt ? "FPT" : "W1_hard"; }

const char* to_string(CcspVerdict v) {
  switch (v) {
    case CcspVerdict::fpt: return "FPT";
    case CcspVerdict::biclique_hard: return "Biclique_hard";
    case CcspVerdict::w1_hard: return "W1_hard";
  }
  return "?";
}

const char* to_string(HardnessFamily f) {
  switch (f) {
    case HardnessFamily::none: return "none";
    case HardnessFamily::semiregular: return "semiregular";
    case HardnessFamily::self_producing_difference: return "self_producing_difference";
    case HardnessFamily::self_producing_union: return "self_producing_union";
    case HardnessFamily::regular_case: return "regular_case";
  }
  return "?";
}

namespace {

void check_guard(const Language& g) {
  if (g.domain().max() > kMaxDelta) throw GuardError("domain exceeds the supported size");
}

// Per-subset facts shared by all pairs.
class SubsetCache {
 public:
  explicit SubsetCache(const Language& g) : g_(g) {}

  const Language& restricted(ValueSet d) {
    auto it = lang_.find(d.bits());
    if (it == lang_.end()) it = lang_.emplace(d.bits(), restrict_language(g_, d)).first;
    return it->second;
  }
  bool closed(ValueSet d) {
    return memo(closed_, d, [&] { return is_closed(g_, d); });
  }
  bool rigid(ValueSet d) {
    return memo(rigid_, d, [&] { return !find_proper_contraction(restricted(d)).has_value(); });
  }
  bool weakly_separable(ValueSet d) {
    return memo(ws_, d, [&] { return is_weakly_separable(restricted(d)); });
  }
  // no weakly separable degenerate or self-producing value in g|d
  bool no_easy_value(ValueSet d) {
    return memo(easy_, d, [&] {
      const Language& h = restricted(d);
      const TypeAnalysis types = analyze_types(h);
      for (Value v : d.nonzero()) {
        const ValueType t = types.type[v];
        if ((t == ValueType::degenerate || t == ValueType::self_producing) && value_weakly_separable(h, v))
          return false;
      }
      return true;
    });
  }

 private:
  template <class F>
  bool memo(std::map<std::uint32_t, bool>& m, ValueSet d, F f) {
    auto it = m.find(d.bits());
    if (it != m.end()) return it->second;
    const bool r = f();
    m.emplace(d.bits(), r);
    return r;
  }

  const Language& g_;
  std::map<std::uint32_t, Language> lang_;
  std::map<std::uint32_t, bool> closed_, rigid_, ws_, easy_;
};

int pair_condition(SubsetCache& cache, ValueSet d1, ValueSet d2) {
  if (!cache.closed(d1)) return 1;
  if (!find_contraction_into(cache.restricted(d1), d2)) return 2;
  if (!cache.rigid(d2)) return 3;
  if (!cache.no_easy_value(d1)) return 4;
  if (cache.weakly_separable(d2)) return 5;
  return 0;
}

bool naive_exists(ValueSet source, ValueSet target, const std::function<bool(const SingleMorphism&)>& pred) {
  bool found = false;
  naive_for_each_map(source, target, [&](const SingleMorphism& m) {
    found = pred(m);
    return found;
  });
  return found;
}

bool zero_free(const SingleMorphism& m) {
  for (Value x : m.source.nonzero())
    if (m.map[x] == 0) return false;
  return true;
}

bool naive_has_proper_contraction(const Language& h) {
  const ValueSet d = h.domain();
  return naive_exists(d, d, [&](const SingleMorphism& m) {
    return zero_free(m) && m.image() != d && check_single_morphism(h, m);
  });
}

bool counterexample_inside(const Language& h, const Counterexample& c) {
  if (!valid_counterexample(c)) return false;
  // the relation must belong to h (by extension)
  for (const auto& r : h.relations())
    if (*r == *c.relation) return true;
  return false;
}

}  // namespace

int ocsp_pair_condition(const Language& g, ValueSet d1, ValueSet d2) {
  SubsetCache cache(g);
  return pair_condition(cache, d1, d2);
}

OcspReport classify_ocsp(const Language& g) {
  check_guard(g);
  OcspReport report;
  SubsetCache cache(g);
  for (ValueSet d1 : subsets_containing(g.domain(), ValueSet{0})) {
    for (ValueSet d2 : subsets_containing(d1, ValueSet{0})) {
      const int failed = pair_condition(cache, d1, d2);
      report.evidence.push_back({d1, d2, failed});
      if (failed == 0 && !report.witness) {
        OcspWitness w;
        w.d1 = d1;
        w.d2 = d2;
        w.contraction = *find_contraction_into(cache.restricted(d1), d2);
        w.counterexample = *find_counterexample(cache.restricted(d2), false);
        if (!verify_ocsp_witness(g, w)) throw std::logic_error("classify_ocsp: witness failed re-verification");
        report.witness = w;
        report.verdict = OcspVerdict::w1_hard;
      }
    }
  }
  return report;
}

bool verify_ocsp_witness(const Language& g, const OcspWitness& w) {
  const ValueSet dom = g.domain();
  if (!w.d1.contains(0) || !w.d2.contains(0) || !w.d2.subset_of(w.d1) || !w.d1.subset_of(dom)) return false;
  // (1) closedness by exhaustive enumeration
  if (naive_exists(w.d1, dom, [&](const SingleMorphism& m) {
        return !m.image().subset_of(w.d1) && check_single_morphism(g, m);
      }))
    return false;
  // (2) the contraction
  const Language g1 = restrict_language(g, w.d1);
  if (w.contraction.source != w.d1 || !zero_free(w.contraction) || !w.contraction.image().subset_of(w.d2) ||
      !check_single_morphism(g1, w.contraction))
    return false;
  // (3)
  const Language g2 = restrict_language(g, w.d2);
  if (naive_has_proper_contraction(g2)) return false;
  // (4)
  const TypeAnalysis types = analyze_types(g1);
  for (Value v : w.d1.nonzero()) {
    const ValueType t = types.type[v];
    if ((t == ValueType::degenerate || t == ValueType::self_producing) && value_weakly_separable(g1, v))
      return false;
  }
  // (5)
  return counterexample_inside(g2, w.counterexample);
}

namespace {

CcspWitness refine(const Language& h, ValueSet dprime) {
  CcspWitness w;
  w.dprime = dprime;
  w.counterexample = *find_counterexample(h, false);
  const TypeAnalysis types = analyze_types(h);
  if (!types.of_type(ValueType::semiregular).empty()) {
    w.family = HardnessFamily::semiregular;
  } else if (!types.of_type(ValueType::regular).empty()) {
    w.family = HardnessFamily::regular_case;
  } else if (auto diff = find_counterexample(h, false, Counterexample::Kind::difference_kind)) {
    w.family = HardnessFamily::self_producing_difference;
    w.counterexample = *diff;
  } else {
    w.family = HardnessFamily::self_producing_union;
    w.counterexample = *find_counterexample(h, false, Counterexample::Kind::union_kind);
    w.biclique_case = true;
    for (Value v : dprime.nonzero())
      if (!value_weakly_separable(h, v)) w.biclique_case = false;
  }
  return w;
}

}  // namespace

CcspReport classify_ccsp(const Language& g) {
  check_guard(g);
  CcspReport report;
  std::vector<ValueSet> hard;
  for (ValueSet d : subsets_containing(g.domain(), ValueSet{0})) {
    bool has_hard_subset = false;
    for (ValueSet e : hard)
      if (e.subset_of(d)) has_hard_subset = true;
    const Language h = restrict_language(g, d);
    if (d.nonzero().empty() || !is_core(h) || is_weakly_separable(h)) continue;
    hard.push_back(d);
    if (has_hard_subset) continue;
    CcspWitness w = refine(h, d);
    if (!verify_ccsp_witness(g, w)) throw std::logic_error("classify_ccsp: witness failed re-verification");
    report.minimal_witnesses.push_back(std::move(w));
  }
  if (report.minimal_witnesses.empty()) return report;
  report.witness = report.minimal_witnesses.front();
  bool all_biclique = true;
  for (const auto& w : report.minimal_witnesses) all_biclique = all_biclique && w.biclique_case;
  report.verdict = all_biclique ? CcspVerdict::biclique_hard : CcspVerdict::w1_hard;
  return report;
}

bool verify_ccsp_witness(const Language& g, const CcspWitness& w) {
  if (!w.dprime.contains(0) || !w.dprime.subset_of(g.domain()) || w.dprime.nonzero().empty()) return false;
  const Language h = restrict_language(g, w.dprime);
  // core: the retraction onto the nondegenerate-generated component must be the identity
  const ValueSet k = core(h);
  if (k != w.dprime.nonzero()) return false;
  // every smaller candidate component containing the nondegenerate values fails pr
  const TypeAnalysis types = analyze_types(h);
  const ValueSet nondeg = w.dprime.nonzero() - types.of_type(ValueType::degenerate);
  for (ValueSet c : subsets_containing(w.dprime.nonzero(), nondeg))
    if (c != w.dprime.nonzero() && check_single_morphism(h, retract(w.dprime, c))) return false;
  return counterexample_inside(h, w.counterexample);
}

}  // namespace sizecsp

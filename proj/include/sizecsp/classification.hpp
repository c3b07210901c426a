#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sizecsp/morphism.hpp"

namespace sizecsp {

enum class OcspVerdict { fpt, w1_hard };
enum class CcspVerdict { fpt, biclique_hard, w1_hard };
const char* to_string(OcspVerdict v);
const char* to_string(CcspVerdict v);

struct OcspWitness {
  ValueSet d1, d2;
  SingleMorphism contraction;  // contraction of g|d1 with image inside d2
  Counterexample counterexample;  // inside g|d2
};

struct OcspPairEvidence {
  ValueSet d1, d2;
  int failed_condition = 0;  // 1..5, 0 when all conditions hold
};

struct OcspReport {
  OcspVerdict verdict = OcspVerdict::fpt;
  std::optional<OcspWitness> witness;
  std::vector<OcspPairEvidence> evidence;  // every pair in enumeration order
};

// Diagnostic grouping of a hard cardinality witness by the value types present.
enum class HardnessFamily { none, semiregular, self_producing_difference, self_producing_union, regular_case };
const char* to_string(HardnessFamily f);

struct CcspWitness {
  ValueSet dprime;
  Counterexample counterexample;  // inside g|dprime
  HardnessFamily family = HardnessFamily::none;
  bool biclique_case = false;
};

struct CcspReport {
  CcspVerdict verdict = CcspVerdict::fpt;
  std::optional<CcspWitness> witness;  // first minimal witness
  std::vector<CcspWitness> minimal_witnesses;
};

// Conditions for a pair D2 ⊆ D1 in the size-constrained dichotomy; returns the
// index of the first failing condition or 0 when all hold.
int ocsp_pair_condition(const Language& g, ValueSet d1, ValueSet d2);

// g must be cc0 (not verified). Throws GuardError beyond the domain guard.
OcspReport classify_ocsp(const Language& g);
CcspReport classify_ccsp(const Language& g);

// Independent re-check of a witness against g.
bool verify_ocsp_witness(const Language& g, const OcspWitness& w);
bool verify_ccsp_witness(const Language& g, const CcspWitness& w);

}  // namespace sizecsp

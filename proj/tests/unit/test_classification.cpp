#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sizecsp/classification.hpp"
#include "sizecsp/io.hpp"

using namespace sizecsp;

namespace {

Language load(const std::string& name) {
  return cc0_normalize(parse_language(read_file(std::string(SIZECSP_DATA_DIR) + "/languages/" + name)));
}

}  // namespace

TEST_CASE("size-constrained classification of the fixtures") {
  const OcspReport is = classify_ocsp(load("is.lang"));
  CHECK(is.verdict == OcspVerdict::w1_hard);
  REQUIRE(is.witness);
  CHECK(is.witness->d1 == ValueSet{0, 1});
  CHECK(is.witness->d2 == ValueSet{0, 1});
  CHECK(verify_ocsp_witness(load("is.lang"), *is.witness));

  for (const char* easy : {"nonweaklysepeasy.lang", "nonweaklysep-easy.lang", "even.lang", "mod3.lang"}) {
    CAPTURE(easy);
    const OcspReport r = classify_ocsp(load(easy));
    CHECK(r.verdict == OcspVerdict::fpt);
    CHECK_FALSE(r.witness);
    CHECK_FALSE(r.evidence.empty());
    for (const auto& e : r.evidence) CHECK(e.failed_condition >= 1);
  }
  // weakly separable: condition 5 is what fails wherever 1..4 hold
  for (const auto& e : classify_ocsp(load("even.lang")).evidence) CHECK(e.failed_condition != 0);
  CHECK(classify_ocsp(load("im.lang")).verdict == OcspVerdict::w1_hard);
}

TEST_CASE("cardinality classification of the fixtures") {
  CHECK(classify_ccsp(load("ccsphard1.lang")).verdict == CcspVerdict::fpt);
  const Language g2 = load("ccsphard2.lang");
  const CcspReport r2 = classify_ccsp(g2);
  CHECK(r2.verdict == CcspVerdict::w1_hard);
  REQUIRE(r2.witness);
  CHECK(r2.witness->dprime == ValueSet{0, 1, 2, 3});
  CHECK(verify_ccsp_witness(g2, *r2.witness));

  const Language bc = load("bc.lang");
  const CcspReport rb = classify_ccsp(bc);
  CHECK(rb.verdict == CcspVerdict::biclique_hard);
  REQUIRE(rb.witness);
  CHECK(rb.witness->counterexample.to_string() == "(R_BC,(1,0),(0,2))");
  CHECK(rb.witness->family == HardnessFamily::self_producing_union);
  CHECK(rb.witness->biclique_case);
  CHECK(classify_ccsp(load("is.lang")).verdict == CcspVerdict::w1_hard);
  CHECK(classify_ccsp(load("even.lang")).verdict == CcspVerdict::fpt);
}

TEST_CASE("pair evidence is exhaustive and ordered") {
  const Language g = load("nonweaklysep-easy.lang");
  const OcspReport r = classify_ocsp(g);
  std::size_t expected = 0;
  for (ValueSet d1 : subsets_containing(g.domain(), ValueSet{0}))
    expected += subsets_containing(d1, ValueSet{0}).size();
  CHECK(r.evidence.size() == expected);
  for (std::size_t i = 1; i < r.evidence.size(); ++i)
    CHECK_FALSE(size_lex_less(r.evidence[i].d1, r.evidence[i - 1].d1));
  for (const auto& e : r.evidence) CHECK(e.failed_condition == ocsp_pair_condition(g, e.d1, e.d2));
}

TEST_CASE("cardinality hardness is inherited from restrictions") {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 40; ++rep) {
    const Language g = cc0_complete(oracle::random_language(rng, 2, 3, 2));
    const CcspReport r = classify_ccsp(g);
    bool any_hard = false;
    for (ValueSet d : subsets_containing(g.domain(), ValueSet{0})) {
      const Language h = restrict_language(g, d);
      const bool hard = is_core(h) && !oracle::weakly_separable(h);
      any_hard |= hard;
      if (classify_ccsp(h).verdict != CcspVerdict::fpt) CHECK(r.verdict != CcspVerdict::fpt);
    }
    CHECK((r.verdict != CcspVerdict::fpt) == any_hard);
    for (const auto& w : r.minimal_witnesses) CHECK(verify_ccsp_witness(g, w));
  }
}

TEST_CASE("size-constrained witnesses satisfy all five conditions") {
  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 40; ++rep) {
    const Language g = cc0_complete(oracle::random_language(rng, 2, 3, 2));
    const OcspReport r = classify_ocsp(g);
    if (r.witness) {
      CHECK(verify_ocsp_witness(g, *r.witness));
      CHECK(ocsp_pair_condition(g, r.witness->d1, r.witness->d2) == 0);
      CHECK_FALSE(oracle::weakly_separable(restrict_language(g, r.witness->d2)));
    } else {
      for (const auto& e : r.evidence) CHECK(e.failed_condition > 0);
    }
    // weakly separable languages are always FPT
    if (oracle::weakly_separable(g)) CHECK(r.verdict == OcspVerdict::fpt);
  }
}

TEST_CASE("verdict names") {
  CHECK(std::string(to_string(OcspVerdict::fpt)) == "FPT");
  CHECK(std::string(to_string(OcspVerdict::w1_hard)) == "W1_hard");
  CHECK(std::string(to_string(CcspVerdict::biclique_hard)) == "Biclique_hard");
}

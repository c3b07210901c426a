#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sizecsp/error.hpp"
#include "sizecsp/io.hpp"

using namespace sizecsp;

namespace {

std::string data(const std::string& rel) { return read_file(std::string(SIZECSP_DATA_DIR) + "/" + rel); }

int parse_error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("every shipped language parses and round-trips") {
  for (const char* name : {"bc.lang", "cc0-languages.lang", "ccsphard1.lang", "ccsphard2.lang", "even.lang", "im.lang",
                           "is.lang", "le3.lang", "lt4.lang", "mod3.lang", "nonweaklysep-easy.lang",
                           "nonweaklysepeasy.lang", "produces.lang", "types.lang", "vc.lang"}) {
    CAPTURE(name);
    const Language g = parse_language(data(std::string("languages/") + name));
    const std::string once = serialize_language(g);
    const Language again = parse_language(once);
    CHECK(serialize_language(again) == once);
    CHECK(again.size() == g.size());
  }
}

TEST_CASE("language parser errors carry the line") {
  CHECK(parse_error_line([] { parse_language("domain 2\nrelation R 2\n0 0\n0 3\n"); }) == 4);
  CHECK(parse_error_line([] { parse_language("domain 2\nrelation R 2\n0 0 1\n"); }) == 3);
  CHECK(parse_error_line([] { parse_language("domain 2\nrelation R 2\n0 0\nrelation R 1\n0\n"); }) == 4);
  CHECK(parse_error_line([] { parse_language("relation R 1\n0\n"); }) == 1);
  CHECK(parse_error_line([] { parse_language("domain 2\nrelation R 0\n"); }) == 2);
  CHECK(parse_error_line([] { parse_language("domain 2\nrelation R 1\nx\n"); }) == 3);
  CHECK_THROWS_AS(parse_language("domain 8\n"), GuardError);
  CHECK_THROWS_AS(parse_language("domain 2\nrelation R 7\n"), GuardError);
  // comments and blank lines are ignored
  const Language g = parse_language("# header\ndomain 1\n\nrelation R 1  # unary\n0\n1\n");
  CHECK(g.size() == 1);
  CHECK(g.find("R")->size() == 2);
}

TEST_CASE("value lines give non-range domains") {
  const Language g = parse_language("domain 5\nvalues 2 5\nrelation R 1\n0\n5\n");
  CHECK(g.domain() == ValueSet{0, 2, 5});
  CHECK(parse_language(serialize_language(g)).domain() == ValueSet{0, 2, 5});
  CHECK_THROWS_AS(parse_language("domain 2\nvalues 2\nrelation R 1\n1\n"), ParseError);
}

TEST_CASE("instances") {
  const Language is = parse_language(data("languages/is.lang"));
  const Instance p3 = parse_instance(data("instances/p3_is.inst"), is);
  CHECK(p3.num_vars == 3);
  CHECK(p3.k == 2);
  CHECK(p3.constraints.size() == 2);
  CHECK_FALSE(p3.pi);
  CHECK(serialize_instance(parse_instance(serialize_instance(p3), is)) == serialize_instance(p3));

  const Language h1 = parse_language(data("languages/ccsphard1.lang"));
  const Instance card = parse_instance(data("instances/ccsphard1_card.inst"), h1);
  REQUIRE(card.pi);
  CHECK(card.pi->counts[1] == 1);
  CHECK(card.pi->counts[2] == 1);
  CHECK(serialize_instance(card).find("card 1=1 2=1") != std::string::npos);

  CHECK(parse_error_line([&] { parse_instance("vars 2\nsize 2\ncard 1=1\n", is); }) == 2);
  CHECK(parse_error_line([&] { parse_instance("vars 2\nsize 1\nconstraint R_IS 0 2\n", is); }) == 3);
  CHECK(parse_error_line([&] { parse_instance("vars 2\nsize 1\nconstraint R_IS 0\n", is); }) == 3);
  CHECK(parse_error_line([&] { parse_instance("vars 2\nsize 1\nconstraint Q 0 1\n", is); }) == 3);
  CHECK(parse_error_line([&] { parse_instance("vars 2\nsize 1\ncard 2=1\n", is); }) == 3);
  CHECK(parse_error_line([&] { parse_instance("size 1\n", is); }) == 1);
  CHECK(parse_error_line([&] { parse_instance("vars 2\nsize 1\nfoo\n", is); }) == 3);
}

TEST_CASE("random instances round-trip") {
  std::mt19937_64 rng(131);
  for (int rep = 0; rep < 50; ++rep) {
    const Language g = oracle::random_language(rng, 1 + rep % 3, 3, 3);
    const Instance inst = oracle::random_instance(rng, g, 1 + rep % 6, rep % 5, rep % 4, rep % 2 == 0);
    const std::string text = serialize_instance(inst);
    const Instance back = parse_instance(text, g);
    CHECK(serialize_instance(back) == text);
    CHECK(back.k == inst.k);
    CHECK(back.pi.has_value() == inst.pi.has_value());
  }
}

TEST_CASE("graphs and size files") {
  const Graph k22 = parse_graph(data("graphs/k22.graph"));
  CHECK(k22.n == 4);
  CHECK(k22.groups.size() == 2);
  CHECK(serialize_graph(parse_graph(serialize_graph(k22))) == serialize_graph(k22));
  CHECK(parse_error_line([] { parse_graph("graph 2\nedge 0 2\n"); }) == 2);
  CHECK(parse_error_line([] { parse_graph("edge 0 1\n"); }) == 1);
  CHECK_THROWS_AS(parse_graph("graph 3\ngroup 1 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 3\ngroup 0 0 1\ngroup 1 1 2\n"), ParseError);

  const SizeSpec s = parse_sizes("bag 1 3\nbag 2 2\nsize 10\n");
  CHECK(s.mode == SizeMode::custom);
  CHECK(s.custom[1] == 3);
  CHECK(s.custom[2] == 2);
  CHECK(s.k == 10);
  CHECK(parse_error_line([] { parse_sizes("bag 1 0\n"); }) == 1);
  CHECK(parse_error_line([] { parse_sizes("bag 9 1\n"); }) == 1);
}

TEST_CASE("dumps use fixed keys") {
  const Language types = parse_language(data("languages/types.lang"));
  const std::string d = dump_analysis(types);
  for (const char* key : {"domain:", "relations:", "zero_valid:", "cc0:", "type.1:", "type.5:", "core:",
                          "weakly_separable:", "min_contraction:"})
    CHECK_MESSAGE(d.find(key) != std::string::npos, key);
  CHECK(dump_analysis(types) == d);
}

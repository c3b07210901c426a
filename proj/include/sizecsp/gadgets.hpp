#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sizecsp/instance.hpp"
#include "sizecsp/morphism.hpp"

namespace sizecsp {

using BigCount = boost::multiprecision::cpp_int;

// (4tΔ)^(2tΔ + iΔ + d) + (4tΔ)^(5tΔ − iΔ − d), for 1 <= i <= t, 1 <= d <= Δ.
BigCount z_constant(int t, int delta, int i, int d);
// All values, ordered by (i, d).
std::vector<BigCount> z_set(int t, int delta);
// Base-(4tΔ) digits, least significant first.
std::vector<int> base_digits(BigCount x, int base);

// Undirected edges, directed arcs and an optional partition of the vertices
// into groups (parts, colour classes); vertices are 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::vector<int>> groups;

  void validate() const;
  bool adjacent(int u, int v) const;
};

struct Gadget {
  int group = 0;
  int item = 0;
  std::array<std::vector<int>, kMaxDelta + 1> bags;  // bags[d] for nonzero d

  // value of the bag a variable belongs to, or 0
  Value value_of(int var) const;
};

// Hands out contiguous blocks of variable indices.
class VariableAllocator {
 public:
  int allocate(int count);
  int count() const { return next_; }

 private:
  int next_ = 0;
};

// Shared state for emitting gadget constraints over (g, dprime): caches the
// supp_t(R) relations so equal relations share one pointer.
class GadgetBuilder {
 public:
  GadgetBuilder(const Language& g, ValueSet dprime, std::uint64_t constraint_limit = 5'000'000);

  const Language& language() const { return g_; }
  ValueSet dprime() const { return dprime_; }
  const Language& restricted() const { return restricted_; }

  // Bags of the given sizes (bag_sizes[d] for nonzero d ∈ dprime) plus the
  // MVM constraints appended to out.
  Gadget mvm(const std::array<int, kMaxDelta + 1>& bag_sizes, VariableAllocator& alloc, std::vector<Constraint>& out,
             int group = 0, int item = 0);
  void nand(const Gadget& a, const Gadget& b, std::vector<Constraint>& out);
  void imp(const Gadget& a, const Gadget& b, std::vector<Constraint>& out);

  // Distinct relations used so far, as a language over dom(g).
  Language used_language() const;

 private:
  RelationPtr supp(std::size_t relation_index, const Tuple& t);
  // All scopes picking, for each support position, a variable from the bag
  // of the value there (a's bags for t1's support, b's for t2's).
  void emit(std::size_t relation_index, const Tuple& t1, const Gadget& a, const Tuple& t2, const Gadget& b,
            std::vector<Constraint>& out);

  Language g_;
  ValueSet dprime_;
  Language restricted_;
  std::uint64_t limit_;
  std::uint64_t emitted_ = 0;
  std::map<std::pair<std::size_t, Tuple>, RelationPtr> cache_;
  std::vector<RelationPtr> used_;
};

// Free-function forms over a fresh builder.
std::pair<Gadget, std::vector<Constraint>> build_mvm_gadget(const Language& g, ValueSet dprime,
                                                            const std::array<int, kMaxDelta + 1>& bag_sizes);
std::vector<Constraint> link_nand(const Gadget& a, const Gadget& b, const Language& g, ValueSet dprime);
std::vector<Constraint> link_imp(const Gadget& a, const Gadget& b, const Language& g, ValueSet dprime);

// Assignment giving value d to every variable of bag d.
void set_standard(const Gadget& gadget, Assignment& f);
// The map d -> set of values on bag d (the inner MVM a gadget assignment induces).
MultiMorphism induced_morphism(const Gadget& gadget, const Assignment& f, ValueSet dprime);

enum class SizeMode { z_constants, custom };

struct SizeSpec {
  SizeMode mode = SizeMode::custom;
  std::array<int, kMaxDelta + 1> custom{};  // per nonzero value, used in custom mode
  std::optional<int> k;                     // required in custom mode
  static SizeSpec unit(ValueSet dprime, std::optional<int> k);
  static SizeSpec z_constants() { return SizeSpec{SizeMode::z_constants, {}, std::nullopt}; }
};

enum class ForwardStatus { verified, no_source_solution, skipped };
const char* to_string(ForwardStatus s);

struct ReductionOutput {
  Language language;  // relations used by the constraints
  Instance instance;
  std::vector<Gadget> gadgets;  // one per vertex, in vertex order
  bool faithful = false;        // true only for z_constants sizes
  ForwardStatus forward = ForwardStatus::skipped;
  Counterexample counterexample;
};

// Multicolored independent set: one vertex per group, pairwise nonadjacent.
std::optional<std::vector<int>> find_multicolored_independent_set(const Graph& graph, std::uint64_t limit = 10'000'000);
// Multicolored implications: one vertex per group, closed under arcs.
std::optional<std::vector<int>> find_multicolored_implication_set(const Graph& graph, std::uint64_t limit = 10'000'000);

// Throws std::invalid_argument without a union (resp. difference)
// counterexample in g|dprime, GuardError when the instance would be too large.
ReductionOutput reduce_mis(const Language& g, ValueSet dprime, const Graph& graph, const SizeSpec& sizes);
ReductionOutput reduce_implications(const Language& g, ValueSet dprime, const Graph& graph, const SizeSpec& sizes);

struct MimpInstance {
  Graph graph;  // t groups of |E| vertices, vertex id = group * |E| + item
  int t = 0;
  int padded_vertices = 0;
};
// Pads isolated vertices up to |E|; rejects graphs with more vertices than edges.
MimpInstance clique_to_mimp(const Graph& graph, int k);

enum class GraphProblem {
  independent_set,
  vertex_cover,
  implications,
  biclique,
  general_biclique,
  p_partite_clique,
  p_colorable_subgraph,
  p_partite_complete_subgraph,
};
const char* to_string(GraphProblem p);
std::optional<GraphProblem> graph_problem_from_string(const std::string& s);

struct EncodeParams {
  int t = 0;                   // solution size (per side / per part where applicable)
  int p = 2;                   // number of parts / colours
  std::vector<int> part_sizes;  // t_1..t_p for p_partite_complete_subgraph
  bool multicolored_variant = true;  // p_partite_clique: R_{p-MC} (true) or R_{p-PC} + unaries
  bool cardinality = false;    // independent_set / implications: emit π(1)=t
};

struct EncodedProblem {
  Language language;
  Instance instance;
};
EncodedProblem encode_graph_problem(GraphProblem kind, const Graph& graph, const EncodeParams& params);

}  // namespace sizecsp

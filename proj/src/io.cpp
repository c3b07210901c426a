#include "sizecsp/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sizecsp/error.hpp"

namespace sizecsp {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

// Splits into non-empty lines of whitespace-separated tokens; '#' starts a comment.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == '#') break;
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r' && raw[j] != '#') ++j;
      line.tokens.push_back({std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

int to_int(const Line& line, const Token& tok) {
  int v = 0;
  const char* b = tok.text.data();
  const char* e = b + tok.text.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) throw ParseError(line.number, tok.column, "expected an integer, got '" + tok.text + "'");
  return v;
}

void expect_count(const Line& line, std::size_t n, const std::string& what) {
  if (line.tokens.size() != n) {
    const int col = line.tokens.size() > n ? line.tokens[n].column : line.tokens.back().column;
    throw ParseError(line.number, col, what);
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

Language parse_language(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0].text != "domain")
    throw ParseError(lines.empty() ? 1 : lines[0].number, 1, "expected 'domain <delta>' header");
  const Line& head = lines[0];
  expect_count(head, 2, "expected 'domain <delta>'");
  const int delta = to_int(head, head.tokens[1]);
  if (delta < 0) throw ParseError(head.number, head.tokens[1].column, "negative domain bound");
  if (delta > kMaxDelta)
    throw GuardError("line " + std::to_string(head.number) + ": domain bound " + std::to_string(delta) +
                     " exceeds " + std::to_string(kMaxDelta));
  ValueSet domain = ValueSet::range(0, delta);
  std::size_t i = 1;
  if (i < lines.size() && lines[i].tokens[0].text == "values") {
    const Line& l = lines[i];
    domain = ValueSet{0};
    for (std::size_t j = 1; j < l.tokens.size(); ++j) {
      const int v = to_int(l, l.tokens[j]);
      if (v < 0 || v > delta) throw ParseError(l.number, l.tokens[j].column, "value outside 0.." + std::to_string(delta));
      domain.insert(v);
    }
    ++i;
  }

  struct Pending {
    std::string name;
    int arity;
    std::vector<Tuple> tuples;
  };
  std::vector<Pending> rels;
  std::set<std::string> names;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0].text == "relation") {
      expect_count(l, 3, "expected 'relation <name> <arity>'");
      const std::string& name = l.tokens[1].text;
      if (!names.insert(name).second) throw ParseError(l.number, l.tokens[1].column, "duplicate relation name '" + name + "'");
      const int arity = to_int(l, l.tokens[2]);
      if (arity < 1) throw ParseError(l.number, l.tokens[2].column, "arity must be at least 1");
      if (arity > kMaxArity)
        throw GuardError("line " + std::to_string(l.number) + ": arity " + std::to_string(arity) + " exceeds " +
                         std::to_string(kMaxArity));
      rels.push_back({name, arity, {}});
      continue;
    }
    if (rels.empty()) throw ParseError(l.number, l.tokens[0].column, "tuple before any relation header");
    Pending& r = rels.back();
    if (static_cast<int>(l.tokens.size()) != r.arity)
      throw ParseError(l.number, l.tokens[0].column,
                       "tuple has " + std::to_string(l.tokens.size()) + " entries, relation " + r.name + " has arity " +
                           std::to_string(r.arity));
    Tuple t;
    for (const Token& tok : l.tokens) {
      const int v = to_int(l, tok);
      if (!domain.contains(v))
        throw ParseError(l.number, tok.column, "value " + std::to_string(v) + " outside the domain " + domain.to_string());
      t.push_back(v);
    }
    r.tuples.push_back(std::move(t));
  }
  std::vector<RelationPtr> out;
  for (auto& r : rels) out.push_back(make_relation(r.name, r.arity, std::move(r.tuples)));
  return Language(domain, std::move(out));
}

std::string serialize_language(const Language& g) {
  std::ostringstream os;
  os << "domain " << g.delta() << "\n";
  if (g.domain() != ValueSet::range(0, g.delta())) os << "values " << join_ints(g.domain().nonzero().values()) << "\n";
  for (const auto& r : g.relations()) {
    if (r->arity() < 1) throw std::invalid_argument("serialize_language: 0-ary relation " + r->name());
    os << "\nrelation " << r->name() << " " << r->arity() << "\n";
    for (const Tuple& t : r->tuples()) os << join_ints(t) << "\n";
  }
  return os.str();
}

Instance parse_instance(std::string_view text, const Language& g) {
  const auto lines = tokenize(text);
  Instance inst;
  inst.domain = g.domain();
  bool have_vars = false, have_size = false;
  int size_line = 0;
  for (const Line& l : lines) {
    const std::string& kw = l.tokens[0].text;
    if (kw == "vars") {
      expect_count(l, 2, "expected 'vars <n>'");
      if (have_vars) throw ParseError(l.number, 1, "duplicate 'vars' line");
      inst.num_vars = to_int(l, l.tokens[1]);
      if (inst.num_vars < 0) throw ParseError(l.number, l.tokens[1].column, "negative variable count");
      if (inst.num_vars > kMaxVars) throw GuardError("more than " + std::to_string(kMaxVars) + " variables");
      have_vars = true;
    } else if (kw == "size") {
      expect_count(l, 2, "expected 'size <k>'");
      if (have_size) throw ParseError(l.number, 1, "duplicate 'size' line");
      inst.k = to_int(l, l.tokens[1]);
      if (inst.k < 0) throw ParseError(l.number, l.tokens[1].column, "negative size");
      have_size = true;
      size_line = l.number;
    } else if (kw == "card") {
      if (inst.pi) throw ParseError(l.number, 1, "duplicate 'card' line");
      CardinalityMap pi;
      std::set<int> seen;
      for (std::size_t j = 1; j < l.tokens.size(); ++j) {
        const Token& tok = l.tokens[j];
        const auto eq = tok.text.find('=');
        if (eq == std::string::npos) throw ParseError(l.number, tok.column, "expected '<value>=<count>'");
        const Token a{tok.text.substr(0, eq), tok.column};
        const Token b{tok.text.substr(eq + 1), tok.column + static_cast<int>(eq) + 1};
        const int v = to_int(l, a), c = to_int(l, b);
        if (v < 1 || !g.domain().contains(v)) throw ParseError(l.number, tok.column, "card value outside the nonzero domain");
        if (c < 0) throw ParseError(l.number, b.column, "negative count");
        if (!seen.insert(v).second) throw ParseError(l.number, tok.column, "value listed twice");
        pi.counts[v] = c;
      }
      inst.pi = pi;
    } else if (kw == "constraint") {
      if (!have_vars) throw ParseError(l.number, 1, "'vars' must precede constraints");
      if (l.tokens.size() < 2) throw ParseError(l.number, 1, "expected 'constraint <relation> <vars...>'");
      auto r = g.find(l.tokens[1].text);
      if (!r) throw ParseError(l.number, l.tokens[1].column, "unknown relation '" + l.tokens[1].text + "'");
      if (static_cast<int>(l.tokens.size()) - 2 != r->arity())
        throw ParseError(l.number, l.tokens[1].column,
                         "relation " + r->name() + " has arity " + std::to_string(r->arity()) + ", got " +
                             std::to_string(l.tokens.size() - 2) + " variables");
      std::vector<int> scope;
      for (std::size_t j = 2; j < l.tokens.size(); ++j) {
        const int v = to_int(l, l.tokens[j]);
        if (v < 0 || v >= inst.num_vars) throw ParseError(l.number, l.tokens[j].column, "variable index out of range");
        scope.push_back(v);
      }
      inst.constraints.push_back({std::move(scope), r});
    } else {
      throw ParseError(l.number, l.tokens[0].column, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_vars) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing 'vars' line");
  if (!have_size) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing 'size' line");
  if (inst.k > kMaxK) throw GuardError("size " + std::to_string(inst.k) + " exceeds " + std::to_string(kMaxK));
  if (inst.pi && inst.pi->total() != inst.k)
    throw ParseError(size_line, 1, "card counts sum to " + std::to_string(inst.pi->total()) + ", size is " +
                                       std::to_string(inst.k));
  inst.validate();
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream os;
  os << "vars " << inst.num_vars << "\nsize " << inst.k << "\n";
  if (inst.pi) {
    os << "card";
    for (Value d : inst.domain.nonzero()) os << " " << d << "=" << inst.pi->counts[d];
    os << "\n";
  }
  for (const auto& c : inst.constraints) {
    os << "constraint " << c.relation->name();
    for (int v : c.scope) os << " " << v;
    os << "\n";
  }
  return os.str();
}

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0].text != "graph")
    throw ParseError(lines.empty() ? 1 : lines[0].number, 1, "expected 'graph <n>' header");
  Graph g;
  expect_count(lines[0], 2, "expected 'graph <n>'");
  g.n = to_int(lines[0], lines[0].tokens[1]);
  if (g.n < 0) throw ParseError(lines[0].number, lines[0].tokens[1].column, "negative vertex count");
  std::map<int, std::vector<int>> groups;
  auto vertex = [&](const Line& l, const Token& tok) {
    const int v = to_int(l, tok);
    if (v < 0 || v >= g.n) throw ParseError(l.number, tok.column, "vertex out of range");
    return v;
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& kw = l.tokens[0].text;
    if (kw == "edge" || kw == "arc") {
      expect_count(l, 3, "expected '" + kw + " <u> <v>'");
      std::pair<int, int> e{vertex(l, l.tokens[1]), vertex(l, l.tokens[2])};
      (kw == "edge" ? g.edges : g.arcs).push_back(e);
    } else if (kw == "group") {
      if (l.tokens.size() < 2) throw ParseError(l.number, 1, "expected 'group <i> <vertices...>'");
      const int id = to_int(l, l.tokens[1]);
      if (id < 0) throw ParseError(l.number, l.tokens[1].column, "negative group index");
      if (groups.count(id)) throw ParseError(l.number, l.tokens[1].column, "duplicate group index");
      std::vector<int> members;
      for (std::size_t j = 2; j < l.tokens.size(); ++j) members.push_back(vertex(l, l.tokens[j]));
      groups[id] = std::move(members);
    } else {
      throw ParseError(l.number, l.tokens[0].column, "unknown keyword '" + kw + "'");
    }
  }
  int expect = 0;
  for (auto& [id, members] : groups) {
    if (id != expect++) throw ParseError(lines.back().number, 1, "group indices must be 0..p-1");
    g.groups.push_back(std::move(members));
  }
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines.back().number, 1, e.what());
  }
  return g;
}

std::string serialize_graph(const Graph& graph) {
  std::ostringstream os;
  os << "graph " << graph.n << "\n";
  for (auto [u, v] : graph.edges) os << "edge " << u << " " << v << "\n";
  for (auto [u, v] : graph.arcs) os << "arc " << u << " " << v << "\n";
  for (std::size_t i = 0; i < graph.groups.size(); ++i) {
    os << "group " << i;
    for (int v : graph.groups[i]) os << " " << v;
    os << "\n";
  }
  return os.str();
}

SizeSpec parse_sizes(std::string_view text) {
  SizeSpec s;
  s.mode = SizeMode::custom;
  for (const Line& l : tokenize(text)) {
    const std::string& kw = l.tokens[0].text;
    if (kw == "bag") {
      expect_count(l, 3, "expected 'bag <value> <size>'");
      const int d = to_int(l, l.tokens[1]);
      const int n = to_int(l, l.tokens[2]);
      if (d < 1 || d > kMaxDelta) throw ParseError(l.number, l.tokens[1].column, "value outside 1..7");
      if (n < 1) throw ParseError(l.number, l.tokens[2].column, "bag size must be positive");
      s.custom[d] = n;
    } else if (kw == "size") {
      expect_count(l, 2, "expected 'size <k>'");
      s.k = to_int(l, l.tokens[1]);
    } else {
      throw ParseError(l.number, l.tokens[0].column, "unknown keyword '" + kw + "'");
    }
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

namespace {

class Dump {
 public:
  template <class T>
  Dump& kv(const std::string& key, const T& value) {
    os_ << key << ": " << value << "\n";
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string dump_analysis(const Language& g) {
  Dump d;
  d.kv("domain", g.domain().to_string());
  d.kv("relations", g.size());
  d.kv("zero_valid", yes_no(g.zero_valid()));
  d.kv("cc0", yes_no(is_cc0(g)));
  const TypeAnalysis types = analyze_types(g);
  for (Value x : g.domain().nonzero()) {
    d.kv("type." + std::to_string(x), to_string(types.type[x]));
    d.kv("produces." + std::to_string(x), types.produced[x].to_string());
  }
  for (Value x : g.domain().nonzero())
    d.kv("component." + std::to_string(x), component_generated(g, ValueSet{x}).to_string());
  d.kv("core", core(g, types).to_string());
  d.kv("is_core", yes_no(core(g, types) == g.domain().nonzero()));
  const SingleMorphism c = find_min_contraction(g);
  d.kv("min_contraction", c.to_string());
  d.kv("min_contraction_image", c.image().to_string());
  const bool ws = is_weakly_separable(g);
  d.kv("weakly_separable", yes_no(ws));
  if (!ws) {
    const auto ce = find_counterexample(g, false);
    d.kv("counterexample", ce->to_string());
    d.kv("counterexample_kind", ce->kind_name());
  }
  return d.str();
}

std::string dump_ocsp_report(const OcspReport& r) {
  Dump d;
  d.kv("problem", "ocsp");
  d.kv("verdict", to_string(r.verdict));
  if (r.witness) {
    d.kv("witness.d1", r.witness->d1.to_string());
    d.kv("witness.d2", r.witness->d2.to_string());
    d.kv("witness.contraction", r.witness->contraction.to_string());
    d.kv("witness.counterexample", r.witness->counterexample.to_string());
    d.kv("witness.counterexample_kind", r.witness->counterexample.kind_name());
  }
  d.kv("pairs", r.evidence.size());
  for (const auto& e : r.evidence)
    d.kv("pair " + e.d1.to_string() + " " + e.d2.to_string(), e.failed_condition);
  return d.str();
}

std::string dump_ccsp_report(const CcspReport& r) {
  Dump d;
  d.kv("problem", "ccsp");
  d.kv("verdict", to_string(r.verdict));
  if (r.witness) {
    d.kv("witness.dprime", r.witness->dprime.to_string());
    d.kv("witness.counterexample", r.witness->counterexample.to_string());
    d.kv("witness.counterexample_kind", r.witness->counterexample.kind_name());
    d.kv("witness.family", to_string(r.witness->family));
    d.kv("witness.biclique_case", yes_no(r.witness->biclique_case));
  }
  d.kv("minimal_witnesses", r.minimal_witnesses.size());
  for (const auto& w : r.minimal_witnesses)
    d.kv("minimal " + w.dprime.to_string(), std::string(to_string(w.family)) + " " + w.counterexample.to_string());
  return d.str();
}

std::string dump_solve(const SolveResult& r) {
  Dump d;
  d.kv("status", r.found ? "solution" : "no_solution");
  if (r.found) d.kv("assignment", assignment_to_string(r.assignment));
  d.kv("path", r.stats.path.empty() ? "-" : r.stats.path);
  d.kv("nodes", r.stats.nodes);
  d.kv("minimal_assignments", r.stats.minimal_assignments);
  d.kv("frequent_branches", r.stats.frequent_branches);
  d.kv("max_multiplicity", r.stats.max_multiplicity);
  return d.str();
}

std::string dump_reduction(const ReductionOutput& r) {
  Dump d;
  d.kv("variables", r.instance.num_vars);
  d.kv("constraints", r.instance.constraints.size());
  d.kv("size", r.instance.k);
  d.kv("relations", r.language.size());
  d.kv("gadgets", r.gadgets.size());
  d.kv("counterexample", r.counterexample.to_string());
  d.kv("counterexample_kind", r.counterexample.kind_name());
  d.kv("faithful", yes_no(r.faithful));
  d.kv("forward_check", to_string(r.forward));
  return d.str();
}

std::string gadget_map(const std::vector<Gadget>& gadgets) {
  std::ostringstream os;
  for (const auto& gd : gadgets)
    for (Value v = 1; v <= kMaxDelta; ++v) {
      if (gd.bags[v].empty()) continue;
      os << "gadget " << gd.group << " " << gd.item << " " << v << ":";
      for (int x : gd.bags[v]) os << " " << x;
      os << "\n";
    }
  return os.str();
}

}  // namespace sizecsp

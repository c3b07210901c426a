#pragma once

#include <string>
#include <string_view>

#include "sizecsp/classification.hpp"
#include "sizecsp/gadgets.hpp"
#include "sizecsp/instance.hpp"
#include "sizecsp/language.hpp"
#include "sizecsp/solver.hpp"

namespace sizecsp {

// Text formats; see docs/FORMATS.md. Parsers throw ParseError (with line and
// column) on malformed input.
Language parse_language(std::string_view text);
std::string serialize_language(const Language& g);

Instance parse_instance(std::string_view text, const Language& g);
std::string serialize_instance(const Instance& inst);

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& graph);

// "bag <d> <size>" lines plus "size <k>".
SizeSpec parse_sizes(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// key: value dumps with a fixed key order.
std::string dump_analysis(const Language& g);
std::string dump_ocsp_report(const OcspReport& r);
std::string dump_ccsp_report(const CcspReport& r);
std::string dump_solve(const SolveResult& r);
std::string dump_reduction(const ReductionOutput& r);

// Sidecar gadget map: "gadget <group> <item> <value>: <vars...>".
std::string gadget_map(const std::vector<Gadget>& gadgets);

}  // namespace sizecsp

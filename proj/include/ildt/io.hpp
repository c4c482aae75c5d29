#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ildt/census.hpp"
#include "ildt/digraph.hpp"
#include "ildt/generator.hpp"
#include "ildt/spectral.hpp"

namespace ildt {

enum class GraphFormat { EdgeList, Json, Dot };

// Parses "edgelist", "json", "dot"; throws on anything else.
GraphFormat parse_format(const std::string& name);

// Builtin seeds: "c3", "c4", ... "cN" (directed N-cycle, N >= 3), "k1"
// (single node), "k2bi" (one bidirectional arc), "dag2" (single one-way
// arc). Throws on unknown names.
Digraph builtin_seed(const std::string& name);

// Resolves "builtin:<name>" to a builtin seed, anything else to a file path
// loaded with load_graph.
Digraph resolve_seed(const std::string& descriptor);

// Serializations. Edge list: one "u v" line per arc, sorted; representable
// only when every node has an arc. JSON: {"n": int, "arcs": [[u, v], ...]}.
// DOT: digraph with reciprocated pairs rendered once with dir=both.
std::string format_graph(const Digraph& g, GraphFormat fmt);
void save_graph(const Digraph& g, const std::string& path, GraphFormat fmt);

// Loads an edge-list or JSON file (detected by content: JSON starts with
// '{'). Edge lists reject id gaps — a graph with isolated nodes needs the
// JSON format, which carries an explicit node count. Parse errors name the
// offending line.
Digraph load_graph(const std::string& path);

// CSV with header "re,im,t" and 17-significant-digit floats — lossless
// round-trip for doubles, fixed ordering.
std::string format_values_csv(const std::vector<Complex>& values, uint32_t t);

// Resource caps threaded from the CLI into the library calls. Environment
// variables override the defaults: ILDT_MAX_ARCS, ILDT_MAX_VALUES,
// ILDT_CENSUS_BUDGET_MS.
struct ResourceCaps {
    int64_t max_arcs = kDefaultMaxArcs;
    int64_t max_values = kDefaultMaxValues;
    int64_t census_budget_ms = kDefaultCensusBudgetMs;
};

// Reads overrides from the environment; throws Error on values that are not
// positive integers.
ResourceCaps caps_from_env();

// Full command-line surface (generate / census / spectrum / curve /
// hamilton / verify). Writes the main artifacts to --out paths, human
// summaries or a JSON report envelope (--json) to `out`. Returns the process
// exit code: 0 success, 1 domain error or failed verification, 2 usage
// error.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace ildt

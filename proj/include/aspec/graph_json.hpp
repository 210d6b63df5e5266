#pragma once

#include <string>

#include "aspec/mixed_graph.hpp"

namespace aspec {

// Graph wire format:
//   {"n": <int>, "arcs": [[tail,head],...], "undirected": [[u,v],...]}
// with u < v in undirected pairs. Parsing is strict: unknown keys, malformed
// pairs, and out-of-order undirected pairs are rejected. Missing "arcs" or
// "undirected" mean empty lists.
MixedGraph parse_graph_json(const std::string& text);
MixedGraph load_graph_file(const std::string& path);

// Deterministic single-line serialization; parse(print(g)) == g.
std::string graph_json_string(const MixedGraph& g);

} // namespace aspec

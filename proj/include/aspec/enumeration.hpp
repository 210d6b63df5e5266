#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aspec/mixed_graph.hpp"

namespace aspec {

// One canonical representative per isomorphism class of mixed trees of order
// n and size m, sorted by canonical key. Underlying labeled trees come from
// Prufer sequences; each edge is then undirected or oriented either way,
// filtered to the requested size, and deduplicated by canonical form.
// Results are cached per (n, m).
std::vector<CanonicalForm> enumerate_mixed_trees(int n, int m);

// Isomorphism classes of mixed trees ordered by single Kelmans moves.
// relations holds ordered index pairs (i, j) with nodes[i] strictly below
// nodes[j] via one legal move; covers is the transitive reduction.
struct Poset {
  std::vector<CanonicalForm> nodes;
  std::set<std::pair<int, int>> relations;
  std::set<std::pair<int, int>> covers;
};

Poset build_poset(int n, int m);

// DOT export: one node per class (id = short hash of the canonical key,
// label = key plus degree sequence), one edge per cover, stable ordering.
std::string poset_to_dot(const Poset& p);

// True iff every legal Kelmans move returns an isomorphic tree (exhaustive).
bool is_maximal(const MixedGraph& t);

// Closed-form test: maximal iff t is a mixed star, or t has no undirected
// edges and every a->x<-b or a<-x->b has a leaf among a, b. Agrees with
// is_maximal.
bool classify_maximal(const MixedGraph& t);

// Chain t = t_0, t_1, ..., t_r of legal Kelmans moves with strictly
// increasing degree sequences ending at a maximal tree. Among the available
// moves the one with the dictionary-greatest resulting degree sequence is
// taken, ties broken by smallest canonical key.
std::vector<MixedGraph> climb_to_maximal(const MixedGraph& t);

} // namespace aspec

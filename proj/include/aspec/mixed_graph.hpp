#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aspec/errors.hpp"

namespace aspec {

// A mixed graph on vertices 1..n: every adjacent pair {u,v} carries exactly
// one relation, either a directed arc or an undirected edge. Opposite arcs
// u->v and v->u cannot coexist; that adjacency pattern is an undirected edge.
// Relations are keyed on the pair (u,v) with u < v.
enum class Rel : unsigned char {
  arc_forward,  // arc u->v
  arc_backward, // arc v->u
  undirected,
};

class MixedGraph {
public:
  MixedGraph() = default;
  explicit MixedGraph(int n);

  int order() const { return n_; }
  // Number of arcs plus twice the number of undirected edges.
  int size() const { return arcs_ + 2 * undirected_; }
  int arc_count() const { return arcs_; }
  int undirected_count() const { return undirected_; }

  // Adds one relation; the pair must not already carry one.
  void set_relation(int u, int v, Rel r);

  bool has_arc(int u, int v) const; // a directed arc u->v
  bool has_undirected(int u, int v) const;
  bool has_out(int u, int v) const { return has_arc(u, v) || has_undirected(u, v); }
  bool adjacent(int u, int v) const;

  const std::map<std::pair<int, int>, Rel>& relations() const { return rel_; }

  bool operator==(const MixedGraph&) const = default;

  void check_vertex(int u) const;

private:
  int n_ = 0;
  int arcs_ = 0;
  int undirected_ = 0;
  std::map<std::pair<int, int>, Rel> rel_;
};

MixedGraph new_mixed_graph(int n, const std::vector<std::pair<int, int>>& arcs,
                           const std::vector<std::pair<int, int>>& undirected);

// N+(u) = {v : arc u->v or undirected uv}, ascending.
std::vector<int> out_neighbors(const MixedGraph& g, int u);
// N-(u) = {v : arc v->u or undirected uv}, ascending.
std::vector<int> in_neighbors(const MixedGraph& g, int u);
int out_degree(const MixedGraph& g, int u);
// d(u) = |N+(u)| + |N-(u)|; an undirected edge contributes 2.
int degree(const MixedGraph& g, int u);

struct DegreeSequence {
  std::vector<int> values; // descending
  bool operator==(const DegreeSequence&) const = default;
};

DegreeSequence degree_sequence(const MixedGraph& g);
// Dictionary order: decided at the first index where the sequences differ.
std::strong_ordering compare_dict(const DegreeSequence& a, const DegreeSequence& b);

// Shortest-path distance in the underlying (undirected) graph.
int distance(const MixedGraph& g, int a, int b);
int diameter(const MixedGraph& g);

// Connected components after deleting all arcs and keeping undirected edges.
// Cells are sorted ascending and listed by smallest member.
std::vector<std::vector<int>> components(const MixedGraph& g);

bool is_mixed_tree(const MixedGraph& g);
// Mixed star: underlying graph is a tree of diameter at most 2.
bool is_mixed_star(const MixedGraph& g);

// P_k: the mixed path of order k with all edges undirected (size 2k-2).
MixedGraph path_graph(int k);

// Star with center 1: m-n+1 undirected edges to leaves, extra_out arcs
// center->leaf, and the remaining n-1-(m-n+1)-extra_out arcs leaf->center.
// Center out-degree is m-n+extra_out+1.
MixedGraph mixed_star(int n, int m, int extra_out);

// Relabels vertices: perm[v-1] is the new label of v (a bijection on 1..n).
MixedGraph relabel(const MixedGraph& g, const std::vector<int>& perm);

struct CanonicalForm {
  MixedGraph graph;
  std::string key; // equal keys iff isomorphic
};

// Canonical representative of the isomorphism class of g, found by
// permutation search over labelings consistent with the (out-degree,
// in-degree, undirected-degree) vertex partition. Intended for small n;
// throws above the configured cap.
CanonicalForm canonical_form(const MixedGraph& g);

// Isomorphism preserving arc direction and undirectedness.
bool is_isomorphic(const MixedGraph& g, const MixedGraph& h);

} // namespace aspec

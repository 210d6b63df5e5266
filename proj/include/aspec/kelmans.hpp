#pragma once

#include <string>
#include <vector>

#include "aspec/mixed_graph.hpp"
#include "aspec/spectral.hpp"

namespace aspec {

// Shift data for the Kelmans transformation of a nonnegative matrix C from
// index b to index a (0-based): the diagonal portion k moves from c_bb to
// c_aa, t_i moves from column b to column a in row i, and s_i moves from row
// b to row a in column i. Admissible ranges, given c_ab = c_ba:
//   max(0, c_bb - c_aa) <= k   <= c_bb
//   max(0, c_ib - c_ia) <= t_i <= c_ib
//   max(0, c_bi - c_ai) <= s_i <= c_bi
struct KelmansParams {
  int a = 0;
  int b = 0;
  double k = 0.0;
  std::vector<double> t; // length = order; entries at a and b are ignored
  std::vector<double> s;
};

// Applies the shift; never decreases the Perron root. Throws on c_ab != c_ba
// or on any admissibility violation (with the offending index).
Matrix matrix_kelmans(const Matrix& c, const KelmansParams& p);

// The unique admissible parameters that keep the adjacency matrix of g a 0/1
// adjacency matrix: t_i = max(0, c_ib - c_ia), s_i = max(0, c_bi - c_ai),
// k = 0. Vertices a, b are 1-based and must carry no arc between them.
KelmansParams graph_kelmans_params(const MixedGraph& g, int a, int b);

// Parameters that transport the graph transformation through A_alpha:
// applying them to a_alpha(g, alpha) gives a_alpha(graph_kelmans(g,a,b),
// alpha) entrywise.
KelmansParams alpha_kelmans_params(const MixedGraph& g, int a, int b, double alpha);

// The mixed graph whose adjacency matrix is the transformed adjacency matrix
// of g: vertex a's out/in-neighborhoods become unions of a's and b's, vertex
// b's become intersections; the a-b relation is unchanged.
MixedGraph graph_kelmans(const MixedGraph& g, int a, int b);

// Swapping a and b maps graph_kelmans(g,a,b) onto graph_kelmans(g,b,a);
// returns true for every valid input.
bool swap_isomorphism_check(const MixedGraph& g, int a, int b);

// The seven local patterns under which a Kelmans move on a mixed tree yields
// a mixed tree again: the a-b edge itself, or distance 2 through the unique
// middle vertex x with an undirected edge on either side or both arcs
// pointing into or out of x.
enum class LegalPattern {
  none,
  ab_undirected, // a-b
  ax_undirected, // a-x...b
  xb_undirected, // a...x-b
  arcs_to_x,     // a->x<-b
  arcs_from_x,   // a<-x->b
};

std::string pattern_name(LegalPattern p);

struct TreeLegality {
  bool legal = false;
  LegalPattern pattern = LegalPattern::none;
  int x = 0; // middle vertex when the pattern has one, else 0
};

TreeLegality tree_kelmans_legal(const MixedGraph& t, int a, int b);

} // namespace aspec

#include "aspec/kelmans.hpp"

#include <algorithm>
#include <cmath>

namespace aspec {

namespace {

constexpr double kBoundSlack = 1e-12;

void check_indices(const Matrix& c, const KelmansParams& p) {
  int n = static_cast<int>(c.rows());
  if (c.rows() != c.cols()) fail(errc::parameter_out_of_range, "matrix must be square");
  if (p.a < 0 || p.a >= n || p.b < 0 || p.b >= n || p.a == p.b)
    fail(errc::parameter_out_of_range, "indices a, b must be distinct and in range");
  if (static_cast<int>(p.t.size()) != n || static_cast<int>(p.s.size()) != n)
    fail(errc::length_mismatch, "t and s must have one entry per index");
}

} // namespace

Matrix matrix_kelmans(const Matrix& c, const KelmansParams& p) {
  check_indices(c, p);
  int n = static_cast<int>(c.rows());
  int a = p.a, b = p.b;
  if (c(a, b) != c(b, a))
    fail(errc::symmetry_violation, "c_ab != c_ba at the chosen pair");
  double klo = std::max(0.0, c(b, b) - c(a, a));
  if (p.k < klo - kBoundSlack || p.k > c(b, b) + kBoundSlack)
    fail(errc::bound_violation, "k outside [max(0, c_bb - c_aa), c_bb]");
  for (int i = 0; i < n; ++i) {
    if (i == a || i == b) continue;
    double tlo = std::max(0.0, c(i, b) - c(i, a));
    if (p.t[i] < tlo - kBoundSlack || p.t[i] > c(i, b) + kBoundSlack)
      fail(errc::bound_violation, "t_" + std::to_string(i) + " outside its admissible range");
    double slo = std::max(0.0, c(b, i) - c(a, i));
    if (p.s[i] < slo - kBoundSlack || p.s[i] > c(b, i) + kBoundSlack)
      fail(errc::bound_violation, "s_" + std::to_string(i) + " outside its admissible range");
  }

  Matrix r = c;
  r(a, a) = c(a, a) + p.k;
  r(b, b) = c(b, b) - p.k;
  for (int i = 0; i < n; ++i) {
    if (i == a || i == b) continue;
    r(i, a) = c(i, a) + p.t[i];
    r(i, b) = c(i, b) - p.t[i];
    r(a, i) = c(a, i) + p.s[i];
    r(b, i) = c(b, i) - p.s[i];
  }
  // entries (a,b) and (b,a) are untouched; absorb rounding at the low ends
  return r.cwiseMax(0.0);
}

namespace {

void check_pair(const MixedGraph& g, int a, int b) {
  g.check_vertex(a);
  g.check_vertex(b);
  if (a == b) fail(errc::parameter_out_of_range, "a and b must be distinct");
  if (g.has_arc(a, b) || g.has_arc(b, a))
    fail(errc::arc_between_ab, "vertices " + std::to_string(a) + " and " + std::to_string(b) +
                                   " are joined by an arc");
}

} // namespace

KelmansParams graph_kelmans_params(const MixedGraph& g, int a, int b) {
  check_pair(g, a, b);
  int n = g.order();
  Matrix c = adjacency_matrix(g);
  KelmansParams p{a - 1, b - 1, 0.0, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (int i = 0; i < n; ++i) {
    if (i == p.a || i == p.b) continue;
    p.t[i] = std::max(0.0, c(i, p.b) - c(i, p.a));
    p.s[i] = std::max(0.0, c(p.b, i) - c(p.a, i));
  }
  return p;
}

KelmansParams alpha_kelmans_params(const MixedGraph& g, int a, int b, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    fail(errc::alpha_out_of_range, "alpha must lie in [0,1]");
  KelmansParams p = graph_kelmans_params(g, a, b);
  // The diagonal shift is alpha times the number of out-neighbors b gains
  // for a, i.e. |N+(b) \ N+(a)| restricted away from {a, b}; the a-b
  // relation itself never moves.
  double gain = 0.0;
  for (size_t i = 0; i < p.t.size(); ++i) {
    if (static_cast<int>(i) == p.a || static_cast<int>(i) == p.b) continue;
    gain += p.s[i]; // s_i = max(0, c_bi - c_ai) is 0/1 on an adjacency matrix
    p.t[i] *= 1.0 - alpha;
    p.s[i] *= 1.0 - alpha;
  }
  p.k = alpha * gain;
  return p;
}

MixedGraph graph_kelmans(const MixedGraph& g, int a, int b) {
  KelmansParams p = graph_kelmans_params(g, a, b);
  Matrix t = matrix_kelmans(adjacency_matrix(g), p);
  int n = g.order();
  MixedGraph h(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      bool fwd = t(u - 1, v - 1) > 0.5;
      bool bwd = t(v - 1, u - 1) > 0.5;
      if (fwd && bwd)
        h.set_relation(u, v, Rel::undirected);
      else if (fwd)
        h.set_relation(u, v, Rel::arc_forward);
      else if (bwd)
        h.set_relation(u, v, Rel::arc_backward);
    }
  return h;
}

bool swap_isomorphism_check(const MixedGraph& g, int a, int b) {
  check_pair(g, a, b);
  MixedGraph gba = graph_kelmans(g, a, b);
  MixedGraph gab = graph_kelmans(g, b, a);
  std::vector<int> swap_ab(g.order());
  for (int v = 1; v <= g.order(); ++v) swap_ab[v - 1] = v;
  swap_ab[a - 1] = b;
  swap_ab[b - 1] = a;
  return relabel(gba, swap_ab) == gab;
}

std::string pattern_name(LegalPattern p) {
  switch (p) {
    case LegalPattern::none: return "none";
    case LegalPattern::ab_undirected: return "a-b";
    case LegalPattern::ax_undirected: return "a-x (undirected)";
    case LegalPattern::xb_undirected: return "x-b (undirected)";
    case LegalPattern::arcs_to_x: return "a->x<-b";
    case LegalPattern::arcs_from_x: return "a<-x->b";
  }
  return "none";
}

TreeLegality tree_kelmans_legal(const MixedGraph& t, int a, int b) {
  if (!is_mixed_tree(t)) fail(errc::not_a_tree, "graph is not a mixed tree");
  check_pair(t, a, b);
  if (t.has_undirected(a, b)) return {true, LegalPattern::ab_undirected, 0};
  if (distance(t, a, b) != 2) return {};
  // In a tree the 2-path a..b has a unique middle vertex.
  int x = 0;
  for (int v = 1; v <= t.order(); ++v)
    if (v != a && v != b && t.adjacent(a, v) && t.adjacent(v, b)) {
      x = v;
      break;
    }
  if (t.has_undirected(a, x)) return {true, LegalPattern::ax_undirected, x};
  if (t.has_undirected(x, b)) return {true, LegalPattern::xb_undirected, x};
  if (t.has_arc(a, x) && t.has_arc(b, x)) return {true, LegalPattern::arcs_to_x, x};
  if (t.has_arc(x, a) && t.has_arc(x, b)) return {true, LegalPattern::arcs_from_x, x};
  return {};
}

} // namespace aspec

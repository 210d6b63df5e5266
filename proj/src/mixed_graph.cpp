#include "aspec/mixed_graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <numeric>

#include "aspec/caps.hpp"

namespace aspec {

MixedGraph::MixedGraph(int n) : n_(n) {
  if (n < 1) fail(errc::parameter_out_of_range, "vertex count must be positive");
}

void MixedGraph::check_vertex(int u) const {
  if (u < 1 || u > n_)
    fail(errc::label_out_of_range,
         "vertex " + std::to_string(u) + " out of range 1.." + std::to_string(n_));
}

void MixedGraph::set_relation(int u, int v, Rel r) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(errc::self_loop, "self-loop at vertex " + std::to_string(u));
  if (u > v) {
    std::swap(u, v);
    if (r == Rel::arc_forward)
      r = Rel::arc_backward;
    else if (r == Rel::arc_backward)
      r = Rel::arc_forward;
  }
  auto [it, inserted] = rel_.emplace(std::make_pair(u, v), r);
  if (!inserted)
    fail(errc::duplicate_relation,
         "pair {" + std::to_string(u) + "," + std::to_string(v) + "} given two relations");
  if (r == Rel::undirected)
    ++undirected_;
  else
    ++arcs_;
}

bool MixedGraph::has_arc(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  auto it = rel_.find(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
  if (it == rel_.end()) return false;
  return it->second == (u < v ? Rel::arc_forward : Rel::arc_backward);
}

bool MixedGraph::has_undirected(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  auto it = rel_.find(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
  return it != rel_.end() && it->second == Rel::undirected;
}

bool MixedGraph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return rel_.count(u < v ? std::make_pair(u, v) : std::make_pair(v, u)) > 0;
}

MixedGraph new_mixed_graph(int n, const std::vector<std::pair<int, int>>& arcs,
                           const std::vector<std::pair<int, int>>& undirected) {
  MixedGraph g(n);
  for (auto [u, v] : arcs) g.set_relation(u, v, Rel::arc_forward);
  for (auto [u, v] : undirected) g.set_relation(u, v, Rel::undirected);
  return g;
}

std::vector<int> out_neighbors(const MixedGraph& g, int u) {
  g.check_vertex(u);
  std::vector<int> out;
  for (int v = 1; v <= g.order(); ++v)
    if (v != u && g.has_out(u, v)) out.push_back(v);
  return out;
}

std::vector<int> in_neighbors(const MixedGraph& g, int u) {
  g.check_vertex(u);
  std::vector<int> in;
  for (int v = 1; v <= g.order(); ++v)
    if (v != u && g.has_out(v, u)) in.push_back(v);
  return in;
}

int out_degree(const MixedGraph& g, int u) { return static_cast<int>(out_neighbors(g, u).size()); }

int degree(const MixedGraph& g, int u) {
  return static_cast<int>(out_neighbors(g, u).size() + in_neighbors(g, u).size());
}

DegreeSequence degree_sequence(const MixedGraph& g) {
  std::vector<int> d(g.order());
  for (int u = 1; u <= g.order(); ++u) d[u - 1] = degree(g, u);
  std::sort(d.begin(), d.end(), std::greater<>());
  return DegreeSequence{std::move(d)};
}

std::strong_ordering compare_dict(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.values.size() != b.values.size())
    fail(errc::length_mismatch, "degree sequences have different lengths");
  for (size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i] != b.values[i]) return a.values[i] <=> b.values[i];
  return std::strong_ordering::equal;
}

namespace {

// BFS distances from a in the underlying graph; unreachable = -1.
std::vector<int> underlying_distances(const MixedGraph& g, int a) {
  std::vector<int> dist(g.order() + 1, -1);
  std::deque<int> q{a};
  dist[a] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v = 1; v <= g.order(); ++v)
      if (dist[v] < 0 && g.adjacent(u, v)) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

} // namespace

int distance(const MixedGraph& g, int a, int b) {
  g.check_vertex(a);
  g.check_vertex(b);
  int d = underlying_distances(g, a)[b];
  if (d < 0)
    fail(errc::disconnected,
         "no path between " + std::to_string(a) + " and " + std::to_string(b));
  return d;
}

int diameter(const MixedGraph& g) {
  int diam = 0;
  for (int a = 1; a <= g.order(); ++a) {
    auto dist = underlying_distances(g, a);
    for (int b = 1; b <= g.order(); ++b) {
      if (dist[b] < 0) fail(errc::disconnected, "graph is not connected");
      diam = std::max(diam, dist[b]);
    }
  }
  return diam;
}

std::vector<std::vector<int>> components(const MixedGraph& g) {
  std::vector<char> seen(g.order() + 1, 0);
  std::vector<std::vector<int>> cells;
  for (int s = 1; s <= g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cell;
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      cell.push_back(u);
      for (int v = 1; v <= g.order(); ++v)
        if (!seen[v] && g.has_undirected(u, v)) {
          seen[v] = 1;
          q.push_back(v);
        }
    }
    std::sort(cell.begin(), cell.end());
    cells.push_back(std::move(cell));
  }
  return cells;
}

bool is_mixed_tree(const MixedGraph& g) {
  if (static_cast<int>(g.relations().size()) != g.order() - 1) return false;
  auto dist = underlying_distances(g, 1);
  for (int v = 1; v <= g.order(); ++v)
    if (dist[v] < 0) return false;
  return true;
}

bool is_mixed_star(const MixedGraph& g) {
  if (!is_mixed_tree(g)) return false;
  return diameter(g) <= 2;
}

MixedGraph path_graph(int k) {
  if (k < 1) fail(errc::parameter_out_of_range, "path order must be at least 1");
  MixedGraph g(k);
  for (int i = 1; i < k; ++i) g.set_relation(i, i + 1, Rel::undirected);
  return g;
}

MixedGraph mixed_star(int n, int m, int extra_out) {
  if (n < 2) fail(errc::parameter_out_of_range, "star order must be at least 2");
  if (m < n - 1 || m > 2 * n - 2)
    fail(errc::parameter_out_of_range, "size must be in [n-1, 2n-2]");
  if (extra_out < 0 || extra_out > 2 * n - m - 2)
    fail(errc::parameter_out_of_range, "extra_out must be in [0, 2n-m-2]");
  int u = m - n + 1; // undirected edges
  MixedGraph g(n);
  int leaf = 2;
  for (int i = 0; i < u; ++i, ++leaf) g.set_relation(1, leaf, Rel::undirected);
  for (int i = 0; i < extra_out; ++i, ++leaf) g.set_relation(1, leaf, Rel::arc_forward);
  for (; leaf <= n; ++leaf) g.set_relation(leaf, 1, Rel::arc_forward);
  return g;
}

MixedGraph relabel(const MixedGraph& g, const std::vector<int>& perm) {
  int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    fail(errc::length_mismatch, "permutation length does not match order");
  std::vector<char> hit(n + 1, 0);
  for (int p : perm) {
    if (p < 1 || p > n) fail(errc::label_out_of_range, "permutation value out of range");
    if (hit[p]) fail(errc::parameter_out_of_range, "permutation is not a bijection");
    hit[p] = 1;
  }
  MixedGraph h(n);
  for (const auto& [pair, r] : g.relations()) {
    int u = perm[pair.first - 1], v = perm[pair.second - 1];
    Rel rr = r;
    if (u > v) {
      std::swap(u, v);
      if (rr == Rel::arc_forward)
        rr = Rel::arc_backward;
      else if (rr == Rel::arc_backward)
        rr = Rel::arc_forward;
    }
    h.set_relation(u, v, rr);
  }
  return h;
}

namespace {

// Backtracking search for the lexicographically least adjacency encoding.
//
// Encoding: positions are filled 0..n-1; placing position p appends, for
// each earlier position q, the ordered bit pair (a[q][p], a[p][q]). This is
// a fixed re-reading of the adjacency matrix, so minimizing it over vertex
// placements yields a canonical matrix. Placements are constrained to the
// (d+, d-, undirected-degree) partition, candidates that are twins of an
// already-tried sibling are skipped, and a branch is pruned as soon as its
// bits exceed the best known encoding on a shared prefix.
struct CanonSearch {
  int n = 0;
  std::vector<unsigned char> adj; // n*n, 0-based, adj[u*n+v] = 1 iff arc u->v or undirected
  std::vector<int> vert_class;    // invariant class of each vertex
  std::vector<int> pos_class;     // class required at each position
  std::vector<int> twin_rep;      // least twin of each vertex
  std::vector<char> used;
  std::vector<int> assign;        // position -> vertex
  std::vector<unsigned char> cur, best;
  bool has_best = false;

  explicit CanonSearch(const MixedGraph& g) {
    n = g.order();
    adj.assign(static_cast<size_t>(n) * n, 0);
    for (const auto& [pair, r] : g.relations()) {
      int u = pair.first - 1, v = pair.second - 1;
      if (r != Rel::arc_backward) adj[u * n + v] = 1;
      if (r != Rel::arc_forward) adj[v * n + u] = 1;
    }

    // Vertex invariants, classes sorted descending so that (for instance)
    // star centers come first.
    std::vector<std::array<int, 3>> trip(n);
    for (int v = 0; v < n; ++v) {
      int outd = 0, ind = 0, und = 0;
      for (int w = 0; w < n; ++w) {
        outd += adj[v * n + w];
        ind += adj[w * n + v];
        und += adj[v * n + w] & adj[w * n + v];
      }
      trip[v] = {outd, ind, und};
    }
    std::vector<std::array<int, 3>> classes = trip;
    std::sort(classes.begin(), classes.end(), std::greater<>());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    vert_class.resize(n);
    for (int v = 0; v < n; ++v)
      vert_class[v] = static_cast<int>(
          std::lower_bound(classes.begin(), classes.end(), trip[v], std::greater<>()) -
          classes.begin());
    pos_class = vert_class;
    std::sort(pos_class.begin(), pos_class.end());

    // Twins: u ~ v iff swapping them is an automorphism. The relation is
    // transitive, so the least member represents the class.
    twin_rep.resize(n);
    std::iota(twin_rep.begin(), twin_rep.end(), 0);
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (twin_rep[u] == u && twins(u, v)) {
          twin_rep[v] = u;
          break;
        }

    used.assign(n, 0);
    cur.reserve(static_cast<size_t>(n) * (n - 1));
  }

  bool twins(int u, int v) const {
    if (vert_class[u] != vert_class[v]) return false;
    if (adj[u * n + v] != adj[v * n + u]) return false;
    for (int x = 0; x < n; ++x) {
      if (x == u || x == v) continue;
      if (adj[u * n + x] != adj[v * n + x]) return false;
      if (adj[x * n + u] != adj[x * n + v]) return false;
    }
    return true;
  }

  void run() {
    assign.clear();
    dfs();
  }

  void dfs() {
    int p = static_cast<int>(assign.size());
    if (p == n) {
      if (!has_best || std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end())) {
        best = cur;
        has_best = true;
      }
      return;
    }
    // Pruning against `best` is sound only while the bits placed so far
    // match it exactly; `best` can change mid-loop, so re-check here.
    bool prefix_eq = has_best && std::equal(cur.begin(), cur.end(), best.begin());

    // Candidates carry their level bits so the cheapest-looking branch can
    // be explored first.
    std::vector<std::pair<std::vector<unsigned char>, int>> cands;
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (used[v] || vert_class[v] != pos_class[p]) continue;
      if (std::find(tried.begin(), tried.end(), twin_rep[v]) != tried.end()) continue;
      tried.push_back(twin_rep[v]);
      std::vector<unsigned char> bits(2 * p);
      for (int q = 0; q < p; ++q) {
        bits[2 * q] = adj[assign[q] * n + v];
        bits[2 * q + 1] = adj[v * n + assign[q]];
      }
      cands.emplace_back(std::move(bits), v);
    }
    std::sort(cands.begin(), cands.end());

    size_t off = cur.size();
    for (auto& [bits, v] : cands) {
      if (prefix_eq &&
          std::lexicographical_compare_three_way(bits.begin(), bits.end(), best.begin() + off,
                                                 best.begin() + off + 2 * p) > 0)
        continue;
      cur.insert(cur.end(), bits.begin(), bits.end());
      used[v] = 1;
      assign.push_back(v);
      dfs();
      assign.pop_back();
      used[v] = 0;
      cur.resize(off);
      prefix_eq = has_best && std::equal(cur.begin(), cur.end(), best.begin());
    }
  }

  MixedGraph rebuild() const {
    MixedGraph h(n);
    for (int p = 1; p < n; ++p) {
      size_t off = static_cast<size_t>(p) * (p - 1);
      for (int q = 0; q < p; ++q) {
        bool fwd = best[off + 2 * q];
        bool bwd = best[off + 2 * q + 1];
        if (fwd && bwd)
          h.set_relation(q + 1, p + 1, Rel::undirected);
        else if (fwd)
          h.set_relation(q + 1, p + 1, Rel::arc_forward);
        else if (bwd)
          h.set_relation(q + 1, p + 1, Rel::arc_backward);
      }
    }
    return h;
  }
};

std::string pair_string(const MixedGraph& g) {
  std::string s = std::to_string(g.order());
  s += '|';
  for (int u = 1; u <= g.order(); ++u)
    for (int v = u + 1; v <= g.order(); ++v) {
      if (g.has_undirected(u, v))
        s += '=';
      else if (g.has_arc(u, v))
        s += '>';
      else if (g.has_arc(v, u))
        s += '<';
      else
        s += '.';
    }
  return s;
}

} // namespace

CanonicalForm canonical_form(const MixedGraph& g) {
  if (g.order() > canonical_cap())
    fail(errc::size_limit_exceeded,
         "canonical form capped at n=" + std::to_string(canonical_cap()));
  if (g.order() == 1) return {g, pair_string(g)};
  CanonSearch search(g);
  search.run();
  MixedGraph canon = search.rebuild();
  return {canon, pair_string(canon)};
}

bool is_isomorphic(const MixedGraph& g, const MixedGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.arc_count() != h.arc_count()) return false;
  return canonical_form(g).key == canonical_form(h).key;
}

} // namespace aspec

#include "aspec/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>

#include "aspec/caps.hpp"
#include "aspec/kelmans.hpp"

namespace aspec {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Decodes a Prufer sequence (entries in 1..n, length n-2) into tree edges.
EdgeList prufer_edges(int n, const std::vector<int>& seq) {
  std::vector<int> deg(n + 1, 1);
  for (int s : seq) ++deg[s];
  EdgeList edges;
  int ptr = 1;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
    if (--deg[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(std::min(leaf, n), std::max(leaf, n));
  return edges;
}

// Underlying (all-undirected) tree classes of order n, deduplicated by
// canonical form; cached since every size m shares them.
const std::vector<EdgeList>& underlying_tree_classes(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<EdgeList>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::map<std::string, EdgeList> classes;
  if (n == 1) {
    classes.emplace("1|", EdgeList{});
  } else {
    std::vector<int> seq(std::max(0, n - 2), 1);
    bool done = false;
    while (!done) {
      EdgeList edges = prufer_edges(n, seq);
      MixedGraph g(n);
      for (auto [u, v] : edges) g.set_relation(u, v, Rel::undirected);
      CanonicalForm c = canonical_form(g);
      if (!classes.count(c.key)) {
        EdgeList canon_edges;
        for (const auto& [pair, r] : c.graph.relations()) canon_edges.push_back(pair);
        classes.emplace(c.key, std::move(canon_edges));
      }
      // next sequence
      done = true;
      for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < n) {
          ++seq[i];
          std::fill(seq.begin(), seq.begin() + i, 1);
          done = false;
          break;
        }
      }
    }
  }
  std::vector<EdgeList> out;
  for (auto& [key, edges] : classes) out.push_back(std::move(edges));
  return cache.emplace(n, std::move(out)).first->second;
}

} // namespace

std::vector<CanonicalForm> enumerate_mixed_trees(int n, int m) {
  if (n < 1) fail(errc::parameter_out_of_range, "order must be at least 1");
  if (m < n - 1 || m > 2 * n - 2)
    fail(errc::parameter_out_of_range, "size must be in [n-1, 2n-2]");
  if (n > enumeration_cap())
    fail(errc::size_limit_exceeded,
         "enumeration capped at n=" + std::to_string(enumeration_cap()));

  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<CanonicalForm>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, m});
    if (it != cache.end()) return it->second;
  }

  std::map<std::string, CanonicalForm> classes;
  if (n == 1) {
    CanonicalForm c = canonical_form(MixedGraph(1));
    classes.emplace(c.key, std::move(c));
  }
  for (const EdgeList& edges : underlying_tree_classes(n)) {
    int e = static_cast<int>(edges.size());
    if (e == 0) continue;
    // per-edge state: 0 undirected, 1 forward, 2 backward
    std::vector<int> state(e, 0);
    bool done = false;
    while (!done) {
      int size = 0;
      for (int st : state) size += st == 0 ? 2 : 1;
      if (size == m) {
        MixedGraph g(n);
        for (int i = 0; i < e; ++i) {
          auto [u, v] = edges[i];
          g.set_relation(u, v, state[i] == 0 ? Rel::undirected
                                             : (state[i] == 1 ? Rel::arc_forward
                                                              : Rel::arc_backward));
        }
        CanonicalForm c = canonical_form(g);
        if (!classes.count(c.key)) classes.emplace(c.key, std::move(c));
      }
      done = true;
      for (int i = 0; i < e; ++i) {
        if (state[i] < 2) {
          ++state[i];
          std::fill(state.begin(), state.begin() + i, 0);
          done = false;
          break;
        }
      }
    }
  }

  std::vector<CanonicalForm> out;
  for (auto& [key, c] : classes) out.push_back(std::move(c));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(n, m), std::move(out)).first->second;
}

Poset build_poset(int n, int m) {
  if (n > poset_cap())
    fail(errc::size_limit_exceeded, "poset capped at n=" + std::to_string(poset_cap()));
  Poset p;
  p.nodes = enumerate_mixed_trees(n, m);
  std::map<std::string, int> index;
  for (size_t i = 0; i < p.nodes.size(); ++i) index.emplace(p.nodes[i].key, static_cast<int>(i));

  for (size_t i = 0; i < p.nodes.size(); ++i) {
    const MixedGraph& t = p.nodes[i].graph;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (a == b || t.has_arc(a, b) || t.has_arc(b, a)) continue;
        if (!tree_kelmans_legal(t, a, b).legal) continue;
        CanonicalForm moved = canonical_form(graph_kelmans(t, a, b));
        if (moved.key == p.nodes[i].key) continue;
        p.relations.emplace(static_cast<int>(i), index.at(moved.key));
      }
  }

  // transitive closure, then the standard cubic reduction
  size_t k = p.nodes.size();
  std::vector<std::vector<char>> closure(k, std::vector<char>(k, 0));
  for (auto [i, j] : p.relations) closure[i][j] = 1;
  for (size_t w = 0; w < k; ++w)
    for (size_t i = 0; i < k; ++i)
      if (closure[i][w])
        for (size_t j = 0; j < k; ++j)
          if (closure[w][j]) closure[i][j] = 1;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (!closure[i][j]) continue;
      bool direct = true;
      for (size_t w = 0; w < k && direct; ++w)
        if (w != i && w != j && closure[i][w] && closure[w][j]) direct = false;
      if (direct) p.covers.emplace(static_cast<int>(i), static_cast<int>(j));
    }
  return p;
}

namespace {

std::string short_hex(const std::string& key) {
  // FNV-1a, truncated; stable across platforms
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[13];
  std::snprintf(buf, sizeof(buf), "%012llx",
                static_cast<unsigned long long>(h & 0xffffffffffffull));
  return buf;
}

} // namespace

std::string poset_to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& node : p.nodes) {
    std::string deg;
    for (int d : degree_sequence(node.graph).values) {
      if (!deg.empty()) deg += ',';
      deg += std::to_string(d);
    }
    os << "  n" << short_hex(node.key) << " [label=\"" << node.key << "\\nd=(" << deg
       << ")\"];\n";
  }
  for (auto [i, j] : p.covers)
    os << "  n" << short_hex(p.nodes[i].key) << " -> n" << short_hex(p.nodes[j].key) << ";\n";
  os << "}\n";
  return os.str();
}

bool is_maximal(const MixedGraph& t) {
  if (!is_mixed_tree(t)) fail(errc::not_a_tree, "graph is not a mixed tree");
  std::string key = canonical_form(t).key;
  for (int a = 1; a <= t.order(); ++a)
    for (int b = 1; b <= t.order(); ++b) {
      if (a == b || t.has_arc(a, b) || t.has_arc(b, a)) continue;
      if (!tree_kelmans_legal(t, a, b).legal) continue;
      if (canonical_form(graph_kelmans(t, a, b)).key != key) return false;
    }
  return true;
}

bool classify_maximal(const MixedGraph& t) {
  if (!is_mixed_tree(t)) fail(errc::not_a_tree, "graph is not a mixed tree");
  if (is_mixed_star(t)) return true;
  if (t.undirected_count() > 0) return false;
  // arc-only tree: every a->x<-b and a<-x->b needs a leaf among a, b
  for (int x = 1; x <= t.order(); ++x) {
    std::vector<int> ins, outs;
    for (int v = 1; v <= t.order(); ++v) {
      if (t.has_arc(v, x)) ins.push_back(v);
      if (t.has_arc(x, v)) outs.push_back(v);
    }
    for (const auto& side : {ins, outs})
      for (size_t i = 0; i < side.size(); ++i)
        for (size_t j = i + 1; j < side.size(); ++j)
          if (degree(t, side[i]) > 1 && degree(t, side[j]) > 1) return false;
  }
  return true;
}

std::vector<MixedGraph> climb_to_maximal(const MixedGraph& t) {
  if (!is_mixed_tree(t)) fail(errc::not_a_tree, "graph is not a mixed tree");
  std::vector<MixedGraph> chain{t};
  while (true) {
    const MixedGraph& cur = chain.back();
    std::string cur_key = canonical_form(cur).key;
    bool found = false;
    MixedGraph best_graph;
    DegreeSequence best_deg;
    std::string best_key;
    for (int a = 1; a <= cur.order(); ++a)
      for (int b = 1; b <= cur.order(); ++b) {
        if (a == b || cur.has_arc(a, b) || cur.has_arc(b, a)) continue;
        if (!tree_kelmans_legal(cur, a, b).legal) continue;
        MixedGraph moved = graph_kelmans(cur, a, b);
        CanonicalForm c = canonical_form(moved);
        if (c.key == cur_key) continue;
        DegreeSequence d = degree_sequence(moved);
        if (!found || compare_dict(d, best_deg) == std::strong_ordering::greater ||
            (compare_dict(d, best_deg) == std::strong_ordering::equal && c.key < best_key)) {
          found = true;
          best_graph = std::move(moved);
          best_deg = std::move(d);
          best_key = std::move(c.key);
        }
      }
    if (!found) break;
    chain.push_back(std::move(best_graph));
  }
  return chain;
}

} // namespace aspec

#include <doctest.h>

#include <set>
#include <thread>

#include "aspec/enumeration.hpp"
#include "aspec/kelmans.hpp"
#include "aspec/spectral.hpp"
#include "oracles.hpp"

using namespace aspec;

TEST_CASE("enumeration examples") {
  CHECK(enumerate_mixed_trees(3, 2).size() == 3);
  CHECK(enumerate_mixed_trees(3, 4).size() == 1);
  CHECK(enumerate_mixed_trees(2, 1).size() == 1);
  CHECK(enumerate_mixed_trees(1, 0).size() == 1);

  CHECK_THROWS_AS(enumerate_mixed_trees(0, 0), Error);
  CHECK_THROWS_AS(enumerate_mixed_trees(4, 2), Error);
  CHECK_THROWS_AS(enumerate_mixed_trees(4, 7), Error);
  try {
    enumerate_mixed_trees(20, 19);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::size_limit_exceeded);
  }
}

TEST_CASE("enumeration output is canonical, deduplicated, sorted") {
  for (int n = 2; n <= 5; ++n)
    for (int m = n - 1; m <= 2 * n - 2; ++m) {
      auto classes = enumerate_mixed_trees(n, m);
      std::set<std::string> keys;
      for (const auto& c : classes) {
        CHECK(c.graph.order() == n);
        CHECK(c.graph.size() == m);
        CHECK(is_mixed_tree(c.graph));
        CHECK(canonical_form(c.graph).key == c.key);
        keys.insert(c.key);
      }
      CHECK(keys.size() == classes.size());
      for (size_t i = 1; i < classes.size(); ++i) CHECK(classes[i - 1].key < classes[i].key);
    }
}

TEST_CASE("enumeration counts match the brute-force oracle") {
  for (int n = 1; n <= 4; ++n)
    for (int m = n - 1; m <= 2 * n - 2; ++m)
      CHECK(enumerate_mixed_trees(n, m).size() == oracle::count_mixed_tree_classes(n, m));
}

TEST_CASE("poset on four vertices, all edges undirected") {
  Poset p = build_poset(4, 6);
  REQUIRE(p.nodes.size() == 2);
  std::string p4_key = canonical_form(path_graph(4)).key;
  std::string star_key = canonical_form(new_mixed_graph(4, {}, {{1, 2}, {1, 3}, {1, 4}})).key;
  int ip = p.nodes[0].key == p4_key ? 0 : 1;
  int is = 1 - ip;
  CHECK(p.nodes[ip].key == p4_key);
  CHECK(p.nodes[is].key == star_key);
  CHECK(p.relations.count({ip, is}) == 1);
  CHECK(p.covers.count({ip, is}) == 1);
  CHECK(p.relations.count({is, ip}) == 0);
}

TEST_CASE("poset on three vertices, arcs only, is an antichain") {
  Poset p = build_poset(3, 2);
  CHECK(p.nodes.size() == 3);
  CHECK(p.relations.empty());
  CHECK(p.covers.empty());
}

TEST_CASE("poset relations are acyclic") {
  for (int n = 2; n <= 4; ++n)
    for (int m = n - 1; m <= 2 * n - 2; ++m) {
      Poset p = build_poset(n, m);
      // Kahn-style peeling
      size_t k = p.nodes.size();
      std::vector<int> indeg(k, 0);
      for (auto [i, j] : p.relations) ++indeg[j];
      std::vector<int> order;
      std::vector<char> removed(k, 0);
      for (size_t round = 0; round < k; ++round) {
        int pick = -1;
        for (size_t v = 0; v < k; ++v)
          if (!removed[v] && indeg[v] == 0) {
            pick = static_cast<int>(v);
            break;
          }
        REQUIRE(pick >= 0);
        removed[pick] = 1;
        order.push_back(pick);
        for (auto [i, j] : p.relations)
          if (i == pick) --indeg[j];
      }
      CHECK(order.size() == k);
      for (auto [i, j] : p.covers) CHECK(p.relations.count({i, j}) == 1);
    }
}

TEST_CASE("poset caps") {
  CHECK_THROWS_AS(build_poset(7, 6), Error);
  try {
    build_poset(7, 6);
  } catch (const Error& e) {
    CHECK(e.code() == errc::size_limit_exceeded);
  }
}

TEST_CASE("ALPHA_SPECTRA_MAX_N overrides the enumeration caps") {
  setenv("ALPHA_SPECTRA_MAX_N", "3", 1);
  CHECK_THROWS_AS(enumerate_mixed_trees(4, 3), Error);
  CHECK_THROWS_AS(build_poset(4, 6), Error);
  CHECK(enumerate_mixed_trees(3, 2).size() == 3);
  // the canonical-labeling cap never drops below 10
  CHECK(canonical_form(path_graph(8)).graph.order() == 8);
  unsetenv("ALPHA_SPECTRA_MAX_N");
  CHECK(enumerate_mixed_trees(4, 3).size() > 0);
}

TEST_CASE("DOT export") {
  Poset p = build_poset(4, 6);
  std::string dot = poset_to_dot(p);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);
  CHECK(dot.find("d=(6,2,2,2)") != std::string::npos);
  CHECK(dot == poset_to_dot(p));
}

TEST_CASE("maximality, exhaustive checker") {
  CHECK(is_maximal(new_mixed_graph(4, {}, {{1, 2}, {1, 3}, {1, 4}})));
  CHECK_FALSE(is_maximal(path_graph(4)));
  CHECK(is_maximal(new_mixed_graph(4, {{1, 2}, {2, 3}, {3, 4}}, {})));
  CHECK_THROWS_AS(is_maximal(new_mixed_graph(2, {}, {})), Error);
}

TEST_CASE("maximality, closed-form classifier") {
  for (int n = 2; n <= 6; ++n)
    for (int m = n - 1; m <= 2 * n - 2; ++m)
      for (int eo = 0; eo <= 2 * n - m - 2; ++eo) CHECK(classify_maximal(mixed_star(n, m, eo)));

  // a->x<-b with both a and b internal
  MixedGraph bad = new_mixed_graph(5, {{1, 2}, {3, 2}, {4, 1}, {3, 5}}, {});
  CHECK_FALSE(classify_maximal(bad));
  CHECK_FALSE(is_maximal(bad));

  CHECK_FALSE(classify_maximal(path_graph(4)));
}

TEST_CASE("classifier agrees with the exhaustive check") {
  for (int n = 1; n <= 5; ++n)
    for (int m = n - 1; m <= 2 * n - 2; ++m)
      for (const auto& c : enumerate_mixed_trees(n, m))
        CHECK(classify_maximal(c.graph) == is_maximal(c.graph));
}

TEST_CASE("climbing to a maximal element") {
  auto chain = climb_to_maximal(path_graph(4));
  REQUIRE(chain.size() >= 2);
  CHECK(chain.front() == path_graph(4));
  CHECK(is_isomorphic(chain.back(), new_mixed_graph(4, {}, {{1, 2}, {1, 3}, {1, 4}})));

  CHECK(climb_to_maximal(mixed_star(5, 6, 1)).size() == 1);
  CHECK(climb_to_maximal(new_mixed_graph(4, {{1, 2}, {2, 3}, {3, 4}}, {})).size() == 1);
}

TEST_CASE("chains are monotone in degree sequence and radius") {
  for (int n = 2; n <= 5; ++n)
    for (int m = n - 1; m <= 2 * n - 2; ++m)
      for (const auto& c : enumerate_mixed_trees(n, m)) {
        auto chain = climb_to_maximal(c.graph);
        CHECK(is_maximal(chain.back()));
        for (size_t i = 1; i < chain.size(); ++i) {
          CHECK(compare_dict(degree_sequence(chain[i]), degree_sequence(chain[i - 1])) ==
                std::strong_ordering::greater);
          for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0})
            CHECK(spectral_radius(a_alpha(chain[i], alpha)) >=
                  spectral_radius(a_alpha(chain[i - 1], alpha)) - 1e-9);
        }
      }
}

TEST_CASE("enumeration and radii are safe to evaluate concurrently") {
  auto worker = [] {
    std::vector<std::string> keys;
    double rho_sum = 0.0;
    for (int m = 4; m <= 8; ++m)
      for (const auto& c : enumerate_mixed_trees(5, m)) {
        keys.push_back(c.key);
        rho_sum += spectral_radius(a_alpha(c.graph, 0.5));
      }
    return std::make_pair(keys, rho_sum);
  };
  std::vector<std::thread> threads;
  std::vector<std::pair<std::vector<std::string>, double>> results(4);
  for (int i = 0; i < 4; ++i)
    threads.emplace_back([&results, i, &worker] { results[i] = worker(); });
  for (auto& t : threads) t.join();
  for (int i = 1; i < 4; ++i) {
    CHECK(results[i].first == results[0].first);
    CHECK(results[i].second == results[0].second);
  }
}

TEST_CASE("top family at full size is the undirected star") {
  for (int n = 3; n <= 5; ++n) {
    Poset p = build_poset(n, 2 * n - 2);
    std::vector<std::pair<int, int>> star_pairs;
    for (size_t i = 0; i < p.nodes.size(); ++i) {
      bool has_up = false;
      for (auto [lo, hi] : p.relations)
        if (lo == static_cast<int>(i)) has_up = true;
      if (!has_up) {
        // the only maximal class is the all-undirected star
        std::vector<std::pair<int, int>> und;
        for (int leaf = 2; leaf <= n; ++leaf) und.emplace_back(1, leaf);
        CHECK(p.nodes[i].key == canonical_form(new_mixed_graph(n, {}, und)).key);
      }
    }
  }
}

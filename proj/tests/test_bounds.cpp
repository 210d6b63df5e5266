#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "aspec/bounds.hpp"
#include "aspec/enumeration.hpp"
#include "aspec/spectral.hpp"
#include "oracles.hpp"

using namespace aspec;

TEST_CASE("upper bound closed form") {
  CHECK(upper_bound(4, 6, 0.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  for (int n = 2; n <= 8; ++n)
    for (int m = n - 1; m <= 2 * n - 2; ++m)
      CHECK(upper_bound(n, m, 1.0) == doctest::Approx(n - 1.0));
  CHECK(upper_bound(4, 6, 0.5) == doctest::Approx(2.0));
  MixedGraph star = new_mixed_graph(4, {}, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(std::abs(spectral_radius(a_alpha(star, 0.5)) - upper_bound(4, 6, 0.5)) < 1e-8);
  CHECK(upper_bound(6, 8, 0.5) == doctest::Approx(0.5 * (3.0 + std::sqrt(7.0))));

  CHECK_THROWS_AS(upper_bound(4, 2, 0.5), Error);
  CHECK_THROWS_AS(upper_bound(4, 6, -1.0), Error);
}

TEST_CASE("lower bound through path radii") {
  CHECK(lower_bound_k(6, 8) == 2);
  for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0})
    CHECK(lower_bound(6, 8, alpha) == doctest::Approx(1.0).epsilon(1e-9));

  CHECK(lower_bound_k(5, 8) == 5);
  CHECK(lower_bound(5, 8, 0.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-8));

  CHECK(lower_bound_k(5, 4) == 1);
  for (double alpha : {0.0, 0.5, 1.0}) CHECK(lower_bound(5, 4, alpha) == 0.0);

  CHECK(lower_bound_k(7, 12) == 7);
  CHECK_THROWS_AS(lower_bound(3, 9, 0.5), Error);
}

TEST_CASE("star quadratic root") {
  CHECK(star_quadratic_root(5, 6, 2, 0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(star_quadratic_root(5, 6, 2, 1.0) == doctest::Approx(4.0));
  CHECK(star_quadratic_root(4, 6, 0, 0.5) == doctest::Approx(2.0));

  CHECK_THROWS_AS(star_quadratic_root(1, 0, 0, 0.5), Error);
  CHECK_THROWS_AS(star_quadratic_root(5, 6, 3, 0.5), Error);
  CHECK_THROWS_AS(star_quadratic_root(5, 6, 2, 1.5), Error);
}

TEST_CASE("star quadratic root tracks the eigensolver and is monotone in extra_out") {
  for (int n = 2; n <= 8; ++n)
    for (int m = n - 1; m <= 2 * n - 2; ++m) {
      for (int eo = 0; eo <= 2 * n - m - 2; ++eo) {
        MixedGraph s = mixed_star(n, m, eo);
        for (int ai = 0; ai <= 10; ++ai) {
          double alpha = ai / 10.0;
          double root = star_quadratic_root(n, m, eo, alpha);
          CHECK(root >= alpha - 1e-12);
          CHECK(std::abs(root - spectral_radius(a_alpha(s, alpha))) < 1e-8);
          if (eo > 0)
            CHECK(root >= star_quadratic_root(n, m, eo - 1, alpha) - 1e-12);
        }
      }
    }
}

TEST_CASE("arc-only tree radius") {
  MixedGraph t = new_mixed_graph(5, {{1, 2}, {2, 3}, {4, 3}, {4, 5}}, {});
  CHECK(arc_tree_radius(t, 0.5) == doctest::Approx(1.0));
  CHECK(std::abs(arc_tree_radius(t, 0.5) - spectral_radius(a_alpha(t, 0.5))) < 1e-10);
  CHECK(arc_tree_radius(t, 0.0) == 0.0);

  for (int n = 2; n <= 7; ++n) {
    MixedGraph outstar = mixed_star(n, n - 1, n - 1);
    for (double alpha : {0.0, 0.3, 1.0}) {
      CHECK(arc_tree_radius(outstar, alpha) == doctest::Approx(alpha * (n - 1)));
      CHECK(arc_tree_radius(outstar, alpha) ==
            doctest::Approx(upper_bound(n, n - 1, alpha)).epsilon(1e-12));
    }
  }

  CHECK_THROWS_AS(arc_tree_radius(path_graph(3), 0.5), Error);
  try {
    arc_tree_radius(path_graph(3), 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == errc::has_undirected_edge);
  }
  CHECK_THROWS_AS(arc_tree_radius(new_mixed_graph(3, {{1, 2}}, {}), 0.5), Error);
}

TEST_CASE("verification report on small sweeps") {
  BoundsReport r = verify_bounds(4, 4, 6, {0.0, 0.5, 1.0});
  CHECK(r.ok);
  for (const auto& row : r.rows) {
    CHECK(row.lower_slack >= -1e-8);
    CHECK(row.upper_slack >= -1e-8);
  }
  std::string star_key = canonical_form(new_mixed_graph(4, {}, {{1, 2}, {1, 3}, {1, 4}})).key;
  for (const auto& s : r.summaries) {
    REQUIRE(!s.upper_attaining.empty());
    bool star_attains = false;
    for (const auto& key : s.upper_attaining) star_attains |= key == star_key;
    CHECK(star_attains);
  }

  BoundsReport r58 = verify_bounds(5, 5, 8, {0.0});
  std::string p5_key = canonical_form(path_graph(5)).key;
  REQUIRE(r58.summaries.size() == 1);
  REQUIRE(r58.summaries[0].lower_attaining.size() == 1);
  CHECK(r58.summaries[0].lower_attaining[0] == p5_key);

  BoundsReport r43 = verify_bounds(4, 4, 3, {1.0});
  std::string outstar_key = canonical_form(mixed_star(4, 3, 3)).key;
  REQUIRE(r43.summaries.size() == 1);
  bool outstar_attains = false;
  for (const auto& key : r43.summaries[0].upper_attaining) outstar_attains |= key == outstar_key;
  CHECK(outstar_attains);
}

TEST_CASE("summary minima equal row minima") {
  BoundsReport r = verify_bounds(2, 4, std::nullopt, {0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(r.ok);
  for (const auto& s : r.summaries) {
    double min_lo = std::numeric_limits<double>::infinity();
    double min_up = std::numeric_limits<double>::infinity();
    for (const auto& row : r.rows) {
      if (row.n != s.n || row.m != s.m || row.alpha != s.alpha) continue;
      min_lo = std::min(min_lo, row.lower_slack);
      min_up = std::min(min_up, row.upper_slack);
    }
    CHECK(s.min_lower_slack == min_lo);
    CHECK(s.min_upper_slack == min_up);
  }
}

TEST_CASE("sandwich over all small trees") {
  for (int n = 2; n <= 5; ++n)
    for (int m = n - 1; m <= 2 * n - 2; ++m)
      for (const auto& c : enumerate_mixed_trees(n, m))
        for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
          double rho = spectral_radius(a_alpha(c.graph, alpha));
          CHECK(rho >= lower_bound(n, m, alpha) - 1e-8);
          CHECK(rho <= upper_bound(n, m, alpha) + 1e-8);
        }
}

TEST_CASE("CSV output shape") {
  BoundsReport r = verify_bounds(3, 3, std::nullopt, {0.0, 1.0});
  std::ostringstream os;
  write_bounds_csv(r, os);
  std::string text = os.str();
  CHECK(text.rfind("n,m,alpha,canonical_key,rho,lower,upper,lower_slack,upper_slack\n", 0) == 0);
  size_t rows = 0, comments = 0;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line); // header
  while (std::getline(is, line)) {
    if (line.rfind("#", 0) == 0)
      ++comments;
    else
      ++rows;
  }
  CHECK(rows == r.rows.size());
  CHECK(comments >= r.summaries.size());
  std::ostringstream again;
  write_bounds_csv(r, again);
  CHECK(again.str() == text);
}

TEST_CASE("degenerate single-vertex bounds") {
  for (double alpha : {0.0, 0.5, 1.0}) {
    CHECK(upper_bound(1, 0, alpha) == doctest::Approx(alpha));
    CHECK(lower_bound(1, 0, alpha) == 0.0);
  }
  BoundsReport r = verify_bounds(1, 1, std::nullopt, {0.0, 0.5, 1.0});
  CHECK(r.ok);
  CHECK(r.rows.size() == 3);
  for (const auto& row : r.rows) CHECK(row.rho == 0.0);
}

TEST_CASE("verify_bounds validation") {
  CHECK_THROWS_AS(verify_bounds(3, 2, std::nullopt, {0.5}), Error);
  CHECK_THROWS_AS(verify_bounds(2, 3, std::nullopt, {}), Error);
  CHECK_THROWS_AS(verify_bounds(2, 3, std::nullopt, {2.0}), Error);
  CHECK_THROWS_AS(verify_bounds(2, 3, std::nullopt, {0.5}, -1.0), Error);
  try {
    verify_bounds(2, 30, std::nullopt, {0.5});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::size_limit_exceeded);
  }
}

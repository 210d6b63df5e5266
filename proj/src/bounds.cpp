#include "aspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "aspec/caps.hpp"
#include "aspec/enumeration.hpp"
#include "aspec/format.hpp"
#include "aspec/spectral.hpp"

namespace aspec {

namespace {

void check_nm(int n, int m) {
  if (n < 1) fail(errc::parameter_out_of_range, "order must be at least 1");
  if (m < n - 1 || m > 2 * n - 2)
    fail(errc::parameter_out_of_range, "size must be in [n-1, 2n-2]");
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    fail(errc::alpha_out_of_range, "alpha must lie in [0,1]");
}

} // namespace

double upper_bound(int n, int m, double alpha) {
  check_nm(n, m);
  check_alpha(alpha);
  double a2 = alpha * alpha;
  double b2 = (1.0 - alpha) * (1.0 - alpha);
  double radicand = a2 * n * n - 4.0 * a2 * (n - 1) + 4.0 * b2 * (m - n + 1);
  return 0.5 * (alpha * n + std::sqrt(radicand));
}

int lower_bound_k(int n, int m) {
  check_nm(n, m);
  int cells = 2 * n - m - 1;
  return (n + cells - 1) / cells;
}

double lower_bound(int n, int m, double alpha) {
  check_alpha(alpha);
  int k = lower_bound_k(n, m);
  if (k == 1) return 0.0;
  static std::mutex mu;
  static std::map<std::pair<int, double>, double> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({k, alpha});
  if (it != cache.end()) return it->second;
  double rho = spectral_radius(a_alpha(path_graph(k), alpha));
  cache.emplace(std::make_pair(k, alpha), rho);
  return rho;
}

double star_quadratic_root(int n, int m, int extra_out, double alpha) {
  if (n < 2) fail(errc::parameter_out_of_range, "order must be at least 2");
  check_nm(n, m);
  if (extra_out < 0 || extra_out > 2 * n - m - 2)
    fail(errc::parameter_out_of_range, "extra_out must be in [0, 2n-m-2]");
  check_alpha(alpha);
  double big = m - n + extra_out + 1; // center out-degree
  double und = m - n + 1;             // undirected edges
  double half_sum = 0.5 * alpha * (big + 1.0);
  double disc = alpha * alpha * (big - 1.0) * (big - 1.0) +
                4.0 * (1.0 - alpha) * (1.0 - alpha) * und;
  return half_sum + 0.5 * std::sqrt(disc);
}

double arc_tree_radius(const MixedGraph& t, double alpha) {
  if (!is_mixed_tree(t)) fail(errc::not_a_tree, "graph is not a mixed tree");
  if (t.undirected_count() > 0)
    fail(errc::has_undirected_edge, "tree has an undirected edge");
  check_alpha(alpha);
  int max_out = 0;
  for (int u = 1; u <= t.order(); ++u) max_out = std::max(max_out, out_degree(t, u));
  return alpha * max_out;
}

BoundsReport verify_bounds(int n_lo, int n_hi, std::optional<int> m_fixed,
                           const std::vector<double>& alphas, double tol) {
  if (n_lo < 1 || n_lo > n_hi) fail(errc::parameter_out_of_range, "bad order range");
  if (n_hi > enumeration_cap())
    fail(errc::size_limit_exceeded,
         "enumeration capped at n=" + std::to_string(enumeration_cap()));
  if (alphas.empty()) fail(errc::parameter_out_of_range, "alpha grid is empty");
  for (double a : alphas) check_alpha(a);
  if (!(tol > 0.0)) fail(errc::parameter_out_of_range, "tol must be positive");

  std::vector<double> grid = alphas;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  BoundsReport report;
  report.tol = tol;
  for (int n = n_lo; n <= n_hi; ++n) {
    int m_first = m_fixed ? *m_fixed : n - 1;
    int m_last = m_fixed ? *m_fixed : 2 * n - 2;
    for (int m = m_first; m <= m_last; ++m) {
      check_nm(n, m);
      auto classes = enumerate_mixed_trees(n, m);
      // rho for each (class, alpha), rows in (key, alpha) order
      std::vector<std::vector<double>> rho(classes.size());
      for (size_t c = 0; c < classes.size(); ++c) {
        for (double alpha : grid) {
          double r = spectral_radius(a_alpha(classes[c].graph, alpha));
          double lo = lower_bound(n, m, alpha);
          double up = upper_bound(n, m, alpha);
          BoundsRow row{n, m, alpha, classes[c].key, r, lo, up, r - lo, up - r};
          if (row.lower_slack < -tol)
            report.violations.push_back("lower bound violated by " + row.canonical_key +
                                        " at alpha=" + format_fixed12(alpha));
          if (row.upper_slack < -tol)
            report.violations.push_back("upper bound violated by " + row.canonical_key +
                                        " at alpha=" + format_fixed12(alpha));
          rho[c].push_back(r);
          report.rows.push_back(std::move(row));
        }
      }
      for (size_t ai = 0; ai < grid.size(); ++ai) {
        BoundsSummary s;
        s.n = n;
        s.m = m;
        s.alpha = grid[ai];
        double lo = lower_bound(n, m, grid[ai]);
        double up = upper_bound(n, m, grid[ai]);
        s.min_lower_slack = std::numeric_limits<double>::infinity();
        s.min_upper_slack = std::numeric_limits<double>::infinity();
        for (size_t c = 0; c < classes.size(); ++c) {
          s.min_lower_slack = std::min(s.min_lower_slack, rho[c][ai] - lo);
          s.min_upper_slack = std::min(s.min_upper_slack, up - rho[c][ai]);
          if (rho[c][ai] - lo <= tol) s.lower_attaining.push_back(classes[c].key);
          if (up - rho[c][ai] <= tol) s.upper_attaining.push_back(classes[c].key);
        }
        report.summaries.push_back(std::move(s));
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

void write_bounds_csv(const BoundsReport& report, std::ostream& os) {
  os << "n,m,alpha,canonical_key,rho,lower,upper,lower_slack,upper_slack\n";
  for (const auto& r : report.rows)
    os << r.n << ',' << r.m << ',' << format_fixed12(r.alpha) << ',' << r.canonical_key << ','
       << format_fixed12(r.rho) << ',' << format_fixed12(r.lower) << ','
       << format_fixed12(r.upper) << ',' << format_fixed12(r.lower_slack) << ','
       << format_fixed12(r.upper_slack) << '\n';
  for (const auto& s : report.summaries) {
    os << "# n=" << s.n << " m=" << s.m << " alpha=" << format_fixed12(s.alpha)
       << " min_lower_slack=" << format_fixed12(s.min_lower_slack)
       << " min_upper_slack=" << format_fixed12(s.min_upper_slack) << " lower_attained_by=";
    for (size_t i = 0; i < s.lower_attaining.size(); ++i)
      os << (i ? " " : "") << s.lower_attaining[i];
    os << " upper_attained_by=";
    for (size_t i = 0; i < s.upper_attaining.size(); ++i)
      os << (i ? " " : "") << s.upper_attaining[i];
    os << '\n';
  }
  os << "# ok=" << (report.ok ? "true" : "false") << " tol=" << format_fixed12(report.tol)
     << '\n';
  for (const auto& v : report.violations) os << "# violation: " << v << '\n';
}

} // namespace aspec

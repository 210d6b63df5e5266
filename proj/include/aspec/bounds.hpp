#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "aspec/mixed_graph.hpp"

namespace aspec {

// Closed-form upper bound on the A_alpha spectral radius of a mixed tree of
// order n and size m:
//   (alpha*n + sqrt(alpha^2 n^2 - 4 alpha^2 (n-1) + 4 (1-alpha)^2 (m-n+1)))/2
// Attained by the mixed star with center out-degree n-1.
double upper_bound(int n, int m, double alpha);

// Order of the path whose radius gives the lower bound: ceil(n / (2n-m-1)).
int lower_bound_k(int n, int m);

// rho_alpha(P_k) with k = lower_bound_k(n, m); 0 when k = 1. Cached per
// (k, alpha).
double lower_bound(int n, int m, double alpha);

// The larger root of (x - alpha)(x - alpha(m-n+extra_out+1)) -
// (1-alpha)^2 (m-n+1); equals the radius of mixed_star(n, m, extra_out).
double star_quadratic_root(int n, int m, int extra_out, double alpha);

// Radius of an arc-only mixed tree: alpha * max out-degree.
double arc_tree_radius(const MixedGraph& t, double alpha);

struct BoundsRow {
  int n = 0;
  int m = 0;
  double alpha = 0.0;
  std::string canonical_key;
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double lower_slack = 0.0; // rho - lower
  double upper_slack = 0.0; // upper - rho
};

struct BoundsSummary {
  int n = 0;
  int m = 0;
  double alpha = 0.0;
  double min_lower_slack = 0.0;
  double min_upper_slack = 0.0;
  std::vector<std::string> lower_attaining; // classes with lower_slack <= tol
  std::vector<std::string> upper_attaining; // classes with upper_slack <= tol
};

struct BoundsReport {
  std::vector<BoundsRow> rows;          // ordered by (n, m, canonical_key, alpha)
  std::vector<BoundsSummary> summaries; // ordered by (n, m, alpha)
  double tol = 1e-8;
  bool ok = true; // no slack below -tol
  std::vector<std::string> violations;
};

// Exhaustive comparison of exact radii against both bounds over every mixed
// tree class with n_lo <= n <= n_hi, all valid m (or just m_fixed), and every
// alpha in the grid. tol is used both for flagging violations and for
// attainment detection.
BoundsReport verify_bounds(int n_lo, int n_hi, std::optional<int> m_fixed,
                           const std::vector<double>& alphas, double tol = 1e-8);

// CSV: header, one row per (class, alpha), then '#'-prefixed summary lines.
void write_bounds_csv(const BoundsReport& report, std::ostream& os);

} // namespace aspec

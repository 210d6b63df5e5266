#include "aspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aspec {

Matrix adjacency_matrix(const MixedGraph& g) {
  int n = g.order();
  Matrix a = Matrix::Zero(n, n);
  for (const auto& [pair, r] : g.relations()) {
    int u = pair.first - 1, v = pair.second - 1;
    if (r != Rel::arc_backward) a(u, v) = 1.0;
    if (r != Rel::arc_forward) a(v, u) = 1.0;
  }
  return a;
}

Matrix out_degree_matrix(const MixedGraph& g) {
  int n = g.order();
  Matrix d = Matrix::Zero(n, n);
  for (int u = 1; u <= n; ++u) d(u - 1, u - 1) = out_degree(g, u);
  return d;
}

Matrix a_alpha(const MixedGraph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    fail(errc::alpha_out_of_range, "alpha must lie in [0,1]");
  return alpha * out_degree_matrix(g) + (1.0 - alpha) * adjacency_matrix(g);
}

namespace {

// Tarjan on the nonzero pattern.
struct SccFinder {
  const Matrix& m;
  int n;
  int counter = 0;
  std::vector<int> index, low, stack_pos;
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;

  explicit SccFinder(const Matrix& mat)
      : m(mat), n(static_cast<int>(mat.rows())), index(n, -1), low(n, -1), stack_pos(n, -1) {}

  void dfs(int v) {
    index[v] = low[v] = counter++;
    stack_pos[v] = static_cast<int>(stack.size());
    stack.push_back(v);
    for (int w = 0; w < n; ++w) {
      if (v == w || m(v, w) <= 0.0) continue;
      if (index[w] < 0) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (stack_pos[w] >= 0) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int base = stack_pos[v];
      std::vector<int> scc(stack.begin() + base, stack.end());
      for (int w : scc) stack_pos[w] = -1;
      stack.resize(base);
      std::sort(scc.begin(), scc.end());
      sccs.push_back(std::move(scc));
    }
  }

  std::vector<std::vector<int>> run() {
    for (int v = 0; v < n; ++v)
      if (index[v] < 0) dfs(v);
    std::sort(sccs.begin(), sccs.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return std::move(sccs);
  }
};

constexpr long kPowerIterCap = 1'000'000;

// Perron root of an irreducible nonnegative block via power iteration on
// block + I (primitive, so convergence is guaranteed).
double irreducible_perron(const Matrix& block, double tol) {
  int k = static_cast<int>(block.rows());
  Matrix p = block;
  p.diagonal().array() += 1.0;
  Eigen::VectorXd x = Eigen::VectorXd::Ones(k);
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (long it = 0; it < kPowerIterCap; ++it) {
    Eigen::VectorXd y = p * x;
    double ray = x.dot(y) / x.dot(x);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int i = 0; i < k; ++i) {
      double r = y(i) / x(i); // x stays strictly positive
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (it > 0 && std::abs(ray - prev) < tol / 10.0 && hi - lo < tol) return ray - 1.0;
    prev = ray;
    x = y / y.maxCoeff();
  }
  fail(errc::non_convergence, "power iteration exhausted its budget");
}

} // namespace

std::vector<std::vector<int>> pattern_sccs(const Matrix& m) {
  if (m.rows() != m.cols()) fail(errc::parameter_out_of_range, "matrix must be square");
  return SccFinder(m).run();
}

double spectral_radius(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) fail(errc::parameter_out_of_range, "matrix must be square");
  if (!(tol > 0.0)) fail(errc::parameter_out_of_range, "tol must be positive");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!(m(i, j) >= 0.0) || !std::isfinite(m(i, j)))
        fail(errc::negative_entry, "matrix entries must be finite and nonnegative");

  double rho = 0.0;
  for (const auto& scc : pattern_sccs(m)) {
    if (scc.size() == 1) {
      rho = std::max(rho, m(scc[0], scc[0]));
      continue;
    }
    Matrix block(scc.size(), scc.size());
    for (size_t i = 0; i < scc.size(); ++i)
      for (size_t j = 0; j < scc.size(); ++j) block(i, j) = m(scc[i], scc[j]);
    rho = std::max(rho, irreducible_perron(block, tol));
  }
  return rho;
}

double CharPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CharPoly char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) fail(errc::parameter_out_of_range, "matrix must be square");
  int n = static_cast<int>(m.rows());
  if (n > kCharPolyCap)
    fail(errc::size_limit_exceeded,
         "char_poly capped at order " + std::to_string(kCharPolyCap));
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  Matrix acc = Matrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    acc = m * acc;
    double ck = -acc.trace() / k;
    c[n - k] = ck;
    acc.diagonal().array() += ck;
  }
  return CharPoly{std::move(c)};
}

namespace {

void check_partition(const Partition& p, int order) {
  std::vector<char> seen(order, 0);
  int covered = 0;
  if (p.cells.empty()) fail(errc::bad_partition, "partition has no cells");
  for (const auto& cell : p.cells) {
    if (cell.empty()) fail(errc::bad_partition, "partition has an empty cell");
    for (int i : cell) {
      if (i < 0 || i >= order) fail(errc::bad_partition, "partition index out of range");
      if (seen[i]) fail(errc::bad_partition, "partition cells are not disjoint");
      seen[i] = 1;
      ++covered;
    }
  }
  if (covered != order) fail(errc::bad_partition, "partition does not cover all indices");
}

} // namespace

Matrix quotient_matrix(const Matrix& m, const Partition& p) {
  if (m.rows() != m.cols()) fail(errc::parameter_out_of_range, "matrix must be square");
  check_partition(p, static_cast<int>(m.rows()));
  int cells = static_cast<int>(p.cells.size());
  Matrix q(cells, cells);
  for (int a = 0; a < cells; ++a)
    for (int b = 0; b < cells; ++b) {
      double sum = 0.0;
      for (int i : p.cells[a])
        for (int j : p.cells[b]) sum += m(i, j);
      q(a, b) = sum / static_cast<double>(p.cells[a].size());
    }
  return q;
}

Matrix equitable_quotient(const Matrix& m, const Partition& p) {
  Matrix q = quotient_matrix(m, p);
  for (size_t a = 0; a < p.cells.size(); ++a)
    for (int i : p.cells[a])
      for (size_t b = 0; b < p.cells.size(); ++b) {
        double sum = 0.0;
        for (int j : p.cells[b]) sum += m(i, j);
        if (std::abs(sum - q(a, b)) > kEquitableTol)
          fail(errc::not_equitable, "row " + std::to_string(i) + " has block-" +
                                        std::to_string(b) + " sum " + std::to_string(sum) +
                                        ", cell average " + std::to_string(q(a, b)));
      }
  return q;
}

std::vector<CharPoly> char_poly_components(const MixedGraph& t, double alpha) {
  if (!is_mixed_tree(t)) fail(errc::not_a_tree, "graph is not a mixed tree");
  Matrix full = a_alpha(t, alpha);
  std::vector<CharPoly> polys;
  for (const auto& cell : components(t)) {
    Matrix sub(cell.size(), cell.size());
    for (size_t i = 0; i < cell.size(); ++i)
      for (size_t j = 0; j < cell.size(); ++j) sub(i, j) = full(cell[i] - 1, cell[j] - 1);
    polys.push_back(char_poly(sub));
  }
  return polys;
}

} // namespace aspec

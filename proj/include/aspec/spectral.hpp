#pragma once

#include <Eigen/Dense>
#include <vector>

#include "aspec/mixed_graph.hpp"

namespace aspec {

using Matrix = Eigen::MatrixXd;

inline constexpr double kDefaultSpectralTol = 1e-10;
inline constexpr double kEquitableTol = 1e-12;
inline constexpr int kCharPolyCap = 12;

// 0/1 matrix with a_ij = 1 iff arc i->j or undirected ij (rows/cols 0-based,
// vertex v at index v-1).
Matrix adjacency_matrix(const MixedGraph& g);
// Diagonal out-degree matrix D+.
Matrix out_degree_matrix(const MixedGraph& g);
// alpha*D+ + (1-alpha)*A, alpha in [0,1].
Matrix a_alpha(const MixedGraph& g, double alpha);

// Perron root (= spectral radius = largest real eigenvalue) of a nonnegative
// square matrix, within tol. The nonzero pattern is split into strongly
// connected components; each irreducible diagonal block is handled by power
// iteration on (block + I), which is primitive, from the all-ones vector.
// Convergence requires successive Rayleigh estimates to differ by < tol/10
// and the Collatz-Wielandt bracket to certify the result within tol.
double spectral_radius(const Matrix& m, double tol = kDefaultSpectralTol);

// Strongly connected components of the nonzero pattern, 0-based, each cell
// ascending, cells ordered by smallest member.
std::vector<std::vector<int>> pattern_sccs(const Matrix& m);

struct CharPoly {
  std::vector<double> coeffs; // constant term first; back() == 1
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double eval(double x) const;
};

// Monic characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
// recurrence. Order capped for double-precision sanity; identity checks on
// the result should compare evaluations, not coefficients.
CharPoly char_poly(const Matrix& m);

struct Partition {
  std::vector<std::vector<int>> cells; // disjoint nonempty 0-based index sets covering [order]
};

// Cell-averaged quotient: entry (a,b) is the average over rows i in cell a of
// the row sums over cell b.
Matrix quotient_matrix(const Matrix& m, const Partition& p);
// Same, but verifies the block row sums are constant on every cell (within
// kEquitableTol); then the quotient shares the Perron root of m.
Matrix equitable_quotient(const Matrix& m, const Partition& p);

// Characteristic polynomials of the principal submatrices of a_alpha(t)
// restricted to each component of the mixed tree t (these are not the
// A_alpha matrices of the component subgraphs). Their product equals
// char_poly(a_alpha(t, alpha)).
std::vector<CharPoly> char_poly_components(const MixedGraph& t, double alpha);

} // namespace aspec

#ifndef SPECMATCH_SPECTRAL_HPP
#define SPECMATCH_SPECTRAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "specmatch/graph.hpp"
#include "specmatch/matrix.hpp"

namespace specmatch {

/// Real spectrum sorted descending; radius() is the largest eigenvalue.
struct Spectrum {
  std::vector<double> eigenvalues;
  double radius() const { return eigenvalues.front(); }
};

/// Ordered list of disjoint nonempty vertex blocks covering 0..n-1.
class VertexPartition {
 public:
  VertexPartition(int ground_size, std::vector<std::vector<int>> blocks);
  int ground_size() const noexcept { return ground_size_; }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

 private:
  int ground_size_;
  std::vector<std::vector<int>> blocks_;
};

struct QuotientView {
  SquareMatrix matrix;           // block-average row sums
  bool equitable;                // every block row sum constant within tol
  double max_row_sum_deviation;  // worst |row sum - block average|
};

/// Shortest-path distance matrix via BFS from every vertex.
/// Throws DisconnectedError when some pair has no path.
SquareMatrix all_pairs_distances(const Graph& g);

/// Row sums of a distance matrix (transmission of each vertex).
std::vector<double> transmissions(const SquareMatrix& distances);

/// Distance signless Laplacian Q = Diag(Tr) + D.
SquareMatrix dsl_matrix(const Graph& g);

/// Full spectrum of a symmetric matrix by cyclic Jacobi rotations.
Spectrum eigenvalues_symmetric(const SquareMatrix& m, int sweep_cap = 100);

/// Largest eigenvalue of Q(g).
double dsl_radius(const Graph& g);

QuotientView quotient_matrix(const SquareMatrix& m, const VertexPartition& p,
                             double tol = 1e-9);

/// Dominant eigenvalue of a nonnegative matrix by power iteration from the
/// all-ones vector; for order <= 4 cross-validated against the largest real
/// root of the characteristic polynomial.
double perron_root(const SquareMatrix& m, std::int64_t iteration_cap = 1'000'000);

/// x'Mx / x'x for a nonzero vector x.
double rayleigh(const SquareMatrix& m, std::span<const double> x);

}  // namespace specmatch

#endif

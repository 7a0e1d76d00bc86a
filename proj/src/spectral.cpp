#include "specmatch/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "specmatch/polynomial.hpp"

namespace specmatch {

VertexPartition::VertexPartition(int ground_size, std::vector<std::vector<int>> blocks)
    : ground_size_(ground_size), blocks_(std::move(blocks)) {
  if (ground_size < 1) throw std::invalid_argument("partition ground set must be nonempty");
  std::vector<char> seen(static_cast<std::size_t>(ground_size), 0);
  int covered = 0;
  for (const auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("partition blocks must be nonempty");
    for (int v : block) {
      if (v < 0 || v >= ground_size)
        throw std::invalid_argument("partition element outside the ground set");
      if (seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("partition blocks must be disjoint");
      seen[static_cast<std::size_t>(v)] = 1;
      ++covered;
    }
  }
  if (covered != ground_size)
    throw std::invalid_argument("partition must cover the whole ground set");
}

SquareMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  SquareMatrix d(n);
  for (int v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    for (int u = 0; u < n; ++u) {
      if (dist[static_cast<std::size_t>(u)] < 0)
        throw DisconnectedError("distance matrix undefined: graph is disconnected");
      d(v, u) = dist[static_cast<std::size_t>(u)];
    }
  }
  return d;
}

std::vector<double> transmissions(const SquareMatrix& distances) {
  const int n = distances.order();
  std::vector<double> tr(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tr[static_cast<std::size_t>(i)] += distances(i, j);
  return tr;
}

SquareMatrix dsl_matrix(const Graph& g) {
  SquareMatrix q = all_pairs_distances(g);
  const auto tr = transmissions(q);
  for (int i = 0; i < q.order(); ++i) q(i, i) += tr[static_cast<std::size_t>(i)];
  return q;
}

Spectrum eigenvalues_symmetric(const SquareMatrix& m, int sweep_cap) {
  const int n = m.order();
  if (!m.all_finite()) throw std::invalid_argument("matrix entries must be finite");
  if (!m.is_symmetric(1e-12 * std::max(1.0, m.max_abs_entry())))
    throw std::invalid_argument("eigensolver requires a symmetric matrix");

  SquareMatrix a = m;
  // Work on the symmetrized copy so rotations stay exact mirror images.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = a(j, i) = v;
    }

  const double target = 1e-12 * m.frobenius_norm();
  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  bool converged = n == 1;
  for (int sweep = 0; sweep < sweep_cap && !converged; ++sweep) {
    if (off_norm() <= target) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
      }
  }
  if (!converged && off_norm() > target)
    throw std::runtime_error("Jacobi eigensolver failed to converge within the sweep cap");

  Spectrum spectrum;
  spectrum.eigenvalues.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) spectrum.eigenvalues[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(), std::greater<>());
  return spectrum;
}

double dsl_radius(const Graph& g) { return eigenvalues_symmetric(dsl_matrix(g)).radius(); }

QuotientView quotient_matrix(const SquareMatrix& m, const VertexPartition& p, double tol) {
  if (p.ground_size() != m.order())
    throw std::invalid_argument("partition size does not match matrix order");
  const auto& blocks = p.blocks();
  const int t = static_cast<int>(blocks.size());
  SquareMatrix b(t);
  double worst = 0.0;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      double total = 0.0;
      double lo = 0.0, hi = 0.0;
      bool first = true;
      for (int u : blocks[static_cast<std::size_t>(i)]) {
        double row_sum = 0.0;
        for (int v : blocks[static_cast<std::size_t>(j)]) row_sum += m(u, v);
        total += row_sum;
        if (first) {
          lo = hi = row_sum;
          first = false;
        } else {
          lo = std::min(lo, row_sum);
          hi = std::max(hi, row_sum);
        }
      }
      const double average = total / static_cast<double>(blocks[static_cast<std::size_t>(i)].size());
      b(i, j) = average;
      worst = std::max({worst, hi - average, average - lo});
    }
  return {std::move(b), worst <= tol, worst};
}

namespace {

// Characteristic polynomial coefficients (monic, degree-descending) via the
// Faddeev-LeVerrier recurrence; only used for small cross-check matrices.
std::vector<double> characteristic_polynomial(const SquareMatrix& m) {
  const int n = m.order();
  std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
  coeffs[0] = 1.0;
  SquareMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    const double ck = -mk.trace() / k;
    coeffs[static_cast<std::size_t>(k)] = ck;
    if (k == n) break;
    for (int i = 0; i < n; ++i) mk(i, i) += ck;
    SquareMatrix next(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l) s += m(i, l) * mk(l, j);
        next(i, j) = s;
      }
    mk = next;
  }
  return coeffs;
}

}  // namespace

double perron_root(const SquareMatrix& m, std::int64_t iteration_cap) {
  const int n = m.order();
  if (!m.all_finite()) throw std::invalid_argument("matrix entries must be finite");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) < 0.0)
        throw std::invalid_argument("perron_root requires a nonnegative matrix");

  std::vector<double> x(static_cast<std::size_t>(n), 1.0), y(static_cast<std::size_t>(n));
  double lambda = 0.0;
  bool converged = false;
  int streak = 0;  // nonsymmetric quotients can repeat by accident once
  for (std::int64_t it = 0; it < iteration_cap; ++it) {
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += m(i, j) * x[static_cast<std::size_t>(j)];
      y[static_cast<std::size_t>(i)] = s;
      norm2 += s * s;
    }
    double dot = 0.0, xx = 0.0;
    for (int i = 0; i < n; ++i) {
      dot += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
      xx += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    }
    const double next = dot / xx;
    if (norm2 == 0.0) {
      lambda = 0.0;
      converged = true;
      break;
    }
    const double norm = std::sqrt(norm2);
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / norm;
    if (it > 0 && std::abs(next - lambda) < 1e-12 * std::max(std::abs(next), 1e-300))
      ++streak;
    else
      streak = 0;
    lambda = next;
    if (streak >= 3) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw std::runtime_error("power iteration failed to converge within the iteration cap");

  if (n <= 4) {
    const Polynomial chi(characteristic_polynomial(m));
    const double by_roots = largest_real_root(chi);
    if (std::abs(by_roots - lambda) > 1e-8 * std::max(1.0, std::abs(lambda)))
      throw std::runtime_error("power iteration disagrees with the characteristic polynomial");
  }
  return lambda;
}

double rayleigh(const SquareMatrix& m, std::span<const double> x) {
  const int n = m.order();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("vector length does not match matrix order");
  double xx = 0.0;
  for (double v : x) xx += v * v;
  if (xx == 0.0) throw std::invalid_argument("rayleigh quotient of the zero vector");
  double xmx = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += m(i, j) * x[static_cast<std::size_t>(j)];
    xmx += x[static_cast<std::size_t>(i)] * row;
  }
  return xmx / xx;
}

}  // namespace specmatch

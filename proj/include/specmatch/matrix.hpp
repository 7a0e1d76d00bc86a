#ifndef SPECMATCH_MATRIX_HPP
#define SPECMATCH_MATRIX_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace specmatch {

/// Dense real square matrix, row-major.
class SquareMatrix {
 public:
  explicit SquareMatrix(int order, double value = 0.0) : n_(order) {
    if (order < 1) throw std::invalid_argument("matrix order must be at least 1");
    a_.assign(static_cast<std::size_t>(order) * order, value);
  }

  static SquareMatrix identity(int order) {
    SquareMatrix m(order);
    for (int i = 0; i < order; ++i) m(i, i) = 1.0;
    return m;
  }

  int order() const noexcept { return n_; }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
  }

  double max_abs_entry() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  bool all_finite() const {
    for (double v : a_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  /// Symmetric up to an absolute tolerance on entry mismatch.
  bool is_symmetric(double tol) const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
  }

  bool operator==(const SquareMatrix&) const = default;

 private:
  int n_;
  std::vector<double> a_;
};

}  // namespace specmatch

#endif

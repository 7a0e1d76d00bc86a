#ifndef SPECMATCH_POLYNOMIAL_HPP
#define SPECMATCH_POLYNOMIAL_HPP

#include <optional>
#include <vector>

namespace specmatch {

/// Real univariate polynomial, coefficients degree-descending.
/// Leading coefficient nonzero; degree capped at 8.
class Polynomial {
 public:
  explicit Polynomial(std::vector<double> coefficients);
  static Polynomial from_integers(const std::vector<long long>& coefficients);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coefficients() const noexcept { return c_; }

  double operator()(double x) const;
  Polynomial derivative() const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<double> c_;
};

struct RootBracket {
  double lo;
  double hi;
};

/// Maximum real root: Sturm counts isolate the rightmost root interval
/// (on the squarefree part, so repeated roots are fine), bisection narrows it
/// to width 1e-10, Newton polishes. Deterministic. Throws when no real root
/// exists or the polynomial is constant. A hint bracket, when it contains
/// real roots, restricts the search.
double largest_real_root(const Polynomial& p,
                         std::optional<RootBracket> hint = std::nullopt);

/// Number of distinct real roots strictly greater than x.
int count_real_roots_above(const Polynomial& p, double x);

}  // namespace specmatch

#endif

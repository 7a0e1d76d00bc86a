#include "specmatch/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specmatch {

namespace {

constexpr int kMaxDegree = 8;
constexpr double kCoeffEps = 1e-13;  // relative trim threshold inside chains

using Coeffs = std::vector<double>;  // degree-descending

double max_abs(const Coeffs& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

double eval(const Coeffs& c, double x) {
  double acc = 0.0;
  for (double v : c) acc = acc * x + v;
  return acc;
}

Coeffs derivative_of(const Coeffs& c) {
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg <= 0) return {0.0};
  Coeffs d(static_cast<std::size_t>(deg));
  for (int i = 0; i < deg; ++i) d[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] * (deg - i);
  return d;
}

// Drop leading coefficients below a relative threshold; never empties.
Coeffs trimmed(Coeffs c, double scale) {
  std::size_t skip = 0;
  while (skip + 1 < c.size() && std::abs(c[skip]) <= kCoeffEps * scale) ++skip;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(skip));
  return c;
}

// Scale so the largest magnitude coefficient is 1 (sign-variation invariant).
Coeffs normalized(Coeffs c) {
  const double m = max_abs(c);
  if (m > 0.0)
    for (double& v : c) v /= m;
  return c;
}

bool is_zero(const Coeffs& c) { return max_abs(c) == 0.0; }

// Remainder of a / b (both degree-descending, b nonzero).
Coeffs remainder_of(Coeffs a, const Coeffs& b, double scale) {
  while (a.size() >= b.size() && !is_zero(a)) {
    const double factor = a.front() / b.front();
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= factor * b[i];
    a.front() = 0.0;  // cancel exactly
    a = trimmed(std::move(a), scale);
    if (a.size() < b.size()) break;
  }
  if (a.size() >= b.size()) a.assign(1, 0.0);
  return a;
}

Coeffs poly_gcd(Coeffs a, Coeffs b) {
  a = normalized(trimmed(std::move(a), max_abs(a)));
  b = normalized(trimmed(std::move(b), max_abs(b)));
  while (!is_zero(b) && b.size() > 1) {
    Coeffs r = remainder_of(a, b, 1.0);
    if (max_abs(r) <= kCoeffEps) r.assign(1, 0.0);  // exact division up to noise
    a = std::move(b);
    b = normalized(trimmed(std::move(r), 1.0));
  }
  if (!is_zero(b)) return {1.0};  // nonzero constant remainder: coprime
  return a;
}

// Quotient of exact division a / b (used for the squarefree part).
Coeffs quotient_of(Coeffs a, const Coeffs& b) {
  Coeffs q;
  while (a.size() >= b.size()) {
    const double factor = a.front() / b.front();
    q.push_back(factor);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= factor * b[i];
    a.erase(a.begin());
  }
  if (q.empty()) q.push_back(0.0);
  return q;
}

Coeffs squarefree_part(const Coeffs& c) {
  if (c.size() <= 2) return c;
  const Coeffs g = poly_gcd(c, derivative_of(c));
  if (g.size() <= 1) return c;
  return quotient_of(c, g);
}

std::vector<Coeffs> sturm_chain(const Coeffs& squarefree) {
  std::vector<Coeffs> chain;
  chain.push_back(normalized(squarefree));
  if (squarefree.size() <= 1) return chain;
  chain.push_back(normalized(derivative_of(chain.front())));
  while (chain.back().size() > 1 && !is_zero(chain.back())) {
    Coeffs r = remainder_of(chain[chain.size() - 2], chain.back(), 1.0);
    if (max_abs(r) <= kCoeffEps) break;
    for (double& v : r) v = -v;
    chain.push_back(normalized(std::move(r)));
  }
  return chain;
}

int sign_variations(const std::vector<Coeffs>& chain, double x) {
  int variations = 0;
  int previous = 0;
  for (const Coeffs& c : chain) {
    const double v = eval(c, x);
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++variations;
    previous = s;
  }
  return variations;
}

// Distinct real roots in (lo, hi].
int roots_in(const std::vector<Coeffs>& chain, double lo, double hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

double cauchy_bound(const Coeffs& c) {
  double m = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i)
    m = std::max(m, std::abs(c[i] / c.front()));
  return 1.0 + m;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  if (c_.size() > kMaxDegree + 1)
    throw std::invalid_argument("polynomial degree capped at 8");
  if (c_.size() > 1 && c_.front() == 0.0)
    throw std::invalid_argument("leading coefficient must be nonzero");
}

Polynomial Polynomial::from_integers(const std::vector<long long>& coefficients) {
  std::vector<double> c(coefficients.begin(), coefficients.end());
  return Polynomial(std::move(c));
}

double Polynomial::operator()(double x) const { return eval(c_, x); }

Polynomial Polynomial::derivative() const { return Polynomial(derivative_of(c_)); }

int count_real_roots_above(const Polynomial& p, double x) {
  if (p.degree() < 1) return 0;
  const Coeffs sf = squarefree_part(p.coefficients());
  const auto chain = sturm_chain(sf);
  const double bound = std::max(cauchy_bound(sf), std::abs(x) + 1.0);
  return roots_in(chain, x, bound);
}

double largest_real_root(const Polynomial& p, std::optional<RootBracket> hint) {
  if (p.degree() < 1)
    throw std::invalid_argument("constant polynomial has no roots");

  const Coeffs sf = squarefree_part(p.coefficients());
  if (sf.size() == 2) {  // linear: exact
    return -sf[1] / sf[0];
  }
  const auto chain = sturm_chain(sf);

  const double bound = cauchy_bound(sf);
  double lo = -bound, hi = bound;
  if (hint && roots_in(chain, hint->lo, hint->hi) >= 1) {
    lo = hint->lo;
    hi = hint->hi;
  }
  if (roots_in(chain, lo, hi) < 1)
    throw std::invalid_argument("polynomial has no real root");

  // Bisect towards the rightmost root: keep the upper half whenever it still
  // contains one. Counting on the squarefree chain makes repeated roots and
  // exact hits on grid points harmless.
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // double resolution exhausted
    if (roots_in(chain, mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }

  // Newton polish on the squarefree part, safeguarded near the bracket.
  const Coeffs dsf = derivative_of(sf);
  double x = hi;
  for (int it = 0; it < 64; ++it) {
    const double fx = eval(sf, x);
    const double dx = eval(dsf, x);
    if (dx == 0.0) break;
    const double next = x - fx / dx;
    if (!(next >= lo - 1e-8 && next <= hi + 1e-8)) break;
    if (std::abs(next - x) <= 1e-15 * (1.0 + std::abs(next))) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

}  // namespace specmatch

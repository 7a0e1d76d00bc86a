#include "specmatch/thresholds.hpp"

#include <cmath>
#include <stdexcept>

namespace specmatch {

namespace {

// Checked 64-bit integer arithmetic for coefficient assembly.
long long mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in threshold polynomial");
  return r;
}

long long add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in threshold polynomial");
  return r;
}

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

}  // namespace

Polynomial poly_f(int n_, int s_) {
  const long long n = n_, s = s_;
  const long long c2 = add(6, add(-s, mul(-5, n)));
  const long long c1 = add(add(mul(8, mul(n, n)), mul(-1, mul(n, s))),
                           add(mul(-24, n), add(mul(8, mul(s, s)), add(mul(8, s), 16))));
  long long c0 = mul(-4, ipow(n, 3));
  c0 = add(c0, mul(2, mul(mul(n, n), s)));
  c0 = add(c0, mul(20, mul(n, n)));
  c0 = add(c0, mul(-8, mul(n, mul(s, s))));
  c0 = add(c0, mul(-14, mul(n, s)));
  c0 = add(c0, mul(-32, n));
  c0 = add(c0, mul(-2, ipow(s, 3)));
  c0 = add(c0, mul(14, mul(s, s)));
  c0 = add(c0, mul(20, s));
  c0 = add(c0, 16);
  return Polynomial::from_integers({1, c2, c1, c0});
}

Polynomial poly_f_tilde(int n_) {
  const long long n = n_;
  const long long c2 = add(5, mul(-5, n));
  const long long c1 = add(mul(8, mul(n, n)), add(mul(-25, n), 32));
  const long long c0 =
      add(mul(-4, ipow(n, 3)), add(mul(22, mul(n, n)), add(mul(-54, n), 48)));
  return Polynomial::from_integers({1, c2, c1, c0});
}

Polynomial poly_g(int n_, int s_) {
  const long long n = n_, s = s_;
  const long long c1 = mul(-1, add(n, add(mul(6, s), 2)));
  const long long c0 = add(mul(4, n), add(mul(-8, s), add(mul(5, mul(n, s)),
                           add(mul(4, mul(s, s)), -8))));
  return Polynomial::from_integers({1, c1, c0});
}

Polynomial poly_h(int n_, int s_) {
  const long long n = n_, s = s_;
  const long long c3 = add(mul(2, s), add(mul(-20, n), 14));
  long long c2 = mul(145, mul(n, n));
  c2 = add(c2, mul(-38, mul(n, s)));
  c2 = add(c2, mul(-214, n));
  c2 = add(c2, mul(12, mul(s, s)));
  c2 = add(c2, mul(10, s));
  c2 = add(c2, 74);
  long long c1 = mul(450, ipow(n, 3));
  c1 = add(c1, mul(-190, mul(mul(n, n), s)));
  c1 = add(c1, mul(-1052, mul(n, n)));
  c1 = add(c1, mul(82, mul(n, mul(s, s))));
  c1 = add(c1, mul(189, mul(n, s)));
  c1 = add(c1, mul(775, n));
  c1 = add(c1, mul(-78, mul(s, s)));
  c1 = add(c1, mul(2, s));
  c1 = add(c1, -172);
  c1 = mul(-1, c1);
  long long c0 = mul(504, ipow(n, 4));
  c0 = add(c0, mul(-282, mul(ipow(n, 3), s)));
  c0 = add(c0, mul(-1656, ipow(n, 3)));
  c0 = add(c0, mul(150, mul(mul(n, n), mul(s, s))));
  c0 = add(c0, mul(517, mul(mul(n, n), s)));
  c0 = add(c0, mul(1951, mul(n, n)));
  c0 = add(c0, mul(-24, mul(n, ipow(s, 3))));
  c0 = add(c0, mul(-226, mul(n, mul(s, s))));
  c0 = add(c0, mul(-220, mul(n, s)));
  c0 = add(c0, mul(-938, n));
  c0 = add(c0, mul(12, ipow(s, 4)));
  c0 = add(c0, mul(-24, ipow(s, 3)));
  c0 = add(c0, mul(138, mul(s, s)));
  c0 = add(c0, mul(-46, s));
  c0 = add(c0, 144);
  return Polynomial::from_integers({1, c3, c2, c1, c0});
}

Polynomial poly_h_tilde(int n_) {
  const long long n = n_;
  const long long c3 = add(12, mul(-18, n));
  const long long c2 = add(mul(119, mul(n, n)), add(mul(-190, n), 76));
  const long long c1 = mul(-1, add(mul(342, ipow(n, 3)),
                                   add(mul(-915, mul(n, n)), add(mul(826, n), -252))));
  long long c0 = mul(360, ipow(n, 4));
  c0 = add(c0, mul(-1383, ipow(n, 3)));
  c0 = add(c0, mul(2026, mul(n, n)));
  c0 = add(c0, mul(-1362, n));
  c0 = add(c0, 364);
  return Polynomial::from_integers({1, c3, c2, c1, c0});
}

double theta(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("theta requires an even order n >= 4");
  const double value =
      largest_real_root(poly_f_tilde(n), RootBracket{2.0 * n - 2.0, 3.0 * n});
  if (!(2.0 * n - 2.0 < value && value < 3.0 * n))
    throw std::runtime_error("theta fell outside its sanity bracket");
  return value;
}

double split_threshold(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("split_threshold requires an even order n >= 4");
  return 2.0 * n + std::sqrt(n * (n + 2.0) / 2.0) - 2.0;
}

double theorem1_threshold(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("threshold defined for even order n >= 4");
  if (n == 4 || n >= 12) return theta(n);
  return split_threshold(n);
}

double kappa(int n) {
  if (n < 3) throw std::invalid_argument("kappa requires side size n >= 3");
  return largest_real_root(poly_h_tilde(n));
}

double phi(int n_, int s_) {
  const double k = kappa(n_);
  const double n = n_, s = s_;
  return 2.0 * k * k * k + (12.0 * s - 26.0 * n - 2.0) * k * k +
         (78.0 * s - 29.0 * n - 82.0 * n * s + 108.0 * n * n - 80.0) * k -
         144.0 * n * n * n + 138.0 * n * n * s + 129.0 * n * n - 12.0 * n * s * s -
         250.0 * n * s + 204.0 * n + 12.0 * s * s * s - 36.0 * s * s + 174.0 * s - 220.0;
}

double psi(int n_, int s_) {
  const double n = n_, s = s_;
  return 78.0 * n * n + (218.0 - 24.0 * s) * n + 36.0 * s * s - 72.0 * s + 174.0;
}

}  // namespace specmatch

#ifndef SPECMATCH_THRESHOLDS_HPP
#define SPECMATCH_THRESHOLDS_HPP

#include "specmatch/polynomial.hpp"

namespace specmatch {

// Characteristic polynomials of the extremal-family quotient matrices.
// Coefficients are assembled in exact 64-bit integer arithmetic (overflow
// checked; widths cover n <= 10^4) before conversion to double.
Polynomial poly_f(int n, int s);        // cubic behind the general threshold
Polynomial poly_f_tilde(int n);         // poly_f at s = 1
Polynomial poly_g(int n, int s);        // quadratic behind the split threshold
Polynomial poly_h(int n, int s);        // quartic for the bipartite family
Polynomial poly_h_tilde(int n);         // poly_h at s = n-1

/// Largest root of poly_f_tilde(n); lives in (2n-2, 3n). n even, >= 4.
double theta(int n);

/// 2n + sqrt(n(n+2)/2) - 2. n even, >= 4.
double split_threshold(int n);

/// Sufficient-condition threshold for general graphs of even order n:
/// theta(n) when n = 4 or n >= 12, split_threshold(n) when n = 6, 8, 10.
double theorem1_threshold(int n);

/// Largest root of poly_h_tilde(n); bipartite threshold at side size n >= 3.
double kappa(int n);

/// Cubic-in-kappa(n) auxiliary; positive over the valid (n, s) range.
double phi(int n, int s);

/// 78n^2 + (218 - 24s)n + 36s^2 - 72s + 174.
double psi(int n, int s);

}  // namespace specmatch

#endif

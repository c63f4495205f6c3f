#pragma once
// Binary Krawtchouk polynomials evaluated exactly, the spectrum of the
// distance-d Hamming graph H(n,d), and the location of the smallest
// polynomial root (tridiagonal eigenvalue form plus interval bracket).

#include "xcc/numerics.hpp"

#include <utility>
#include <vector>

namespace xcc {

// K_d^n(x) = sum_j (-1)^j C(x,j) C(n-x,d-j), exact.
Rational kraw(int n, int d, int x);

// max over d,d' of | sum_x C(n,x) K_d(x) K_d'(x) - delta_{dd'} C(n,d) 2^n |.
// An exact zero certifies the orthogonality relation. Requires n <= 24.
Rational orthogonality_defect(int n);

struct HammingSpectrum {
  int n = 0;
  int d = 0;
  struct Entry {
    int x;
    Rational eigenvalue;   // K_d^n(x)
    Rational multiplicity; // C(n,x)
  };
  std::vector<Entry> values;
  Rational lambda_min;
  Rational lambda_max;
};

// Full spectrum of H(n,d) with multiplicities. Checks sum of multiplicities
// = 2^n, zero trace, and lambda_max = C(n,d) before returning.
HammingSpectrum spectrum(int n, int d);

// Smallest root of K_d^n: n/2 minus the largest eigenvalue of the
// zero-diagonal tridiagonal matrix with off-diagonals sqrt((i+1)(n-i))/2,
// i = 0..d-2. Absolute error <= 1e-8.
double smallest_root(int n, int d);

// [n/2 - sqrt((n-d)d), n/2]; requires d < n/2.
std::pair<double, double> root_interval(int n, int d);

// Integer bracket for the smallest root from exact sign changes of kraw:
// returns (a, b) with b-a <= 1 such that the root lies in [a, b].
std::pair<int, int> smallest_root_bracket(int n, int d);

struct LambdaMinCheck {
  double bound;          // sqrt(2^n C(n,d) / C(n, ceil(n/2 - sqrt(d(n-d)))))
  Rational bound_squared;
  Rational lambda_min;
  bool holds;            // |lambda_min|^2 <= bound_squared, exact comparison
};

// Requires n, d even and d < n/2. Throws std::logic_error if the exact
// containment fails (it is a theorem; failure signals an implementation bug).
LambdaMinCheck lambda_min_bound_check(int n, int d);
double lambda_min_bound(int n, int d);

}  // namespace xcc

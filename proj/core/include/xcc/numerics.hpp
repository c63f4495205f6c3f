#pragma once
// Exact rational scalars, binomials, binary entropy and the two small
// symmetric eigensolvers every other module leans on.
//
// All exact combinatorics run on Rational (GMP); spectral quantities are
// 64-bit floats with the tolerances stated at each function.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace xcc {

using Rational = mpq_class;
using Int = mpz_class;
using Word = std::uint64_t;

// "p" when the denominator is 1, otherwise "p/q"; inverse parser below.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

Int pow2(unsigned n);
// floor(sqrt(v)), exact
long isqrt_floor(long v);
int ceil_log2(long n);

// C(n,k); 0 outside 0 <= k <= n. n must be nonnegative.
Rational binom(long n, long k);

// Binary entropy in bits; endpoints are 0 by the limit convention.
double entropy(double p);

// Uniform random n-bit word of Hamming weight exactly d (partial
// Fisher-Yates over bit positions).
Word random_weight_word(int n, int d, std::mt19937_64& rng);

// Zero-diagonal symmetric tridiagonal matrix of dimension offdiag.size()+1.
struct SymTridiag {
  std::vector<double> offdiag;
  int dim() const { return static_cast<int>(offdiag.size()) + 1; }
};

// Largest eigenvalue by Sturm-sequence bisection, absolute error <= 1e-10.
double tridiag_max_eig(const SymTridiag& t);

struct SymMatrix {
  int n = 0;
  std::vector<double> a;  // row-major n*n

  SymMatrix() = default;
  explicit SymMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}
  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// All eigenvalues in ascending order, absolute error <= 1e-8.
// Throws std::invalid_argument on non-square/asymmetric input or n > 4096.
std::vector<double> dense_sym_eigs(const SymMatrix& m);

}  // namespace xcc

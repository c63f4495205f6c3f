#pragma once
// Orthonormal representations: the numeric checker plus every constructor
// the protocol stack needs (Fourier, prefix-padded, the multilinear
// polynomial representation of the distance >= n/2 graph, and the
// single-qubit-prefixed list states).

#include "xcc/graphs.hpp"
#include "xcc/numerics.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xcc {

using Complex = std::complex<double>;

struct OrthRep {
  int dimension = 0;
  // indexed by graph vertex id; empty vector means the vertex is missing
  std::vector<std::vector<Complex>> vectors;
};

struct RepCheckReport {
  double max_norm_defect = 0.0;        // max over vertices of | ||v|| - 1 |
  double max_edge_inner_product = 0.0; // max over edges of |<u,v>|
  bool pass = false;                   // both defects <= tol
};

// Requires rep to cover every vertex of g; throws on a missing vertex.
RepCheckReport check(const OrthRep& rep, const Graph& g, double tol = 1e-9);

// x -> n^{-1/2} sum_i (-1)^{x_i} e_i; dimension n, valid for H(n, n/2).
OrthRep fourier_rep(int n);

// First 2*ell bits as a standard-basis tensor factor, remainder Fourier
// encoded; dimension 2^{2 ell} (n - 2 ell), valid for H(n, n/2 - ell).
// Requires n even, d = n/2 - ell even and >= 1.
OrthRep padded_rep(int n, int ell);
long padded_rep_dimension(int n, int ell);

// Multilinear polynomial over {-1,1}^n with subset-indexed coefficients;
// products reduce z_i^2 = 1 eagerly (subset XOR).
class MultilinearPoly {
 public:
  MultilinearPoly() = default;
  static MultilinearPoly constant(const Rational& c);
  static MultilinearPoly linear_with_constant(int n, const Rational& c);  // c + sum z_k
  static MultilinearPoly full_product_plus_one(int n);                    // 1 + z_1...z_n

  MultilinearPoly multiply(const MultilinearPoly& other) const;
  Rational eval_pm(Word minus_mask) const;  // z_k = -1 iff bit k of mask
  const std::map<Word, Rational>& terms() const { return terms_; }
  long monomial_count() const;
  std::optional<Word> negative_coefficient() const;

 private:
  std::map<Word, Rational> terms_;  // subset mask -> coefficient, nonzero only
};

struct GkPolyRep {
  int n = 0;
  MultilinearPoly poly;      // product polynomial after multilinear reduction
  long mon_count = 0;        // dimension of the representation
  Rational norm_constant;    // poly evaluated at all-ones; positive
  double entropy_dim_bound = 0.0;   // 2^{H(1/4) n + 1}
  Rational binomial_dim_bound;       // sum_{k <= n/4+1} C(n,k)
  bool within_entropy_bound = false;
  bool within_binomial_bound = false;

  // Exact inner product <phi_x, phi_y> = P(z(x^y)) / P(1...1).
  Rational exact_inner(Word x, Word y) const;
  // Unit vector for one vertex (standard basis indexed by monomials).
  std::vector<Complex> vector_for(Word x) const;
  // Materialized representation on gk_graph(n); n <= 8 only (memory).
  OrthRep to_orthrep() const;
  // max |P(z(w))| / P(1) over all difference patterns w of weight >= n/2;
  // exact rational, must be zero.
  Rational max_edge_defect_exact() const;
};

// Builds P = prod_{k=0..n/4} (4k + sum z) * (1 + prod z) with z^2 = 1
// reduction, verifies nonnegative coefficients and P(1..1) > 0.
// Requires n divisible by 4, n <= 16.
GkPolyRep gk_poly_rep(int n);

// gamma |0>|0..0> + sqrt((1-gamma^2)/n) sum_i (-1)^{x_i} |1>|i>, with
// gamma^2 = 1 - n/(2d); dimension 2 * 2^{ceil(log2 n)}. Requires n even,
// n/2 <= d <= n.
std::vector<Complex> list_state(Word x, int n, int d);
Rational list_state_gamma_squared(int n, int d);
// Exact inner product of two list states: 1 - dist(x,y)/d.
Rational list_state_inner_exact(Word x, Word y, int n, int d);

// JSON array-of-arrays of (re, im) pairs per vertex.
std::string rep_to_json(const OrthRep& rep);

}  // namespace xcc

#pragma once
// Lovasz theta values by closed formula on transitive graphs, plus
// verifiable primal/dual certificates that tie theta to orthonormal
// representations, and the binomial-ratio lower bound on the orthogonal
// rank of distance-d Hamming graphs.

#include "xcc/graphs.hpp"
#include "xcc/numerics.hpp"
#include "xcc/orthrep.hpp"

#include <string>
#include <vector>

namespace xcc {

enum class CertKind { primal, dual };

struct ThetaCertificate {
  CertKind kind = CertKind::dual;
  int n = 0;                 // matrix dimension = vertex count
  std::vector<double> matrix;  // row-major n*n, symmetric
  double value = 0.0;

  double at(int i, int j) const { return matrix[static_cast<size_t>(i) * n + j]; }
};

// theta(complement(H(n,d))) = 1 - C(n,d)/lambda_min, from the exact
// spectrum. Throws on lambda_min = 0.
double theta_complement_hamming(int n, int d);
Rational theta_complement_hamming_exact(int n, int d);

// 1 - lambda_1/lambda_n for vertex- and edge-transitive graphs; requires
// lambda_n < 0.
double theta_transitive(double lambda_1, double lambda_n);

// Gram-matrix certificate built from an orthonormal representation of g:
// value dim(rep), diagonal dim-1, entries -1 on edges of g, PSD. It is a
// feasible dual point for theta(complement(g)), so it certifies
// theta(complement(g)) <= dim(rep).
ThetaCertificate dual_cert_from_orthrep(const OrthRep& rep, const Graph& g);

// Pivoted Cholesky PSD test; on failure reports the offending leading
// minor index via the exception message.
bool is_psd(const std::vector<double>& m, int n, double tol = 1e-8);

// Validates a primal feasible point (PSD, unit trace, zeros on edges) and
// returns sum of entries, a certified lower bound on theta(g). Throws
// std::invalid_argument naming the violated constraint.
double verify_primal(const std::vector<double>& x, const Graph& g);

struct XiBoundReport {
  double log2_bound;  // log2(1 + sqrt(C(n,d) C(n,x*) / 2^n)), x* integerized
  double rate;         // (H(alpha) + H(1/2 - sqrt((1-alpha)alpha)) - 1) / 2
  Rational bound_term_squared;  // C(n,d) C(n,x*) / 2^n, exact
};

// Requires n, d even, d < n/2.
XiBoundReport xi_lower_bound(int n, int d);
double xi_rate(double alpha);

// {kind, n, matrix (row-major), value} as JSON.
std::string certificate_to_json(const ThetaCertificate& c);

}  // namespace xcc

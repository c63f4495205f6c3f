#include "xcc/numerics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace xcc {

std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

Int pow2(unsigned n) {
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), n);
  return r;
}

long isqrt_floor(long v) {
  if (v < 0) throw std::domain_error("isqrt_floor: negative argument");
  Int s;
  mpz_sqrt(s.get_mpz_t(), Int(v).get_mpz_t());
  return s.get_si();
}

int ceil_log2(long n) {
  if (n <= 0) throw std::domain_error("ceil_log2: nonpositive argument");
  int k = 0;
  long p = 1;
  while (p < n) {
    p <<= 1;
    ++k;
  }
  return k;
}

Rational binom(long n, long k) {
  if (n < 0) throw std::domain_error("binom: n < 0");
  if (k < 0 || k > n) return Rational(0);
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

double entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("entropy: p outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

Word random_weight_word(int n, int d, std::mt19937_64& rng) {
  if (n < 1 || n > 64 || d < 0 || d > n)
    throw std::domain_error("random_weight_word: need 0 <= d <= n <= 64");
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[i] = i;
  Word w = 0;
  for (int i = 0; i < d; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(pos[i], pos[pick(rng)]);
    w |= Word{1} << pos[i];
  }
  return w;
}

namespace {

// Number of eigenvalues of T strictly less than x (LDL^T sign count).
int sturm_count_below(const SymTridiag& t, double x) {
  const int n = t.dim();
  int count = 0;
  double d = -x;  // diagonal entries are zero
  if (d < 0) ++count;
  for (int i = 1; i < n; ++i) {
    double b = t.offdiag[i - 1];
    double denom = d;
    if (denom == 0.0) denom = 1e-300;
    d = -x - b * b / denom;
    if (d < 0) ++count;
  }
  return count;
}

}  // namespace

double tridiag_max_eig(const SymTridiag& t) {
  const int n = t.dim();
  if (n == 1) return 0.0;
  double radius = 0.0;
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.offdiag[i - 1]);
    if (i < n - 1) r += std::abs(t.offdiag[i]);
    radius = std::max(radius, r);
  }
  double lo = -radius, hi = radius;
  // largest eigenvalue: smallest x with count_below(x) == n
  for (int iter = 0; iter < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++iter) {
    double mid = 0.5 * (lo + hi);
    if (sturm_count_below(t, mid) == n) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> dense_sym_eigs(const SymMatrix& m) {
  if (m.n < 0 || m.a.size() != static_cast<size_t>(m.n) * m.n)
    throw std::invalid_argument("dense_sym_eigs: not square");
  if (m.n > 4096) throw std::invalid_argument("dense_sym_eigs: dimension above 4096");
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-12 * std::max(1.0, std::abs(m.at(i, j))))
        throw std::invalid_argument("dense_sym_eigs: asymmetric input");
  if (m.n == 0) return {};

  Eigen::MatrixXd a(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) a(i, j) = m.at(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense_sym_eigs: eigensolver failed");
  std::vector<double> out(m.n);
  for (int i = 0; i < m.n; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

}  // namespace xcc

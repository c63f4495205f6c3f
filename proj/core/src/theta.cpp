#include "xcc/theta.hpp"

#include "xcc/krawtchouk.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace xcc {

Rational theta_complement_hamming_exact(int n, int d) {
  HammingSpectrum sp = spectrum(n, d);
  if (sp.lambda_min == 0) throw std::domain_error("theta_complement_hamming: lambda_min = 0");
  return Rational(1) - binom(n, d) / sp.lambda_min;
}

double theta_complement_hamming(int n, int d) {
  return theta_complement_hamming_exact(n, d).get_d();
}

double theta_transitive(double lambda_1, double lambda_n) {
  if (!(lambda_n < 0)) throw std::domain_error("theta_transitive: lambda_n must be negative");
  return 1.0 - lambda_1 / lambda_n;
}

bool is_psd(const std::vector<double>& m, int n, double tol) {
  if (static_cast<size_t>(n) * n != m.size()) throw std::invalid_argument("is_psd: not square");
  // pivoted Cholesky; once every remaining pivot is below tolerance the
  // residual block must be consistent with Cauchy-Schwarz at that scale
  std::vector<double> a = m;
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (at(i, i) > at(p, p)) p = i;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      for (int i = 0; i < n; ++i) std::swap(at(i, k), at(i, p));
    }
    const double pivot = at(k, k);
    if (pivot <= tol) {
      for (int i = k; i < n; ++i)
        if (at(i, i) < -tol) return false;
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j) {
          const double bound =
              std::sqrt(std::max(at(i, i), 0.0) + tol) * std::sqrt(std::max(at(j, j), 0.0) + tol);
          if (std::abs(at(i, j)) > bound + tol) return false;
        }
      return true;
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = at(i, k) / pivot;
      for (int j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  return true;
}

ThetaCertificate dual_cert_from_orthrep(const OrthRep& rep, const Graph& g) {
  RepCheckReport rc = check(rep, g);
  if (!rc.pass)
    throw std::invalid_argument("dual_cert_from_orthrep: representation fails orthogonality check");
  const int n = g.vertex_count();
  const int d = rep.dimension;
  ThetaCertificate cert;
  cert.kind = CertKind::dual;
  cert.n = n;
  cert.value = d;
  cert.matrix.assign(static_cast<size_t>(n) * n, 0.0);
  // Gram matrix Z of {I, u_i u_i^dagger}, Schur complement at Z_00 = d,
  // rescaled by d: diagonal d-1, off-diagonal d|<u_i,u_j>|^2 - 1.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        cert.matrix[static_cast<size_t>(i) * n + j] = d - 1.0;
        continue;
      }
      Complex ip = 0.0;
      for (int k = 0; k < d; ++k) ip += std::conj(rep.vectors[i][k]) * rep.vectors[j][k];
      cert.matrix[static_cast<size_t>(i) * n + j] = d * std::norm(ip) - 1.0;
    }
  }
  if (!is_psd(cert.matrix, n)) throw std::logic_error("dual_cert_from_orthrep: certificate not PSD");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(i, j) && std::abs(cert.at(i, j) + 1.0) > 1e-8)
        throw std::logic_error("dual_cert_from_orthrep: edge entry differs from -1");
  return cert;
}

double verify_primal(const std::vector<double>& x, const Graph& g) {
  const int n = g.vertex_count();
  if (static_cast<size_t>(n) * n != x.size())
    throw std::invalid_argument("verify_primal: matrix size does not match graph");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(x[static_cast<size_t>(i) * n + j] - x[static_cast<size_t>(j) * n + i]) > 1e-10)
        throw std::invalid_argument("verify_primal: asymmetric matrix");
  double trace = 0.0;
  for (int i = 0; i < n; ++i) trace += x[static_cast<size_t>(i) * n + i];
  if (std::abs(trace - 1.0) > 1e-10)
    throw std::invalid_argument("verify_primal: trace differs from 1");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(i, j) && std::abs(x[static_cast<size_t>(i) * n + j]) > 1e-10)
        throw std::invalid_argument("verify_primal: nonzero entry on edge (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
  if (!is_psd(x, n)) throw std::invalid_argument("verify_primal: matrix not PSD");
  double sum = 0.0;
  for (double v : x) sum += v;
  return sum;
}

XiBoundReport xi_lower_bound(int n, int d) {
  if (n % 2 != 0 || d % 2 != 0 || !(d >= 1 && 2 * d < n))
    throw std::domain_error("xi_lower_bound: need n, d even and d < n/2");
  const int xstar = n / 2 - isqrt_floor(static_cast<long>(n - d) * d);
  XiBoundReport r;
  r.bound_term_squared = binom(n, d) * binom(n, xstar) / Rational(pow2(static_cast<unsigned>(n)));
  r.log2_bound = std::log2(1.0 + std::sqrt(r.bound_term_squared.get_d()));
  r.rate = xi_rate(static_cast<double>(d) / n);
  return r;
}

double xi_rate(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) throw std::domain_error("xi_rate: alpha outside (0, 1/2)");
  return 0.5 * (entropy(alpha) + entropy(0.5 - std::sqrt((1.0 - alpha) * alpha)) - 1.0);
}

std::string certificate_to_json(const ThetaCertificate& c) {
  std::ostringstream os;
  os.precision(17);
  os << "{\"kind\":\"" << (c.kind == CertKind::primal ? "primal" : "dual") << "\",\"n\":" << c.n
     << ",\"matrix\":[";
  for (size_t i = 0; i < c.matrix.size(); ++i) {
    if (i) os << ',';
    os << c.matrix[i];
  }
  os << "],\"value\":" << c.value << "}";
  return os.str();
}

}  // namespace xcc

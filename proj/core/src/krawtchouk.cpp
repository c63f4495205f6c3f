#include "xcc/krawtchouk.hpp"

#include <cmath>
#include <stdexcept>

namespace xcc {

Rational kraw(int n, int d, int x) {
  if (n <= 0 || d < 0 || d > n || x < 0 || x > n)
    throw std::domain_error("kraw: need 0 <= d,x <= n, n >= 1");
  Rational sum = 0;
  for (int j = 0; j <= d; ++j) {
    Rational term = binom(x, j) * binom(n - x, d - j);
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Rational orthogonality_defect(int n) {
  if (n < 1 || n > 24) throw std::domain_error("orthogonality_defect: need 1 <= n <= 24");
  // cache K_d(x) table
  std::vector<std::vector<Rational>> k(n + 1, std::vector<Rational>(n + 1));
  for (int d = 0; d <= n; ++d)
    for (int x = 0; x <= n; ++x) k[d][x] = kraw(n, d, x);
  std::vector<Rational> mult(n + 1);
  for (int x = 0; x <= n; ++x) mult[x] = binom(n, x);
  const Rational two_n(pow2(static_cast<unsigned>(n)));

  Rational worst = 0;
  for (int d = 0; d <= n; ++d) {
    for (int dp = d; dp <= n; ++dp) {
      Rational s = 0;
      for (int x = 0; x <= n; ++x) s += mult[x] * k[d][x] * k[dp][x];
      if (d == dp) s -= binom(n, d) * two_n;
      if (s < 0) s = -s;
      if (s > worst) worst = s;
    }
  }
  return worst;
}

HammingSpectrum spectrum(int n, int d) {
  if (n < 1 || d < 1 || d > n) throw std::domain_error("spectrum: need 1 <= d <= n");
  HammingSpectrum sp;
  sp.n = n;
  sp.d = d;
  sp.values.reserve(n + 1);
  Rational trace = 0;
  Rational total_mult = 0;
  for (int x = 0; x <= n; ++x) {
    HammingSpectrum::Entry e{x, kraw(n, d, x), binom(n, x)};
    trace += e.eigenvalue * e.multiplicity;
    total_mult += e.multiplicity;
    if (x == 0) {
      sp.lambda_min = e.eigenvalue;
      sp.lambda_max = e.eigenvalue;
    } else {
      if (e.eigenvalue < sp.lambda_min) sp.lambda_min = e.eigenvalue;
      if (e.eigenvalue > sp.lambda_max) sp.lambda_max = e.eigenvalue;
    }
    sp.values.push_back(std::move(e));
  }
  if (total_mult != Rational(pow2(static_cast<unsigned>(n))))
    throw std::logic_error("spectrum: multiplicities do not sum to 2^n");
  if (trace != 0) throw std::logic_error("spectrum: nonzero trace");
  if (sp.lambda_max != binom(n, d))
    throw std::logic_error("spectrum: lambda_max != C(n,d)");
  return sp;
}

double smallest_root(int n, int d) {
  if (n < 1 || d < 1 || d > n) throw std::domain_error("smallest_root: need 1 <= d <= n");
  SymTridiag t;
  t.offdiag.reserve(d > 1 ? d - 1 : 0);
  for (int i = 0; i + 1 <= d - 1; ++i)
    t.offdiag.push_back(0.5 * std::sqrt(static_cast<double>(i + 1) * (n - i)));
  return 0.5 * n - tridiag_max_eig(t);
}

std::pair<double, double> root_interval(int n, int d) {
  if (!(d >= 1 && 2 * d < n))
    throw std::domain_error("root_interval: need 1 <= d < n/2");
  double lo = 0.5 * n - std::sqrt(static_cast<double>(n - d) * d);
  return {lo, 0.5 * n};
}

std::pair<int, int> smallest_root_bracket(int n, int d) {
  // K_d^n(0) = C(n,d) > 0; walk to the first x where the sign leaves +.
  for (int x = 0; x <= n; ++x) {
    Rational v = kraw(n, d, x);
    if (v == 0) return {x, x};
    if (v < 0) return {x - 1, x};
  }
  throw std::logic_error("smallest_root_bracket: no sign change found");
}

LambdaMinCheck lambda_min_bound_check(int n, int d) {
  if (n % 2 != 0 || d % 2 != 0 || !(d >= 1 && 2 * d < n))
    throw std::domain_error("lambda_min_bound: need n, d even and d < n/2");
  const int xstar = n / 2 - isqrt_floor(static_cast<long>(d) * (n - d));
  LambdaMinCheck c;
  c.bound_squared = Rational(pow2(static_cast<unsigned>(n))) * binom(n, d) / binom(n, xstar);
  c.bound = std::sqrt(c.bound_squared.get_d());
  c.lambda_min = spectrum(n, d).lambda_min;
  c.holds = (c.lambda_min * c.lambda_min <= c.bound_squared);
  if (!c.holds) throw std::logic_error("lambda_min_bound: exact containment failed");
  return c;
}

double lambda_min_bound(int n, int d) {
  return lambda_min_bound_check(n, d).bound;
}

}  // namespace xcc

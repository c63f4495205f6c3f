#include "xcc/orthrep.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace xcc {

RepCheckReport check(const OrthRep& rep, const Graph& g, double tol) {
  const int n = g.vertex_count();
  if (static_cast<int>(rep.vectors.size()) < n)
    throw std::invalid_argument("check: representation misses vertices");
  RepCheckReport r;
  for (int v = 0; v < n; ++v) {
    const auto& vec = rep.vectors[v];
    if (vec.empty()) throw std::invalid_argument("check: missing vertex " + std::to_string(v));
    if (static_cast<int>(vec.size()) != rep.dimension)
      throw std::invalid_argument("check: dimension mismatch at vertex " + std::to_string(v));
    double norm2 = 0.0;
    for (const Complex& c : vec) norm2 += std::norm(c);
    r.max_norm_defect = std::max(r.max_norm_defect, std::abs(std::sqrt(norm2) - 1.0));
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      Complex ip = 0.0;
      for (int k = 0; k < rep.dimension; ++k)
        ip += std::conj(rep.vectors[u][k]) * rep.vectors[v][k];
      r.max_edge_inner_product = std::max(r.max_edge_inner_product, std::abs(ip));
    }
  }
  r.pass = r.max_norm_defect <= tol && r.max_edge_inner_product <= tol;
  return r;
}

OrthRep fourier_rep(int n) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("fourier_rep: n must be even and >= 2");
  if (n > 16) throw std::domain_error("fourier_rep: capped at n = 16");
  OrthRep rep;
  rep.dimension = n;
  const size_t count = size_t{1} << n;
  rep.vectors.resize(count);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (size_t x = 0; x < count; ++x) {
    std::vector<Complex> v(n);
    for (int i = 0; i < n; ++i) v[i] = ((x >> i) & 1ULL) ? -scale : scale;
    rep.vectors[x] = std::move(v);
  }
  return rep;
}

long padded_rep_dimension(int n, int ell) {
  return (long{1} << (2 * ell)) * (n - 2 * ell);
}

OrthRep padded_rep(int n, int ell) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("padded_rep: n must be even");
  const int d = n / 2 - ell;
  if (ell < 0 || 2 * ell >= n || d < 1 || d % 2 != 0)
    throw std::domain_error("padded_rep: need 0 <= ell, 2*ell < n, n/2 - ell even and >= 1");
  if (n > 16) throw std::domain_error("padded_rep: capped at n = 16");
  const int np = n - 2 * ell;
  OrthRep rep;
  rep.dimension = static_cast<int>(padded_rep_dimension(n, ell));
  const size_t count = size_t{1} << n;
  rep.vectors.resize(count);
  const double scale = 1.0 / std::sqrt(static_cast<double>(np));
  for (size_t x = 0; x < count; ++x) {
    std::vector<Complex> v(rep.dimension, Complex(0.0, 0.0));
    const size_t prefix = x & ((size_t{1} << (2 * ell)) - 1);
    for (int i = 0; i < np; ++i) {
      const bool bit = (x >> (2 * ell + i)) & 1ULL;
      v[prefix * np + i] = bit ? -scale : scale;
    }
    rep.vectors[x] = std::move(v);
  }
  return rep;
}

MultilinearPoly MultilinearPoly::constant(const Rational& c) {
  MultilinearPoly p;
  if (c != 0) p.terms_[0] = c;
  return p;
}

MultilinearPoly MultilinearPoly::linear_with_constant(int n, const Rational& c) {
  MultilinearPoly p;
  if (c != 0) p.terms_[0] = c;
  for (int k = 0; k < n; ++k) p.terms_[Word{1} << k] = 1;
  return p;
}

MultilinearPoly MultilinearPoly::full_product_plus_one(int n) {
  MultilinearPoly p;
  p.terms_[0] = 1;
  p.terms_[(Word{1} << n) - 1] = 1;
  return p;
}

MultilinearPoly MultilinearPoly::multiply(const MultilinearPoly& other) const {
  MultilinearPoly out;
  for (const auto& [s1, c1] : terms_) {
    for (const auto& [s2, c2] : other.terms_) {
      const Word s = s1 ^ s2;  // z_i^2 = 1
      auto it = out.terms_.find(s);
      if (it == out.terms_.end()) {
        out.terms_.emplace(s, c1 * c2);
      } else {
        it->second += c1 * c2;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Rational MultilinearPoly::eval_pm(Word minus_mask) const {
  Rational sum = 0;
  for (const auto& [s, c] : terms_) {
    if (__builtin_popcountll(s & minus_mask) % 2 == 1)
      sum -= c;
    else
      sum += c;
  }
  return sum;
}

long MultilinearPoly::monomial_count() const {
  return static_cast<long>(terms_.size());
}

std::optional<Word> MultilinearPoly::negative_coefficient() const {
  for (const auto& [s, c] : terms_)
    if (c < 0) return s;
  return std::nullopt;
}

GkPolyRep gk_poly_rep(int n) {
  if (n < 4 || n % 4 != 0 || n > 16)
    throw std::domain_error("gk_poly_rep: n must be divisible by 4, 4 <= n <= 16");
  MultilinearPoly p = MultilinearPoly::constant(1);
  for (int k = 0; k <= n / 4; ++k)
    p = p.multiply(MultilinearPoly::linear_with_constant(n, Rational(4 * k)));
  p = p.multiply(MultilinearPoly::full_product_plus_one(n));

  if (auto bad = p.negative_coefficient())
    throw std::runtime_error("gk_poly_rep: negative coefficient at monomial mask " +
                             std::to_string(*bad));
  GkPolyRep rep;
  rep.n = n;
  rep.poly = std::move(p);
  rep.norm_constant = rep.poly.eval_pm(0);
  if (rep.norm_constant <= 0) throw std::runtime_error("gk_poly_rep: P(1,...,1) not positive");
  rep.mon_count = rep.poly.monomial_count();
  rep.entropy_dim_bound = std::pow(2.0, entropy(0.25) * n + 1.0);
  rep.binomial_dim_bound = 0;
  for (int k = 0; k <= n / 4 + 1; ++k) rep.binomial_dim_bound += binom(n, k);
  rep.within_entropy_bound = rep.mon_count <= rep.entropy_dim_bound;
  rep.within_binomial_bound = Rational(rep.mon_count) <= rep.binomial_dim_bound;
  return rep;
}

Rational GkPolyRep::exact_inner(Word x, Word y) const {
  return poly.eval_pm((x ^ y) & ((Word{1} << n) - 1)) / norm_constant;
}

std::vector<Complex> GkPolyRep::vector_for(Word x) const {
  std::vector<Complex> v;
  v.reserve(mon_count);
  const double p1 = norm_constant.get_d();
  for (const auto& [s, c] : poly.terms()) {
    double comp = std::sqrt(c.get_d() / p1);
    if (__builtin_popcountll(s & x) % 2 == 1) comp = -comp;
    v.push_back(Complex(comp, 0.0));
  }
  return v;
}

OrthRep GkPolyRep::to_orthrep() const {
  if (n > 8) throw std::domain_error("GkPolyRep::to_orthrep: materialization capped at n = 8");
  OrthRep rep;
  rep.dimension = static_cast<int>(mon_count);
  const size_t count = size_t{1} << n;
  rep.vectors.resize(count);
  for (size_t x = 0; x < count; ++x) rep.vectors[x] = vector_for(static_cast<Word>(x));
  return rep;
}

Rational GkPolyRep::max_edge_defect_exact() const {
  // <phi_x, phi_y> depends only on w = x ^ y, so it suffices to scan the
  // difference patterns of weight >= n/2. When the coefficients depend only
  // on the monomial degree (the product construction is symmetric in the
  // variables), one representative pattern per weight suffices.
  bool symmetric = true;
  {
    std::map<int, Rational> by_degree;
    for (const auto& [s, c] : poly.terms()) {
      auto [it, fresh] = by_degree.emplace(__builtin_popcountll(s), c);
      if (!fresh && it->second != c) {
        symmetric = false;
        break;
      }
    }
  }
  Rational worst = 0;
  auto consider = [&](Word w) {
    Rational v = poly.eval_pm(w) / norm_constant;
    if (v < 0) v = -v;
    if (v > worst) worst = v;
  };
  if (symmetric) {
    for (int weight = (n + 1) / 2; weight <= n; ++weight)
      consider((Word{1} << weight) - 1);
  } else {
    const Word count = Word{1} << n;
    for (Word w = 1; w < count; ++w)
      if (2 * __builtin_popcountll(w) >= n) consider(w);
  }
  return worst;
}

Rational list_state_gamma_squared(int n, int d) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("list_state: n must be even");
  if (2 * d < n || d > n) throw std::domain_error("list_state: need n/2 <= d <= n");
  return Rational(1) - Rational(n) / Rational(2 * d);
}

std::vector<Complex> list_state(Word x, int n, int d) {
  const Rational g2 = list_state_gamma_squared(n, d);
  const int ell = ceil_log2(n);
  const size_t half = size_t{1} << ell;
  std::vector<Complex> v(2 * half, Complex(0.0, 0.0));
  const double gamma = std::sqrt(g2.get_d());
  const double rest = std::sqrt((1.0 - g2.get_d()) / n);
  v[0] = gamma;
  for (int i = 0; i < n; ++i)
    v[half + i] = ((x >> i) & 1ULL) ? -rest : rest;
  return v;
}

Rational list_state_inner_exact(Word x, Word y, int n, int d) {
  const Rational g2 = list_state_gamma_squared(n, d);
  const int m = hamming_distance(x, y);
  // gamma^2 + (1-gamma^2)(1 - 2m/n) collapses to 1 - m/d
  Rational ip = g2 + (Rational(1) - g2) * (Rational(n - 2 * m) / Rational(n));
  Rational closed = Rational(1) - Rational(m) / Rational(d);
  if (ip != closed) throw std::logic_error("list_state_inner_exact: identity mismatch");
  return ip;
}

std::string rep_to_json(const OrthRep& rep) {
  std::ostringstream os;
  os << "{\"dimension\":" << rep.dimension << ",\"vectors\":[";
  for (size_t v = 0; v < rep.vectors.size(); ++v) {
    if (v) os << ',';
    os << '[';
    for (size_t k = 0; k < rep.vectors[v].size(); ++k) {
      if (k) os << ',';
      os << '[' << rep.vectors[v][k].real() << ',' << rep.vectors[v][k].imag() << ']';
    }
    os << ']';
  }
  os << "]}";
  return os.str();
}

}  // namespace xcc

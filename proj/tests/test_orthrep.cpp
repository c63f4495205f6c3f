#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xcc/orthrep.hpp"

#include <cmath>

using namespace xcc;

namespace {

OrthRep standard_basis_rep(int d) {
  OrthRep rep;
  rep.dimension = d;
  rep.vectors.resize(d);
  for (int v = 0; v < d; ++v) {
    rep.vectors[v].assign(d, Complex(0, 0));
    rep.vectors[v][v] = 1.0;
  }
  return rep;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("checker accepts the standard basis on the complete graph") {
  const auto rep = standard_basis_rep(5);
  const auto report = check(rep, complete(5));
  CHECK(report.pass);
  CHECK(report.max_norm_defect <= 1e-12);
  CHECK(report.max_edge_inner_product <= 1e-12);
}

TEST_CASE("checker rejects a constant assignment on any edge") {
  OrthRep rep;
  rep.dimension = 2;
  rep.vectors = {{Complex(1, 0), Complex(0, 0)}, {Complex(1, 0), Complex(0, 0)}};
  Graph g(2);
  g.add_edge(0, 1);
  const auto report = check(rep, g);
  CHECK(!report.pass);
  CHECK(report.max_edge_inner_product == doctest::Approx(1.0));
}

TEST_CASE("checker reports missing vertices") {
  OrthRep rep;
  rep.dimension = 1;
  rep.vectors = {{Complex(1, 0)}};
  Graph g(2);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(check(rep, g), std::invalid_argument);
}

TEST_CASE("fourier representation is valid on half-distance graphs") {
  for (int n : {2, 4, 8}) {
    const OrthRep rep = fourier_rep(n);
    CHECK(rep.dimension == n);
    CHECK(check(rep, hamming_graph(n, n / 2)).pass);
  }
  // inner product is 1 - 2 dist / n
  const OrthRep rep = fourier_rep(4);
  for (Word x = 0; x < 16; ++x)
    for (Word y = 0; y < 16; ++y) {
      Complex ip = 0;
      for (int k = 0; k < 4; ++k) ip += std::conj(rep.vectors[x][k]) * rep.vectors[y][k];
      CHECK(ip.real() ==
            doctest::Approx(1.0 - 2.0 * hamming_distance(x, y) / 4.0).epsilon(1e-12));
    }
}

TEST_CASE("padded representation: degenerate padding is the fourier map") {
  const OrthRep pad0 = padded_rep(8, 0);
  const OrthRep four = fourier_rep(8);
  CHECK(pad0.dimension == four.dimension);
  for (size_t v = 0; v < four.vectors.size(); ++v)
    for (int k = 0; k < 8; ++k)
      CHECK(std::abs(pad0.vectors[v][k] - four.vectors[v][k]) <= 1e-12);
}

TEST_CASE("padded representation validity and dimensions") {
  CHECK(padded_rep_dimension(10, 1) == 32);
  const OrthRep r10 = padded_rep(10, 1);
  CHECK(r10.dimension == 32);
  CHECK(check(r10, hamming_graph(10, 4)).pass);

  CHECK(padded_rep_dimension(12, 2) == 128);
  const OrthRep r12 = padded_rep(12, 2);
  CHECK(r12.dimension == 128);
  CHECK(check(r12, hamming_graph(12, 4)).pass);

  CHECK_THROWS_AS(padded_rep(8, 1), std::domain_error);  // d = 3 odd
}

TEST_CASE("multilinear polynomial arithmetic") {
  // (sum z)^2 over 4 variables reduces to 4 + 2 sum_{i<j} z_i z_j
  const auto lin = MultilinearPoly::linear_with_constant(4, Rational(0));
  const auto sq = lin.multiply(lin);
  CHECK(sq.monomial_count() == 7);
  CHECK(sq.eval_pm(0) == Rational(16));
  CHECK(sq.terms().at(0) == Rational(4));
  CHECK(sq.terms().at(0b0011) == Rational(2));
  CHECK(sq.eval_pm(0b0001) == Rational(4));  // (1+1+1-1)^2
}

TEST_CASE("product representation of the far-distance graph at n = 4") {
  const GkPolyRep rep = gk_poly_rep(4);
  // P_even = (sum z)(4 + sum z), P_odd = 1 + z1 z2 z3 z4
  CHECK(rep.mon_count == 16);
  CHECK(rep.norm_constant > 0);
  CHECK(rep.max_edge_defect_exact() == Rational(0));
  CHECK(rep.within_entropy_bound);
  const OrthRep orep = rep.to_orthrep();
  CHECK(check(orep, gk_graph(4)).pass);
}

TEST_CASE("product representation at n = 8") {
  const GkPolyRep rep = gk_poly_rep(8);
  CHECK(rep.max_edge_defect_exact() == Rational(0));
  const OrthRep orep = rep.to_orthrep();
  CHECK(check(orep, gk_graph(8)).pass);
  CHECK(rep.mon_count > 0);
}

TEST_CASE("product polynomial vanishes pointwise on the far half-cube") {
  for (int n : {4, 8, 12}) {
    const GkPolyRep rep = gk_poly_rep(n);
    for (Word w = 0; w < (Word{1} << n); ++w) {
      const Rational v = rep.poly.eval_pm(w);
      const int weight = __builtin_popcountll(w);
      if (weight % 2 == 1) {
        CHECK(v == 0);  // odd-weight patterns killed by the parity factor
      } else if (2 * weight >= n && w != 0) {
        CHECK(v == 0);  // even factors cover distances n/2..n
      } else if (w == 0) {
        CHECK(v > 0);
      }
    }
  }
}

TEST_CASE("exact inner products match the materialized vectors at n = 4") {
  const GkPolyRep rep = gk_poly_rep(4);
  const OrthRep orep = rep.to_orthrep();
  for (Word x = 0; x < 16; ++x)
    for (Word y = 0; y < 16; ++y) {
      Complex ip = 0;
      for (int k = 0; k < orep.dimension; ++k)
        ip += std::conj(orep.vectors[x][k]) * orep.vectors[y][k];
      CHECK(ip.real() == doctest::Approx(rep.exact_inner(x, y).get_d()).epsilon(1e-10));
    }
}

TEST_CASE("list states: pinned gamma and exact inner products") {
  CHECK(list_state_gamma_squared(8, 4) == Rational(0));   // pure index part
  CHECK(list_state_gamma_squared(8, 8) == Rational(1, 2));
  CHECK_THROWS_AS(list_state_gamma_squared(8, 3), std::domain_error);

  // <phi_x, phi_y> = 1 - dist/d, zero exactly at distance d
  for (int n : {4, 8}) {
    for (int d = n / 2; d <= n; ++d) {
      for (Word x = 0; x < (Word{1} << n); x += 7) {
        for (Word y = 0; y < (Word{1} << n); y += 5) {
          const Rational expected =
              Rational(1) - Rational(hamming_distance(x, y)) / Rational(d);
          CHECK(list_state_inner_exact(x, y, n, d) == expected);
          const auto vx = list_state(x, n, d);
          const auto vy = list_state(y, n, d);
          Complex ip = 0;
          for (size_t k = 0; k < vx.size(); ++k) ip += std::conj(vx[k]) * vy[k];
          CHECK(ip.real() == doctest::Approx(expected.get_d()).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("list state dimension follows the padded register size") {
  CHECK(list_state(0, 8, 4).size() == 16);   // 2 * 2^3
  CHECK(list_state(0, 6, 3).size() == 16);   // 2 * 2^ceil(log 6)
  CHECK(list_state(0, 4, 2).size() == 8);
}

TEST_CASE("rep json export shape") {
  const std::string js = rep_to_json(standard_basis_rep(2));
  CHECK(js.find("\"dimension\":2") != std::string::npos);
  CHECK(js.find("[1,0]") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xcc/numerics.hpp"

#include <cmath>
#include <random>

using namespace xcc;

namespace {

// independent binomial oracle: Pascal's triangle
Rational pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<Rational>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, Rational(1));
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[n][k];
}

}  // namespace

TEST_CASE("binom basic values") {
  CHECK(binom(4, 2) == Rational(6));
  CHECK(binom(17, 0) == Rational(1));
  CHECK(binom(8, 5) == pascal(8, 5));
  CHECK(binom(8, 5) == Rational(56));
  CHECK(binom(5, -1) == Rational(0));
  CHECK(binom(5, 6) == Rational(0));
  CHECK_THROWS_AS(binom(-1, 0), std::domain_error);
}

TEST_CASE("binom matches Pascal recurrence exactly up to n = 64") {
  for (int n = 1; n <= 64; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("rational string round trip") {
  CHECK(rational_to_string(Rational(-2)) == "-2");
  CHECK(rational_to_string(Rational(3, 4)) == "3/4");
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-7") == Rational(-7));
  CHECK(rational_from_string("6/8") == Rational(3, 4));
}

TEST_CASE("entropy endpoints and symmetry") {
  CHECK(entropy(0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entropy(0.0) == 0.0);
  CHECK(entropy(1.0) == 0.0);
  CHECK(entropy(0.25) == doctest::Approx(0.811278124459133).epsilon(1e-9));
  CHECK_THROWS_AS(entropy(-0.01), std::domain_error);
  CHECK_THROWS_AS(entropy(1.01), std::domain_error);
  for (int i = 1; i < 100; ++i) {
    const double p = i / 100.0;
    CHECK(entropy(p) == doctest::Approx(entropy(1.0 - p)).epsilon(1e-12));
  }
}

TEST_CASE("entropy quadratic lower bound on a dense grid") {
  // H(p) >= 1 - (1-2p)^2 with equality only at 0, 1/2, 1
  const int grid = 10000;
  for (int i = 0; i <= grid; ++i) {
    const double p = static_cast<double>(i) / grid;
    const double gap = entropy(p) - (1.0 - (1.0 - 2.0 * p) * (1.0 - 2.0 * p));
    CHECK(gap >= -1e-12);
    const bool at_equality_point = (i == 0 || 2 * i == grid || i == grid);
    if (at_equality_point)
      CHECK(std::abs(gap) <= 1e-12);
    else
      CHECK(gap > 1e-12);
  }
}

TEST_CASE("tridiag_max_eig small cases") {
  CHECK(tridiag_max_eig({{}}) == 0.0);
  CHECK(tridiag_max_eig({{1.0}}) == doctest::Approx(1.0).epsilon(1e-10));
  // off-diagonal sqrt(1*4)/2 = 1: eigenvalues +-1
  CHECK(tridiag_max_eig({{std::sqrt(1.0 * 4.0) / 2.0}}) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("tridiag_max_eig agrees with the dense solver on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 50);
    SymTridiag t;
    for (int i = 0; i + 1 < dim; ++i) t.offdiag.push_back(dist(rng));
    SymMatrix m(dim);
    for (int i = 0; i + 1 < dim; ++i) {
      m.at(i, i + 1) = t.offdiag[i];
      m.at(i + 1, i) = t.offdiag[i];
    }
    const auto eigs = dense_sym_eigs(m);
    CHECK(tridiag_max_eig(t) == doctest::Approx(eigs.back()).epsilon(1e-8));
  }
}

TEST_CASE("dense_sym_eigs basics") {
  SymMatrix id3(3);
  for (int i = 0; i < 3; ++i) id3.at(i, i) = 1.0;
  auto e = dense_sym_eigs(id3);
  for (double v : e) CHECK(v == doctest::Approx(1.0).epsilon(1e-10));

  SymMatrix edge(2);
  edge.at(0, 1) = 1.0;
  edge.at(1, 0) = 1.0;
  e = dense_sym_eigs(edge);
  CHECK(e[0] == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(e[1] == doctest::Approx(1.0).epsilon(1e-10));

  SymMatrix bad(2);
  bad.at(0, 1) = 1.0;
  CHECK_THROWS_AS(dense_sym_eigs(bad), std::invalid_argument);
}

TEST_CASE("dense_sym_eigs on the 4-cycle") {
  // distance-1 graph on 2-bit strings
  SymMatrix m(4);
  auto set = [&](int a, int b) {
    m.at(a, b) = 1.0;
    m.at(b, a) = 1.0;
  };
  set(0, 1);
  set(0, 2);
  set(1, 3);
  set(2, 3);
  const auto e = dense_sym_eigs(m);
  CHECK(e[0] == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(e[1] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(e[2] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(e[3] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("isqrt and ceil_log2") {
  CHECK(isqrt_floor(0) == 0);
  CHECK(isqrt_floor(15) == 3);
  CHECK(isqrt_floor(16) == 4);
  CHECK(isqrt_floor(12) == 3);
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(8) == 3);
  CHECK(ceil_log2(24) == 5);
}

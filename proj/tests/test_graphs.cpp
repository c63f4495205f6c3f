#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xcc/graphs.hpp"
#include "xcc/numerics.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace xcc;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (dist(rng) < p) g.add_edge(u, v);
  return g;
}

// canonical form under all vertex permutations; n <= 5 only
Word canonical_edges(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Word best = ~Word{0};
  do {
    Word code = 0;
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if (g.adjacent(perm[u], perm[v])) code |= Word{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> all_graphs_up_to_iso(int n) {
  std::vector<Graph> out;
  std::set<Word> seen;
  const int bits = n * (n - 1) / 2;
  for (Word mask = 0; mask < (Word{1} << bits); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1ULL) g.add_edge(u, v);
    if (seen.insert(canonical_edges(g)).second) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("hamming graph shapes") {
  const Graph c4 = hamming_graph(2, 1);
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

  const Graph m = hamming_graph(2, 2);
  CHECK(m.edge_count() == 2);
  for (int v = 0; v < 4; ++v) CHECK(m.degree(v) == 1);

  const Graph h42 = hamming_graph(4, 2);
  CHECK(h42.vertex_count() == 16);
  for (int v = 0; v < 16; ++v) CHECK(h42.degree(v) == 6);
}

TEST_CASE("gk graph degrees") {
  const Graph g2 = gk_graph(2);
  CHECK(g2.vertex_count() == 4);
  CHECK(g2.edge_count() == 6);  // complete graph

  const Graph g4 = gk_graph(4);
  for (int v = 0; v < g4.vertex_count(); ++v) CHECK(g4.degree(v) == 11);

  const Graph g8 = gk_graph(8);
  for (int v = 0; v < g8.vertex_count(); ++v) CHECK(g8.degree(v) == 163);
}

TEST_CASE("list graph") {
  ListFamily f;
  f.universe_size = 3;
  f.lists = {{0, 1, 2}};
  CHECK(list_graph(f).edge_count() == 3);

  f.lists = {{0, 1}, {1, 2}};
  const Graph path = list_graph(f);
  CHECK(path.edge_count() == 2);
  CHECK(path.adjacent(0, 1));
  CHECK(path.adjacent(1, 2));
  CHECK(!path.adjacent(0, 2));

  // all k-subsets of [N] give the complete graph
  ListFamily all;
  all.universe_size = 5;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) all.lists.push_back({a, b, c});
  CHECK(list_graph(all).edge_count() == 10);
}

TEST_CASE("complement, suspension, gadget shapes") {
  CHECK(complement(complete(4)).edge_count() == 0);

  Graph e2(2);
  const Graph sus = suspension(e2, 1);
  CHECK(sus.vertex_count() == 3);
  CHECK(sus.edge_count() == 2);  // path

  const Graph tri = complete(3);
  const Graph gad = gadget_graph(tri);
  CHECK(gad.vertex_count() == 3 + 2 * 3 * 2);
  CHECK(gad.edge_count() == 3 + 9 * 3);  // |E| + (9/2) n (n-1)
}

TEST_CASE("chromatic, clique, independence on pinned graphs") {
  const Graph k4 = complete(4);
  CHECK(chromatic_number(k4) == 4);
  CHECK(clique_number(k4) == 4);
  CHECK(independence_number(k4) == 1);

  const Graph c4 = hamming_graph(2, 1);
  CHECK(chromatic_number(c4) == 2);
  CHECK(clique_number(c4) == 2);
  CHECK(independence_number(c4) == 2);

  CHECK(chromatic_number(gadget_graph(complete(3))) == 3);
}

TEST_CASE("chi alpha product bound on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(3 + static_cast<int>(rng() % 8), 0.4, rng);
    CHECK(chromatic_number(g) * independence_number(g) >= g.vertex_count());
  }
}

TEST_CASE("suspension adds exactly t to the chromatic number") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 12; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 9), 0.5, rng);
    const int chi = chromatic_number(g);
    for (int t = 1; t <= 3; ++t) CHECK(chromatic_number(suspension(g, t)) == chi + t);
  }
}

TEST_CASE("gadget three-colorability equivalence on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 5), 0.5, rng);
    const bool g3 = is_k_colorable(g, 3);
    const Graph gg = gadget_graph(g);
    CHECK(g3 == (chromatic_number(gg) == 3));
  }
}

TEST_CASE("gadget equivalence over all graphs with at most 5 vertices") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : all_graphs_up_to_iso(n)) {
      const bool g3 = is_k_colorable(g, 3);
      CHECK(g3 == (chromatic_number(gadget_graph(g)) == 3));
    }
  }
}

TEST_CASE("hamming graph automorphisms") {
  // translation x -> x ^ u ^ v maps u to v and preserves adjacency
  for (int n = 2; n <= 6; ++n) {
    for (int d = 1; d <= n; ++d) {
      const Graph h = hamming_graph(n, d);
      std::mt19937_64 rng(100 * n + d);
      for (int trial = 0; trial < 10; ++trial) {
        const Word u = rng() & ((Word{1} << n) - 1);
        const Word v = rng() & ((Word{1} << n) - 1);
        const Word shift = u ^ v;
        for (int a = 0; a < h.vertex_count(); ++a)
          for (int b = a + 1; b < h.vertex_count(); ++b)
            CHECK(h.adjacent(a, b) ==
                  h.adjacent(static_cast<int>(a ^ shift), static_cast<int>(b ^ shift)));
      }
    }
  }
}

TEST_CASE("edge-transitivity witness maps one edge onto another") {
  // nu(x) = pi(x ^ u) ^ s for a coordinate permutation pi carrying u^v to s^t
  const int n = 6, d = 3;
  const Graph h = hamming_graph(n, d);
  std::mt19937_64 rng(99);
  auto apply_perm = [&](const std::vector<int>& pi, Word x) {
    Word y = 0;
    for (int i = 0; i < n; ++i)
      if ((x >> i) & 1ULL) y |= Word{1} << pi[i];
    return y;
  };
  for (int trial = 0; trial < 10; ++trial) {
    // pick two edges
    Word u = rng() & 63, s = rng() & 63;
    Word p = 0, q = 0;
    while (__builtin_popcountll(p) != d) p = rng() & 63;
    while (__builtin_popcountll(q) != d) q = rng() & 63;
    const Word v = u ^ p, t = s ^ q;
    // build pi: positions of p's ones to q's ones, zeros to zeros
    std::vector<int> ones_p, ones_q, zeros_p, zeros_q, pi(n);
    for (int i = 0; i < n; ++i) {
      (((p >> i) & 1ULL) ? ones_p : zeros_p).push_back(i);
      (((q >> i) & 1ULL) ? ones_q : zeros_q).push_back(i);
    }
    for (size_t i = 0; i < ones_p.size(); ++i) pi[ones_p[i]] = ones_q[i];
    for (size_t i = 0; i < zeros_p.size(); ++i) pi[zeros_p[i]] = zeros_q[i];
    auto nu = [&](Word x) { return apply_perm(pi, x ^ u) ^ s; };
    CHECK(nu(u) == s);
    CHECK(nu(v) == t);
    for (int a = 0; a < h.vertex_count(); ++a)
      for (int b = a + 1; b < h.vertex_count(); ++b)
        CHECK(h.adjacent(a, b) ==
              h.adjacent(static_cast<int>(nu(a)), static_cast<int>(nu(b))));
  }
}

TEST_CASE("edge list round trip") {
  const Graph g = hamming_graph(3, 1);
  const Graph back = Graph::from_edge_list(g.to_edge_list());
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edge_count() == g.edge_count());
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v)
      if (u != v) CHECK(back.adjacent(u, v) == g.adjacent(u, v));
}

TEST_CASE("greedy maximal clique finds the even-distance clique") {
  const Graph h42 = hamming_graph(4, 2);
  const auto clique = greedy_maximal_clique(h42, 0);
  CHECK(clique.size() >= 3);
  for (size_t i = 0; i < clique.size(); ++i)
    for (size_t j = i + 1; j < clique.size(); ++j) CHECK(h42.adjacent(clique[i], clique[j]));
}

TEST_CASE("graph guards") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(hamming_graph(13, 1), std::domain_error);
  CHECK_THROWS_AS(gk_graph(3), std::domain_error);
  CHECK_THROWS_AS(gadget_graph(Graph(1)), std::domain_error);
}

#pragma once
// Explicit small graphs (dense bitset adjacency, capped at 4096 vertices),
// the generator zoo used by the protocol and representation modules, and
// exact chromatic/clique/independence search by branch and bound.

#include "xcc/numerics.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace xcc {

inline int hamming_distance(Word x, Word y) {
  return __builtin_popcountll(x ^ y);
}

// Implicit adjacency oracle for distance graphs beyond the explicit cap.
inline bool hamming_adjacent(Word x, Word y, int d) {
  return hamming_distance(x, y) == d;
}

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  long edge_count() const { return edges_; }
  int degree(int v) const;
  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);  // no-op if already present; throws on loop

  const std::vector<std::string>& labels() const { return labels_; }
  void set_label(int v, std::string s);

  std::vector<int> neighbors(int v) const;

  // adjacency-list text: first line "n m", then one 0-indexed edge per line
  std::string to_edge_list() const;
  static Graph from_edge_list(const std::string& text);

 private:
  int n_ = 0;
  long edges_ = 0;
  int words_ = 0;
  std::vector<Word> adj_;  // n_ rows of words_ 64-bit words
  std::vector<std::string> labels_;

  friend class BitsetRow;
  const Word* row(int v) const { return adj_.data() + static_cast<size_t>(v) * words_; }
};

constexpr int kMaxExplicitVertices = 4096;

// H(n,d): n-bit strings, adjacent iff Hamming distance is exactly d.
// Explicit form requires 2^n <= 4096 (n <= 12); labels are bitstrings.
Graph hamming_graph(int n, int d);

// Union of H(n,d) for d = n/2..n; n even, 2^n <= 4096.
Graph gk_graph(int n);

struct ListFamily {
  int universe_size = 0;
  std::vector<std::vector<int>> lists;  // nonempty subsets of 0..universe_size-1
};

// Union of one clique per list.
Graph list_graph(const ListFamily& f);

Graph complement(const Graph& g);

// t fresh mutually adjacent vertices, each adjacent to all of g.
Graph suspension(const Graph& g, int t);

// For each unordered pair {i,j} of original vertices, four fresh vertices
// a,b,c,d and the nine edges {i,a},{a,b},{i,b},{j,c},{c,d},{j,d},{i,d},
// {b,c},{a,j}. Requires |V| >= 2.
Graph gadget_graph(const Graph& g);

// Exact searches; chromatic/clique/independence capped at 128 vertices.
bool is_k_colorable(const Graph& g, int k);
int chromatic_number(const Graph& g);
int clique_number(const Graph& g);
int independence_number(const Graph& g);

// Greedy maximal clique containing seed (any vertex count; used to find
// equidistant lists inside Hamming graphs).
std::vector<int> greedy_maximal_clique(const Graph& g, int seed);

}  // namespace xcc

#include "xcc/graphs.hpp"

#include <algorithm>
#include <bitset>
#include <sstream>
#include <stdexcept>

namespace xcc {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxExplicitVertices)
    throw std::domain_error("Graph: vertex count outside [0, 4096]");
  words_ = (n + 63) / 64;
  adj_.assign(static_cast<size_t>(n) * words_, 0);
  labels_.assign(n, std::string());
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("Graph::adjacent");
  return (row(u)[v >> 6] >> (v & 63)) & 1ULL;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("Graph::add_edge");
  if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
  if (adjacent(u, v)) return;
  adj_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
  adj_[static_cast<size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
  ++edges_;
}

int Graph::degree(int v) const {
  int d = 0;
  for (int w = 0; w < words_; ++w) d += __builtin_popcountll(row(v)[w]);
  return d;
}

void Graph::set_label(int v, std::string s) {
  labels_.at(v) = std::move(s);
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

std::string Graph::to_edge_list() const {
  std::ostringstream os;
  os << n_ << ' ' << edges_ << '\n';
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) os << u << ' ' << v << '\n';
  return os.str();
}

Graph Graph::from_edge_list(const std::string& text) {
  std::istringstream is(text);
  int n;
  long m;
  if (!(is >> n >> m)) throw std::invalid_argument("from_edge_list: bad header");
  Graph g(n);
  for (long e = 0; e < m; ++e) {
    int u, v;
    if (!(is >> u >> v)) throw std::invalid_argument("from_edge_list: truncated edge list");
    g.add_edge(u, v);
  }
  return g;
}

namespace {

std::string bit_label(Word x, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if ((x >> i) & 1ULL) s[i] = '1';
  return s;
}

}  // namespace

Graph hamming_graph(int n, int d) {
  if (n < 1 || d < 0 || d > n) throw std::domain_error("hamming_graph: need 0 <= d <= n");
  if (n > 12) throw std::domain_error("hamming_graph: explicit form capped at 2^12 vertices");
  const int size = 1 << n;
  Graph g(size);
  for (int x = 0; x < size; ++x) g.set_label(x, bit_label(static_cast<Word>(x), n));
  for (int x = 0; x < size; ++x)
    for (int y = x + 1; y < size; ++y)
      if (hamming_distance(static_cast<Word>(x), static_cast<Word>(y)) == d) g.add_edge(x, y);
  return g;
}

Graph gk_graph(int n) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("gk_graph: n must be even and >= 2");
  if (n > 12) throw std::domain_error("gk_graph: explicit form capped at 2^12 vertices");
  const int size = 1 << n;
  Graph g(size);
  for (int x = 0; x < size; ++x) g.set_label(x, bit_label(static_cast<Word>(x), n));
  for (int x = 0; x < size; ++x)
    for (int y = x + 1; y < size; ++y)
      if (2 * hamming_distance(static_cast<Word>(x), static_cast<Word>(y)) >= n)
        g.add_edge(x, y);
  return g;
}

Graph list_graph(const ListFamily& f) {
  Graph g(f.universe_size);
  for (const auto& list : f.lists) {
    if (list.empty()) throw std::invalid_argument("list_graph: empty list");
    for (size_t i = 0; i < list.size(); ++i)
      for (size_t j = i + 1; j < list.size(); ++j)
        if (list[i] != list[j]) g.add_edge(list[i], list[j]);
  }
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u) {
    c.set_label(u, g.labels()[u]);
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  }
  return c;
}

Graph suspension(const Graph& g, int t) {
  if (t < 0) throw std::domain_error("suspension: t < 0");
  const int n = g.vertex_count();
  Graph s(n + t);
  for (int u = 0; u < n; ++u) {
    s.set_label(u, g.labels()[u]);
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) s.add_edge(u, v);
  }
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < n + a; ++b) s.add_edge(n + a, b);
  return s;
}

Graph gadget_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::domain_error("gadget_graph: need at least 2 vertices");
  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  Graph out(static_cast<int>(n + 4 * pairs));
  for (int u = 0; u < n; ++u) {
    out.set_label(u, g.labels()[u]);
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) out.add_edge(u, v);
  }
  int next = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int a = next, b = next + 1, c = next + 2, d = next + 3;
      next += 4;
      out.add_edge(i, a);
      out.add_edge(a, b);
      out.add_edge(i, b);
      out.add_edge(j, c);
      out.add_edge(c, d);
      out.add_edge(j, d);
      out.add_edge(i, d);
      out.add_edge(b, c);
      out.add_edge(a, j);
    }
  }
  return out;
}

namespace {

// Branch-and-bound max clique over <=4096-vertex graphs with greedy-color
// pruning; masks are multiword bitsets.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  int run() {
    std::vector<int> cand(n_);
    for (int v = 0; v < n_; ++v) cand[v] = v;
    best_ = 0;
    expand(cand, 0);
    return best_;
  }

 private:
  void expand(std::vector<int>& cand, int size) {
    if (cand.empty()) {
      best_ = std::max(best_, size);
      return;
    }
    // greedy coloring bound on the candidate set
    std::vector<int> color(cand.size(), 0);
    int ncolors = 0;
    for (size_t i = 0; i < cand.size(); ++i) {
      int c = 1;
      for (;; ++c) {
        bool ok = true;
        for (size_t j = 0; j < i; ++j)
          if (color[j] == c && g_.adjacent(cand[i], cand[j])) {
            ok = false;
            break;
          }
        if (ok) break;
      }
      color[i] = c;
      ncolors = std::max(ncolors, c);
    }
    if (size + ncolors <= best_) return;
    // branch on vertices in descending color order
    std::vector<size_t> order(cand.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return color[a] > color[b]; });
    for (size_t oi = 0; oi < order.size(); ++oi) {
      size_t i = order[oi];
      if (size + color[i] <= best_) return;
      std::vector<int> next;
      for (size_t j = 0; j < cand.size(); ++j) {
        bool skip = false;
        for (size_t pj = 0; pj <= oi; ++pj)
          if (order[pj] == j) {
            skip = true;
            break;
          }
        if (!skip && g_.adjacent(cand[i], cand[j])) next.push_back(cand[j]);
      }
      expand(next, size + 1);
      best_ = std::max(best_, size + 1);
    }
  }

  const Graph& g_;
  int n_;
  int best_ = 0;
};

bool color_rec(const Graph& g, int k, std::vector<int>& color, int colored, int max_used) {
  const int n = g.vertex_count();
  if (colored == n) return true;
  // most-constrained vertex: largest number of distinct neighbor colors
  int pick = -1, pick_sat = -1, pick_deg = -1;
  for (int v = 0; v < n; ++v) {
    if (color[v] != 0) continue;
    std::bitset<128> used;
    for (int u = 0; u < n; ++u)
      if (color[u] != 0 && g.adjacent(u, v)) used.set(color[u] - 1);
    int sat = static_cast<int>(used.count());
    int deg = g.degree(v);
    if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
      pick = v;
      pick_sat = sat;
      pick_deg = deg;
    }
  }
  std::bitset<128> used;
  for (int u = 0; u < n; ++u)
    if (color[u] != 0 && g.adjacent(u, pick)) used.set(color[u] - 1);
  // introduce at most one new color to break color-permutation symmetry
  const int limit = std::min(k, max_used + 1);
  for (int c = 1; c <= limit; ++c) {
    if (used.test(c - 1)) continue;
    color[pick] = c;
    if (color_rec(g, k, color, colored + 1, std::max(max_used, c))) return true;
    color[pick] = 0;
  }
  return false;
}

}  // namespace

bool is_k_colorable(const Graph& g, int k) {
  if (g.vertex_count() > 128)
    throw std::domain_error("is_k_colorable: exact search capped at 128 vertices");
  if (k >= g.vertex_count()) return true;
  if (k <= 0) return g.vertex_count() == 0;
  std::vector<int> color(g.vertex_count(), 0);
  return color_rec(g, k, color, 0, 0);
}

int clique_number(const Graph& g) {
  if (g.vertex_count() > 128)
    throw std::domain_error("clique_number: exact search capped at 128 vertices");
  if (g.vertex_count() == 0) return 0;
  return CliqueSearch(g).run();
}

int independence_number(const Graph& g) {
  return clique_number(complement(g));
}

int chromatic_number(const Graph& g) {
  if (g.vertex_count() > 128)
    throw std::domain_error("chromatic_number: exact search capped at 128 vertices");
  if (g.vertex_count() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  int k = clique_number(g);  // lower bound; colorability is monotone in k
  while (!is_k_colorable(g, k)) ++k;
  return k;
}

std::vector<int> greedy_maximal_clique(const Graph& g, int seed) {
  if (seed < 0 || seed >= g.vertex_count()) throw std::out_of_range("greedy_maximal_clique");
  std::vector<int> clique{seed};
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == seed) continue;
    bool ok = true;
    for (int u : clique)
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace xcc

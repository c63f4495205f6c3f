#include "xcc/bounds.hpp"

#include "xcc/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace xcc {

CoverFreeResult cover_free_check(const SetFamily& f, int r) {
  const int m = static_cast<int>(f.sets.size());
  if (r < 1 || r > 4) throw std::domain_error("cover_free_check: r outside [1, 4]");
  if (m < r + 1) throw std::domain_error("cover_free_check: need at least r+1 sets");
  if (m > 20) throw std::domain_error("cover_free_check: family capped at 20 sets");

  std::vector<int> pick(r);
  for (int f0 = 0; f0 < m; ++f0) {
    // choose r others (unordered) and test containment in their union
    std::vector<int> others;
    for (int i = 0; i < m; ++i)
      if (i != f0) others.push_back(i);
    const int om = static_cast<int>(others.size());
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
      Word un = 0;
      for (int i = 0; i < r; ++i) un |= f.sets[others[idx[i]]];
      if ((f.sets[f0] & ~un) == 0) {
        CoverFreeResult res;
        res.cover_free = false;
        res.violating.push_back(f0);
        for (int i = 0; i < r; ++i) res.violating.push_back(others[idx[i]]);
        return res;
      }
      int pos = r - 1;
      while (pos >= 0 && idx[pos] == om - r + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return {};
}

ListProblem all_k_subsets(int N, int k) {
  if (N < 1 || N > 20 || k < 1 || k > N) throw std::domain_error("all_k_subsets: bad N or k");
  ListProblem p;
  p.N = N;
  p.k = k;
  for (Word mask = 0; mask < (Word{1} << N); ++mask)
    if (__builtin_popcountll(mask) == k) p.lists.push_back(mask);
  return p;
}

SetFamily transcripts_to_family(const ClassicalProtocol& p, const ListProblem& problem) {
  // validate, collecting all realized transcripts
  std::vector<Transcript> transcripts;
  std::map<Transcript, int> transcript_id;
  for (Word list : problem.lists) {
    for (int x = 0; x < problem.N; ++x) {
      if (!((list >> x) & 1ULL)) continue;
      const Transcript t = run_transcript(p, static_cast<Word>(x), list);
      if (p.output(list, t) != static_cast<Word>(x))
        throw std::invalid_argument("transcripts_to_family: protocol incorrect on (x=" +
                                    std::to_string(x) + ", L=" + std::to_string(list) + ")");
      if (transcript_id.emplace(t, static_cast<int>(transcripts.size())).second)
        transcripts.push_back(t);
    }
  }
  if (transcripts.size() > 64)
    throw std::domain_error("transcripts_to_family: more than 64 distinct transcripts");

  // F_x: transcripts whose Alice-message sequence is what Alice would send
  // on input x against the Bob messages recorded in the transcript
  SetFamily fam;
  fam.ground_size = static_cast<int>(transcripts.size());
  std::set<Word> distinct;
  for (int x = 0; x < problem.N; ++x) {
    Word mask = 0;
    for (size_t ti = 0; ti < transcripts.size(); ++ti) {
      const Transcript& t = transcripts[ti];
      bool consistent = true;
      Transcript prefix;
      for (size_t i = 0; i < p.rounds.size() && consistent; ++i) {
        if (p.rounds[i].speaker == Party::alice &&
            p.rounds[i].message(static_cast<Word>(x), prefix) != t[i])
          consistent = false;
        prefix.push_back(t[i]);
      }
      if (consistent) mask |= Word{1} << ti;
    }
    fam.sets.push_back(mask);
    distinct.insert(mask);
  }
  // drop duplicate member sets; the family is a set of sets
  fam.sets.assign(distinct.begin(), distinct.end());
  return fam;
}

ClassicalProtocol list_announce_protocol(int N) {
  const int bits = ceil_log2(std::max(N, 2));
  ClassicalProtocol p;
  p.rounds.push_back({Party::alice, bits, [](Word x, const Transcript&) { return x; }});
  p.output = [](Word, const Transcript& t) { return t[0]; };
  return p;
}

ClassicalProtocol list_offset_protocol(int N) {
  const int bits = ceil_log2(std::max(N, 2));
  ClassicalProtocol p;
  p.rounds.push_back({Party::bob, bits, [](Word list, const Transcript&) -> Word {
                        return static_cast<Word>(__builtin_ctzll(list));
                      }});
  p.rounds.push_back({Party::alice, bits, [N](Word x, const Transcript& t) -> Word {
                        return (x + static_cast<Word>(N) - t[0]) % static_cast<Word>(N);
                      }});
  p.output = [N](Word, const Transcript& t) -> Word { return (t[0] + t[1]) % static_cast<Word>(N); };
  return p;
}

ClassicalProtocol list_adaptive_protocol(int N) {
  const int hi_bits = ceil_log2(std::max(N, 2));
  ClassicalProtocol p;
  // Alice: parity of x; Bob: whether that parity pins a unique list member;
  // Alice: the full element only when needed
  p.rounds.push_back({Party::alice, 1, [](Word x, const Transcript&) -> Word { return x & 1; }});
  p.rounds.push_back({Party::bob, 1, [N](Word list, const Transcript& t) -> Word {
                        int matches = 0;
                        for (int v = 0; v < N; ++v)
                          if (((list >> v) & 1ULL) && (static_cast<Word>(v) & 1) == t[0]) ++matches;
                        return matches == 1 ? 0 : 1;
                      }});
  p.rounds.push_back({Party::alice, hi_bits, [](Word x, const Transcript& t) -> Word {
                        return t[1] == 1 ? x : 0;
                      }});
  p.output = [N](Word list, const Transcript& t) -> Word {
    if (t[1] == 1) return t[2];
    for (int v = 0; v < N; ++v)
      if (((list >> v) & 1ULL) && (static_cast<Word>(v) & 1) == t[0]) return static_cast<Word>(v);
    return 0;
  };
  return p;
}

BoundReport bound_formulas(double N, double k, double const_c, double const_o1,
                           double const_lower) {
  if (!(N >= 2.0) || !(k >= 2.0) || k > N)
    throw std::domain_error("bound_formulas: need 2 <= k <= N");
  BoundReport r;
  r.N = N;
  r.k = k;
  r.chi = N;    // the list graph of all k-subsets is complete
  r.omega = k;  // largest list
  r.const_c = const_c;
  r.const_o1 = const_o1;
  r.const_lower = const_lower;

  const double loglogchi = std::log2(std::log2(r.chi));
  const double logomega = std::log2(r.omega);

  double list_lower = std::numeric_limits<double>::quiet_NaN();
  if (k > 2.0)  // the log log (k-1) term degenerates at k = 2
    list_lower = loglogchi + 2.0 * std::log2(k - 1) - std::log2(std::log2(k - 1)) - const_o1;
  r.terms.push_back({"list_lower", list_lower, true});
  const double max_lower = std::max(loglogchi, logomega);
  r.terms.push_back({"max_form_lower", max_lower, false});
  const double two_round_upper = loglogchi + 3.0 * logomega + 4.0;
  r.terms.push_back({"two_round_upper", two_round_upper, false});
  const double four_round_upper =
      loglogchi + 2.0 * logomega + 3.0 * std::log2(logomega) + 7.0;
  r.terms.push_back({"four_round_upper", four_round_upper, false});
  r.terms.push_back(
      {"cover_free_set_size", const_c * (k - 1) * (k - 1) * std::log2(N) / std::log2(k - 1),
       true});
  r.terms.push_back({"quantum_max_form_lower",
                     std::max(const_lower * loglogchi, logomega), true});

  r.ordering_ok = max_lower <= two_round_upper + 1e-12 &&
                  max_lower <= four_round_upper + 1e-12 &&
                  std::max(const_lower * loglogchi, logomega) <= two_round_upper + 1e-12;
  return r;
}

namespace {

// maximal cliques of the "distance <= 2r" graph by Bron-Kerbosch; sizes only
void bron_kerbosch(Word r_set, Word p_set, Word x_set,
                   const std::vector<Word>& adj, long& checked, long& largest) {
  if (p_set == 0 && x_set == 0) {
    ++checked;
    largest = std::max(largest, static_cast<long>(__builtin_popcountll(r_set)));
    return;
  }
  const Word pux = p_set | x_set;
  const int pivot = __builtin_ctzll(pux);
  Word candidates = p_set & ~adj[pivot];
  while (candidates) {
    const int v = __builtin_ctzll(candidates);
    candidates &= candidates - 1;
    bron_kerbosch(r_set | (Word{1} << v), p_set & adj[v], x_set & adj[v], adj, checked, largest);
    p_set &= ~(Word{1} << v);
    x_set |= Word{1} << v;
  }
}

}  // namespace

KleitmanResult kleitman_check(int n, int r, Word seed) {
  if (n < 1 || n > 14) throw std::domain_error("kleitman_check: n outside [1, 14]");
  if (r < 0 || 2 * r > n) throw std::domain_error("kleitman_check: need 0 <= r <= n/2");
  KleitmanResult res;
  res.n = n;
  res.r = r;
  res.bound = 0;
  for (int k = 0; k <= r; ++k) res.bound += binom(n, k);

  const long size = 1L << n;
  // Hamming ball of radius r around 0: diameter <= 2r, size exactly the bound
  {
    long ball = 0;
    for (long v = 0; v < size; ++v)
      if (__builtin_popcountll(static_cast<Word>(v)) <= r) ++ball;
    res.ball_meets_bound = (Rational(ball) == res.bound);
    res.largest_found = ball;
  }

  if (n <= 6) {
    // exhaustive: every maximal diameter-2r set is a maximal clique of the
    // distance <= 2r graph
    std::vector<Word> adj(size, 0);
    for (long u = 0; u < size; ++u)
      for (long v = 0; v < size; ++v)
        if (u != v && hamming_distance(static_cast<Word>(u), static_cast<Word>(v)) <= 2 * r)
          adj[u] |= Word{1} << v;
    long checked = 0, largest = 0;
    bron_kerbosch(0, (size >= 64) ? ~Word{0} : ((Word{1} << size) - 1), 0, adj, checked, largest);
    res.exhaustive = true;
    res.sets_checked = checked;
    res.largest_found = std::max(res.largest_found, largest);
  } else {
    // witness mode: greedy diameter-constrained sets from random orders
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Word> order(size);
      for (long v = 0; v < size; ++v) order[v] = static_cast<Word>(v);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<Word> chosen;
      for (Word v : order) {
        bool ok = true;
        for (Word u : chosen)
          if (hamming_distance(u, v) > 2 * r) {
            ok = false;
            break;
          }
        if (ok) chosen.push_back(v);
      }
      ++res.sets_checked;
      res.largest_found = std::max(res.largest_found, static_cast<long>(chosen.size()));
    }
  }
  res.holds = (Rational(res.largest_found) <= res.bound);
  return res;
}

double entropy_gap(double p) {
  if (!(p > 0.0 && p < 0.5)) throw std::domain_error("entropy_gap: p outside (0, 1/2)");
  return entropy(p) + entropy(0.5 - std::sqrt((1.0 - p) * p)) - 1.0;
}

}  // namespace xcc

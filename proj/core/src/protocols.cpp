#include "xcc/protocols.hpp"

#include "xcc/orthrep.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

namespace xcc {

namespace {

constexpr double kBranchTol = 1e-9;

void require_input_width(Word x, int n, const char* who) {
  if (n < 1 || n > 64) throw std::domain_error(std::string(who) + ": n outside [1, 64]");
  if (n < 64 && (x >> n) != 0)
    throw std::invalid_argument(std::string(who) + ": input wider than n bits");
}

std::string bit_string(Word x, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if ((x >> i) & 1ULL) s[i] = '1';
  return s;
}

void finish(ProtocolRun& run) {
  run.pass = !run.branch_log.empty();
  bool unanimous = true;
  for (const Branch& b : run.branch_log) {
    run.pass = run.pass && b.correct;
    unanimous = unanimous && (b.outcome == run.branch_log.front().outcome);
  }
  run.outcome = run.branch_log.empty() ? "none"
               : unanimous            ? run.branch_log.front().outcome
                                      : "mixed";
}

}  // namespace

// --- equality protocols ---------------------------------------------------

ProtocolRun eq_two_round(Word x, Word y, int n) {
  require_input_width(x, n, "eq_two_round");
  require_input_width(y, n, "eq_two_round");
  if (n % 8 != 0) throw std::domain_error("eq_two_round: n must be divisible by 8");
  const int d = n / 4;
  const int dist = hamming_distance(x, y);
  if (dist != 0 && dist != d)
    throw promise_error("eq_two_round: inputs at distance " + std::to_string(dist) +
                        ", promise allows {0, " + std::to_string(d) + "}");

  const int logn = ceil_log2(n);
  ProtocolRun run;
  run.protocol = "eq2";
  run.n = n;
  run.d = d;
  run.rounds = 2;

  StateVector s({{"idx", n}});
  s.set_uniform("idx");
  s.apply_query("idx", y);           // Bob
  run.qubits_sent += logn;           // Bob -> Alice
  s.apply_query("idx", x);           // Alice
  s.apply_diffusion("idx");
  run.qubits_sent += logn + 1;       // Alice -> Bob: index and her bit

  const bool equal_inputs = (x == y);
  for (const MeasureBranch& br : measure_branches(s, "idx")) {
    const int istar = br.outcome;
    const bool alice_bit = (x >> istar) & 1ULL;
    const bool bob_bit = (y >> istar) & 1ULL;
    Branch b;
    b.id = "i*=" + std::to_string(istar);
    b.probability = br.probability;
    b.outcome = (alice_bit == bob_bit) ? "equal" : "not equal";
    b.correct = (b.outcome == (equal_inputs ? "equal" : "not equal"));
    run.branch_log.push_back(std::move(b));
  }
  finish(run);
  return run;
}

ProtocolRun eq_padded(Word x, Word y, int n, int d) {
  require_input_width(x, n, "eq_padded");
  require_input_width(y, n, "eq_padded");
  if (n % 2 != 0 || d % 2 != 0) throw std::domain_error("eq_padded: n and d must be even");
  if (!(4 * d >= n && 2 * d < n))
    throw std::domain_error("eq_padded: need n/4 <= d < n/2");
  const int np = 4 * d;  // padded length; zero padding leaves the words unchanged
  ProtocolRun run = eq_two_round(x, y, np);
  run.protocol = "eq-pad";
  run.n = n;
  run.d = d;
  return run;
}

ProtocolRun eq_multiround(Word x, Word y, int n, int d) {
  require_input_width(x, n, "eq_multiround");
  require_input_width(y, n, "eq_multiround");
  if (n % 2 != 0 || d % 2 != 0) throw std::domain_error("eq_multiround: n and d must be even");
  if (!(d >= 1 && 4 * d < n)) throw std::domain_error("eq_multiround: need 0 < d < n/4");
  const int dist = hamming_distance(x, y);
  if (dist != 0 && dist != d)
    throw promise_error("eq_multiround: inputs at distance " + std::to_string(dist) +
                        ", promise allows {0, " + std::to_string(d) + "}");

  const GroverParams params = exact_grover_params(n, d);
  const int ell = params.ell;
  const int logn = ceil_log2(n);

  ProtocolRun run;
  run.protocol = "eq-multi";
  run.n = n;
  run.d = d;
  run.rounds = ell + 2;

  StateVector s({{"idx", n}, {"aux", 2}});
  s.set_uniform("idx");
  // ell - 1 ordinary iterations; each state crossing carries the index
  // register, with the two halves of the query applied on either side
  for (int it = 0; it < ell - 1; ++it) {
    s.apply_query("idx", x);
    s.apply_query("idx", y);
    s.apply_diffusion("idx");
    run.qubits_sent += logn;
  }
  // partial-query simulation: Q_x, cross, R_y(varphi), cross, Q_x
  s.apply_cond_xor("idx", "aux", x);
  run.qubits_sent += logn + 1;
  s.apply_cond_phase("idx", "aux", y, params.varphi);
  run.qubits_sent += logn + 1;
  s.apply_cond_xor("idx", "aux", x);

  // the auxiliary qubit must come back clean
  auto aux_branches = measure_branches(s, "aux");
  if (aux_branches.size() != 1 || aux_branches[0].outcome != 0)
    throw std::logic_error("eq_multiround: auxiliary qubit not disentangled");
  StateVector idx_state = std::move(aux_branches[0].collapsed);
  idx_state.apply_param_diffusion("idx", params.phi);
  run.qubits_sent += logn + 1;  // final index-and-bit message

  const bool equal_inputs = (x == y);
  for (const MeasureBranch& br : measure_branches(idx_state, "idx")) {
    const int istar = br.outcome;
    Branch b;
    b.id = "i*=" + std::to_string(istar);
    b.probability = br.probability;
    b.outcome = (((x >> istar) & 1ULL) == ((y >> istar) & 1ULL)) ? "equal" : "not equal";
    b.correct = (b.outcome == (equal_inputs ? "equal" : "not equal"));
    run.branch_log.push_back(std::move(b));
  }
  finish(run);
  return run;
}

// --- list protocols -------------------------------------------------------

namespace {

// all pairs in L at the same distance; returns it (|L| = 1 reports n)
int validate_equidistant(const std::vector<Word>& L, int n, const char* who) {
  if (L.empty()) throw std::invalid_argument(std::string(who) + ": empty list");
  if (L.size() == 1) return n;
  int d = -1;
  for (size_t i = 0; i < L.size(); ++i) {
    require_input_width(L[i], n, who);
    for (size_t j = i + 1; j < L.size(); ++j) {
      const int dist = hamming_distance(L[i], L[j]);
      if (d < 0) d = dist;
      if (dist != d)
        throw std::invalid_argument(std::string(who) + ": list is not equidistant");
    }
  }
  if (2 * d < n)
    throw std::invalid_argument(std::string(who) + ": list distance below n/2");
  return d;
}

void require_member(Word x, const std::vector<Word>& L, const char* who) {
  if (std::find(L.begin(), L.end(), x) == L.end())
    throw std::invalid_argument(std::string(who) + ": x is not in the list");
}

}  // namespace

std::vector<Word> find_equidistant_list(int n, int d, Word seed) {
  Graph h = hamming_graph(n, d);
  std::vector<int> clique = greedy_maximal_clique(h, static_cast<int>(seed));
  std::vector<Word> out;
  out.reserve(clique.size());
  for (int v : clique) out.push_back(static_cast<Word>(v));
  return out;
}

ProtocolRun list_two_round(Word x, const std::vector<Word>& L, int n) {
  if (n % 2 != 0) throw std::domain_error("list_two_round: n must be even");
  require_input_width(x, n, "list_two_round");
  const int d = validate_equidistant(L, n, "list_two_round");
  require_member(x, L, "list_two_round");

  const int ell = ceil_log2(n);
  const int half = 1 << ell;
  const double g2 = list_state_gamma_squared(n, d).get_d();

  ProtocolRun run;
  run.protocol = "list2";
  run.n = n;
  run.d = d;
  run.rounds = 2;

  StateVector s({{"ctrl", 2}, {"idx", half}});
  // Bob prepares and sends the single qubit
  CMatrix prep(2, 2);
  const double gamma = std::sqrt(g2), rest = std::sqrt(1.0 - g2);
  prep.at(0, 0) = gamma;
  prep.at(0, 1) = -rest;
  prep.at(1, 0) = rest;
  prep.at(1, 1) = gamma;
  s.apply_dense("ctrl", prep);
  run.qubits_sent += 1;
  // Alice pads |0..0>, expands, queries, sends everything back
  s.apply_ctrl_expand("ctrl", "idx", n);
  s.apply_cond_query("ctrl", "idx", x);
  run.qubits_sent += ell + 1;

  // Bob measures in the orthonormal family {phi_w : w in L}
  std::vector<std::vector<Complex>> basis;
  basis.reserve(L.size());
  for (Word w : L) basis.push_back(list_state(w, n, d));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Complex ip = 0.0;
      for (size_t k = 0; k < basis[i].size(); ++k) ip += std::conj(basis[i][k]) * basis[j][k];
      if (std::abs(ip) > 1e-9)
        throw std::logic_error("list_two_round: measurement family not orthogonal");
    }

  double covered = 0.0;
  for (size_t i = 0; i < L.size(); ++i) {
    const double p = std::norm(s.inner_with(basis[i]));
    covered += p;
    if (p <= 1e-10) continue;
    Branch b;
    b.id = "w=" + bit_string(L[i], n);
    b.probability = p;
    b.outcome = bit_string(L[i], n);
    b.correct = (L[i] == x) && p >= 1.0 - kBranchTol;
    run.branch_log.push_back(std::move(b));
  }
  if (covered < 1.0 - 1e-9) {
    Branch b;
    b.id = "residual";
    b.probability = 1.0 - covered;
    b.outcome = "unresolved";
    b.correct = false;
    run.branch_log.push_back(std::move(b));
  }
  finish(run);
  return run;
}

ProtocolRun list_entangled(Word x, const std::vector<Word>& L, int n) {
  if (n % 2 != 0) throw std::domain_error("list_entangled: n must be even");
  require_input_width(x, n, "list_entangled");
  const int d = validate_equidistant(L, n, "list_entangled");
  require_member(x, L, "list_entangled");

  const int logn = ceil_log2(n);
  const double g2 = list_state_gamma_squared(n, d).get_d();
  const double gamma = std::sqrt(g2), rest = std::sqrt(1.0 - g2);

  ProtocolRun run;
  run.protocol = "list-ent";
  run.n = n;
  run.d = d;
  run.rounds = 2;
  run.cbits_sent = 1 + logn + 2;  // state-preparation bit, j-hat, teleportation

  // shared state: remote-prepared control qubit, maximally correlated index
  // pair, one EPR pair for the teleportation
  StateVector s(
      {{"ctrlA", 2}, {"idxA", n}, {"idxB", n}, {"eprA", 2}, {"eprB", 2}});
  {
    std::vector<Complex> amp(s.total_dim(), Complex(0, 0));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n)) / std::sqrt(2.0);
    for (int c = 0; c < 2; ++c) {
      const double ca = (c == 0) ? gamma : rest;
      for (int i = 0; i < n; ++i)
        for (int e = 0; e < 2; ++e) {
          const size_t idx =
              (((static_cast<size_t>(c) * n + i) * n + i) * 2 + e) * 2 + e;
          amp[idx] = ca * scale;
        }
    }
    s.set_amplitudes(std::move(amp));
  }

  s.apply_cond_query("ctrlA", "idxA", x);
  s.apply_dft("idxA");

  // Bob's measurement family over (idxB, eprB-as-control)
  std::vector<std::vector<Complex>> basis(L.size());
  for (size_t wi = 0; wi < L.size(); ++wi) {
    std::vector<Complex> v(static_cast<size_t>(n) * 2, Complex(0, 0));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
      v[static_cast<size_t>(i) * 2 + 0] = gamma * scale;
      v[static_cast<size_t>(i) * 2 + 1] =
          (((L[wi] >> i) & 1ULL) ? -rest : rest) * scale;
    }
    basis[wi] = std::move(v);
  }

  for (const MeasureBranch& jb : measure_branches(s, "idxA")) {
    const int jhat = jb.outcome;
    StateVector after_j = jb.collapsed;  // ctrlA, idxB, eprA, eprB
    // teleport ctrlA to Bob through the EPR pair
    after_j.apply_cnot("ctrlA", "eprA");
    after_j.apply_hadamard("ctrlA");
    for (const MeasureBranch& m1b : measure_branches(after_j, "ctrlA")) {
      for (const MeasureBranch& m2b : measure_branches(m1b.collapsed, "eprA")) {
        StateVector bob = m2b.collapsed;  // idxB, eprB
        if (m2b.outcome == 1) {  // X correction
          CMatrix xg(2, 2);
          xg.at(0, 1) = 1.0;
          xg.at(1, 0) = 1.0;
          bob.apply_dense("eprB", xg);
        }
        if (m1b.outcome == 1) {  // Z correction
          CMatrix zg(2, 2);
          zg.at(0, 0) = 1.0;
          zg.at(1, 1) = -1.0;
          bob.apply_dense("eprB", zg);
        }
        bob.apply_phase_diag("idxB", [&](int i) {
          return std::polar(1.0, -2.0 * std::numbers::pi * i * jhat / n);
        });

        const double pbranch = jb.probability * m1b.probability * m2b.probability;
        std::string outcome = "unresolved";
        bool correct = false;
        for (size_t wi = 0; wi < L.size(); ++wi) {
          const double p = std::norm(bob.inner_with(basis[wi]));
          if (p >= 1.0 - kBranchTol) {
            outcome = bit_string(L[wi], n);
            correct = (L[wi] == x);
            break;
          }
        }
        Branch b;
        b.id = "j=" + std::to_string(jhat) + ";m=" + std::to_string(m1b.outcome) +
               std::to_string(m2b.outcome);
        b.probability = pbranch;
        b.outcome = std::move(outcome);
        b.correct = correct;
        run.branch_log.push_back(std::move(b));
      }
    }
  }
  finish(run);
  return run;
}

ProtocolRun list_nonsignaling(Word x, const std::vector<Word>& L, int n) {
  require_input_width(x, n, "list_nonsignaling");
  for (Word w : L) require_input_width(w, n, "list_nonsignaling");
  require_member(x, L, "list_nonsignaling");

  std::vector<Word> sorted = L;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const int m = static_cast<int>(sorted.size());
  const int i = static_cast<int>(std::find(sorted.begin(), sorted.end(), x) - sorted.begin());

  ProtocolRun run;
  run.protocol = "list-ns";
  run.n = n;
  run.d = 0;
  run.rounds = m > 1 ? 1 : 0;
  run.cbits_sent = (m > 1) ? ceil_log2(m) : 0;

  // the box outputs (a, a+i); marginals are uniform for every input, which
  // is exactly the non-signaling condition for this family
  for (Word w : sorted) {
    const int iw = static_cast<int>(std::find(sorted.begin(), sorted.end(), w) - sorted.begin());
    std::vector<double> alice_marginal(m, 0.0), bob_marginal(m, 0.0);
    for (int a = 0; a < m; ++a) {
      alice_marginal[a] += 1.0 / m;
      bob_marginal[(a + iw) % m] += 1.0 / m;
    }
    for (int a = 0; a < m; ++a)
      if (std::abs(alice_marginal[a] - 1.0 / m) > 1e-12 ||
          std::abs(bob_marginal[a] - 1.0 / m) > 1e-12)
        throw std::logic_error("list_nonsignaling: box marginal not uniform");
  }

  for (int a = 0; a < m; ++a) {
    const int bob_out = (a + i) % m;
    const int decoded = ((bob_out - a) % m + m) % m;
    Branch b;
    b.id = "a=" + std::to_string(a);
    b.probability = 1.0 / m;
    b.outcome = bit_string(sorted[decoded], n);
    b.correct = (sorted[decoded] == x);
    run.branch_log.push_back(std::move(b));
  }
  finish(run);
  return run;
}

// --- classical protocols --------------------------------------------------

int ClassicalProtocol::total_length() const {
  int t = 0;
  for (const auto& r : rounds) t += r.length;
  return t;
}

Transcript run_transcript(const ClassicalProtocol& p, Word x, Word y) {
  Transcript t;
  t.reserve(p.rounds.size());
  for (const auto& round : p.rounds) {
    const Word own = (round.speaker == Party::alice) ? x : y;
    const Word msg = round.message(own, t);
    if (round.length < 64 && (msg >> round.length) != 0)
      throw std::logic_error("run_transcript: message exceeds declared round length");
    t.push_back(msg);
  }
  return t;
}

Word run_classical(const ClassicalProtocol& p, Word x, Word y) {
  const Transcript t = run_transcript(p, x, y);
  return p.output(y, t);
}

bool classical_correct_on_promise(const ClassicalProtocol& p, const PromiseEquality& pr,
                                  std::string* counterexample) {
  for (Word x : pr.domain) {
    if (run_classical(p, x, x) != 1) {
      if (counterexample) *counterexample = "equal inputs x=" + std::to_string(x);
      return false;
    }
  }
  for (const auto& [a, b] : pr.distinct_pairs) {
    if (run_classical(p, a, b) != 0 || run_classical(p, b, a) != 0) {
      if (counterexample)
        *counterexample = "pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
      return false;
    }
  }
  return true;
}

ClassicalProtocol round_collapse(const ClassicalProtocol& p, const PromiseEquality& promise) {
  std::string cx;
  if (!classical_correct_on_promise(p, promise, &cx))
    throw std::invalid_argument("round_collapse: protocol incorrect on promise at " + cx);
  if (p.total_length() > 64)
    throw std::domain_error("round_collapse: transcripts beyond 64 bits unsupported");

  // copy the round structure; the collapsed protocol replays it
  auto rounds = std::make_shared<std::vector<ClassicalRound>>(p.rounds);
  auto output = p.output;

  ClassicalProtocol one;
  ClassicalRound big;
  big.speaker = Party::alice;
  big.length = p.total_length();
  big.message = [rounds](Word x, const Transcript&) {
    // Alice simulates the whole conversation as if Bob also held x
    Transcript t;
    Word blob = 0;
    int off = 0;
    for (const auto& round : *rounds) {
      const Word msg = round.message(x, t);
      t.push_back(msg);
      blob |= msg << off;
      off += round.length;
    }
    return blob;
  };
  one.rounds.push_back(std::move(big));
  one.output = [rounds, output](Word y, const Transcript& t) -> Word {
    const Word blob = t.at(0);
    Transcript claimed;
    int off = 0;
    for (const auto& round : *rounds) {
      const Word mask = (round.length >= 64) ? ~Word{0} : ((Word{1} << round.length) - 1);
      claimed.push_back((blob >> off) & mask);
      off += round.length;
    }
    // replay Bob's rounds; the first inconsistency certifies "not equal"
    Transcript prefix;
    for (size_t i = 0; i < rounds->size(); ++i) {
      if ((*rounds)[i].speaker == Party::bob) {
        const Word mine = (*rounds)[i].message(y, prefix);
        if (mine != claimed[i]) return 0;
      }
      prefix.push_back(claimed[i]);
    }
    return output(y, claimed);
  };
  return one;
}

namespace {

std::vector<Word> all_words(int bits) {
  std::vector<Word> v(size_t{1} << bits);
  for (size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Word>(i);
  return v;
}

std::vector<std::pair<Word, Word>> pairs_at_distance(int bits, int dist) {
  std::vector<std::pair<Word, Word>> out;
  const Word count = Word{1} << bits;
  for (Word a = 0; a < count; ++a)
    for (Word b = a + 1; b < count; ++b)
      if (hamming_distance(a, b) == dist) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<Word, Word>> all_distinct_pairs(int bits) {
  std::vector<std::pair<Word, Word>> out;
  const Word count = Word{1} << bits;
  for (Word a = 0; a < count; ++a)
    for (Word b = a + 1; b < count; ++b) out.emplace_back(a, b);
  return out;
}

Word relative_parities(Word x) {
  // (x_0 ^ x_1, x_0 ^ x_2, x_0 ^ x_3): equal tuples iff equal or complement
  const Word b0 = x & 1;
  return ((x >> 1 & 1) ^ b0) | ((((x >> 2) & 1) ^ b0) << 1) | ((((x >> 3) & 1) ^ b0) << 2);
}

}  // namespace

ClassicalFixture parity_exchange_fixture() {
  ClassicalFixture f;
  f.name = "parity-exchange";
  f.promise.domain = all_words(4);
  f.promise.distinct_pairs = pairs_at_distance(4, 2);
  ClassicalProtocol p;
  p.rounds.push_back({Party::alice, 3, [](Word x, const Transcript&) {
                        return relative_parities(x);
                      }});
  p.rounds.push_back({Party::bob, 3, [](Word y, const Transcript&) {
                        return relative_parities(y);
                      }});
  p.output = [](Word, const Transcript& t) -> Word { return t[0] == t[1] ? 1 : 0; };
  f.protocol = std::move(p);
  return f;
}

ClassicalFixture bisection_fixture() {
  ClassicalFixture f;
  f.name = "bisection";
  f.promise.domain = all_words(3);
  f.promise.distinct_pairs = all_distinct_pairs(3);
  ClassicalProtocol p;
  p.rounds.push_back({Party::alice, 1, [](Word x, const Transcript&) {
                        return (x >> 2) & 1;
                      }});
  p.rounds.push_back({Party::bob, 1, [](Word y, const Transcript& t) -> Word {
                        return (((y >> 2) & 1) == t[0]) ? 1 : 0;
                      }});
  p.rounds.push_back({Party::alice, 2, [](Word x, const Transcript& t) -> Word {
                        return t[1] == 1 ? (x & 3) : 0;
                      }});
  p.output = [](Word y, const Transcript& t) -> Word {
    if (t[1] == 0) return 0;
    return ((y & 3) == t[2]) ? 1 : 0;
  };
  f.protocol = std::move(p);
  return f;
}

ClassicalFixture bob_first_fixture() {
  ClassicalFixture f;
  f.name = "bob-first";
  f.promise.domain = all_words(3);
  f.promise.distinct_pairs = all_distinct_pairs(3);
  ClassicalProtocol p;
  p.rounds.push_back({Party::bob, 1, [](Word y, const Transcript&) -> Word {
                        return __builtin_popcountll(y) & 1;
                      }});
  p.rounds.push_back({Party::alice, 3, [](Word x, const Transcript&) { return x; }});
  p.output = [](Word y, const Transcript& t) -> Word { return t[1] == y ? 1 : 0; };
  f.protocol = std::move(p);
  return f;
}

ClassicalFixture coloring_fixture() {
  ClassicalFixture f;
  f.name = "coloring";
  f.promise.domain = all_words(4);
  f.promise.distinct_pairs = pairs_at_distance(4, 1);
  for (const auto& pr : pairs_at_distance(4, 3)) f.promise.distinct_pairs.push_back(pr);
  ClassicalProtocol p;
  p.rounds.push_back({Party::alice, 1, [](Word x, const Transcript&) -> Word {
                        return __builtin_popcountll(x) & 1;
                      }});
  p.output = [](Word y, const Transcript& t) -> Word {
    return (static_cast<Word>(__builtin_popcountll(y) & 1) == t[0]) ? 1 : 0;
  };
  f.protocol = std::move(p);
  return f;
}

// --- quantized one-round compilation --------------------------------------

int QuantumProtocolSpec::total_qubits() const {
  int t = 0;
  for (const auto& r : rounds) t += r.qubits;
  return t;
}

namespace {

// Branch vectors of one party: for every full message string u, the
// unnormalized private vector after all rounds, amplitudes folded in.
// Received messages are absorbed at the least-significant position of the
// private register.
std::vector<std::vector<Complex>> party_branch_vectors(const QuantumProtocolSpec& spec,
                                                       Party who, Word input) {
  std::vector<std::vector<Complex>> cur;
  cur.push_back({Complex(1.0, 0.0)});
  for (const auto& round : spec.rounds) {
    const int fresh = 1 << round.qubits;
    std::vector<std::vector<Complex>> next;
    next.reserve(cur.size() * fresh);
    if (round.speaker == who) {
      const CMatrix u = round.unitary(input);
      const int priv = static_cast<int>(cur.front().size());
      if (u.rows != priv * fresh || u.cols != priv * fresh)
        throw std::invalid_argument("kremer: unitary shape mismatch");
      if (!u.is_unitary())
        throw std::invalid_argument("kremer: round operator is not unitary");
      for (const auto& vec : cur) {
        // apply U to (vec tensor |0>)
        std::vector<Complex> big(static_cast<size_t>(priv) * fresh, Complex(0, 0));
        for (int i = 0; i < priv * fresh; ++i) {
          Complex s = 0.0;
          for (int p = 0; p < priv; ++p) s += u.at(i, p * fresh + 0) * vec[p];
          big[i] = s;
        }
        for (int w = 0; w < fresh; ++w) {
          std::vector<Complex> child(priv);
          for (int p = 0; p < priv; ++p) child[p] = big[static_cast<size_t>(p) * fresh + w];
          next.push_back(std::move(child));
        }
      }
    } else {
      for (const auto& vec : cur) {
        const int priv = static_cast<int>(vec.size());
        for (int w = 0; w < fresh; ++w) {
          std::vector<Complex> child(static_cast<size_t>(priv) * fresh, Complex(0, 0));
          for (int p = 0; p < priv; ++p) child[static_cast<size_t>(p) * fresh + w] = vec[p];
          next.push_back(std::move(child));
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

double quantize_component(double v, int bits) {
  const double scale = std::ldexp(1.0, bits - 1);  // grid step 2^{-(bits-1)} over [-1,1]
  return std::round(v * scale) / scale;
}

}  // namespace

KremerReport kremer_compile(const QuantumProtocolSpec& spec, int bits_per_component) {
  KremerReport rep;
  rep.total_qubits = spec.total_qubits();
  if (rep.total_qubits > 6)
    throw std::domain_error("kremer_compile: total qubits capped at 6");
  rep.bits_per_component =
      (bits_per_component > 0) ? bits_per_component : 2 * rep.total_qubits + 4;
  const long nu = 1L << rep.total_qubits;
  rep.message_bits = static_cast<long>(rep.bits_per_component) * 2 * nu * nu;

  rep.exact_protocol_verified = true;
  rep.decisions_match = true;
  double worst = 0.0;

  for (const auto& [x, y] : spec.promise_pairs) {
    const auto alice = party_branch_vectors(spec, Party::alice, x);
    const auto bob = party_branch_vectors(spec, Party::bob, y);
    const auto ms = spec.measurement(y);
    const int expected = spec.expected_outcome(x, y);

    // Gram coefficients and their quantized forms
    std::vector<Complex> a(static_cast<size_t>(nu) * nu), aq(a.size());
    for (long u = 0; u < nu; ++u)
      for (long v = 0; v < nu; ++v) {
        Complex s = 0.0;
        for (size_t k = 0; k < alice[u].size(); ++k) s += std::conj(alice[u][k]) * alice[v][k];
        a[static_cast<size_t>(u) * nu + v] = s;
        aq[static_cast<size_t>(u) * nu + v] =
            Complex(quantize_component(s.real(), rep.bits_per_component),
                    quantize_component(s.imag(), rep.bits_per_component));
      }

    double total_p = 0.0;
    int decided = -1;
    for (size_t j = 0; j < ms.size(); ++j) {
      Complex p = 0.0, pq = 0.0;
      for (long u = 0; u < nu; ++u)
        for (long v = 0; v < nu; ++v) {
          // b^j_{u,v} = <B_u| M_j |B_v>
          Complex bj = 0.0;
          const auto& bu = bob[u];
          const auto& bv = bob[v];
          for (int r = 0; r < ms[j].rows; ++r) {
            Complex row = 0.0;
            for (int c = 0; c < ms[j].cols; ++c) row += ms[j].at(r, c) * bv[c];
            bj += std::conj(bu[r]) * row;
          }
          p += a[static_cast<size_t>(u) * nu + v] * bj;
          pq += aq[static_cast<size_t>(u) * nu + v] * bj;
        }
      total_p += p.real();
      worst = std::max(worst, std::abs(pq.real() - p.real()));
      if (static_cast<int>(j) == expected && p.real() < 1.0 - 1e-9)
        rep.exact_protocol_verified = false;
      if (pq.real() > 0.5) {
        if (decided != -1) decided = -2;  // not unique
        else decided = static_cast<int>(j);
      }
    }
    if (std::abs(total_p - 1.0) > 1e-9) rep.exact_protocol_verified = false;
    if (decided != expected) rep.decisions_match = false;
  }

  rep.max_deviation = worst;
  rep.deviation_within_eighth = worst <= 0.125 + 1e-12;
  rep.pass = rep.exact_protocol_verified && rep.deviation_within_eighth && rep.decisions_match;
  return rep;
}

namespace {

// real orthogonal matrix whose first column is the given unit vector
CMatrix householder_with_first_column(const std::vector<double>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<double> u(v);
  u[0] -= 1.0;  // u = v - e_0; H = I - 2 u u^T / u^T u sends e_0 to v
  double uu = 0.0;
  for (double t : u) uu += t * t;
  CMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double e = (i == j) ? 1.0 : 0.0;
      if (uu > 1e-30) e -= 2.0 * u[i] * u[j] / uu;
      h.at(i, j) = e;
    }
  return h;
}

}  // namespace

QuantumProtocolSpec eq2_quantum_spec(int n) {
  if (n < 4 || (n & (n - 1)) != 0 || n % 4 != 0)
    throw std::domain_error("eq2_quantum_spec: n must be a power of two divisible by 4");
  const int d = n / 4;
  const int logn = ceil_log2(n);

  QuantumProtocolSpec spec;
  // Round 1 (Bob, log n qubits): create U_y |s> in the fresh register.
  spec.rounds.push_back({Party::bob, logn, [n](Word y) {
                           std::vector<double> col(n);
                           const double a = 1.0 / std::sqrt(static_cast<double>(n));
                           for (int i = 0; i < n; ++i)
                             col[i] = ((y >> i) & 1ULL) ? -a : a;
                           return householder_with_first_column(col);
                         }});
  // Round 2 (Alice, log n + 1 qubits): G U_x on the absorbed index
  // register, then write (i, x_i) into the fresh block.
  spec.rounds.push_back({Party::alice, logn + 1, [n](Word x) {
                           const int fresh = 2 * n;
                           // A = G U_x (n x n): G = 2/n J - I
                           CMatrix g(n, n);
                           for (int i = 0; i < n; ++i)
                             for (int j = 0; j < n; ++j) {
                               double e = 2.0 / n - (i == j ? 1.0 : 0.0);
                               if ((x >> j) & 1ULL) e = -e;
                               g.at(i, j) = e;
                             }
                           CMatrix u(n * fresh, n * fresh);
                           for (int i = 0; i < n; ++i) {
                             const int enc = 2 * i + static_cast<int>((x >> i) & 1ULL);
                             for (int j = 0; j < n; ++j)
                               for (int f = 0; f < fresh; ++f)
                                 u.at(i * fresh + (f ^ enc), j * fresh + f) = g.at(i, j);
                           }
                           return u;
                         }});
  spec.outcome_names = {"equal", "not equal"};
  spec.measurement = [n](Word y) {
    const int dim = 2 * n;
    CMatrix meq(dim, dim), mneq(dim, dim);
    for (int v = 0; v < dim; ++v) {
      const int i = v >> 1, c = v & 1;
      const bool match = (c == static_cast<int>((y >> i) & 1ULL));
      if (match)
        meq.at(v, v) = 1.0;
      else
        mneq.at(v, v) = 1.0;
    }
    return std::vector<CMatrix>{meq, mneq};
  };
  spec.expected_outcome = [](Word x, Word y) { return x == y ? 0 : 1; };
  for (Word x = 0; x < (Word{1} << n); ++x) {
    spec.promise_pairs.emplace_back(x, x);
    for (Word y = 0; y < (Word{1} << n); ++y)
      if (hamming_distance(x, y) == d) spec.promise_pairs.emplace_back(x, y);
  }
  return spec;
}

QuantumProtocolSpec coloring_quantum_spec() {
  // four inputs, identity coloring sent as a basis state on two qubits
  QuantumProtocolSpec spec;
  spec.rounds.push_back({Party::alice, 2, [](Word x) {
                           CMatrix u(4, 4);
                           for (int f = 0; f < 4; ++f)
                             u.at(f ^ static_cast<int>(x & 3), f) = 1.0;
                           return u;
                         }});
  spec.outcome_names = {"equal", "not equal"};
  spec.measurement = [](Word y) {
    CMatrix meq(4, 4), mneq(4, 4);
    for (int v = 0; v < 4; ++v) {
      if (v == static_cast<int>(y & 3))
        meq.at(v, v) = 1.0;
      else
        mneq.at(v, v) = 1.0;
    }
    return std::vector<CMatrix>{meq, mneq};
  };
  spec.expected_outcome = [](Word x, Word y) { return x == y ? 0 : 1; };
  for (Word x = 0; x < 4; ++x)
    for (Word y = 0; y < 4; ++y) spec.promise_pairs.emplace_back(x, y);
  return spec;
}

QuantumProtocolSpec fourier_quantum_spec() {
  // 2-bit inputs, signed one-qubit states, promise distance in {0, 1}
  QuantumProtocolSpec spec;
  spec.rounds.push_back({Party::alice, 1, [](Word x) {
                           const double a = 1.0 / std::sqrt(2.0);
                           std::vector<double> col{(x & 1) ? -a : a, (x & 2) ? -a : a};
                           return householder_with_first_column(col);
                         }});
  spec.outcome_names = {"equal", "not equal"};
  spec.measurement = [](Word y) {
    const double a = 1.0 / std::sqrt(2.0);
    const double v0 = (y & 1) ? -a : a, v1 = (y & 2) ? -a : a;
    CMatrix meq(2, 2), mneq(2, 2);
    meq.at(0, 0) = v0 * v0;
    meq.at(0, 1) = v0 * v1;
    meq.at(1, 0) = v1 * v0;
    meq.at(1, 1) = v1 * v1;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) mneq.at(i, j) = (i == j ? 1.0 : 0.0) - meq.at(i, j);
    return std::vector<CMatrix>{meq, mneq};
  };
  spec.expected_outcome = [](Word x, Word y) { return x == y ? 0 : 1; };
  for (Word x = 0; x < 4; ++x) {
    spec.promise_pairs.emplace_back(x, x);
    for (Word y = 0; y < 4; ++y)
      if (hamming_distance(x, y) == 1) spec.promise_pairs.emplace_back(x, y);
  }
  return spec;
}

std::string protocol_run_to_json(const ProtocolRun& run) {
  std::ostringstream os;
  os.precision(12);
  os << "{\"protocol\":\"" << run.protocol << "\",\"n\":" << run.n << ",\"d\":" << run.d
     << ",\"outcome\":\"" << run.outcome << "\",\"rounds\":" << run.rounds
     << ",\"qubits_sent\":" << run.qubits_sent << ",\"cbits_sent\":" << run.cbits_sent
     << ",\"pass\":" << (run.pass ? "true" : "false") << ",\"branches\":[";
  for (size_t i = 0; i < run.branch_log.size(); ++i) {
    const Branch& b = run.branch_log[i];
    if (i) os << ',';
    os << "{\"id\":\"" << b.id << "\",\"probability\":" << b.probability << ",\"outcome\":\""
       << b.outcome << "\",\"correct\":" << (b.correct ? "true" : "false") << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace xcc

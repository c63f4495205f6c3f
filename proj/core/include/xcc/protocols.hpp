#pragma once
// Runnable communication protocols with per-branch verification and
// round/qubit/bit accounting: the distributed-search equality protocols,
// the single-qubit-prefix list protocols (plain, entanglement-assisted,
// non-signaling), the multi-round-to-one-round classical collapse, and the
// quantized-coefficient one-round classical compilation of small quantum
// protocols.

#include "xcc/graphs.hpp"
#include "xcc/numerics.hpp"
#include "xcc/qsim.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xcc {

// Raised when inputs violate a protocol's promise; promise violations are
// detected and reported, never silently answered.
struct promise_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Branch {
  std::string id;
  double probability = 0.0;
  std::string outcome;
  bool correct = false;
};

struct ProtocolRun {
  std::string protocol;
  int n = 0;
  int d = 0;
  std::string outcome;  // unanimous branch outcome, or "mixed"
  int rounds = 0;
  int qubits_sent = 0;
  int cbits_sent = 0;
  std::vector<Branch> branch_log;
  bool pass = false;  // every branch with probability > 1e-10 is correct
};

// --- quantum equality protocols -----------------------------------------

// Promise: dist(x,y) in {0, n/4}; n divisible by 8. Two rounds,
// 2 ceil(log n) + 1 qubits.
ProtocolRun eq_two_round(Word x, Word y, int n);

// Promise: dist(x,y) in {0, d} with n/4 <= d < n/2, n and d even. Pads
// both inputs with 4d - n zeros and runs the two-round protocol at
// n' = 4d.
ProtocolRun eq_padded(Word x, Word y, int n, int d);

// Promise: dist(x,y) in {0, d} with 0 < d < n/4, n and d even. ell - 1
// alternated search rounds, the two-message simulation of the partial
// query, the parametrized diffusion, then the index message.
ProtocolRun eq_multiround(Word x, Word y, int n, int d);

// --- list protocols ------------------------------------------------------

// L: pairwise-equidistant list at distance d >= n/2 containing x; Bob
// recovers x with certainty. ceil(log n) + 2 qubits in two rounds.
ProtocolRun list_two_round(Word x, const std::vector<Word>& L, int n);

// Entanglement-assisted variant: shared maximally-correlated index pair
// plus two EPR pairs; 1 + ceil(log n) + 2 classical bits in two rounds.
ProtocolRun list_entangled(Word x, const std::vector<Word>& L, int n);

// Non-signaling-box variant: ceil(log |L|) classical bits; every box
// output enumerated, marginals checked uniform.
ProtocolRun list_nonsignaling(Word x, const std::vector<Word>& L, int n);

// Greedy equidistant list (clique in H(n,d)) through the given seed.
std::vector<Word> find_equidistant_list(int n, int d, Word seed);

// --- classical protocols and the round collapse --------------------------

enum class Party { alice, bob };

using Transcript = std::vector<Word>;

struct ClassicalRound {
  Party speaker = Party::alice;
  int length = 0;  // message bit length, fixed per round
  // (speaker's own input, transcript so far) -> message
  std::function<Word(Word, const Transcript&)> message;
};

struct ClassicalProtocol {
  std::vector<ClassicalRound> rounds;
  // (Bob's input, full transcript) -> answer
  std::function<Word(Word, const Transcript&)> output;
  int total_length() const;
};

struct PromiseEquality {
  std::vector<Word> domain;
  std::vector<std::pair<Word, Word>> distinct_pairs;  // the promised non-equal pairs
};

Transcript run_transcript(const ClassicalProtocol& p, Word x, Word y);
Word run_classical(const ClassicalProtocol& p, Word x, Word y);

// Exhaustive correctness of an equality protocol on its promise
// (output 1 on (x,x), 0 on every listed pair, both orders).
bool classical_correct_on_promise(const ClassicalProtocol& p, const PromiseEquality& pr,
                                  std::string* counterexample = nullptr);

// One-round protocol: Alice sends the transcript she would produce if both
// inputs were hers; Bob replays his own rounds against it. Validates p on
// the promise first and throws std::invalid_argument with a counterexample
// if it is incorrect. Never lengthens the worst-case transcript.
ClassicalProtocol round_collapse(const ClassicalProtocol& p, const PromiseEquality& promise);

// fixtures with their promises
struct ClassicalFixture {
  std::string name;
  ClassicalProtocol protocol;
  PromiseEquality promise;
};
ClassicalFixture parity_exchange_fixture();  // 2 rounds, 4-bit inputs, distance-2 pairs
ClassicalFixture bisection_fixture();        // 3 rounds, 8 inputs, all pairs
ClassicalFixture bob_first_fixture();        // 2 rounds, Bob speaks first
ClassicalFixture coloring_fixture();         // 1 round (already collapsed)

// --- quantized one-round compilation of quantum protocols ----------------

struct QuantumRound {
  Party speaker = Party::alice;
  int qubits = 0;
  // unitary over (speaker's private register tensor fresh 2^qubits block),
  // indexed by the speaker's input
  std::function<CMatrix(Word)> unitary;
};

struct QuantumProtocolSpec {
  std::vector<QuantumRound> rounds;
  // Bob's final measurement operators (PSD, summing to I), by his input
  std::function<std::vector<CMatrix>(Word)> measurement;
  std::vector<std::string> outcome_names;
  std::vector<std::pair<Word, Word>> promise_pairs;  // inputs to exercise
  std::function<int(Word, Word)> expected_outcome;
  int total_qubits() const;
};

struct KremerReport {
  int total_qubits = 0;
  int bits_per_component = 0;
  long message_bits = 0;  // bits_per_component * 2 * 4^{total qubits}
  double max_deviation = 0.0;
  bool deviation_within_eighth = false;
  bool decisions_match = false;
  bool exact_protocol_verified = false;  // p_expected = 1 on every input pair
  bool pass = false;
};

// Quantizes Alice's Gram coefficients to the given number of bits per
// real/imaginary component (default 2*total_qubits + 4) and replays Bob's
// >1/2 decision rule on every promise pair.
KremerReport kremer_compile(const QuantumProtocolSpec& spec, int bits_per_component = -1);

// fixtures: the two-round equality protocol as a quantum spec (n a power
// of two, d = n/4), and two one-round specs with exactly representable
// amplitudes
QuantumProtocolSpec eq2_quantum_spec(int n);
QuantumProtocolSpec coloring_quantum_spec();
QuantumProtocolSpec fourier_quantum_spec();

std::string protocol_run_to_json(const ProtocolRun& run);

}  // namespace xcc

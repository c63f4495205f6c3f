#pragma once
// Closed-form communication bound calculators with explicit constants, the
// cover-free family checker plus the transcript-set reduction that feeds
// it, the bounded-diameter set-size check, and the entropy-gap function.

#include "xcc/numerics.hpp"
#include "xcc/protocols.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xcc {

struct SetFamily {
  int ground_size = 0;
  std::vector<Word> sets;  // bitmasks over the ground set (<= 64 elements)
};

struct CoverFreeResult {
  bool cover_free = true;
  std::vector<int> violating;  // indices F_0, F_1..F_r when not cover-free
};

// Exhaustive: some r+1 distinct members with F_0 inside the union of the
// others falsifies it. Requires |F| >= r+1, |F| <= 20, r <= 4.
CoverFreeResult cover_free_check(const SetFamily& f, int r);

// Bob holds a k-subset of {0..N-1}, encoded as a bitmask; Alice holds a
// member element.
struct ListProblem {
  int N = 0;
  int k = 0;
  std::vector<Word> lists;  // all k-subsets unless overridden
};
ListProblem all_k_subsets(int N, int k);

// Validates the protocol on every (x, L) pair (Bob must output x), then
// groups realized transcripts by Alice-message sequence per input. The
// family has one member set per input; pairwise distinct when every pair
// of inputs shares a list.
SetFamily transcripts_to_family(const ClassicalProtocol& p, const ListProblem& problem);

// list-problem protocol fixtures over [N]
ClassicalProtocol list_announce_protocol(int N);
ClassicalProtocol list_offset_protocol(int N);    // Bob sends min(L), Alice the offset
ClassicalProtocol list_adaptive_protocol(int N);  // parity first, rest on demand

struct BoundTerm {
  std::string name;
  double value = 0.0;
  bool uses_configurable_constant = false;
};

struct BoundReport {
  double N = 0, k = 0;
  double chi = 0, omega = 0;  // complete-instance values: chi = N, omega = k
  double const_c = 1.0;       // multiplicative constant in the set-size bound
  double const_o1 = 1.0;      // additive slack in the list lower bound
  double const_lower = 1.0;   // multiplicative constant in the quantum lower bound
  std::vector<BoundTerm> terms;
  bool ordering_ok = true;  // every defined lower bound <= every upper bound
};

// Evaluates the closed forms for the all-k-subsets instance: the list
// lower bound, the max-form lower bound, the two-round and four-round
// uppers, the cover-free set-size bound, and the quantum max-form lower.
BoundReport bound_formulas(double N, double k, double const_c = 1.0, double const_o1 = 1.0,
                           double const_lower = 1.0);

struct KleitmanResult {
  int n = 0, r = 0;
  Rational bound;       // sum_{k<=r} C(n,k)
  long largest_found = 0;
  long sets_checked = 0;
  bool exhaustive = false;  // full enumeration of maximal sets (n <= 6)
  bool holds = true;
  bool ball_meets_bound = false;  // Hamming ball of radius r has exactly bound points
};

// Diameter-2r subsets of {0,1}^n obey |A| <= sum_{k<=r} C(n,k). Exhaustive
// over maximal sets for n <= 6; witness-based (balls + greedy random sets)
// for 6 < n <= 14.
KleitmanResult kleitman_check(int n, int r, Word seed = 12345);

// H(p) + H(1/2 - sqrt((1-p)p)) - 1 over (0, 1/2); positive throughout.
double entropy_gap(double p);

}  // namespace xcc

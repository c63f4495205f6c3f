#pragma once
// Exact rational simplex (Bland's rule, dictionary form) for small dense
// linear programs, with verified optimality / infeasibility / unboundedness
// certificates, and the distance-distribution LP it exists to solve.

#include "xcc/numerics.hpp"

#include <string>
#include <vector>

namespace xcc {

// maximize objective_constant + objective . a
// subject to rows[i].coeffs . a >= rows[i].rhs for all i, and a >= 0.
struct LpProblem {
  int num_vars = 0;
  Rational objective_constant = 0;
  std::vector<Rational> objective;
  struct Row {
    std::vector<Rational> coeffs;
    Rational rhs;
  };
  std::vector<Row> rows;
};

enum class LpStatus { optimal, unbounded, infeasible };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> assignment;  // optimal point over the variables
  Rational value = 0;                // objective at the optimum
  std::vector<Rational> dual;        // one multiplier per row (optimal)
  std::vector<Rational> farkas;      // one multiplier per row (infeasible)
  std::vector<Rational> ray;         // improving ray over vars (unbounded)
  bool certified = false;            // certificate re-verified exactly
  long pivots = 0;
};

// Caps: <= 200 variables, <= 500 constraints.
LpSolution lp_solve(const LpProblem& p);

// Schrijver/Delsarte LP for the complement of the distance >= n/2 graph:
// variables a_k for k = n/2..n, constraints C(n,d) + sum_k a_k K_d(k) >= 0
// for every d = 0..n, objective 1 + sum_k a_k. Requires n even, n <= 64.
LpProblem delsarte_problem(int n);
// Same LP restricted to the constraint degrees listed in keep_degrees.
LpProblem delsarte_relaxed_problem(int n, const std::vector<int>& keep_degrees);

struct DelsarteResult {
  LpSolution solution;
  Rational two_n_bound;  // 2n
  bool within_bound;     // value <= 2n, exact comparison
};
DelsarteResult delsarte_theta_prime(int n);

// Text format: line 1 "num_vars num_rows"; line 2 the objective as
// "constant c_1 .. c_m"; then one row per line "g_1 .. g_m h" meaning
// g . a >= h. Entries are rationals "p" or "p/q".
std::string lp_to_text(const LpProblem& p);
LpProblem lp_from_text(const std::string& text);

}  // namespace xcc

#include "xcc/linopt.hpp"

#include "xcc/krawtchouk.hpp"

#include <sstream>
#include <stdexcept>

namespace xcc {

namespace {

// Dictionary simplex over exact rationals.
//
// Internal form: maximize c.x s.t. A x <= b, x >= 0 (rows negated from the
// >= input). Variables 0..n-1 structural, n..n+m-1 slacks, n+m the phase-1
// auxiliary. Each basic row reads  x_basic[i] = val[i] + sum_j coef[i][j] *
// x_nonbasic[j];  an objective reads  z = obj0 + sum_j objc[j] * x_nb[j].
class Dictionary {
 public:
  Dictionary(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
             const std::vector<Rational>& c)
      : m_(static_cast<int>(A.size())), n_(static_cast<int>(c.size())), c_(c) {
    basic_.resize(m_);
    val_ = b;
    coef_.assign(m_, std::vector<Rational>(n_));
    nonbasic_.resize(n_);
    for (int j = 0; j < n_; ++j) nonbasic_[j] = j;
    for (int i = 0; i < m_; ++i) {
      basic_[i] = n_ + i;
      for (int j = 0; j < n_; ++j) coef_[i][j] = -A[i][j];
    }
  }

  long pivots() const { return pivots_; }

  // Returns optimal status; fills outputs. Assumes caller checked sizes.
  LpStatus run(std::vector<Rational>& x, Rational& value, std::vector<Rational>& dual,
               std::vector<Rational>& farkas, std::vector<Rational>& ray) {
    bool need_phase1 = false;
    for (const Rational& v : val_)
      if (v < 0) need_phase1 = true;

    if (need_phase1) {
      // append auxiliary column x0 with +1 coefficients
      const int aux = n_ + m_;
      nonbasic_.push_back(aux);
      for (int i = 0; i < m_; ++i) coef_[i].push_back(1);
      // w = -x0
      obj0_ = 0;
      objc_.assign(nonbasic_.size(), Rational(0));
      objc_.back() = -1;
      // make feasible: enter x0 at the most negative row
      int r = 0;
      for (int i = 1; i < m_; ++i)
        if (val_[i] < val_[r]) r = i;
      pivot(r, static_cast<int>(nonbasic_.size()) - 1);
      optimize();
      if (obj0_ < 0) {
        extract_farkas(farkas);
        return LpStatus::infeasible;
      }
      // drive x0 out of the basis if it lingers at value zero
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != aux) continue;
        int j = -1;
        for (int jj = 0; jj < static_cast<int>(nonbasic_.size()); ++jj)
          if (coef_[i][jj] != 0) {
            j = jj;
            break;
          }
        if (j < 0) {
          drop_row(i);
        } else {
          pivot(i, j);
        }
        break;
      }
      drop_aux_column(aux);
    }

    // phase 2 objective from scratch in the current dictionary
    obj0_ = 0;
    objc_.assign(nonbasic_.size(), Rational(0));
    for (int j = 0; j < static_cast<int>(nonbasic_.size()); ++j)
      if (nonbasic_[j] < n_) objc_[j] += c_[nonbasic_[j]];
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] >= n_) continue;
      const Rational& ci = c_[basic_[i]];
      if (ci == 0) continue;
      obj0_ += ci * val_[i];
      for (int j = 0; j < static_cast<int>(nonbasic_.size()); ++j)
        objc_[j] += ci * coef_[i][j];
    }

    if (!optimize()) {
      extract_ray(ray);
      return LpStatus::unbounded;
    }
    x.assign(n_, Rational(0));
    for (int i = 0; i < m_; ++i)
      if (basic_[i] < n_) x[basic_[i]] = val_[i];
    value = obj0_;
    extract_dual(dual);
    return LpStatus::optimal;
  }

 private:
  // Bland: entering = smallest variable index with positive reduced cost;
  // leaving = tightest ratio, ties by smallest basic variable index.
  bool optimize() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < static_cast<int>(nonbasic_.size()); ++j)
        if (objc_[j] > 0 && (enter < 0 || nonbasic_[j] < nonbasic_[enter])) enter = j;
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (coef_[i][enter] >= 0) continue;
        Rational ratio = -val_[i] / coef_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basic_[i] < basic_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) {
        unbounded_col_ = enter;
        return false;
      }
      pivot(leave, enter);
    }
  }

  void pivot(int r, int j) {
    ++pivots_;
    const Rational piv = coef_[r][j];  // nonzero
    // solve row r for the entering variable
    std::vector<Rational>& row = coef_[r];
    const Rational inv = Rational(-1) / piv;
    val_[r] *= inv;
    for (int k = 0; k < static_cast<int>(row.size()); ++k) row[k] *= inv;
    row[j] = Rational(1) / piv;
    std::swap(basic_[r], nonbasic_[j]);
    // substitute into the other rows
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const Rational f = coef_[i][j];
      if (f == 0) continue;
      coef_[i][j] = 0;
      val_[i] += f * val_[r];
      for (int k = 0; k < static_cast<int>(row.size()); ++k) coef_[i][k] += f * row[k];
    }
    const Rational f = objc_[j];
    if (f != 0) {
      objc_[j] = 0;
      obj0_ += f * val_[r];
      for (int k = 0; k < static_cast<int>(row.size()); ++k) objc_[k] += f * row[k];
    }
  }

  void drop_row(int r) {
    basic_.erase(basic_.begin() + r);
    val_.erase(val_.begin() + r);
    coef_.erase(coef_.begin() + r);
    --m_;
  }

  void drop_aux_column(int aux) {
    int col = -1;
    for (int j = 0; j < static_cast<int>(nonbasic_.size()); ++j)
      if (nonbasic_[j] == aux) col = j;
    if (col < 0) throw std::logic_error("simplex: auxiliary variable still basic");
    nonbasic_.erase(nonbasic_.begin() + col);
    for (auto& row : coef_) row.erase(row.begin() + col);
    objc_.erase(objc_.begin() + col);
  }

  void extract_dual(std::vector<Rational>& dual) const {
    dual.assign(m0_slots(), Rational(0));
    for (int j = 0; j < static_cast<int>(nonbasic_.size()); ++j) {
      const int v = nonbasic_[j];
      if (v >= n_ && v < n_ + m0_slots()) dual[v - n_] = -objc_[j];
    }
  }

  void extract_farkas(std::vector<Rational>& farkas) const { extract_dual(farkas); }

  void extract_ray(std::vector<Rational>& ray) const {
    // entering column had no blocking row; the ray increases that variable
    ray.assign(n_, Rational(0));
    const int v = nonbasic_[unbounded_col_];
    if (v < n_) ray[v] = 1;
    for (int i = 0; i < m_; ++i)
      if (basic_[i] < n_) ray[basic_[i]] = coef_[i][unbounded_col_];
  }

  int m0_slots() const { return m_initial_; }

  int m_;
  int n_;
  std::vector<Rational> c_;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::vector<Rational> val_;
  std::vector<std::vector<Rational>> coef_;
  Rational obj0_ = 0;
  std::vector<Rational> objc_;
  int unbounded_col_ = -1;
  long pivots_ = 0;
  int m_initial_ = 0;

 public:
  void set_initial_rows(int m) { m_initial_ = m; }
};

}  // namespace

LpSolution lp_solve(const LpProblem& p) {
  if (p.num_vars <= 0 || p.num_vars > 200)
    throw std::domain_error("lp_solve: variable count outside [1, 200]");
  if (p.rows.size() > 500) throw std::domain_error("lp_solve: more than 500 constraints");
  if (static_cast<int>(p.objective.size()) != p.num_vars)
    throw std::invalid_argument("lp_solve: objective size mismatch");
  const int n = p.num_vars;
  const int m = static_cast<int>(p.rows.size());

  // g.a >= h  ->  (-g).a <= -h
  std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n));
  std::vector<Rational> b(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(p.rows[i].coeffs.size()) != n)
      throw std::invalid_argument("lp_solve: row size mismatch");
    for (int j = 0; j < n; ++j) A[i][j] = -p.rows[i].coeffs[j];
    b[i] = -p.rows[i].rhs;
  }

  Dictionary dict(A, b, p.objective);
  dict.set_initial_rows(m);
  LpSolution sol;
  std::vector<Rational> x, dual, farkas, ray;
  Rational value;
  sol.status = dict.run(x, value, dual, farkas, ray);
  sol.pivots = dict.pivots();

  auto dot = [](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
  };

  switch (sol.status) {
    case LpStatus::optimal: {
      sol.assignment = x;
      sol.value = p.objective_constant + value;
      sol.dual = dual;
      // certify: primal feasibility, dual feasibility, complementary
      // slackness and matching objectives, all exact
      bool ok = true;
      for (int j = 0; j < n; ++j) ok = ok && x[j] >= 0;
      std::vector<Rational> slack(m);
      for (int i = 0; i < m; ++i) {
        slack[i] = b[i] - dot(A[i], x);
        ok = ok && slack[i] >= 0;
        ok = ok && dual[i] >= 0;
        ok = ok && (dual[i] == 0 || slack[i] == 0);
      }
      for (int j = 0; j < n; ++j) {
        Rational red = -p.objective[j];
        for (int i = 0; i < m; ++i) red += dual[i] * A[i][j];
        ok = ok && red >= 0;
        ok = ok && (x[j] == 0 || red == 0);
      }
      ok = ok && (dot(dual, b) == value);
      sol.certified = ok;
      if (!ok) throw std::logic_error("lp_solve: optimality certificate failed verification");
      break;
    }
    case LpStatus::infeasible: {
      sol.farkas = farkas;
      bool ok = true;
      Rational yb = 0;
      for (int i = 0; i < m; ++i) {
        ok = ok && farkas[i] >= 0;
        yb += farkas[i] * b[i];
      }
      for (int j = 0; j < n; ++j) {
        Rational col = 0;
        for (int i = 0; i < m; ++i) col += farkas[i] * A[i][j];
        ok = ok && col >= 0;
      }
      ok = ok && yb < 0;
      sol.certified = ok;
      if (!ok) throw std::logic_error("lp_solve: Farkas certificate failed verification");
      break;
    }
    case LpStatus::unbounded: {
      sol.ray = ray;
      bool ok = true;
      for (int j = 0; j < n; ++j) ok = ok && ray[j] >= 0;
      for (int i = 0; i < m; ++i) ok = ok && dot(A[i], ray) <= 0;
      ok = ok && dot(p.objective, ray) > 0;
      sol.certified = ok;
      if (!ok) throw std::logic_error("lp_solve: unbounded ray failed verification");
      break;
    }
  }
  return sol;
}

LpProblem delsarte_problem(int n) {
  std::vector<int> all(n + 1);
  for (int d = 0; d <= n; ++d) all[d] = d;
  return delsarte_relaxed_problem(n, all);
}

LpProblem delsarte_relaxed_problem(int n, const std::vector<int>& keep_degrees) {
  if (n < 2 || n % 2 != 0 || n > 64)
    throw std::domain_error("delsarte: n must be even, 2 <= n <= 64");
  LpProblem p;
  p.num_vars = n / 2 + 1;  // a_k for k = n/2..n
  p.objective_constant = 1;
  p.objective.assign(p.num_vars, Rational(1));
  for (int d : keep_degrees) {
    if (d < 0 || d > n) throw std::domain_error("delsarte: constraint degree outside [0, n]");
    LpProblem::Row row;
    row.coeffs.reserve(p.num_vars);
    for (int k = n / 2; k <= n; ++k) row.coeffs.push_back(kraw(n, d, k));
    row.rhs = -binom(n, d);
    p.rows.push_back(std::move(row));
  }
  return p;
}

DelsarteResult delsarte_theta_prime(int n) {
  DelsarteResult r;
  r.solution = lp_solve(delsarte_problem(n));
  if (r.solution.status != LpStatus::optimal)
    throw std::logic_error("delsarte_theta_prime: LP did not reach an optimum");
  r.two_n_bound = Rational(2 * n);
  r.within_bound = r.solution.value <= r.two_n_bound;
  return r;
}

std::string lp_to_text(const LpProblem& p) {
  std::ostringstream os;
  os << p.num_vars << ' ' << p.rows.size() << '\n';
  os << rational_to_string(p.objective_constant);
  for (const Rational& c : p.objective) os << ' ' << rational_to_string(c);
  os << '\n';
  for (const auto& row : p.rows) {
    for (const Rational& g : row.coeffs) os << rational_to_string(g) << ' ';
    os << rational_to_string(row.rhs) << '\n';
  }
  return os.str();
}

LpProblem lp_from_text(const std::string& text) {
  std::istringstream is(text);
  LpProblem p;
  size_t rows;
  if (!(is >> p.num_vars >> rows)) throw std::invalid_argument("lp_from_text: bad header");
  std::string tok;
  if (!(is >> tok)) throw std::invalid_argument("lp_from_text: missing objective");
  p.objective_constant = rational_from_string(tok);
  p.objective.resize(p.num_vars);
  for (int j = 0; j < p.num_vars; ++j) {
    if (!(is >> tok)) throw std::invalid_argument("lp_from_text: truncated objective");
    p.objective[j] = rational_from_string(tok);
  }
  p.rows.resize(rows);
  for (size_t i = 0; i < rows; ++i) {
    p.rows[i].coeffs.resize(p.num_vars);
    for (int j = 0; j < p.num_vars; ++j) {
      if (!(is >> tok)) throw std::invalid_argument("lp_from_text: truncated row");
      p.rows[i].coeffs[j] = rational_from_string(tok);
    }
    if (!(is >> tok)) throw std::invalid_argument("lp_from_text: missing rhs");
    p.rows[i].rhs = rational_from_string(tok);
  }
  return p;
}

}  // namespace xcc

#pragma once
// Dense complex state-vector simulator over named registers of arbitrary
// dimension (not forced to powers of two; the DFT is over Z_n throughout),
// with exactly the gate set the communication protocols need, plus the
// exact-search iteration-count/angle solver and deterministic
// branch-enumeration measurement.

#include "xcc/numerics.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace xcc {

using Complex = std::complex<double>;

struct QRegister {
  std::string name;
  int dim = 0;
};

// Small dense complex matrix, row-major.
struct CMatrix {
  int rows = 0, cols = 0;
  std::vector<Complex> a;
  CMatrix() = default;
  CMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Complex(0, 0)) {}
  Complex& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  Complex at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static CMatrix identity(int n);
  CMatrix multiply(const CMatrix& o) const;
  CMatrix dagger() const;
  bool is_unitary(double tol = 1e-10) const;
};

class StateVector {
 public:
  explicit StateVector(std::vector<QRegister> regs);  // all registers at |0>
  static StateVector basis(std::vector<QRegister> regs, const std::vector<int>& digits);

  const std::vector<QRegister>& registers() const { return regs_; }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  void set_amplitudes(std::vector<Complex> a);
  size_t total_dim() const { return amp_.size(); }
  double norm() const;

  int reg_index(const std::string& name) const;
  int reg_dim(const std::string& name) const;

  // |s> on one register (uniform superposition), others untouched must be
  // at a basis state; used to start search iterations.
  void set_uniform(const std::string& reg);

  // U_z: |i> -> (-1)^{z_i} |i>
  void apply_query(const std::string& reg, Word z);
  // 2|s><s| - I
  void apply_diffusion(const std::string& reg);
  // V_z(phi): |i> -> e^{i phi} |i> when z_i = 1
  void apply_phase_query(const std::string& reg, Word z, double phi);
  // G(phi) = F V_0(phi) F^dagger, phase e^{i phi} on the |s> component
  void apply_param_diffusion(const std::string& reg, double phi);
  // F_n over Z_n (inverse with conjugate kernel)
  void apply_dft(const std::string& reg, bool inverse = false);
  // Q_x: |j>|b> -> |j>|b xor x_j>; aux must have dimension 2
  void apply_cond_xor(const std::string& idx, const std::string& aux, Word x);
  // R_y(phi): |j>|b> -> e^{i phi (b xor y_j)} |j>|b>
  void apply_cond_phase(const std::string& idx, const std::string& aux, Word y, double phi);
  // conditional query: |1>|i> -> (-1)^{z_i} |1>|i>; ctrl must be a qubit
  void apply_cond_query(const std::string& ctrl, const std::string& idx, Word z);
  // controlled expansion: |1>|0> -> (1/sqrt n) |1> sum_{i<n} |i>, unitary
  // completion by a real Householder reflection on the index register
  void apply_ctrl_expand(const std::string& ctrl, const std::string& idx, int n);
  // diagonal phase on one register
  void apply_phase_diag(const std::string& reg, const std::function<Complex(int)>& phase);
  // dense unitary on one register
  void apply_dense(const std::string& reg, const CMatrix& u);
  void apply_hadamard(const std::string& reg);                       // dim 2
  void apply_cnot(const std::string& ctrl, const std::string& tgt);  // both dim 2

  Complex inner_with(const std::vector<Complex>& other) const;

 private:
  std::vector<QRegister> regs_;
  std::vector<size_t> stride_;
  std::vector<Complex> amp_;
  void rebuild_strides();
  friend struct MeasureBranchAccess;
};

struct MeasureBranch {
  int outcome = 0;
  double probability = 0.0;
  StateVector collapsed;  // measured register removed
};

// Deterministic branch enumeration; probabilities sum to 1 within 1e-10,
// branches below 1e-10 dropped.
std::vector<MeasureBranch> measure_branches(const StateVector& s, const std::string& reg);

struct GroverParams {
  int ell = 0;       // iteration count, ceil(pi / (4 asin sqrt(d/n)) - 1/2)
  double phi = 0.0;  // final diffusion angle
  double varphi = 0.0;  // final query angle
};

// Iteration count by the ceiling formula; final-step angles located by
// one-dimensional root finding and validated by simulation: after ell-1
// plain iterations and the G(phi) V_z(varphi) finish, every unmarked basis
// state carries amplitude <= 1e-9. Throws std::runtime_error with the
// residual if the root finder fails.
GroverParams exact_grover_params(int n, int d);

// Runs the exact search on the given oracle string (popcount(z) must be d)
// and returns the final state over one register "idx" of dimension n.
StateVector run_exact_grover(int n, int d, Word z, const GroverParams& params);
// max amplitude magnitude on unmarked indices after run_exact_grover.
double grover_unmarked_residual(int n, int d, Word z, const GroverParams& params);

}  // namespace xcc

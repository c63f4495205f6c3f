#include "xcc/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xcc {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::multiply(const CMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("CMatrix::multiply: shape mismatch");
  CMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Complex v = at(i, k);
      if (v == Complex(0, 0)) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

CMatrix CMatrix::dagger() const {
  CMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = std::conj(at(i, j));
  return r;
}

bool CMatrix::is_unitary(double tol) const {
  if (rows != cols) return false;
  CMatrix p = multiply(dagger());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const Complex want = (i == j) ? Complex(1, 0) : Complex(0, 0);
      if (std::abs(p.at(i, j) - want) > tol) return false;
    }
  return true;
}

StateVector::StateVector(std::vector<QRegister> regs) : regs_(std::move(regs)) {
  rebuild_strides();
  amp_.assign(stride_.empty() ? 1 : stride_[0] * regs_[0].dim, Complex(0, 0));
  amp_[0] = 1.0;
}

StateVector StateVector::basis(std::vector<QRegister> regs, const std::vector<int>& digits) {
  StateVector s(std::move(regs));
  if (digits.size() != s.regs_.size()) throw std::invalid_argument("basis: digit count mismatch");
  size_t idx = 0;
  for (size_t r = 0; r < s.regs_.size(); ++r) {
    if (digits[r] < 0 || digits[r] >= s.regs_[r].dim)
      throw std::invalid_argument("basis: digit out of range");
    idx += s.stride_[r] * static_cast<size_t>(digits[r]);
  }
  s.amp_.assign(s.amp_.size(), Complex(0, 0));
  s.amp_[idx] = 1.0;
  return s;
}

void StateVector::rebuild_strides() {
  stride_.assign(regs_.size(), 1);
  for (int r = static_cast<int>(regs_.size()) - 2; r >= 0; --r)
    stride_[r] = stride_[r + 1] * regs_[r + 1].dim;
  for (const auto& reg : regs_)
    if (reg.dim < 1) throw std::invalid_argument("StateVector: register dimension < 1");
}

void StateVector::set_amplitudes(std::vector<Complex> a) {
  if (a.size() != amp_.size()) throw std::invalid_argument("set_amplitudes: size mismatch");
  amp_ = std::move(a);
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex& c : amp_) s += std::norm(c);
  return std::sqrt(s);
}

int StateVector::reg_index(const std::string& name) const {
  for (size_t r = 0; r < regs_.size(); ++r)
    if (regs_[r].name == name) return static_cast<int>(r);
  throw std::invalid_argument("StateVector: no register named " + name);
}

int StateVector::reg_dim(const std::string& name) const {
  return regs_[reg_index(name)].dim;
}

namespace {

// iterate over all assignments of the other registers; `group` receives the
// base offset, `step` the stride of the chosen register
template <typename F>
void for_each_group(size_t total, size_t stride, int dim, F&& body) {
  const size_t block = stride * static_cast<size_t>(dim);
  for (size_t base = 0; base < total; base += block)
    for (size_t off = 0; off < stride; ++off) body(base + off);
}

}  // namespace

void StateVector::set_uniform(const std::string& reg) {
  const int r = reg_index(reg);
  const int dim = regs_[r].dim;
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  for_each_group(amp_.size(), stride_[r], dim, [&](size_t base) {
    for (int v = 0; v < dim; ++v) amp_[base + stride_[r] * v] = 0.0;
  });
  // keep only the group containing the current support; for protocol use the
  // state is |0...0> here, so fill the first group
  for (int v = 0; v < dim; ++v) amp_[stride_[r] * static_cast<size_t>(v)] = a;
}

void StateVector::apply_query(const std::string& reg, Word z) {
  const int r = reg_index(reg);
  const int dim = regs_[r].dim;
  if (dim > 64) throw std::invalid_argument("apply_query: register dimension above 64");
  for_each_group(amp_.size(), stride_[r], dim, [&](size_t base) {
    for (int v = 0; v < dim; ++v)
      if ((z >> v) & 1ULL) amp_[base + stride_[r] * v] = -amp_[base + stride_[r] * v];
  });
}

void StateVector::apply_diffusion(const std::string& reg) {
  const int r = reg_index(reg);
  const int dim = regs_[r].dim;
  for_each_group(amp_.size(), stride_[r], dim, [&](size_t base) {
    Complex mean = 0.0;
    for (int v = 0; v < dim; ++v) mean += amp_[base + stride_[r] * v];
    mean /= static_cast<double>(dim);
    for (int v = 0; v < dim; ++v) {
      Complex& a = amp_[base + stride_[r] * v];
      a = 2.0 * mean - a;
    }
  });
}

void StateVector::apply_phase_query(const std::string& reg, Word z, double phi) {
  const int r = reg_index(reg);
  const int dim = regs_[r].dim;
  if (dim > 64) throw std::invalid_argument("apply_phase_query: register dimension above 64");
  const Complex ph = std::polar(1.0, phi);
  for_each_group(amp_.size(), stride_[r], dim, [&](size_t base) {
    for (int v = 0; v < dim; ++v)
      if ((z >> v) & 1ULL) amp_[base + stride_[r] * v] *= ph;
  });
}

void StateVector::apply_param_diffusion(const std::string& reg, double phi) {
  // F V_0(phi) F^dagger = I + (e^{i phi} - 1) |s><s|
  const int r = reg_index(reg);
  const int dim = regs_[r].dim;
  const Complex f = std::polar(1.0, phi) - 1.0;
  for_each_group(amp_.size(), stride_[r], dim, [&](size_t base) {
    Complex overlap = 0.0;
    for (int v = 0; v < dim; ++v) overlap += amp_[base + stride_[r] * v];
    overlap /= static_cast<double>(dim);  // <s|psi> / sqrt(dim)
    for (int v = 0; v < dim; ++v) amp_[base + stride_[r] * v] += f * overlap;
  });
}

void StateVector::apply_dft(const std::string& reg, bool inverse) {
  const int r = reg_index(reg);
  const int dim = regs_[r].dim;
  const double sign = inverse ? -1.0 : 1.0;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<Complex> tmp(dim);
  for_each_group(amp_.size(), stride_[r], dim, [&](size_t base) {
    for (int j = 0; j < dim; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < dim; ++k) {
        const double angle = sign * 2.0 * std::numbers::pi * j * k / dim;
        s += std::polar(1.0, angle) * amp_[base + stride_[r] * k];
      }
      tmp[j] = scale * s;
    }
    for (int j = 0; j < dim; ++j) amp_[base + stride_[r] * j] = tmp[j];
  });
}

void StateVector::apply_cond_xor(const std::string& idx, const std::string& aux, Word x) {
  const int ri = reg_index(idx), ra = reg_index(aux);
  if (regs_[ra].dim != 2) throw std::invalid_argument("apply_cond_xor: aux must be a qubit");
  const int dim = regs_[ri].dim;
  if (dim > 64) throw std::invalid_argument("apply_cond_xor: register dimension above 64");
  // swap aux digits on indices j with x_j = 1
  std::vector<Complex>& a = amp_;
  const size_t si = stride_[ri], sa = stride_[ra];
  for (size_t base = 0; base < a.size(); ++base) {
    const int j = static_cast<int>((base / si) % dim);
    const int b = static_cast<int>((base / sa) % 2);
    if (b == 0 && ((x >> j) & 1ULL)) std::swap(a[base], a[base + sa]);
  }
}

void StateVector::apply_cond_phase(const std::string& idx, const std::string& aux, Word y,
                                   double phi) {
  const int ri = reg_index(idx), ra = reg_index(aux);
  if (regs_[ra].dim != 2) throw std::invalid_argument("apply_cond_phase: aux must be a qubit");
  const int dim = regs_[ri].dim;
  if (dim > 64) throw std::invalid_argument("apply_cond_phase: register dimension above 64");
  const Complex ph = std::polar(1.0, phi);
  for (size_t i = 0; i < amp_.size(); ++i) {
    const int j = static_cast<int>((i / stride_[ri]) % dim);
    const int b = static_cast<int>((i / stride_[ra]) % 2);
    if ((b ^ static_cast<int>((y >> j) & 1ULL)) == 1) amp_[i] *= ph;
  }
}

void StateVector::apply_cond_query(const std::string& ctrl, const std::string& idx, Word z) {
  const int rc = reg_index(ctrl), ri = reg_index(idx);
  if (regs_[rc].dim != 2) throw std::invalid_argument("apply_cond_query: ctrl must be a qubit");
  const int dim = regs_[ri].dim;
  if (dim > 64) throw std::invalid_argument("apply_cond_query: register dimension above 64");
  for (size_t i = 0; i < amp_.size(); ++i) {
    const int c = static_cast<int>((i / stride_[rc]) % 2);
    const int j = static_cast<int>((i / stride_[ri]) % dim);
    if (c == 1 && ((z >> j) & 1ULL)) amp_[i] = -amp_[i];
  }
}

void StateVector::apply_ctrl_expand(const std::string& ctrl, const std::string& idx, int n) {
  const int rc = reg_index(ctrl), ri = reg_index(idx);
  if (regs_[rc].dim != 2) throw std::invalid_argument("apply_ctrl_expand: ctrl must be a qubit");
  const int dim = regs_[ri].dim;
  if (n < 1 || n > dim) throw std::invalid_argument("apply_ctrl_expand: n outside register");
  // Householder reflection sending e_0 to v = (1/sqrt n)(e_0+..+e_{n-1})
  std::vector<double> u(dim, 0.0);
  const double invsq = 1.0 / std::sqrt(static_cast<double>(n));
  u[0] = 1.0 - invsq;
  for (int i = 1; i < n; ++i) u[i] = -invsq;
  double uu = 0.0;
  for (double t : u) uu += t * t;
  std::vector<Complex> col(dim);
  for (size_t base = 0; base < amp_.size(); ++base) {
    const int c = static_cast<int>((base / stride_[rc]) % 2);
    const int j = static_cast<int>((base / stride_[ri]) % dim);
    if (c != 1 || j != 0) continue;
    // process each group once, keyed by its j = 0 slot
    const size_t root = base;
    Complex dot = 0.0;
    for (int v = 0; v < dim; ++v) col[v] = amp_[root + stride_[ri] * static_cast<size_t>(v)];
    if (uu > 1e-30) {
      dot = 0.0;
      for (int v = 0; v < dim; ++v) dot += u[v] * col[v];
      const Complex f = 2.0 * dot / uu;
      for (int v = 0; v < dim; ++v) col[v] -= f * u[v];
    }
    for (int v = 0; v < dim; ++v) amp_[root + stride_[ri] * static_cast<size_t>(v)] = col[v];
  }
}

void StateVector::apply_phase_diag(const std::string& reg, const std::function<Complex(int)>& phase) {
  const int r = reg_index(reg);
  const int dim = regs_[r].dim;
  std::vector<Complex> ph(dim);
  for (int v = 0; v < dim; ++v) ph[v] = phase(v);
  for (size_t i = 0; i < amp_.size(); ++i)
    amp_[i] *= ph[static_cast<size_t>((i / stride_[r]) % dim)];
}

void StateVector::apply_dense(const std::string& reg, const CMatrix& u) {
  const int r = reg_index(reg);
  const int dim = regs_[r].dim;
  if (u.rows != dim || u.cols != dim) throw std::invalid_argument("apply_dense: shape mismatch");
  std::vector<Complex> tmp(dim);
  for_each_group(amp_.size(), stride_[r], dim, [&](size_t base) {
    for (int i = 0; i < dim; ++i) {
      Complex s = 0.0;
      for (int j = 0; j < dim; ++j) s += u.at(i, j) * amp_[base + stride_[r] * j];
      tmp[i] = s;
    }
    for (int i = 0; i < dim; ++i) amp_[base + stride_[r] * i] = tmp[i];
  });
}

void StateVector::apply_hadamard(const std::string& reg) {
  if (reg_dim(reg) != 2) throw std::invalid_argument("apply_hadamard: register must be a qubit");
  apply_dft(reg);  // DFT over Z_2 is the Hadamard
}

void StateVector::apply_cnot(const std::string& ctrl, const std::string& tgt) {
  const int rc = reg_index(ctrl), rt = reg_index(tgt);
  if (regs_[rc].dim != 2 || regs_[rt].dim != 2)
    throw std::invalid_argument("apply_cnot: both registers must be qubits");
  for (size_t i = 0; i < amp_.size(); ++i) {
    const int c = static_cast<int>((i / stride_[rc]) % 2);
    const int t = static_cast<int>((i / stride_[rt]) % 2);
    if (c == 1 && t == 0) std::swap(amp_[i], amp_[i + stride_[rt]]);
  }
}

Complex StateVector::inner_with(const std::vector<Complex>& other) const {
  if (other.size() != amp_.size()) throw std::invalid_argument("inner_with: size mismatch");
  Complex s = 0.0;
  for (size_t i = 0; i < amp_.size(); ++i) s += std::conj(other[i]) * amp_[i];
  return s;
}

std::vector<MeasureBranch> measure_branches(const StateVector& s, const std::string& reg) {
  const int r = s.reg_index(reg);
  const auto& regs = s.registers();
  const int dim = regs[r].dim;

  std::vector<QRegister> rest;
  for (size_t i = 0; i < regs.size(); ++i)
    if (static_cast<int>(i) != r) rest.push_back(regs[i]);
  if (rest.empty()) rest.push_back({"unit", 1});

  // strides in the full and reduced index spaces
  std::vector<size_t> stride(regs.size(), 1);
  for (int i = static_cast<int>(regs.size()) - 2; i >= 0; --i)
    stride[i] = stride[i + 1] * regs[i + 1].dim;

  std::vector<MeasureBranch> out;
  double total = 0.0;
  for (int v = 0; v < dim; ++v) {
    std::vector<Complex> sub;
    sub.reserve(s.total_dim() / dim);
    // walk all full indices whose r-digit equals v, in reduced-index order
    const size_t block = stride[r] * static_cast<size_t>(dim);
    for (size_t base = 0; base < s.total_dim(); base += block)
      for (size_t off = 0; off < stride[r]; ++off)
        sub.push_back(s.amplitudes()[base + stride[r] * static_cast<size_t>(v) + off]);
    double p = 0.0;
    for (const Complex& c : sub) p += std::norm(c);
    total += p;
    if (p <= 1e-10) continue;
    const double scale = 1.0 / std::sqrt(p);
    for (Complex& c : sub) c *= scale;
    StateVector collapsed(rest);
    collapsed.set_amplitudes(std::move(sub));
    out.push_back({v, p, std::move(collapsed)});
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw std::logic_error("measure_branches: probabilities do not sum to 1");
  return out;
}

GroverParams exact_grover_params(int n, int d) {
  if (n < 1 || d < 1 || d > n) throw std::domain_error("exact_grover_params: need 1 <= d <= n");
  GroverParams p;
  const double theta = std::asin(std::sqrt(static_cast<double>(d) / n));
  const double raw = std::numbers::pi / (4.0 * theta) - 0.5;
  p.ell = static_cast<int>(std::ceil(raw - 1e-9));
  if (p.ell < 0) p.ell = 0;
  if (p.ell == 0) {
    // d = n: the uniform state is already supported on marked indices only
    p.phi = 0.0;
    p.varphi = 0.0;
    return p;
  }

  const double a = std::sin((2.0 * p.ell - 1.0) * theta);
  const double b = std::cos((2.0 * p.ell - 1.0) * theta);
  if (std::abs(b) > 1e-14) {
    // unmarked amplitude after G(phi) V_z(varphi):
    //   b + (e^{i phi} - 1) w cos(theta),  w = a e^{i varphi} sin + b cos;
    // solvable iff |1 - b / (w cos)| = 1; scan then bisect on varphi
    auto gap = [&](double varphi) {
      const Complex w = a * std::polar(1.0, varphi) * std::sin(theta) + b * std::cos(theta);
      const Complex t = 1.0 - b / (w * std::cos(theta));
      return std::abs(t) - 1.0;
    };
    const int grid = 20000;
    double lo = -1.0, hi = -1.0;
    double prev = gap(1e-7);
    double prev_x = 1e-7;
    for (int i = 1; i <= grid; ++i) {
      const double x = 1e-7 + (2.0 * std::numbers::pi - 2e-7) * i / grid;
      const double g = gap(x);
      if ((prev <= 0 && g >= 0) || (prev >= 0 && g <= 0)) {
        lo = prev_x;
        hi = x;
        break;
      }
      prev = g;
      prev_x = x;
    }
    if (lo < 0) {
      // no crossing; report the best residual found
      double best = 1e9, best_x = 0;
      for (int i = 0; i <= grid; ++i) {
        const double x = 1e-7 + (2.0 * std::numbers::pi - 2e-7) * i / grid;
        if (std::abs(gap(x)) < best) {
          best = std::abs(gap(x));
          best_x = x;
        }
      }
      throw std::runtime_error("exact_grover_params: no angle solution, residual " +
                               std::to_string(best) + " at varphi " + std::to_string(best_x));
    }
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if ((gap(lo) <= 0) == (gap(mid) <= 0))
        lo = mid;
      else
        hi = mid;
    }
    p.varphi = 0.5 * (lo + hi);
    const Complex w = a * std::polar(1.0, p.varphi) * std::sin(theta) + b * std::cos(theta);
    p.phi = std::arg(1.0 - b / (w * std::cos(theta)));
  } else {
    p.phi = 0.0;
    p.varphi = 0.0;
  }

  const double residual = grover_unmarked_residual(n, d, (Word{1} << d) - 1, p);
  if (residual > 1e-9)
    throw std::runtime_error("exact_grover_params: validation residual " +
                             std::to_string(residual));
  return p;
}

StateVector run_exact_grover(int n, int d, Word z, const GroverParams& params) {
  if (__builtin_popcountll(z) != d)
    throw std::invalid_argument("run_exact_grover: popcount(z) != d");
  StateVector s({{"idx", n}});
  s.set_uniform("idx");
  if (params.ell == 0) return s;
  for (int it = 0; it < params.ell - 1; ++it) {
    s.apply_query("idx", z);
    s.apply_diffusion("idx");
  }
  s.apply_phase_query("idx", z, params.varphi);
  s.apply_param_diffusion("idx", params.phi);
  return s;
}

double grover_unmarked_residual(int n, int d, Word z, const GroverParams& params) {
  StateVector s = run_exact_grover(n, d, z, params);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    if (!((z >> i) & 1ULL)) worst = std::max(worst, std::abs(s.amplitudes()[i]));
  return worst;
}

}  // namespace xcc

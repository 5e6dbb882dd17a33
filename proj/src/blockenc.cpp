#include "rilind/blockenc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "rilind/kernels.hpp"

namespace rilind {

namespace {

constexpr double kZeroCoeff = 0.0;

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p *= 2;
  return p;
}

void push_term(LCUDecomposition& decomp, cplx coeff, ComplexMatrix unitary) {
  const double a = std::abs(coeff);
  if (a == kZeroCoeff) return;
  unitary *= coeff / a;
  if (max_abs_diff(unitary.adjoint() * unitary, ComplexMatrix::identity(unitary.rows())) > 1e-12)
    throw std::invalid_argument("LCU decomposition: term is not unitary after phase absorption");
  decomp.terms.push_back({a, std::move(unitary)});
  decomp.alpha += a;
}

void finalize(LCUDecomposition& decomp) {
  require(decomp.alpha > 0.0, "LCU decomposition: zero alpha");
  decomp.c_dim = next_pow2(std::max<std::size_t>(1, decomp.terms.size()));
}

// 2x2 operator in the Pauli basis: b_I I + b_X X + b_Y Y + b_Z Z.
std::array<cplx, 4> pauli_coeffs_2x2(const ComplexMatrix& a) {
  const std::array<ComplexMatrix, 4> basis{pauli_i(), pauli_x(), pauli_y(), pauli_z()};
  std::array<cplx, 4> out{};
  for (std::size_t q = 0; q < 4; ++q) out[q] = (basis[q] * a).trace() / 2.0;
  return out;
}

}  // namespace

LCUDecomposition decompose_step(const OperatorSum& h0, const Bath& bath, double tau,
                                std::size_t m) {
  require(tau > 0.0, "decompose_step: tau must be positive");
  require(m >= 1, "decompose_step: m must be >= 1");
  const std::size_t d = std::size_t{1} << h0.n_qubits;
  const double rt = std::sqrt(tau);
  const ComplexMatrix id_anc = ComplexMatrix::identity(2);

  LCUDecomposition decomp;
  decomp.target_dim = 2 * d;
  decomp.tau = tau;

  for (const PauliTerm& term : h0.terms) {
    const cplx c = term.coefficient / static_cast<double>(m);
    PauliTerm unit{cplx{1.0, 0.0}, term.ops};
    push_term(decomp, c, kron(unit.dense(), id_anc));
    decomp.alpha_system += std::abs(c);
  }

  const auto b = pauli_coeffs_2x2(bath.interaction.ancilla_lowering);
  const std::array<ComplexMatrix, 4> sigma{pauli_i(), pauli_x(), pauli_y(), pauli_z()};
  for (const PauliTerm& vp : bath.interaction.v.terms) {
    PauliTerm unit{cplx{1.0, 0.0}, vp.ops};
    const ComplexMatrix vd = unit.dense();
    for (std::size_t q = 0; q < 4; ++q) {
      // V (x) a^dag side, then V^dag (x) a side
      const cplx ca = vp.coefficient * std::conj(b[q]);
      const cplx cb = std::conj(vp.coefficient) * b[q];
      push_term(decomp, ca / rt, kron(vd, sigma[q]));
      push_term(decomp, cb / rt, kron(vd.adjoint(), sigma[q]));
      decomp.alpha_interaction += std::abs(ca) + std::abs(cb);
    }
  }

  const double omega = bath.ancilla.omega;
  if (omega != 0.0) {
    push_term(decomp, cplx{omega, 0.0}, kron(ComplexMatrix::identity(d), pauli_z()));
    decomp.alpha_bath = std::abs(omega);
  }

  ComplexMatrix target = kron(h0.dense(), id_anc) * cplx{1.0 / static_cast<double>(m), 0.0};
  target += kron(ComplexMatrix::identity(d), bath.ancilla.bath_hamiltonian());
  target += bath.interaction.dense_interaction() * cplx{1.0 / rt, 0.0};
  decomp.target = std::move(target);
  finalize(decomp);
  return decomp;
}

LCUDecomposition decompose_pauli(const OperatorSum& h) {
  LCUDecomposition decomp;
  decomp.target_dim = std::size_t{1} << h.n_qubits;
  for (const PauliTerm& term : h.terms) {
    PauliTerm unit{cplx{1.0, 0.0}, term.ops};
    push_term(decomp, term.coefficient, unit.dense());
    decomp.alpha_system += std::abs(term.coefficient);
  }
  decomp.target = h.dense();
  finalize(decomp);
  return decomp;
}

LCUDecomposition with_alpha_padding(LCUDecomposition decomp, double target_alpha) {
  require(target_alpha >= decomp.alpha, "with_alpha_padding: cannot shrink alpha");
  const double extra = target_alpha - decomp.alpha;
  if (extra > 0.0) {
    const ComplexMatrix id = ComplexMatrix::identity(decomp.target_dim);
    push_term(decomp, cplx{extra / 2.0, 0.0}, id);
    push_term(decomp, cplx{-extra / 2.0, 0.0}, id);
  }
  finalize(decomp);
  return decomp;
}

ComplexMatrix build_prepare(const LCUDecomposition& decomp) {
  require(decomp.alpha > 0.0, "build_prepare: zero alpha");
  require(decomp.c_dim >= decomp.terms.size(), "build_prepare: control register too small");
  const std::size_t c = decomp.c_dim;
  std::vector<double> amp(c, 0.0);
  for (std::size_t s = 0; s < decomp.terms.size(); ++s)
    amp[s] = std::sqrt(decomp.terms[s].alpha / decomp.alpha);

  // Householder reflection sending e_0 to the (real, unit) amplitude vector.
  std::vector<double> w(amp.begin(), amp.end());
  w[0] -= 1.0;
  double w2 = 0.0;
  for (double v : w) w2 += v * v;
  ComplexMatrix p = ComplexMatrix::identity(c);
  if (w2 > 1e-30) {
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) p(i, j) -= cplx{2.0 * w[i] * w[j] / w2, 0.0};
  }
  return p;
}

ComplexMatrix build_select(const LCUDecomposition& decomp) {
  const std::size_t d = decomp.target_dim, c = decomp.c_dim;
  ComplexMatrix s(c * d, c * d);
  for (std::size_t slot = 0; slot < c; ++slot) {
    const ComplexMatrix* u = slot < decomp.terms.size() ? &decomp.terms[slot].unitary : nullptr;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        s(slot * d + i, slot * d + j) = u ? (*u)(i, j) : (i == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0});
  }
  return s;
}

BlockEncoding make_block_encoding(const LCUDecomposition& decomp) {
  return {build_prepare(decomp), build_select(decomp), decomp.alpha, decomp.target_dim,
          decomp.c_dim};
}

double verify_block(const BlockEncoding& be, const ComplexMatrix& target) {
  require(target.rows() == be.d && target.square(), "verify_block: target dimension mismatch");
  const ComplexMatrix pid = kron(be.prepare, ComplexMatrix::identity(be.d));
  const ComplexMatrix full = pid.adjoint() * be.select * pid;
  double worst = 0.0;
  for (std::size_t i = 0; i < be.d; ++i)
    for (std::size_t j = 0; j < be.d; ++j)
      worst = std::max(worst, std::abs(full(i, j) - target(i, j) / be.alpha));
  return worst;
}

ComplexMatrix build_walk(const BlockEncoding& be) {
  const std::size_t n = be.c_dim * be.d;
  // R = 2 Pi - I with Pi the projector onto (P (x) I)|0>(x)|.> states.
  std::vector<cplx> p0(be.c_dim);
  for (std::size_t s = 0; s < be.c_dim; ++s) p0[s] = be.prepare(s, 0);
  ComplexMatrix r(n, n);
  for (std::size_t s = 0; s < be.c_dim; ++s)
    for (std::size_t t = 0; t < be.c_dim; ++t) {
      const cplx v = 2.0 * p0[s] * std::conj(p0[t]);
      for (std::size_t i = 0; i < be.d; ++i) r(s * be.d + i, t * be.d + i) = v;
    }
  for (std::size_t i = 0; i < n; ++i) r(i, i) -= 1.0;
  return r * be.select;
}

double eigenphase_check(const ComplexMatrix& w, const ComplexMatrix& target, double alpha) {
  require(alpha > 0.0, "eigenphase_check: alpha must be positive");
  if (max_abs_diff(target, target.adjoint()) > 1e-12)
    throw std::invalid_argument("eigenphase_check: target must be Hermitian");
  const auto lambdas = hermitian_eigenvalues(target);
  for (double l : lambdas)
    if (std::abs(l) > alpha * (1.0 + 1e-12))
      throw std::domain_error("eigenphase_check: |lambda| exceeds alpha; invalid encoding");

  std::vector<double> phases;
  for (const cplx& ev : complex_eigenvalues(w)) phases.push_back(std::abs(std::arg(ev)));

  double worst = 0.0;
  for (double l : lambdas) {
    const double theta = std::acos(std::clamp(l / alpha, -1.0, 1.0));
    double best = std::numeric_limits<double>::infinity();
    for (double phi : phases) best = std::min(best, std::abs(phi - theta));
    worst = std::max(worst, best);
  }
  return worst;
}

double query_cost(const QueryCostParams& params) {
  require(params.epsilon > 0.0 && params.epsilon < 1.0, "query_cost: epsilon must be in (0,1)");
  require(params.m >= 1 && params.nu >= 1 && params.t >= 0.0,
          "query_cost: parameters must be positive");
  require(params.alpha_i.size() == params.m && params.omega.size() == params.m,
          "query_cost: per-bath parameter count mismatch");
  const double mm = static_cast<double>(params.m);
  const double nu = static_cast<double>(params.nu);

  const double log_inv = std::log(1.0 / params.epsilon);
  // loglog is only meaningful (> 1) below e^-e; clamp the factor to 1 above.
  const double eps_factor = params.epsilon < std::exp(-std::exp(1.0))
                                ? log_inv / std::log(log_inv)
                                : 1.0;

  double worst = 0.0;
  for (std::size_t n = 0; n < params.m; ++n) {
    const double val = (params.alpha0 + mm * params.omega[n]) * params.t +
                       params.alpha_i[n] * mm * std::sqrt(params.t * nu) +
                       mm * nu * eps_factor;
    worst = std::max(worst, val);
  }
  return worst;
}

}  // namespace rilind

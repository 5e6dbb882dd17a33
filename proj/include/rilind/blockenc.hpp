#ifndef RILIND_BLOCKENC_HPP
#define RILIND_BLOCKENC_HPP

#include <vector>

#include "rilind/rimap.hpp"

namespace rilind {

struct LCUTerm {
  double alpha;           // positive weight; phases absorbed into the unitary
  ComplexMatrix unitary;  // target_dim x target_dim
};

struct LCUDecomposition {
  std::vector<LCUTerm> terms;
  double alpha = 0.0;        // sum of weights
  std::size_t c_dim = 1;     // control dimension, term count padded to a power of two
  std::size_t target_dim = 0;
  ComplexMatrix target;      // dense matrix the terms reconstruct

  // alpha split for the per-step Hamiltonian: alpha = alpha_system +
  // alpha_interaction / sqrt(tau) + alpha_bath.
  double alpha_system = 0.0;
  double alpha_interaction = 0.0;
  double alpha_bath = 0.0;
  double tau = 0.0;
};

/// LCU terms of the per-step Hamiltonian A = H0/m + H_E + H_I / sqrt(tau) on
/// system (x) ancilla: the H0 Pauli terms, the interaction terms expanded in
/// the ancilla Pauli basis with 1/sqrt(tau)-scaled weights, and the omega Z
/// bath term (omitted when omega is 0).
LCUDecomposition decompose_step(const OperatorSum& h0, const Bath& bath, double tau,
                                std::size_t m);

/// LCU terms of a plain Pauli sum. Real coefficients keep the unitaries
/// Hermitian, which the walk-operator eigenphase relation relies on.
LCUDecomposition decompose_pauli(const OperatorSum& h);

/// Pads with +-I weight pairs to inflate the normalization to target_alpha
/// without changing the encoded matrix.
LCUDecomposition with_alpha_padding(LCUDecomposition decomp, double target_alpha);

struct BlockEncoding {
  ComplexMatrix prepare;  // c_dim x c_dim
  ComplexMatrix select;   // (c_dim * d) x (c_dim * d)
  double alpha = 0.0;
  std::size_t d = 0;
  std::size_t c_dim = 1;
};

/// Unitary completion of the amplitude column sqrt(alpha_s / alpha) via a
/// Householder reflection mapping e_0 to it.
ComplexMatrix build_prepare(const LCUDecomposition& decomp);

/// Block-diagonal sum_s |s><s| (x) U_s, identity on pad slots.
ComplexMatrix build_select(const LCUDecomposition& decomp);

BlockEncoding make_block_encoding(const LCUDecomposition& decomp);

/// max |top-left d x d block of (P^dag (x) I) S (P (x) I) - target / alpha|.
double verify_block(const BlockEncoding& be, const ComplexMatrix& target);

/// Walk operator W = R S with R = 2 (P (x) I)|0><0|(P^dag (x) I) - I; its
/// eigenphases on the qubitized subspaces are +-arccos(lambda / alpha).
ComplexMatrix build_walk(const BlockEncoding& be);

/// Worst-case gap between arccos(lambda/alpha) for each eigenvalue of the
/// Hermitian target and the nearest eigenphase of w.
double eigenphase_check(const ComplexMatrix& w, const ComplexMatrix& target, double alpha);

struct QueryCostParams {
  double alpha0 = 0.0;          // system coefficient 1-norm
  std::vector<double> alpha_i;  // interaction coefficient norms per bath
  std::vector<double> omega;    // bath frequencies
  std::size_t m = 1;
  double t = 0.0;
  std::size_t nu = 1;
  double epsilon = 0.0;
};

/// Query-count bound shape, unit constant:
/// max_n [ (a0 + m w_n) t + a_In m sqrt(t nu) + m nu log(1/eps)/loglog(1/eps) ];
/// the last factor clamps to 1 for eps >= e^-e where the asymptotic form is
/// meaningless.
double query_cost(const QueryCostParams& params);

}  // namespace rilind

#endif

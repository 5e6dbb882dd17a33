#ifndef RILIND_MODEL_HPP
#define RILIND_MODEL_HPP

#include <string>
#include <vector>

#include "rilind/linalg.hpp"
#include "rilind/types.hpp"

namespace rilind {

// Single-qubit constants.
ComplexMatrix pauli_i();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix lowering_op();  // (X + iY)/2 = |0><1|

/// One Pauli-string term c * P_0 (x) P_1 (x) ... with ops over {I,X,Y,Z}.
struct PauliTerm {
  cplx coefficient;
  std::string ops;

  ComplexMatrix dense() const;  // site 0 leftmost in the Kronecker fold
};

struct OperatorSum {
  std::size_t n_qubits = 0;
  std::vector<PauliTerm> terms;

  ComplexMatrix dense() const;
  double coefficient_one_norm() const;
};

/// Heisenberg chain sum_k (X_k X_{k+1} + Y_k Y_{k+1} + Z_k Z_{k+1}) + b Z_k,
/// periodic wrap by default (k+1 taken mod N); zero-coefficient field terms
/// are omitted, so the term count is 4N for b != 0.
OperatorSum build_heisenberg(std::size_t n_sites, double b, bool periodic = true);

/// Single-qubit thermal ancilla at inverse temperature beta, free Hamiltonian
/// omega * Z.
struct ThermalAncilla {
  double beta = 0.0;
  double omega = 0.0;

  ComplexMatrix bath_hamiltonian() const;  // omega Z
};

DensityMatrix thermal_state(double beta);  // diag(1, e^-beta)/(1 + e^-beta)
std::vector<cplx> purified_thermal_prep(double beta);  // two-qubit |psi>
std::pair<double, double> z_coefficients(double beta);  // (z, zbar), z + zbar = 1

/// System operator V plus the ancilla-side lowering operator; the dense
/// interaction is V (x) a^dag + V^dag (x) a on system (x) ancilla.
struct InteractionSpec {
  OperatorSum v;
  ComplexMatrix ancilla_lowering;  // 2x2, default (X + iY)/2

  ComplexMatrix dense_v() const { return v.dense(); }
  ComplexMatrix dense_interaction() const;
};

InteractionSpec build_interaction(OperatorSum v);
InteractionSpec build_interaction(OperatorSum v, ComplexMatrix ancilla_lowering);
/// V = lowering operator at one site of an n-qubit register.
InteractionSpec site_lowering_interaction(std::size_t site, std::size_t n_qubits);

}  // namespace rilind

#endif

#ifndef RILIND_RIMAP_HPP
#define RILIND_RIMAP_HPP

#include <vector>

#include "rilind/lindblad.hpp"
#include "rilind/linalg.hpp"
#include "rilind/model.hpp"

namespace rilind {

enum class CouplingKind { limiting, fixed };

/// Limiting mode couples with strength 1/sqrt(tau); fixed mode keeps a
/// constant lambda.
struct CouplingMode {
  CouplingKind kind = CouplingKind::limiting;
  double lambda = 1.0;

  static CouplingMode limiting() { return {CouplingKind::limiting, 0.0}; }
  static CouplingMode fixed(double lambda);
};

enum class TraceMode { iterative, deferred };

struct Bath {
  ThermalAncilla ancilla;
  InteractionSpec interaction;
};

/// One repeated-interactions simulation: system Hamiltonian, per-ancilla bath
/// data, total time t, nu rounds over the m baths.
struct RIConfig {
  OperatorSum h0;
  std::vector<Bath> baths;
  double t = 0.0;
  std::size_t nu = 1;
  CouplingMode coupling = CouplingMode::limiting();
  TraceMode trace_mode = TraceMode::iterative;
  bool h0_rescale = true;
  std::size_t deferred_cap = 10;

  std::size_t m() const { return baths.size(); }
  std::size_t dim() const { return std::size_t{1} << h0.n_qubits; }
  DissipatorSpec dissipator_spec() const;
  /// Target generator: full H0 plus the derived jump operators.
  LindbladGenerator target_generator() const;
};

struct StepUnitary {
  ComplexMatrix matrix;  // dim 2d, system (x) ancilla
  double tau = 0.0;
};

/// Joint unitary of one interaction. Limiting: exp(-i[(H0/m + H_E) tau +
/// H_I sqrt(tau)]); fixed lambda: exp(-i tau (H0/m + H_E + lambda H_I)).
/// Always one exponential of the full exponent, never a split.
StepUnitary step_unitary(const ComplexMatrix& h0_dense, const Bath& bath, double tau,
                         CouplingMode coupling, std::size_t m, bool h0_rescale = true);

/// Tr_E[U (rho (x) rho_E) U^dag].
DensityMatrix ri_step(const DensityMatrix& rho, const StepUnitary& u, const ThermalAncilla& anc);

/// nu rounds of the composed map, baths in ascending order inside each round.
/// Iterative mode refreshes a 2d joint space per step; deferred mode builds
/// the d * 2^(m nu) joint state, applies every step unitary, traces once.
DensityMatrix ri_evolve(const RIConfig& config, const DensityMatrix& rho0);

/// One full round (all m baths once) at interaction time tau, at the given
/// coupling; used by the scan diagnostics.
DensityMatrix ri_round(const RIConfig& config, const DensityMatrix& rho, double tau,
                       CouplingMode coupling);

/// Superoperator of the single-step channel for one bath.
Superoperator ri_step_channel(const RIConfig& config, std::size_t bath_index);

/// ri_evolve with caller-supplied per-bath joint unitaries (dim 2d each);
/// lets the Trotterized implementation reuse the composition and both trace
/// strategies.
DensityMatrix ri_evolve_with_step_unitaries(const RIConfig& config, const DensityMatrix& rho0,
                                            const std::vector<ComplexMatrix>& units);

}  // namespace rilind

#endif

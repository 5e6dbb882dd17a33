#ifndef RILIND_TROTTER_HPP
#define RILIND_TROTTER_HPP

#include <vector>

#include "rilind/rimap.hpp"

namespace rilind {

struct TrotterOrder {
  bool first = true;
  unsigned k = 0;  // even order 2k when !first

  static TrotterOrder first_order() { return {true, 0}; }
  static TrotterOrder even(unsigned k);
};

struct TrotterPlan {
  TrotterOrder order = TrotterOrder::first_order();
  std::size_t repetitions = 1;
  std::vector<std::size_t> term_order;  // permutation; empty means identity
};

/// Stage count: 1 for the first-order formula, 2 * 5^(k-1) for order 2k.
std::size_t upsilon(TrotterOrder order);

/// Exponential-gate count l * Upsilon * r for one product-formula evolution.
std::size_t exponential_gate_count(std::size_t summand_count, const TrotterPlan& plan);

/// Product formula approximating exp(x * sum_i A_i). First order is the plain
/// ordered product; order 2 the symmetric half-step product; order 2k the
/// Suzuki recursion with s_2k = 1/(4 - 4^(1/(2k-1))).
ComplexMatrix product_formula(const std::vector<ComplexMatrix>& summands, cplx x,
                              const TrotterPlan& plan);

/// Conjugation by the product formula, iterated plan.repetitions times at
/// slice tau/r.
DensityMatrix trotter_channel(const DensityMatrix& rho, const std::vector<ComplexMatrix>& summands,
                              double tau, const TrotterPlan& plan);

/// ri_evolve with each step unitary replaced by a product formula over the
/// three-block split {H0/m, H_E, H_I/sqrt(tau)} (per-Pauli-term split of H0
/// when split_h0_terms is set).
DensityMatrix ri_evolve_trotter(const RIConfig& config, const TrotterPlan& plan,
                                const DensityMatrix& rho0, bool split_h0_terms = false);

/// Spectral norms of the commutators entering the first-order cost bound.
struct CommutatorProfile {
  double sum_h0_hi = 0.0;  // sum_j ||[H0_j, H_I]||
  double he_hi = 0.0;      // ||[H_E, H_I]||
  double sum_h0_h0 = 0.0;  // sum_{p,q} ||[H0_p, H0_q]||
};

CommutatorProfile commutator_profile(const OperatorSum& h0, const ThermalAncilla& bath,
                                     const InteractionSpec& interaction);

struct Cost2kParams {
  std::size_t l = 1;
  unsigned k = 1;
  double alpha0 = 0.0;
  std::vector<double> alpha_i;  // per bath
  std::vector<double> omega;    // per bath
  std::size_t m = 1;
  double t = 0.0;
  std::size_t nu = 1;
  double epsilon = 0.0;
};

/// Order-2k gate-count bound shape, unit constant:
/// l Upsilon max_n ((a0 + m w_n) t + m a_In sqrt(nu t))^(1+1/2k) / (m nu eps^(1/2k)).
double cost_2k(const Cost2kParams& params);

struct CostFirstParams {
  std::size_t l = 1;
  std::size_t m = 1;
  double t = 0.0;
  std::size_t nu = 1;
  double epsilon = 0.0;
};

/// First-order gate-count bound, unit constant:
/// l [ t^(3/2)/(2 eps sqrt(nu)) (sum ||[H0_j,H_I]|| + m ||[H_E,H_I]||)
///   + t^2/(2 eps nu) sum ||[H0_p,H0_q]|| / m ].
double cost_first(const CommutatorProfile& profile, const CostFirstParams& params);

}  // namespace rilind

#endif

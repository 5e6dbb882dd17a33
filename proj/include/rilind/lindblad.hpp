#ifndef RILIND_LINDBLAD_HPP
#define RILIND_LINDBLAD_HPP

#include <optional>
#include <vector>

#include "rilind/linalg.hpp"
#include "rilind/model.hpp"

namespace rilind {

/// Generator d(rho)/dt = -i[H0, rho] + sum_j L_j rho L_j^dag - {L_j^dag L_j, rho}/2.
struct LindbladGenerator {
  ComplexMatrix h0;
  std::vector<ComplexMatrix> jumps;

  std::size_t dim() const { return h0.rows(); }
};

/// Hermitian-pair interactions with their thermal ancillae; feeds both the
/// double-commutator dissipator and the derived jump operators.
struct DissipatorSpec {
  std::vector<InteractionSpec> interactions;
  std::vector<ThermalAncilla> ancillae;

  std::size_t size() const { return interactions.size(); }
};

struct taylor_divergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct bath_criteria_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ComplexMatrix apply_generator(const LindbladGenerator& g, const ComplexMatrix& rho);

/// Column-stacking vectorization of the generator.
Superoperator liouvillian_matrix(const LindbladGenerator& g);

DensityMatrix propagate_exact(const LindbladGenerator& g, const DensityMatrix& rho, double t);

/// Truncated series rho + sum_{j<=order} t^j L^j(rho)/j!; refuses when
/// t * guard_norm exceeds 1, mirroring the observed series divergence.
/// guard_norm defaults to be_norm(g).
DensityMatrix propagate_taylor(const LindbladGenerator& g, const DensityMatrix& rho, double t,
                               unsigned order, std::optional<double> guard_norm = std::nullopt);

/// -1/2 sum_k Tr_E [H_Ik, [H_Ik, rho (x) rho_Ek]] evaluated directly.
ComplexMatrix dissipator_from_interactions(const DissipatorSpec& spec, const ComplexMatrix& rho);

/// Jump operators {V_k sqrt(z_k), V_k^dag sqrt(zbar_k)}, k ascending; requires
/// the bath criteria to hold for every k.
std::vector<ComplexMatrix> derive_jumps(const DissipatorSpec& spec);

/// True iff Tr(B_k^2 rho_Ek) and Tr((B_k^dag)^2 rho_Ek) both vanish (1e-12).
bool check_bath_criteria(const DissipatorSpec& spec, std::size_t k);

/// Block-encoding norm proxy ||H0|| + sum_j ||L_j||^2 (spectral norms);
/// half_dissipator selects the alternative convention with a 1/2 factor.
double be_norm(const LindbladGenerator& g, bool half_dissipator = false);

/// Full generator for a dissipator spec: -i[H0,.] plus the double-commutator
/// dissipators, assembled by applying the map to a matrix basis. Valid with
/// or without the bath criteria.
Superoperator liouvillian_from_spec(const ComplexMatrix& h0, const DissipatorSpec& spec);

}  // namespace rilind

#endif

#include "rilind/rimap.hpp"

#include <cmath>

#include "rilind/kernels.hpp"

namespace rilind {

CouplingMode CouplingMode::fixed(double lambda) {
  require(lambda > 0.0, "CouplingMode::fixed: lambda must be positive");
  return {CouplingKind::fixed, lambda};
}

DissipatorSpec RIConfig::dissipator_spec() const {
  DissipatorSpec spec;
  for (const Bath& b : baths) {
    spec.interactions.push_back(b.interaction);
    spec.ancillae.push_back(b.ancilla);
  }
  return spec;
}

LindbladGenerator RIConfig::target_generator() const {
  return {h0.dense(), derive_jumps(dissipator_spec())};
}

StepUnitary step_unitary(const ComplexMatrix& h0_dense, const Bath& bath, double tau,
                         CouplingMode coupling, std::size_t m, bool h0_rescale) {
  require(tau > 0.0, "step_unitary: tau must be positive");
  require(m >= 1, "step_unitary: m must be >= 1");
  const std::size_t d = h0_dense.rows();
  const ComplexMatrix id_sys = ComplexMatrix::identity(d);
  ComplexMatrix h0_eff = h0_dense;
  if (h0_rescale) h0_eff *= cplx{1.0 / static_cast<double>(m), 0.0};

  ComplexMatrix free_part = kron(h0_eff, ComplexMatrix::identity(2));
  free_part += kron(id_sys, bath.ancilla.bath_hamiltonian());
  const ComplexMatrix hi = bath.interaction.dense_interaction();
  require(hi.rows() == 2 * d, "step_unitary: interaction dimension mismatch");

  ComplexMatrix exponent(2 * d, 2 * d);
  if (coupling.kind == CouplingKind::limiting) {
    exponent = free_part * cplx{tau, 0.0} + hi * cplx{std::sqrt(tau), 0.0};
  } else {
    exponent = (free_part + hi * cplx{coupling.lambda, 0.0}) * cplx{tau, 0.0};
  }
  StepUnitary u{expm(exponent * cplx{0.0, -1.0}), tau};
  if (max_abs_diff(u.matrix.adjoint() * u.matrix, ComplexMatrix::identity(2 * d)) > 1e-12)
    throw std::runtime_error("step_unitary: result fails the unitarity tolerance");
  return u;
}

namespace {

// Tr_E[U (x (x) rho_E) U^dag] for arbitrary x; the linear extension behind
// both ri_step and the channel-matrix reconstruction.
ComplexMatrix step_apply(const ComplexMatrix& x, const StepUnitary& u,
                         const ComplexMatrix& rho_e) {
  const std::size_t d = x.rows();
  const ComplexMatrix joint = kron(x, rho_e);
  const ComplexMatrix evolved = u.matrix * joint * u.matrix.adjoint();
  return partial_trace(evolved, {d, 2}, {0});
}

}  // namespace

DensityMatrix ri_step(const DensityMatrix& rho, const StepUnitary& u, const ThermalAncilla& anc) {
  return DensityMatrix(step_apply(rho.matrix(), u, thermal_state(anc.beta).matrix()));
}

DensityMatrix ri_round(const RIConfig& config, const DensityMatrix& rho, double tau,
                       CouplingMode coupling) {
  const ComplexMatrix h0d = config.h0.dense();
  DensityMatrix state = rho;
  for (const Bath& bath : config.baths) {
    const StepUnitary u = step_unitary(h0d, bath, tau, coupling, config.m(), config.h0_rescale);
    state = ri_step(state, u, bath.ancilla);
  }
  return state;
}

namespace {

DensityMatrix ri_evolve_iterative(const RIConfig& config, const DensityMatrix& rho0,
                                  const std::vector<ComplexMatrix>& units) {
  DensityMatrix state = rho0;
  const double tau = config.t / static_cast<double>(config.nu);
  for (std::size_t round = 0; round < config.nu; ++round)
    for (std::size_t n = 0; n < config.m(); ++n)
      state = ri_step(state, {units[n], tau}, config.baths[n].ancilla);
  return state;
}

DensityMatrix ri_evolve_deferred(const RIConfig& config, const DensityMatrix& rho0,
                                 const std::vector<ComplexMatrix>& units) {
  const std::size_t kappa = config.m() * config.nu;
  if (kappa > config.deferred_cap)
    throw std::domain_error("ri_evolve: deferred ancilla count exceeds the cap");
  const std::size_t d = config.dim();
  if ((d << kappa) > dimension_cap())
    throw std::domain_error("ri_evolve: deferred joint dimension exceeds the cap");

  ComplexMatrix joint = rho0.matrix();
  std::vector<std::size_t> dims{d};
  for (std::size_t j = 0; j < kappa; ++j) {
    joint = kron(joint, thermal_state(config.baths[j % config.m()].ancilla.beta).matrix());
    dims.push_back(2);
  }
  for (std::size_t j = 0; j < kappa; ++j)
    joint = conjugate_on_factors(joint, dims, 0, 1 + j, units[j % config.m()]);
  return DensityMatrix(partial_trace(joint, dims, {0}));
}

}  // namespace

DensityMatrix ri_evolve_with_step_unitaries(const RIConfig& config, const DensityMatrix& rho0,
                                            const std::vector<ComplexMatrix>& units) {
  require(!config.baths.empty(), "ri_evolve: at least one bath required");
  require(units.size() == config.m(), "ri_evolve: one step unitary per bath required");
  require(rho0.dim() == config.dim(), "ri_evolve: state dimension mismatch");
  require(config.nu >= 1, "ri_evolve: nu must be >= 1");
  return config.trace_mode == TraceMode::iterative ? ri_evolve_iterative(config, rho0, units)
                                                   : ri_evolve_deferred(config, rho0, units);
}

DensityMatrix ri_evolve(const RIConfig& config, const DensityMatrix& rho0) {
  if (config.t == 0.0) return rho0;
  const double tau = config.t / static_cast<double>(config.nu);
  const ComplexMatrix h0d = config.h0.dense();
  std::vector<ComplexMatrix> units;
  units.reserve(config.m());
  for (const Bath& bath : config.baths)
    units.push_back(
        step_unitary(h0d, bath, tau, config.coupling, config.m(), config.h0_rescale).matrix);
  return ri_evolve_with_step_unitaries(config, rho0, units);
}

Superoperator ri_step_channel(const RIConfig& config, std::size_t bath_index) {
  require(bath_index < config.m(), "ri_step_channel: bath index out of range");
  const std::size_t d = config.dim();
  require(d * d <= dimension_cap(), "ri_step_channel: superoperator dimension exceeds the cap");
  const double tau = config.t / static_cast<double>(config.nu);
  const Bath& bath = config.baths[bath_index];
  const StepUnitary u =
      step_unitary(config.h0.dense(), bath, tau, config.coupling, config.m(), config.h0_rescale);
  const ComplexMatrix rho_e = thermal_state(bath.ancilla.beta).matrix();

  ComplexMatrix m(d * d, d * d);
  ComplexMatrix e(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      e(i, j) = 1.0;
      const ComplexMatrix out = step_apply(e, u, rho_e);
      e(i, j) = 0.0;
      const auto v = vec(out);
      for (std::size_t r = 0; r < d * d; ++r) m(r, j * d + i) = v[r];
    }
  }
  return {d, std::move(m)};
}

}  // namespace rilind

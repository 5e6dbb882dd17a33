#include "rilind/bounds.hpp"

#include <cmath>

#include "rilind/kernels.hpp"

namespace rilind {

std::string to_string(NormProxy proxy) {
  return proxy == NormProxy::be_norm ? "be_norm" : "induced_upper";
}

double l_norm_proxy(const RIConfig& config, NormProxy proxy) {
  if (proxy == NormProxy::be_norm) return be_norm(config.target_generator());
  const Superoperator liou = liouvillian_from_spec(config.h0.dense(), config.dissipator_spec());
  // Certified upper bound only; no sampling needed for the proxy.
  return std::sqrt(static_cast<double>(config.dim())) * spectral_norm(liou.matrix());
}

namespace {

std::vector<double> gammas(const RIConfig& config) {
  const double h0_norm = spectral_norm(config.h0.dense());
  std::vector<double> out;
  out.reserve(config.m());
  for (const Bath& bath : config.baths) {
    const double he = std::abs(bath.ancilla.omega);  // ||omega Z|| = |omega|
    const double hi = spectral_norm(bath.interaction.dense_interaction());
    out.push_back(std::max({h0_norm, he, hi}));
  }
  return out;
}

double bound_core(const RIConfig& config, double l_norm, const std::vector<double>& gamma) {
  double gmax = 0.0;
  for (double g : gamma) gmax = std::max(gmax, g);
  const double g4 = gmax * gmax * gmax * gmax;
  return l_norm * l_norm + static_cast<double>(config.m()) * g4;
}

}  // namespace

BoundReport theorem1_bound(const RIConfig& config, NormProxy proxy, double epsilon) {
  require(epsilon > 0.0, "theorem1_bound: epsilon must be positive");
  BoundReport report;
  report.proxy = proxy;
  report.epsilon = epsilon;
  report.gamma = gammas(config);
  report.l_norm = l_norm_proxy(config, proxy);
  const double core = bound_core(config, report.l_norm, report.gamma);
  const double t2 = config.t * config.t;
  report.thm1_value = t2 / static_cast<double>(config.nu) * core;
  report.nu_required = static_cast<std::size_t>(std::max(1.0, std::ceil(t2 / epsilon * core)));
  report.kappa = config.m() * config.nu;
  const double h0_norm = spectral_norm(config.h0.dense());
  report.second_order_value =
      t2 / (static_cast<double>(config.m()) * static_cast<double>(config.nu)) * h0_norm * h0_norm +
      t2 / static_cast<double>(config.nu) * report.l_norm * report.l_norm;
  return report;
}

std::size_t nu_required(const RIConfig& config, double epsilon, NormProxy proxy) {
  require(epsilon > 0.0, "nu_required: epsilon must be positive");
  const double core = bound_core(config, l_norm_proxy(config, proxy), gammas(config));
  return static_cast<std::size_t>(std::max(1.0, std::ceil(config.t * config.t / epsilon * core)));
}

double second_order_bound(const RIConfig& config, NormProxy proxy) {
  return theorem1_bound(config, proxy, 1.0).second_order_value;
}

std::vector<ScanRow> epsilon_lambda_scan(const RIConfig& config, double lambda_fixed,
                                         const std::vector<double>& tau_grid,
                                         const DensityMatrix& test_state) {
  require(lambda_fixed > 0.0, "epsilon_lambda_scan: lambda must be positive");
  for (std::size_t i = 0; i + 1 < tau_grid.size(); ++i)
    require(tau_grid[i] > 0.0 && tau_grid[i] < tau_grid[i + 1],
            "epsilon_lambda_scan: tau grid must be positive and ascending");
  if (!tau_grid.empty())
    require(tau_grid.back() > 0.0, "epsilon_lambda_scan: tau grid must be positive");

  const Superoperator liou = liouvillian_from_spec(config.h0.dense(), config.dissipator_spec());
  std::vector<ScanRow> rows(tau_grid.size());

  const long n = static_cast<long>(tau_grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const double tau = tau_grid[i];
    const DensityMatrix limiting =
        ri_round(config, test_state, tau, CouplingMode::limiting());
    const DensityMatrix fixed =
        ri_round(config, test_state, tau, CouplingMode::fixed(lambda_fixed));
    ComplexMatrix gen = liou.matrix();
    gen *= cplx{tau, 0.0};
    const ComplexMatrix exact =
        Superoperator(config.dim(), expm(gen)).apply(test_state.matrix());
    rows[i] = {tau, trace_distance(fixed.matrix(), limiting.matrix()),
               trace_distance(limiting.matrix(), exact)};
  }
  return rows;
}

}  // namespace rilind

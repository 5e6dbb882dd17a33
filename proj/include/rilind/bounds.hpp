#ifndef RILIND_BOUNDS_HPP
#define RILIND_BOUNDS_HPP

#include <string>
#include <vector>

#include "rilind/rimap.hpp"

namespace rilind {

enum class NormProxy { be_norm, induced_upper };

std::string to_string(NormProxy proxy);

struct BoundReport {
  std::vector<double> gamma;  // per-bath max(||H0||, ||H_E_n||, ||H_I_n||)
  double l_norm = 0.0;
  NormProxy proxy = NormProxy::be_norm;
  double thm1_value = 0.0;         // (t^2/nu)(||L||^2 + m max gamma^4)
  std::size_t nu_required = 1;     // ceil((t^2/eps)(||L||^2 + m max gamma^4))
  std::size_t kappa = 1;           // m * nu
  double second_order_value = 0.0; // (t^2/m nu)||H0||^2 + (t^2/nu)||L||^2
  double epsilon = 0.0;            // the eps nu_required was evaluated at
};

/// Error-bound evaluator with unit constants; gamma from dense spectral norms.
BoundReport theorem1_bound(const RIConfig& config, NormProxy proxy = NormProxy::be_norm,
                           double epsilon = 0.01);

std::size_t nu_required(const RIConfig& config, double epsilon,
                        NormProxy proxy = NormProxy::be_norm);

double second_order_bound(const RIConfig& config, NormProxy proxy = NormProxy::be_norm);

/// ||L|| value for the selected proxy.
double l_norm_proxy(const RIConfig& config, NormProxy proxy);

struct ScanRow {
  double tau;
  double eps_lambda;  // ||fixed-lambda round - limiting round||_1 on the test state
  double eps_tau;     // ||limiting round - exp(tau L)||_1 on the test state
};

/// Per-tau split of the coupling error and the discretization error; the
/// columns fit slopes ~1 and ~2 respectively when Tr(B^2 rho_E) != 0.
std::vector<ScanRow> epsilon_lambda_scan(const RIConfig& config, double lambda_fixed,
                                         const std::vector<double>& tau_grid,
                                         const DensityMatrix& test_state);

}  // namespace rilind

#endif

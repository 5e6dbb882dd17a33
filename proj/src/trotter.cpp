#include "rilind/trotter.hpp"

#include <cmath>
#include <map>

#include "rilind/kernels.hpp"

namespace rilind {

TrotterOrder TrotterOrder::even(unsigned k) {
  require(k >= 1, "TrotterOrder::even: k must be >= 1");
  return {false, k};
}

std::size_t upsilon(TrotterOrder order) {
  if (order.first) return 1;
  std::size_t u = 2;
  for (unsigned i = 1; i < order.k; ++i) u *= 5;
  return u;
}

std::size_t exponential_gate_count(std::size_t summand_count, const TrotterPlan& plan) {
  return summand_count * upsilon(plan.order) * plan.repetitions;
}

namespace {

class FormulaBuilder {
 public:
  FormulaBuilder(const std::vector<ComplexMatrix>& summands, cplx x) : summands_(summands), x_(x) {}

  // exp(A_i * x * scale), cached per (i, scale); the recursion revisits the
  // same few scales many times.
  const ComplexMatrix& exp_term(std::size_t i, double scale) {
    auto key = std::make_pair(i, scale);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    ComplexMatrix e = expm(summands_[i] * (x_ * cplx{scale, 0.0}));
    return cache_.emplace(key, std::move(e)).first->second;
  }

  ComplexMatrix first_order(double scale) {
    ComplexMatrix out = exp_term(0, scale);
    for (std::size_t i = 1; i < summands_.size(); ++i) out = out * exp_term(i, scale);
    return out;
  }

  ComplexMatrix strang(double scale) {
    const std::size_t l = summands_.size();
    ComplexMatrix out = exp_term(0, scale / 2.0);
    for (std::size_t i = 1; i < l; ++i) out = out * exp_term(i, scale / 2.0);
    for (std::size_t i = l; i-- > 0;) out = out * exp_term(i, scale / 2.0);
    return out;
  }

  ComplexMatrix suzuki(unsigned k, double scale) {
    if (k == 1) return strang(scale);
    const double s = 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * k - 1.0)));
    const ComplexMatrix outer = suzuki(k - 1, s * scale);
    const ComplexMatrix inner = suzuki(k - 1, (1.0 - 4.0 * s) * scale);
    const ComplexMatrix outer2 = outer * outer;
    return outer2 * inner * outer2;
  }

 private:
  const std::vector<ComplexMatrix>& summands_;
  cplx x_;
  std::map<std::pair<std::size_t, double>, ComplexMatrix> cache_;
};

std::vector<ComplexMatrix> permuted(const std::vector<ComplexMatrix>& summands,
                                    const std::vector<std::size_t>& order) {
  if (order.empty()) return summands;
  require(order.size() == summands.size(), "TrotterPlan: term_order length mismatch");
  std::vector<ComplexMatrix> out;
  out.reserve(summands.size());
  for (std::size_t i : order) {
    require(i < summands.size(), "TrotterPlan: term_order index out of range");
    out.push_back(summands[i]);
  }
  return out;
}

}  // namespace

ComplexMatrix product_formula(const std::vector<ComplexMatrix>& summands, cplx x,
                              const TrotterPlan& plan) {
  require(!summands.empty(), "product_formula: need at least one summand");
  const std::size_t n = summands.front().rows();
  for (const ComplexMatrix& a : summands)
    require(a.square() && a.rows() == n, "product_formula: summand shape mismatch");
  const std::vector<ComplexMatrix> ordered = permuted(summands, plan.term_order);
  FormulaBuilder builder(ordered, x);
  return plan.order.first ? builder.first_order(1.0) : builder.suzuki(plan.order.k, 1.0);
}

DensityMatrix trotter_channel(const DensityMatrix& rho, const std::vector<ComplexMatrix>& summands,
                              double tau, const TrotterPlan& plan) {
  require(plan.repetitions >= 1, "trotter_channel: repetitions must be >= 1");
  if (tau == 0.0) return rho;
  const double slice = tau / static_cast<double>(plan.repetitions);
  const ComplexMatrix s = product_formula(summands, cplx{0.0, -slice}, plan);
  ComplexMatrix u = s;
  for (std::size_t i = 1; i < plan.repetitions; ++i) u = u * s;
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

DensityMatrix ri_evolve_trotter(const RIConfig& config, const TrotterPlan& plan,
                                const DensityMatrix& rho0, bool split_h0_terms) {
  require(plan.repetitions >= 1, "ri_evolve_trotter: repetitions must be >= 1");
  if (config.t == 0.0) return rho0;
  const double tau = config.t / static_cast<double>(config.nu);
  const double r = static_cast<double>(plan.repetitions);
  const std::size_t d = config.dim();
  const double m = static_cast<double>(config.m());
  const ComplexMatrix id_sys = ComplexMatrix::identity(d);
  const ComplexMatrix id_anc = ComplexMatrix::identity(2);

  std::vector<ComplexMatrix> units;
  units.reserve(config.m());
  for (const Bath& bath : config.baths) {
    std::vector<ComplexMatrix> summands;
    const double h0_scale = (config.h0_rescale ? tau / m : tau) / r;
    if (split_h0_terms) {
      for (const PauliTerm& term : config.h0.terms)
        summands.push_back(kron(term.dense(), id_anc) * cplx{h0_scale, 0.0});
    } else {
      summands.push_back(kron(config.h0.dense(), id_anc) * cplx{h0_scale, 0.0});
    }
    summands.push_back(kron(id_sys, bath.ancilla.bath_hamiltonian()) * cplx{tau / r, 0.0});
    const double hi_scale = (config.coupling.kind == CouplingKind::limiting)
                                ? std::sqrt(tau)
                                : config.coupling.lambda * tau;
    summands.push_back(bath.interaction.dense_interaction() * cplx{hi_scale / r, 0.0});

    const ComplexMatrix s = product_formula(summands, cplx{0.0, -1.0}, plan);
    ComplexMatrix u = s;
    for (std::size_t i = 1; i < plan.repetitions; ++i) u = u * s;
    units.push_back(std::move(u));
  }
  return ri_evolve_with_step_unitaries(config, rho0, units);
}

CommutatorProfile commutator_profile(const OperatorSum& h0, const ThermalAncilla& bath,
                                     const InteractionSpec& interaction) {
  const std::size_t d = std::size_t{1} << h0.n_qubits;
  const ComplexMatrix id_anc = ComplexMatrix::identity(2);
  const ComplexMatrix hi = interaction.dense_interaction();
  require(hi.rows() == 2 * d, "commutator_profile: dimension mismatch");
  const ComplexMatrix he = kron(ComplexMatrix::identity(d), bath.bath_hamiltonian());

  auto comm = [](const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; };

  const ComplexMatrix h0_full = kron(h0.dense(), id_anc);
  if (spectral_norm(comm(he, h0_full)) > 1e-10)
    throw std::invalid_argument("commutator_profile: [H_E, H0] != 0; malformed embedding");

  CommutatorProfile profile;
  std::vector<ComplexMatrix> h0_terms;
  h0_terms.reserve(h0.terms.size());
  for (const PauliTerm& term : h0.terms) h0_terms.push_back(term.dense());

  for (const ComplexMatrix& hj : h0_terms)
    profile.sum_h0_hi += spectral_norm(comm(kron(hj, id_anc), hi));
  profile.he_hi = spectral_norm(comm(he, hi));
  for (const ComplexMatrix& hp : h0_terms)
    for (const ComplexMatrix& hq : h0_terms) profile.sum_h0_h0 += spectral_norm(comm(hp, hq));
  return profile;
}

double cost_2k(const Cost2kParams& params) {
  require(params.epsilon > 0.0 && params.epsilon < 1.0, "cost_2k: epsilon must be in (0,1)");
  require(params.k >= 1 && params.l >= 1 && params.m >= 1 && params.nu >= 1 && params.t > 0.0,
          "cost_2k: parameters must be positive");
  require(params.alpha_i.size() == params.m && params.omega.size() == params.m,
          "cost_2k: per-bath parameter count mismatch");
  const double mm = static_cast<double>(params.m);
  const double nu = static_cast<double>(params.nu);
  double worst = 0.0;
  for (std::size_t n = 0; n < params.m; ++n) {
    const double bracket = (params.alpha0 + mm * params.omega[n]) * params.t +
                           mm * params.alpha_i[n] * std::sqrt(nu * params.t);
    worst = std::max(worst, bracket);
  }
  const double expo = 1.0 + 1.0 / (2.0 * params.k);
  const double ups = static_cast<double>(upsilon(TrotterOrder::even(params.k)));
  return static_cast<double>(params.l) * ups * std::pow(worst, expo) /
         (mm * nu * std::pow(params.epsilon, 1.0 / (2.0 * params.k)));
}

double cost_first(const CommutatorProfile& profile, const CostFirstParams& params) {
  require(params.epsilon > 0.0 && params.epsilon < 1.0, "cost_first: epsilon must be in (0,1)");
  require(params.l >= 1 && params.m >= 1 && params.nu >= 1 && params.t >= 0.0,
          "cost_first: parameters must be positive");
  const double mm = static_cast<double>(params.m);
  const double nu = static_cast<double>(params.nu);
  const double t32 = std::pow(params.t, 1.5) / (2.0 * params.epsilon * std::sqrt(nu)) *
                     (profile.sum_h0_hi + mm * profile.he_hi);
  const double t2 =
      params.t * params.t / (2.0 * params.epsilon * nu) * profile.sum_h0_h0 / mm;
  return static_cast<double>(params.l) * (t32 + t2);
}

}  // namespace rilind

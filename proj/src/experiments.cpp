#include "rilind/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "rilind/blockenc.hpp"
#include "rilind/bounds.hpp"
#include "rilind/kernels.hpp"
#include "rilind/trotter.hpp"

namespace rilind {

namespace {

constexpr const char* kAppendixCDefaults = R"(
system.type = heisenberg
system.n_sites = 4
system.b = 0.5
bath[0].beta = 1.0
bath[0].omega = 0.1
interaction[0].site = 0
bath[1].beta = 1.0
bath[1].omega = 0.1
interaction[1].site = 1
bath[2].beta = 1.0
bath[2].omega = 0.1
interaction[2].site = 2
bath[3].beta = 1.0
bath[3].omega = 0.1
interaction[3].site = 3
)";

constexpr const char* kScanDefaults = R"(
system.type = pauli
system.n_qubits = 1
system.terms = 0.5 Z
bath[0].beta = 1.0
bath[0].omega = 0.1
interaction[0].pauli_sum = 1 X
interaction[0].ancilla = 0.5 X
)";

bool has_model_keys(const KeyValueConfig& kv) {
  for (const auto& [key, value] : kv.entries())
    if (key.rfind("system.", 0) == 0 || key.rfind("bath[", 0) == 0 ||
        key.rfind("interaction[", 0) == 0)
      return true;
  return false;
}

ModelDescription model_from(const ExperimentConfig& config, const char* defaults) {
  if (has_model_keys(config.kv)) return build_model(config.kv);
  return build_model(KeyValueConfig::parse_text(defaults));
}

DensityMatrix initial_state(const ExperimentConfig& config, std::size_t dim) {
  const std::string kind = config.kv.get_string("state", "mixed");
  if (kind == "mixed") return DensityMatrix::maximally_mixed(dim);
  if (kind == "pure0") {
    std::vector<cplx> amp(dim, cplx{0.0, 0.0});
    amp[0] = 1.0;
    return DensityMatrix::pure(amp);
  }
  if (kind == "random_pure") {
    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> amp(dim);
    double norm = 0.0;
    for (auto& a : amp) {
      a = cplx{gauss(rng), gauss(rng)};
      norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto& a : amp) a /= norm;
    return DensityMatrix::pure(amp);
  }
  throw std::runtime_error("state must be mixed, pure0 or random_pure: " + kind);
}

void add_provenance(nlohmann::json& summary, const ExperimentConfig& config) {
  summary["seed"] = config.seed;
  for (const auto& [key, value] : config.kv.entries()) summary["config." + key] = value;
}

void add_provenance(ResultTable& table, const ExperimentConfig& config) {
  table.metadata.emplace_back("seed", std::to_string(config.seed));
  for (const auto& [key, value] : config.kv.entries()) table.metadata.emplace_back(key, value);
}

struct WindowFit {
  double slope;
  std::size_t points;
};

WindowFit fit_window(const std::vector<double>& xs, const std::vector<double>& ys, double xmin,
                     double xmax) {
  std::vector<double> fx, fy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] >= xmin && xs[i] <= xmax && ys[i] > 0.0) {
      fx.push_back(xs[i]);
      fy.push_back(ys[i]);
    }
  }
  return {fit_loglog_slope(fx, fy), fx.size()};
}

}  // namespace

ExperimentConfig ExperimentConfig::assemble(const std::string& config_path,
                                            const std::vector<std::string>& overrides,
                                            std::uint64_t seed) {
  ExperimentConfig out;
  out.seed = seed;
  if (!config_path.empty()) out.kv = KeyValueConfig::parse_file(config_path);
  if (out.kv.has("model.file")) {
    // model file keys are weaker than anything set inline
    KeyValueConfig merged = KeyValueConfig::parse_file(out.kv.get_string("model.file", ""));
    for (const auto& [key, value] : out.kv.entries()) merged.set(key, value);
    out.kv = merged;
  }
  for (const std::string& assignment : overrides) out.kv.set_from_assignment(assignment);
  return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  require(lo > 0.0 && hi > lo && points >= 2, "log_grid: need 0 < lo < hi and >= 2 points");
  std::vector<double> out(points);
  const double ratio = hi / lo;
  for (std::size_t i = 0; i < points; ++i)
    out[i] = lo * std::pow(ratio, static_cast<double>(i) / static_cast<double>(points - 1));
  return out;
}

double fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  require(xs.size() == ys.size(), "fit_loglog_slope: length mismatch");
  if (xs.size() < 2) throw std::runtime_error("fit window empty: fewer than two usable points");
  double mx = 0.0, my = 0.0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxy += dx * (std::log(ys[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw std::runtime_error("fit window empty: degenerate abscissa");
  return sxy / sxx;
}

ModelDescription default_appendix_c_model() {
  return build_model(KeyValueConfig::parse_text(kAppendixCDefaults));
}

ModelDescription default_scan_model() {
  return build_model(KeyValueConfig::parse_text(kScanDefaults));
}

namespace {

NormProxy proxy_from(const ExperimentConfig& config) {
  const std::string name = config.kv.get_string("norm_proxy", "be_norm");
  if (name == "be_norm") return NormProxy::be_norm;
  if (name == "induced_upper") return NormProxy::induced_upper;
  throw std::runtime_error("norm_proxy must be be_norm or induced_upper: " + name);
}

TraceMode trace_mode_from(const ExperimentConfig& config) {
  const std::string name = config.kv.get_string("trace_mode", "iterative");
  if (name == "iterative") return TraceMode::iterative;
  if (name == "deferred") return TraceMode::deferred;
  throw std::runtime_error("trace_mode must be iterative or deferred: " + name);
}

RIConfig base_ri_config(const ExperimentConfig& config, ModelDescription model) {
  RIConfig ri;
  ri.h0 = std::move(model.h0);
  ri.baths = std::move(model.baths);
  ri.nu = config.kv.get_size("nu", 10);
  ri.trace_mode = trace_mode_from(config);
  ri.h0_rescale = config.kv.get_bool("h0_rescale", true);
  const std::string coupling = config.kv.get_string("coupling", "limiting");
  if (coupling == "limiting") {
    ri.coupling = CouplingMode::limiting();
  } else if (coupling == "fixed") {
    ri.coupling = CouplingMode::fixed(config.kv.get_double("lambda", 1.0));
  } else {
    throw std::runtime_error("coupling must be limiting or fixed: " + coupling);
  }
  return ri;
}

// Grid sweep of || engine_a(t) - engine_b(t) ||_1 with guard-tripped points
// turned into comment rows.
struct SweepResult {
  std::vector<double> ts;
  std::vector<double> errs;  // only rows that evaluated
  std::vector<std::string> notes;
};

template <typename EngineA, typename EngineB>
SweepResult sweep_distance(const std::vector<double>& grid, const EngineA& a, const EngineB& b) {
  struct Point {
    double err = 0.0;
    std::string skip_reason;  // empty when the row evaluated
  };
  std::vector<Point> points(grid.size());
  const long n = static_cast<long>(grid.size());
  // Exceptions must not escape the parallel region; expected guard trips and
  // unexpected failures both become comment rows.
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      const DensityMatrix ra = a(grid[i]);
      const DensityMatrix rb = b(grid[i]);
      points[i].err = trace_distance(ra.matrix(), rb.matrix());
    } catch (const taylor_divergence&) {
      points[i].skip_reason = "taylor divergence guard tripped";
    } catch (const std::exception& e) {
      points[i].skip_reason = std::string("evaluation failed: ") + e.what();
    }
  }
  SweepResult out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!points[i].skip_reason.empty()) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "t = %.12e skipped: ", grid[i]);
      out.notes.emplace_back(buf + points[i].skip_reason);
    } else {
      out.ts.push_back(grid[i]);
      out.errs.push_back(points[i].err);
    }
  }
  return out;
}

}  // namespace

CommandOutput cmd_appendix_c(const ExperimentConfig& config) {
  const RIConfig base = base_ri_config(config, model_from(config, kAppendixCDefaults));
  const LindbladGenerator gen = base.target_generator();
  const double be = be_norm(gen);
  const double guard = l_norm_proxy(base, proxy_from(config));
  const DensityMatrix rho0 = initial_state(config, base.dim());

  const auto grid = log_grid(config.kv.get_double("tgrid.min", 2e-3),
                             config.kv.get_double("tgrid.max", 0.12),
                             config.kv.get_size("tgrid.points", 25));

  const auto sweep = sweep_distance(
      grid,
      [&](double t) {
        RIConfig ri = base;
        ri.t = t;
        return ri_evolve(ri, rho0);
      },
      [&](double t) { return propagate_taylor(gen, rho0, t, 4, guard); });

  const double wmin = config.kv.get_double("window.min", 0.05);
  const double wmax = config.kv.get_double("window.max", 0.5);
  std::vector<double> tbe(sweep.ts.size());
  for (std::size_t i = 0; i < sweep.ts.size(); ++i) tbe[i] = sweep.ts[i] * be;
  const WindowFit fit = fit_window(tbe, sweep.errs, wmin, wmax);

  CommandOutput out;
  out.name = "appendix-c";
  out.table.columns = {"t", "trace_distance"};
  for (std::size_t i = 0; i < sweep.ts.size(); ++i)
    out.table.rows.push_back({sweep.ts[i], sweep.errs[i]});
  out.table.notes = sweep.notes;
  add_provenance(out.table, config);
  out.table.metadata.emplace_back("be_norm", std::to_string(be));

  out.summary["fitted_slope"] = fit.slope;
  out.summary["fit_points"] = fit.points;
  out.summary["fit_window_min"] = wmin;
  out.summary["fit_window_max"] = wmax;
  out.summary["be_norm"] = be;
  out.summary["l_norm_guard"] = guard;
  out.summary["nu"] = base.nu;
  out.summary["m"] = base.m();
  out.summary["norm_proxy"] = to_string(proxy_from(config));
  out.summary["state"] = config.kv.get_string("state", "mixed");
  add_provenance(out.summary, config);
  return out;
}

namespace {

std::function<DensityMatrix(double)> make_engine(const std::string& name, const RIConfig& base,
                                                 const LindbladGenerator& gen, double guard,
                                                 const DensityMatrix& rho0,
                                                 const ExperimentConfig& config) {
  if (name == "exact") return [&gen, rho0](double t) { return propagate_exact(gen, rho0, t); };
  if (name == "taylor4")
    return [&gen, rho0, guard](double t) { return propagate_taylor(gen, rho0, t, 4, guard); };
  if (name == "ri")
    return [&base, rho0](double t) {
      RIConfig ri = base;
      ri.t = t;
      return ri_evolve(ri, rho0);
    };
  if (name == "ri-trotter") {
    TrotterPlan plan;
    const std::size_t k = config.kv.get_size("order_k", 1);
    plan.order = k == 0 ? TrotterOrder::first_order() : TrotterOrder::even(static_cast<unsigned>(k));
    plan.repetitions = config.kv.get_size("r", 16);
    const bool split = config.kv.get_bool("split_h0_terms", false);
    return [&base, rho0, plan, split](double t) {
      RIConfig ri = base;
      ri.t = t;
      return ri_evolve_trotter(ri, plan, rho0, split);
    };
  }
  throw std::runtime_error("compare: invalid engine selector " + name +
                           " (use exact, taylor4, ri or ri-trotter)");
}

}  // namespace

CommandOutput cmd_compare(const ExperimentConfig& config) {
  const RIConfig base = base_ri_config(config, model_from(config, kAppendixCDefaults));
  const LindbladGenerator gen = base.target_generator();
  const double guard = l_norm_proxy(base, proxy_from(config));
  const DensityMatrix rho0 = initial_state(config, base.dim());

  const std::string name_a = config.kv.get_string("engine.a", "ri");
  const std::string name_b = config.kv.get_string("engine.b", "exact");
  const auto engine_a = make_engine(name_a, base, gen, guard, rho0, config);
  const auto engine_b = make_engine(name_b, base, gen, guard, rho0, config);

  const auto grid = log_grid(config.kv.get_double("tgrid.min", 2e-3),
                             config.kv.get_double("tgrid.max", 0.12),
                             config.kv.get_size("tgrid.points", 25));
  const auto sweep = sweep_distance(grid, engine_a, engine_b);

  CommandOutput out;
  out.name = "compare";
  out.table.columns = {"t", "trace_distance"};
  for (std::size_t i = 0; i < sweep.ts.size(); ++i)
    out.table.rows.push_back({sweep.ts[i], sweep.errs[i]});
  out.table.notes = sweep.notes;
  add_provenance(out.table, config);
  out.table.metadata.emplace_back("engine.a", name_a);
  out.table.metadata.emplace_back("engine.b", name_b);

  out.summary["engine_a"] = name_a;
  out.summary["engine_b"] = name_b;
  out.summary["points"] = sweep.ts.size();
  out.summary["norm_proxy"] = to_string(proxy_from(config));
  add_provenance(out.summary, config);
  return out;
}

CommandOutput cmd_bounds(const ExperimentConfig& config) {
  RIConfig base = base_ri_config(config, model_from(config, kAppendixCDefaults));
  base.t = config.kv.get_double("t", 0.025);
  const double epsilon = config.kv.get_double("epsilon", 0.01);
  if (epsilon <= 0.0) throw std::runtime_error("bounds: epsilon must be positive");
  const NormProxy proxy = proxy_from(config);
  const BoundReport report = theorem1_bound(base, proxy, epsilon);

  CommandOutput out;
  out.name = "bounds";
  out.summary["t"] = base.t;
  out.summary["nu"] = base.nu;
  out.summary["m"] = base.m();
  out.summary["epsilon"] = epsilon;
  out.summary["norm_proxy"] = to_string(proxy);
  out.summary["l_norm"] = report.l_norm;
  for (std::size_t n = 0; n < report.gamma.size(); ++n)
    out.summary["gamma_" + std::to_string(n)] = report.gamma[n];
  out.summary["gamma_max"] = *std::max_element(report.gamma.begin(), report.gamma.end());
  out.summary["thm1_value"] = report.thm1_value;
  out.summary["nu_required"] = report.nu_required;
  out.summary["kappa"] = report.kappa;
  out.summary["second_order_value"] = report.second_order_value;
  add_provenance(out.summary, config);
  return out;
}

CommandOutput cmd_costs(const ExperimentConfig& config) {
  const RIConfig base = base_ri_config(config, model_from(config, kAppendixCDefaults));
  const double t = config.kv.get_double("t", 0.025);
  const std::size_t nu = base.nu;
  const double epsilon = config.kv.get_double("epsilon", 1e-6);
  const std::size_t reps = config.kv.get_size("r", 16);
  const double tau = t / static_cast<double>(nu);

  // LCU decompositions supply the coefficient norms and the summand count.
  std::size_t l = 0;
  std::vector<double> alpha_i, omega;
  for (const Bath& bath : base.baths) {
    const LCUDecomposition decomp = decompose_step(base.h0, bath, tau, base.m());
    l = std::max(l, decomp.terms.size());
    alpha_i.push_back(decomp.alpha_interaction);
    omega.push_back(bath.ancilla.omega);
  }
  const double alpha0 = base.h0.coefficient_one_norm();

  QueryCostParams qp{alpha0, alpha_i, omega, base.m(), t, nu, epsilon};
  const double queries = query_cost(qp);

  CommandOutput out;
  out.name = "costs";
  out.summary["t"] = t;
  out.summary["nu"] = nu;
  out.summary["m"] = base.m();
  out.summary["epsilon"] = epsilon;
  out.summary["alpha0"] = alpha0;
  out.summary["l"] = l;
  out.summary["r"] = reps;
  out.summary["qubitization_queries"] = queries;

  for (unsigned k : {1u, 2u}) {
    Cost2kParams cp{l, k, alpha0, alpha_i, omega, base.m(), t, nu, epsilon};
    out.summary["trotter_2k_gates_k" + std::to_string(k)] = cost_2k(cp);
    TrotterPlan plan{TrotterOrder::even(k), reps, {}};
    out.summary["upsilon_k" + std::to_string(k)] = upsilon(plan.order);
    out.summary["q_ts_k" + std::to_string(k)] = exponential_gate_count(l, plan);
  }

  double first_gates = 0.0;
  CommutatorProfile worst_profile;
  for (const Bath& bath : base.baths) {
    const CommutatorProfile profile = commutator_profile(base.h0, bath.ancilla, bath.interaction);
    CostFirstParams fp{l, base.m(), t, nu, epsilon};
    const double gates = cost_first(profile, fp);
    if (gates >= first_gates) {
      first_gates = gates;
      worst_profile = profile;
    }
  }
  out.summary["trotter_1_gates"] = first_gates;
  out.summary["profile_sum_h0_hi"] = worst_profile.sum_h0_hi;
  out.summary["profile_he_hi"] = worst_profile.he_hi;
  out.summary["profile_sum_h0_h0"] = worst_profile.sum_h0_h0;
  add_provenance(out.summary, config);
  return out;
}

CommandOutput cmd_scan_lambda(const ExperimentConfig& config) {
  ExperimentConfig scan_config = config;
  if (!scan_config.kv.has("state")) scan_config.kv.set("state", "pure0");

  RIConfig base = base_ri_config(scan_config, model_from(scan_config, kScanDefaults));
  const double lambda = scan_config.kv.get_double("lambda", 1.0);
  const auto grid = log_grid(scan_config.kv.get_double("taugrid.min", 1e-3),
                             scan_config.kv.get_double("taugrid.max", 1e-1),
                             scan_config.kv.get_size("taugrid.points", 12));
  const DensityMatrix test_state = initial_state(scan_config, base.dim());

  const auto rows = epsilon_lambda_scan(base, lambda, grid, test_state);

  std::vector<double> taus, el, et;
  for (const ScanRow& row : rows) {
    taus.push_back(row.tau);
    el.push_back(row.eps_lambda);
    et.push_back(row.eps_tau);
  }
  const double wmin = scan_config.kv.get_double("window.min", grid.front());
  const double wmax = scan_config.kv.get_double("window.max", grid.back());
  const WindowFit fit_l = fit_window(taus, el, wmin, wmax);
  const WindowFit fit_t = fit_window(taus, et, wmin, wmax);

  CommandOutput out;
  out.name = "scan-lambda";
  out.table.columns = {"tau", "eps_lambda", "eps_tau"};
  for (const ScanRow& row : rows)
    out.table.rows.push_back({row.tau, row.eps_lambda, row.eps_tau});
  add_provenance(out.table, scan_config);

  out.summary["lambda"] = lambda;
  out.summary["slope_eps_lambda"] = fit_l.slope;
  out.summary["slope_eps_tau"] = fit_t.slope;
  out.summary["fit_points"] = fit_l.points;
  out.summary["fit_window_min"] = wmin;
  out.summary["fit_window_max"] = wmax;
  out.summary["state"] = scan_config.kv.get_string("state", "pure0");
  add_provenance(out.summary, scan_config);
  return out;
}

void write_output(const CommandOutput& output, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  if (!output.table.empty()) {
    std::ofstream csv(fs::path(out_dir) / (output.name + ".csv"));
    if (!csv) throw std::runtime_error("cannot write csv under " + out_dir);
    for (const auto& [key, value] : output.table.metadata)
      csv << "# " << key << " = " << value << "\n";
    for (std::size_t c = 0; c < output.table.columns.size(); ++c)
      csv << output.table.columns[c] << (c + 1 < output.table.columns.size() ? "," : "\n");
    char buf[64];
    for (const auto& row : output.table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        std::snprintf(buf, sizeof(buf), "%.12e", row[c]);
        csv << buf << (c + 1 < row.size() ? "," : "\n");
      }
    }
    for (const std::string& note : output.table.notes) csv << "# " << note << "\n";
  }

  std::ofstream js(fs::path(out_dir) / (output.name + ".summary.json"));
  if (!js) throw std::runtime_error("cannot write summary under " + out_dir);
  js << output.summary.dump(2) << "\n";
}

}  // namespace rilind

#ifndef RILIND_EXPERIMENTS_HPP
#define RILIND_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rilind/config.hpp"

namespace rilind {

struct ExperimentConfig {
  KeyValueConfig kv;
  std::uint64_t seed = 0x524c4e44ULL;

  /// Loads the optional config file, resolves model.file, applies overrides.
  static ExperimentConfig assemble(const std::string& config_path,
                                   const std::vector<std::string>& overrides, std::uint64_t seed);
};

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // finite metric values, sorted
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> notes;  // '#' comment lines (e.g. guard-tripped grid points)

  bool empty() const { return columns.empty(); }
};

struct CommandOutput {
  std::string name;
  ResultTable table;
  nlohmann::json summary;
};

CommandOutput cmd_appendix_c(const ExperimentConfig& config);
CommandOutput cmd_compare(const ExperimentConfig& config);
CommandOutput cmd_bounds(const ExperimentConfig& config);
CommandOutput cmd_costs(const ExperimentConfig& config);
CommandOutput cmd_scan_lambda(const ExperimentConfig& config);

/// Writes <name>.csv (when the table is nonempty) and <name>.summary.json.
void write_output(const CommandOutput& output, const std::string& out_dir);

std::vector<double> log_grid(double lo, double hi, std::size_t points);

/// Ordinary least squares on (log x, log y); throws when fewer than two
/// usable points fall in the data.
double fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

// Built-in models (used when the config carries no model keys).
ModelDescription default_appendix_c_model();
ModelDescription default_scan_model();

}  // namespace rilind

#endif

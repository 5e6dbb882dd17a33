#ifndef RILIND_CONFIG_HPP
#define RILIND_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rilind/rimap.hpp"

namespace rilind {

/// `key = value` text file: one pair per line, '#' comments, blank lines
/// ignored. Keys may carry bracket indices (bath[0].beta).
class KeyValueConfig {
 public:
  KeyValueConfig() = default;
  static KeyValueConfig parse_file(const std::string& path);
  static KeyValueConfig parse_text(const std::string& text);

  void set(const std::string& key, const std::string& value);
  /// Applies a "key=value" override as passed on the command line.
  void set_from_assignment(const std::string& assignment);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::size_t get_size(const std::string& key, std::size_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

/// Pauli-sum text: terms separated by ';', each "<coeff> <string>", with
/// coeff either a real like 0.5 or a complex "(re,im)". Example:
/// "0.5 XI; (0,0.5) YI".
OperatorSum parse_pauli_sum(const std::string& text, std::size_t n_qubits);

struct ModelDescription {
  OperatorSum h0;
  std::vector<Bath> baths;
};

/// Builds the system and bath list from system.* / bath[k].* /
/// interaction[k].* keys.
ModelDescription build_model(const KeyValueConfig& config);

}  // namespace rilind

#endif

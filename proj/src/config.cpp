#include "rilind/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace rilind {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

KeyValueConfig KeyValueConfig::parse_text(const std::string& text) {
  KeyValueConfig config;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: malformed line " + std::to_string(lineno) + ": " + line);
    config.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return config;
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
  require(!key.empty(), "config: empty key");
  entries_[key] = value;
}

void KeyValueConfig::set_from_assignment(const std::string& assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos)
    throw std::runtime_error("config: override must look like key=value: " + assignment);
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

bool KeyValueConfig::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: key " + key + " is not a number: " + it->second);
  }
}

std::size_t KeyValueConfig::get_size(const std::string& key, std::size_t fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  try {
    const long long v = std::stoll(it->second);
    if (v < 0) throw std::invalid_argument(it->second);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw std::runtime_error("config: key " + key + " is not a nonnegative integer: " +
                             it->second);
  }
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  std::string v = it->second;
  std::transform(v.begin(), v.end(), v.begin(), ::tolower);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::runtime_error("config: key " + key + " is not a boolean: " + it->second);
}

namespace {

cplx parse_coefficient(const std::string& token) {
  const std::string t = trim(token);
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') throw std::runtime_error("pauli sum: malformed complex " + t);
    const std::string inner = t.substr(1, t.size() - 2);
    const std::size_t comma = inner.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("pauli sum: complex coefficient needs (re,im): " + t);
    return {std::stod(trim(inner.substr(0, comma))), std::stod(trim(inner.substr(comma + 1)))};
  }
  return {std::stod(t), 0.0};
}

}  // namespace

OperatorSum parse_pauli_sum(const std::string& text, std::size_t n_qubits) {
  OperatorSum sum;
  sum.n_qubits = n_qubits;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ';')) {
    piece = trim(piece);
    if (piece.empty()) continue;
    const std::size_t space = piece.find_last_of(" \t");
    if (space == std::string::npos)
      throw std::runtime_error("pauli sum: term needs a coefficient and a string: " + piece);
    const std::string ops = trim(piece.substr(space + 1));
    const cplx coeff = parse_coefficient(piece.substr(0, space));
    if (ops.size() != n_qubits)
      throw std::runtime_error("pauli sum: string length mismatch in term: " + piece);
    for (char c : ops)
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        throw std::runtime_error("pauli sum: letters must be I/X/Y/Z: " + piece);
    sum.terms.push_back({coeff, ops});
  }
  if (sum.terms.empty()) throw std::runtime_error("pauli sum: no terms in: " + text);
  return sum;
}

ModelDescription build_model(const KeyValueConfig& config) {
  ModelDescription model;
  const std::string type = config.get_string("system.type", "heisenberg");

  std::size_t n_qubits = 0;
  if (type == "heisenberg") {
    const std::size_t n = config.get_size("system.n_sites", 4);
    const double b = config.get_double("system.b", 0.5);
    const bool periodic = config.get_bool("system.periodic", true);
    model.h0 = build_heisenberg(n, b, periodic);
    n_qubits = n;
  } else if (type == "pauli") {
    n_qubits = config.get_size("system.n_qubits", 1);
    model.h0 = parse_pauli_sum(config.get_string("system.terms", ""), n_qubits);
  } else {
    throw std::runtime_error("model: unknown system.type " + type);
  }

  for (std::size_t k = 0;; ++k) {
    const std::string bk = "bath[" + std::to_string(k) + "].";
    const std::string ik = "interaction[" + std::to_string(k) + "].";
    const bool has_bath = config.has(bk + "beta") || config.has(bk + "omega");
    const bool has_int = config.has(ik + "site") || config.has(ik + "pauli_sum");
    if (!has_bath && !has_int) break;
    if (!has_bath || !has_int)
      throw std::runtime_error("model: bath[" + std::to_string(k) +
                               "] and interaction[" + std::to_string(k) + "] must come together");

    ThermalAncilla anc{config.get_double(bk + "beta", 1.0), config.get_double(bk + "omega", 0.0)};

    OperatorSum v;
    if (config.has(ik + "site")) {
      const std::size_t site = config.get_size(ik + "site", 0);
      model.baths.push_back({anc, site_lowering_interaction(site, n_qubits)});
    } else {
      v = parse_pauli_sum(config.get_string(ik + "pauli_sum", ""), n_qubits);
      if (config.has(ik + "ancilla")) {
        const OperatorSum a = parse_pauli_sum(config.get_string(ik + "ancilla", ""), 1);
        model.baths.push_back({anc, build_interaction(std::move(v), a.dense())});
      } else {
        model.baths.push_back({anc, build_interaction(std::move(v))});
      }
    }
  }
  if (model.baths.empty()) throw std::runtime_error("model: at least one bath required");
  return model;
}

}  // namespace rilind

#include "rilind/model.hpp"

#include <cmath>
#include <limits>

#include "rilind/kernels.hpp"

namespace rilind {

ComplexMatrix pauli_i() { return ComplexMatrix::identity(2); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m(0, 1) = cplx{0.0, -1.0};
  m(1, 0) = cplx{0.0, 1.0};
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

ComplexMatrix lowering_op() {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  return m;
}

namespace {

ComplexMatrix pauli_by_char(char c) {
  switch (c) {
    case 'I': return pauli_i();
    case 'X': return pauli_x();
    case 'Y': return pauli_y();
    case 'Z': return pauli_z();
    default: throw std::invalid_argument("PauliTerm: ops must be over {I,X,Y,Z}");
  }
}

}  // namespace

ComplexMatrix PauliTerm::dense() const {
  ComplexMatrix out(1, 1);
  out(0, 0) = coefficient;
  for (char c : ops) out = kron(out, pauli_by_char(c));
  return out;
}

ComplexMatrix OperatorSum::dense() const {
  const std::size_t d = std::size_t{1} << n_qubits;
  ComplexMatrix out(d, d);
  for (const PauliTerm& t : terms) {
    require(t.ops.size() == n_qubits, "OperatorSum: term length mismatch");
    out += t.dense();
  }
  return out;
}

double OperatorSum::coefficient_one_norm() const {
  double s = 0.0;
  for (const PauliTerm& t : terms) s += std::abs(t.coefficient);
  return s;
}

OperatorSum build_heisenberg(std::size_t n_sites, double b, bool periodic) {
  require(n_sites >= 2, "build_heisenberg: need at least 2 sites");
  OperatorSum h;
  h.n_qubits = n_sites;
  auto string_with = [&](char c, std::size_t k, char c2, std::size_t k2) {
    std::string s(n_sites, 'I');
    s[k] = c;
    s[k2] = c2;
    return s;
  };
  for (std::size_t k = 0; k < n_sites; ++k) {
    const std::size_t kp = (k + 1) % n_sites;
    if (periodic || kp > k) {
      for (char c : {'X', 'Y', 'Z'})
        h.terms.push_back({cplx{1.0, 0.0}, string_with(c, k, c, kp)});
    }
    if (b != 0.0) {
      std::string s(n_sites, 'I');
      s[k] = 'Z';
      h.terms.push_back({cplx{b, 0.0}, s});
    }
  }
  return h;
}

ComplexMatrix ThermalAncilla::bath_hamiltonian() const { return pauli_z() * cplx{omega, 0.0}; }

DensityMatrix thermal_state(double beta) {
  require(!(beta < 0.0), "thermal_state: beta must be nonnegative");
  ComplexMatrix m(2, 2);
  if (std::isinf(beta)) {
    m(0, 0) = 1.0;  // zero temperature: ground state
  } else {
    const double w = std::exp(-beta);
    m(0, 0) = 1.0 / (1.0 + w);
    m(1, 1) = w / (1.0 + w);
  }
  return DensityMatrix(std::move(m));
}

std::vector<cplx> purified_thermal_prep(double beta) {
  require(!(beta < 0.0), "purified_thermal_prep: beta must be nonnegative");
  const auto [z, zbar] = z_coefficients(beta);
  return {cplx{std::sqrt(z), 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{std::sqrt(zbar), 0.0}};
}

std::pair<double, double> z_coefficients(double beta) {
  require(!(beta < 0.0), "z_coefficients: beta must be nonnegative");
  if (std::isinf(beta)) return {1.0, 0.0};
  const double w = std::exp(-beta);
  return {1.0 / (1.0 + w), w / (1.0 + w)};
}

ComplexMatrix InteractionSpec::dense_interaction() const {
  const ComplexMatrix vd = v.dense();
  const ComplexMatrix raise = ancilla_lowering.adjoint();
  return kron(vd, raise) + kron(vd.adjoint(), ancilla_lowering);
}

InteractionSpec build_interaction(OperatorSum v) {
  return build_interaction(std::move(v), lowering_op());
}

InteractionSpec build_interaction(OperatorSum v, ComplexMatrix ancilla_lowering) {
  require(ancilla_lowering.rows() == 2 && ancilla_lowering.cols() == 2,
          "build_interaction: ancilla operator must be 2x2");
  InteractionSpec spec{std::move(v), std::move(ancilla_lowering)};
  const ComplexMatrix h = spec.dense_interaction();
  if (max_abs_diff(h, h.adjoint()) > 1e-12)
    throw std::invalid_argument("build_interaction: dense interaction is not Hermitian");
  return spec;
}

InteractionSpec site_lowering_interaction(std::size_t site, std::size_t n_qubits) {
  require(site < n_qubits, "site_lowering_interaction: site out of range");
  OperatorSum v;
  v.n_qubits = n_qubits;
  std::string sx(n_qubits, 'I'), sy(n_qubits, 'I');
  sx[site] = 'X';
  sy[site] = 'Y';
  v.terms.push_back({cplx{0.5, 0.0}, sx});
  v.terms.push_back({cplx{0.0, 0.5}, sy});  // (X + iY)/2 at the site
  return build_interaction(std::move(v));
}

}  // namespace rilind

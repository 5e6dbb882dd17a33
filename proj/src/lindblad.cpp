#include "rilind/lindblad.hpp"

#include <cmath>

#include "rilind/kernels.hpp"

namespace rilind {

ComplexMatrix apply_generator(const LindbladGenerator& g, const ComplexMatrix& rho) {
  require(rho.square() && rho.rows() == g.dim(), "apply_generator: dimension mismatch");
  ComplexMatrix out = (g.h0 * rho - rho * g.h0) * cplx{0.0, -1.0};
  for (const ComplexMatrix& l : g.jumps) {
    require(l.rows() == g.dim() && l.square(), "apply_generator: jump dimension mismatch");
    const ComplexMatrix ld = l.adjoint();
    const ComplexMatrix ldl = ld * l;
    out += l * rho * ld;
    out -= (ldl * rho + rho * ldl) * cplx{0.5, 0.0};
  }
  return out;
}

Superoperator liouvillian_matrix(const LindbladGenerator& g) {
  const std::size_t d = g.dim();
  const ComplexMatrix id = ComplexMatrix::identity(d);
  // -i(I (x) H - H^T (x) I) + sum_j conj(L) (x) L - (I (x) L^dag L + (L^dag L)^T (x) I)/2
  ComplexMatrix m = (kron(id, g.h0) - kron(g.h0.transpose(), id)) * cplx{0.0, -1.0};
  for (const ComplexMatrix& l : g.jumps) {
    const ComplexMatrix ldl = l.adjoint() * l;
    m += kron(l.conjugate(), l);
    m -= (kron(id, ldl) + kron(ldl.transpose(), id)) * cplx{0.5, 0.0};
  }
  return {d, std::move(m)};
}

DensityMatrix propagate_exact(const LindbladGenerator& g, const DensityMatrix& rho, double t) {
  require(t >= 0.0, "propagate_exact: t must be nonnegative");
  Superoperator liou = liouvillian_matrix(g);
  liou.matrix() *= cplx{t, 0.0};
  const ComplexMatrix prop = expm(liou.matrix());
  return DensityMatrix(Superoperator(g.dim(), prop).apply(rho.matrix()));
}

DensityMatrix propagate_taylor(const LindbladGenerator& g, const DensityMatrix& rho, double t,
                               unsigned order, std::optional<double> guard_norm) {
  require(order >= 1, "propagate_taylor: order must be >= 1");
  require(t >= 0.0, "propagate_taylor: t must be nonnegative");
  const double guard = guard_norm.value_or(be_norm(g));
  if (t * guard > 1.0)
    throw taylor_divergence("propagate_taylor: t * ||L|| exceeds the series guard");
  ComplexMatrix acc = rho.matrix();
  ComplexMatrix term = rho.matrix();
  for (unsigned j = 1; j <= order; ++j) {
    term = apply_generator(g, term) * cplx{t / static_cast<double>(j), 0.0};
    acc += term;
  }
  return DensityMatrix(std::move(acc));
}

ComplexMatrix dissipator_from_interactions(const DissipatorSpec& spec, const ComplexMatrix& rho) {
  require(spec.interactions.size() == spec.ancillae.size(),
          "dissipator_from_interactions: interaction/ancilla count mismatch");
  const std::size_t d = rho.rows();
  ComplexMatrix out(d, d);
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const ComplexMatrix hi = spec.interactions[k].dense_interaction();
    require(hi.rows() == 2 * d, "dissipator_from_interactions: dimension mismatch");
    const ComplexMatrix joint = kron(rho, thermal_state(spec.ancillae[k].beta).matrix());
    const ComplexMatrix c1 = hi * joint - joint * hi;
    const ComplexMatrix c2 = hi * c1 - c1 * hi;
    out -= partial_trace(c2, {d, 2}, {0}) * cplx{0.5, 0.0};
  }
  return out;
}

bool check_bath_criteria(const DissipatorSpec& spec, std::size_t k) {
  require(k < spec.size(), "check_bath_criteria: index out of range");
  const ComplexMatrix& b = spec.interactions[k].ancilla_lowering;
  const ComplexMatrix rho_e = thermal_state(spec.ancillae[k].beta).matrix();
  const ComplexMatrix b2 = b * b;
  const ComplexMatrix bd2 = b.adjoint() * b.adjoint();
  return std::abs((b2 * rho_e).trace()) <= 1e-12 && std::abs((bd2 * rho_e).trace()) <= 1e-12;
}

std::vector<ComplexMatrix> derive_jumps(const DissipatorSpec& spec) {
  require(spec.interactions.size() == spec.ancillae.size(),
          "derive_jumps: interaction/ancilla count mismatch");
  std::vector<ComplexMatrix> jumps;
  jumps.reserve(2 * spec.size());
  for (std::size_t k = 0; k < spec.size(); ++k) {
    if (!check_bath_criteria(spec, k))
      throw bath_criteria_violation("derive_jumps: bath criteria fail; jump form would not match");
    const ComplexMatrix& b = spec.interactions[k].ancilla_lowering;
    const ComplexMatrix rho_e = thermal_state(spec.ancillae[k].beta).matrix();
    // z = Tr(B^dag rho_E B), zbar = Tr(B rho_E B^dag)
    const double z = (b.adjoint() * rho_e * b).trace().real();
    const double zbar = (b * rho_e * b.adjoint()).trace().real();
    const ComplexMatrix v = spec.interactions[k].dense_v();
    jumps.push_back(v * cplx{std::sqrt(std::max(0.0, z)), 0.0});
    jumps.push_back(v.adjoint() * cplx{std::sqrt(std::max(0.0, zbar)), 0.0});
  }
  return jumps;
}

double be_norm(const LindbladGenerator& g, bool half_dissipator) {
  double s = 0.0;
  for (const ComplexMatrix& l : g.jumps) {
    const double n = spectral_norm(l);
    s += n * n;
  }
  return spectral_norm(g.h0) + (half_dissipator ? 0.5 : 1.0) * s;
}

Superoperator liouvillian_from_spec(const ComplexMatrix& h0, const DissipatorSpec& spec) {
  const std::size_t d = h0.rows();
  ComplexMatrix m(d * d, d * d);
  ComplexMatrix e(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      e(i, j) = 1.0;
      ComplexMatrix col = (h0 * e - e * h0) * cplx{0.0, -1.0};
      col += dissipator_from_interactions(spec, e);
      e(i, j) = 0.0;
      const auto v = vec(col);
      for (std::size_t r = 0; r < d * d; ++r) m(r, j * d + i) = v[r];
    }
  }
  return {d, std::move(m)};
}

}  // namespace rilind

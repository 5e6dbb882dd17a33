#ifndef RILIND_TEST_HELPERS_HPP
#define RILIND_TEST_HELPERS_HPP

#include <random>

#include "rilind/linalg.hpp"
#include "rilind/types.hpp"

namespace rilind::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx{gauss(rng), gauss(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(n, n, rng);
  ComplexMatrix h = a + a.adjoint();
  h *= cplx{0.5, 0.0};
  return h;
}

inline DensityMatrix random_density(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(n, n, rng);
  ComplexMatrix p = a * a.adjoint();
  p *= cplx{1.0, 0.0} / p.trace();
  // symmetrize away the last rounding
  p = (p + p.adjoint()) * cplx{0.5, 0.0};
  return DensityMatrix(std::move(p));
}

inline std::vector<cplx> random_unit_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> v(n);
  double norm = 0.0;
  for (auto& x : v) {
    x = cplx{gauss(rng), gauss(rng)};
    norm += std::norm(x);
  }
  norm = std::sqrt(norm);
  for (auto& x : v) x /= norm;
  return v;
}

}  // namespace rilind::testing

#endif

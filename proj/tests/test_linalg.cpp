#include <cmath>
#include <random>

#include "doctest.h"
#include "rilind/kernels.hpp"
#include "rilind/linalg.hpp"
#include "rilind/model.hpp"
#include "test_helpers.hpp"

using namespace rilind;
using testing::random_density;
using testing::random_hermitian;
using testing::random_matrix;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("expm of the zero matrix is the identity") {
  CHECK(max_abs_diff(expm(ComplexMatrix(3, 3)), ComplexMatrix::identity(3)) == 0.0);
}

TEST_CASE("expm matches the diagonal closed form") {
  const double theta = 0.3;
  const ComplexMatrix a = pauli_z() * cplx{0.0, -theta};
  const ComplexMatrix e = expm(a);
  CHECK(std::abs(e(0, 0) - std::exp(cplx{0.0, -theta})) <= 1e-14);
  CHECK(std::abs(e(1, 1) - std::exp(cplx{0.0, theta})) <= 1e-14);
  CHECK(std::abs(e(0, 1)) <= 1e-15);
}

TEST_CASE("expm(A) expm(-A) = I for random 8x8 with norm <= 2") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 5; ++rep) {
    ComplexMatrix a = random_matrix(8, 8, rng);
    a *= cplx{2.0 / spectral_norm(a), 0.0};
    ComplexMatrix neg = a;
    neg *= cplx{-1.0, 0.0};
    CHECK(max_abs_diff(expm(a) * expm(neg), ComplexMatrix::identity(8)) <= 1e-10);
  }
}

TEST_CASE("expm is multiplicative on commuting inputs") {
  std::mt19937_64 rng(12);
  const ComplexMatrix a = random_hermitian(4, rng);
  const ComplexMatrix b = a * a;  // commutes with a
  CHECK(max_abs_diff(expm(a + b), expm(a) * expm(b)) <= 1e-10 * spectral_norm(expm(a + b)));
}

TEST_CASE("trace norm basics") {
  ComplexMatrix d(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  CHECK(trace_norm(d) == doctest::Approx(2.0).epsilon(1e-14));
  std::mt19937_64 rng(13);
  CHECK(trace_norm(random_density(5, rng).matrix()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("trace norm matches the independent eigensolver route") {
  std::mt19937_64 rng(14);
  const ComplexMatrix m = random_matrix(6, 6, rng);
  double expect = 0.0;
  for (double ev : hermitian_eigenvalues(m.adjoint() * m)) expect += std::sqrt(std::max(0.0, ev));
  CHECK(trace_norm(m) == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("spectral norm basics") {
  CHECK(spectral_norm(ComplexMatrix::identity(7)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spectral_norm(kron(pauli_x(), pauli_x())) == doctest::Approx(1.0).epsilon(1e-13));
  std::mt19937_64 rng(15);
  // rank-one projector scaled by 3
  const auto v = testing::random_unit_vector(6, rng);
  ComplexMatrix p(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) p(i, j) = 3.0 * v[i] * std::conj(v[j]);
  CHECK(spectral_norm(p) == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("vectorization follows the column-stacking conjugation identity") {
  std::mt19937_64 rng(16);
  const ComplexMatrix a = random_matrix(3, 3, rng);
  const ComplexMatrix b = random_matrix(3, 3, rng);
  const ComplexMatrix rho = random_hermitian(3, rng);
  const ComplexMatrix lhs = a * rho * b.adjoint();
  const Superoperator s(3, kron(b.conjugate(), a));
  CHECK(max_abs_diff(lhs, s.apply(rho)) <= 1e-13);
  CHECK(max_abs_diff(unvec(vec(rho), 3), rho) == 0.0);
}

TEST_CASE("choi matrix of the identity channel is the maximally entangled state") {
  const Superoperator id = Superoperator::identity(2);
  const ComplexMatrix j = choi_matrix(id);
  ComplexMatrix bell(4, 4);
  for (std::size_t i : {0u, 3u})
    for (std::size_t k : {0u, 3u}) bell(i, k) = 0.5;
  CHECK(max_abs_diff(j, bell) <= 1e-15);
  CHECK(id.trace_preservation_defect() <= 1e-15);
}

TEST_CASE("choi matrix of a unitary conjugation is PSD with rank one") {
  const ComplexMatrix x = pauli_x();
  const Superoperator s(2, kron(x.conjugate(), x));
  const auto evs = hermitian_eigenvalues(choi_matrix(s));
  CHECK(evs.front() >= -1e-12);
  int big = 0;
  for (double e : evs)
    if (e > 1e-10) ++big;
  CHECK(big == 1);
}

TEST_CASE("choi matrix flags the transpose map as non-CP") {
  // transpose: rho(i,j) -> rho(j,i); columns indexed by vec position
  ComplexMatrix m(4, 4);
  // vec index j*2+i maps E_ij; transpose sends E_ij -> E_ji
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i * 2 + j, j * 2 + i) = 1.0;
  const auto evs = hermitian_eigenvalues(choi_matrix(Superoperator(2, m)));
  CHECK(evs.front() < -1e-3);
}

TEST_CASE("induced norm estimate: identity channel gives lower = upper = 1") {
  const auto est = induced_1to1_estimate(Superoperator::identity(2), 5);
  CHECK(est.lower == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(est.upper == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("induced norm estimate: unitary conjugation converges to 1") {
  std::mt19937_64 rng(17);
  const ComplexMatrix u = expm(random_hermitian(3, rng) * cplx{0.0, -1.0});
  const auto est = induced_1to1_estimate(Superoperator(3, kron(u.conjugate(), u)), 10);
  CHECK(est.lower == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(est.lower <= est.upper + 1e-12);
}

TEST_CASE("induced norm estimate: scaled identity channel") {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m *= cplx{2.5, 0.0};
  const auto est = induced_1to1_estimate(Superoperator(2, m), 5);
  CHECK(est.lower == doctest::Approx(2.5).epsilon(1e-6));
  CHECK(est.lower <= est.upper + 1e-12);
}

TEST_CASE("density matrix validation rejects bad inputs") {
  ComplexMatrix not_unit = ComplexMatrix::identity(2);
  CHECK_THROWS_AS(DensityMatrix{not_unit}, std::invalid_argument);

  ComplexMatrix not_herm(2, 2);
  not_herm(0, 0) = 0.5;
  not_herm(1, 1) = 0.5;
  not_herm(0, 1) = cplx{0.1, 0.0};
  not_herm(1, 0) = cplx{0.2, 0.0};
  CHECK_THROWS_AS(DensityMatrix{not_herm}, std::invalid_argument);

  ComplexMatrix not_psd(2, 2);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{not_psd}, std::invalid_argument);
}

TEST_SUITE_END();

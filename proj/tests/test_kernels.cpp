#include <random>

#include "doctest.h"
#include "rilind/kernels.hpp"
#include "rilind/model.hpp"
#include "test_helpers.hpp"

using namespace rilind;
using testing::random_density;
using testing::random_hermitian;
using testing::random_matrix;

TEST_SUITE_BEGIN("kernels");

TEST_CASE("kron of identities is the identity") {
  const ComplexMatrix k = kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
  CHECK(max_abs_diff(k, ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("kron(X, Z) has the hand-expanded entries") {
  const ComplexMatrix k = kron(pauli_x(), pauli_z());
  ComplexMatrix expect(4, 4);
  expect(0, 2) = 1.0;
  expect(1, 3) = -1.0;
  expect(2, 0) = 1.0;
  expect(3, 1) = -1.0;
  CHECK(max_abs_diff(k, expect) == 0.0);
}

TEST_CASE("kron dimension law for rectangular inputs") {
  std::mt19937_64 rng(1);
  const ComplexMatrix a = random_matrix(2, 3, rng);
  const ComplexMatrix b = random_matrix(4, 5, rng);
  const ComplexMatrix k = kron(a, b);
  CHECK(k.rows() == 8);
  CHECK(k.cols() == 15);
  CHECK(std::abs(k(1 * 4 + 2, 2 * 5 + 3) - a(1, 2) * b(2, 3)) == 0.0);
}

TEST_CASE("kron associativity within 1e-13") {
  std::mt19937_64 rng(2);
  const ComplexMatrix a = random_matrix(2, 2, rng);
  const ComplexMatrix b = random_matrix(3, 3, rng);
  const ComplexMatrix c = random_matrix(2, 2, rng);
  CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-13);
}

TEST_CASE("kron refuses dimensions past the cap") {
  const std::size_t old_cap = dimension_cap();
  set_dimension_cap(64);
  const ComplexMatrix big = ComplexMatrix::identity(16);
  CHECK_THROWS_AS((void)kron(big, big), std::domain_error);
  set_dimension_cap(old_cap);
}

TEST_CASE("partial trace of a product state recovers the left factor") {
  std::mt19937_64 rng(3);
  const ComplexMatrix rho = random_density(3, rng).matrix();
  const ComplexMatrix sigma = random_density(2, rng).matrix();
  const ComplexMatrix got = partial_trace(kron(rho, sigma), {3, 2}, {0});
  CHECK(max_abs_diff(got, rho) <= 1e-14);
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
  ComplexMatrix bell(4, 4);
  for (std::size_t i : {0u, 3u})
    for (std::size_t j : {0u, 3u}) bell(i, j) = 0.5;
  const ComplexMatrix got = partial_trace(bell, {2, 2}, {0});
  ComplexMatrix expect = ComplexMatrix::identity(2);
  expect *= cplx{0.5, 0.0};
  CHECK(max_abs_diff(got, expect) <= 1e-15);
}

TEST_CASE("partial trace preserves the trace and is linear") {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix m = random_hermitian(8, rng);
    const ComplexMatrix t = partial_trace(m, {2, 2, 2}, {1});
    CHECK(std::abs(t.trace() - m.trace()) <= 1e-12);
  }
  const ComplexMatrix a = random_hermitian(8, rng);
  const ComplexMatrix b = random_hermitian(8, rng);
  const ComplexMatrix lhs = partial_trace(a + b, {4, 2}, {0});
  const ComplexMatrix rhs = partial_trace(a, {4, 2}, {0}) + partial_trace(b, {4, 2}, {0});
  CHECK(max_abs_diff(lhs, rhs) <= 1e-13);
}

TEST_CASE("partial trace keeps subsystems in the requested order") {
  std::mt19937_64 rng(5);
  const ComplexMatrix rho = random_density(2, rng).matrix();
  const ComplexMatrix sigma = random_density(2, rng).matrix();
  const ComplexMatrix got = partial_trace(kron(rho, sigma), {2, 2}, {1});
  CHECK(max_abs_diff(got, sigma) <= 1e-14);
}

TEST_CASE("partial trace rejects malformed dimensions") {
  const ComplexMatrix m = ComplexMatrix::identity(6);
  CHECK_THROWS_AS((void)partial_trace(m, {2, 2}, {0}), std::invalid_argument);
  CHECK_THROWS_AS((void)partial_trace(m, {2, 3}, {}), std::invalid_argument);
}

TEST_CASE("parallel kernels match the serial reference exactly") {
  std::mt19937_64 rng(6);
  const ComplexMatrix a = random_matrix(65, 70, rng);
  const ComplexMatrix b = random_matrix(70, 65, rng);
  ComplexMatrix mp, ms;
  matmul(a, b, mp);
  serial::matmul(a, b, ms);
  CHECK(max_abs_diff(mp, ms) == 0.0);

  const ComplexMatrix ka = random_matrix(17, 17, rng);
  const ComplexMatrix kb = random_matrix(16, 16, rng);
  CHECK(max_abs_diff(kron(ka, kb), serial::kron(ka, kb)) == 0.0);

  const ComplexMatrix h = random_hermitian(64, rng);
  const std::vector<std::size_t> dims{4, 4, 4};
  CHECK(max_abs_diff(partial_trace(h, dims, {0, 2}), serial::partial_trace(h, dims, {0, 2})) ==
        0.0);
}

TEST_CASE("conjugate_on_factors equals the dense embedded conjugation") {
  std::mt19937_64 rng(7);
  // factors: 2 x 3 x 2; unitary-ish matrix on factors (0, 2)
  const ComplexMatrix rho = random_hermitian(12, rng);
  const ComplexMatrix u = random_matrix(4, 4, rng);
  const std::vector<std::size_t> dims{2, 3, 2};

  const ComplexMatrix fast = conjugate_on_factors(rho, dims, 0, 2, u);
  CHECK(max_abs_diff(fast, serial::conjugate_on_factors(rho, dims, 0, 2, u)) == 0.0);

  // dense route: permute (0,2) to the front is implicit in the index map, so
  // build sum_{ia ib ja jb} U[(ia,ib),(ja,jb)] |ia><ja| (x) I3 (x) |ib><jb|
  ComplexMatrix embed(12, 12);
  for (std::size_t ia = 0; ia < 2; ++ia)
    for (std::size_t ib = 0; ib < 2; ++ib)
      for (std::size_t ja = 0; ja < 2; ++ja)
        for (std::size_t jb = 0; jb < 2; ++jb)
          for (std::size_t mid = 0; mid < 3; ++mid)
            embed(ia * 6 + mid * 2 + ib, ja * 6 + mid * 2 + jb) = u(ia * 2 + ib, ja * 2 + jb);
  const ComplexMatrix dense = embed * rho * embed.adjoint();
  CHECK(max_abs_diff(fast, dense) <= 1e-12);
}

TEST_SUITE_END();

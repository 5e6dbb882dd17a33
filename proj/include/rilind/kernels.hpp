#ifndef RILIND_KERNELS_HPP
#define RILIND_KERNELS_HPP

#include <cstddef>
#include <vector>

#include "rilind/types.hpp"

// Dense kernels behind every module. The default entry points are
// OpenMP-parallel; rilind::serial holds the plain reference loops the
// tests and the benchmark compare against. Both paths use the same
// per-element arithmetic order, so outputs agree bit for bit.

namespace rilind {

namespace serial {

void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);
// rho -> U rho U^dagger where U acts on tensor factors fa and fb of `dims`.
ComplexMatrix conjugate_on_factors(const ComplexMatrix& rho, const std::vector<std::size_t>& dims,
                                   std::size_t fa, std::size_t fb, const ComplexMatrix& u);

}  // namespace serial

void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);
ComplexMatrix conjugate_on_factors(const ComplexMatrix& rho, const std::vector<std::size_t>& dims,
                                   std::size_t fa, std::size_t fb, const ComplexMatrix& u);

}  // namespace rilind

#endif

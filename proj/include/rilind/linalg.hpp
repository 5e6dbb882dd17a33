#ifndef RILIND_LINALG_HPP
#define RILIND_LINALG_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "rilind/types.hpp"

namespace rilind {

/// Scaling-and-squaring matrix exponential with a fixed-order
/// Paterson-Stockmeyer Taylor core; target relative accuracy 1e-12.
ComplexMatrix expm(const ComplexMatrix& a);

/// Sum of singular values (Schatten 1-norm).
double trace_norm(const ComplexMatrix& m);

/// Largest singular value (Schatten infinity / operator norm).
double spectral_norm(const ComplexMatrix& m);

/// Schatten 1-norm of the difference; the error metric used throughout.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Spectral decompositions (Eigen-backed).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
double min_hermitian_eigenvalue(const ComplexMatrix& m);
std::vector<cplx> complex_eigenvalues(const ComplexMatrix& m);
std::vector<double> singular_values(const ComplexMatrix& m);

// Column-stacking convention: vec(rho)[j*d + i] = rho(i, j), so the channel
// rho -> A rho B^dag has matrix conj(B) (x) A. Everything cross-module
// depends on this choice.
std::vector<cplx> vec(const ComplexMatrix& m);
ComplexMatrix unvec(const std::vector<cplx>& v, std::size_t d);

/// Hermitian, unit-trace, PSD state; invariants enforced at construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);
  static DensityMatrix maximally_mixed(std::size_t d);
  static DensityMatrix pure(const std::vector<cplx>& amplitudes);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// d^2 x d^2 matrix acting on column-stacked vec(rho).
class Superoperator {
 public:
  Superoperator(std::size_t dim, ComplexMatrix matrix);
  static Superoperator identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  ComplexMatrix& matrix() { return matrix_; }

  ComplexMatrix apply(const ComplexMatrix& rho) const;
  /// max |vec(I)^dag M - vec(I)^dag| entry; 0 for trace-preserving maps.
  double trace_preservation_defect() const;

 private:
  std::size_t dim_;
  ComplexMatrix matrix_;
};

/// Normalized Choi state J = (1/d) sum_ij E_ij (x) Phi(E_ij). The channel is
/// CP iff J is PSD and TP iff the partial trace over the second (output)
/// factor equals I/d.
ComplexMatrix choi_matrix(const Superoperator& c);

struct InducedNormEstimate {
  double lower;
  double upper;
};

/// Randomized rank-one probes plus coordinate ascent for the lower bound;
/// certified upper bound sqrt(d) * sigma_max(M), tightened to 1 when the
/// channel verifies as CPTP (trace-norm contraction).
InducedNormEstimate induced_1to1_estimate(const Superoperator& c, std::size_t samples = 200,
                                          std::uint64_t seed = 0x5eed0f01dULL);

}  // namespace rilind

#endif

#include "rilind/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "rilind/kernels.hpp"

namespace rilind {

namespace {

using EigenCM = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenCM> as_eigen(const ComplexMatrix& m) {
  return {m.data(), static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols())};
}

double one_norm(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& a) {
  require(a.square(), "expm: matrix must be square");
  const std::size_t n = a.rows();

  // Scale so ||B||_1 <= 1/2, degree-15 Taylor core, then square back up.
  const double norm = one_norm(a);
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  ComplexMatrix b = a;
  b *= cplx{std::ldexp(1.0, -s), 0.0};

  ComplexMatrix b2 = b * b;
  ComplexMatrix b3 = b2 * b;
  ComplexMatrix b4 = b3 * b;

  double fact[16];
  fact[0] = 1.0;
  for (int k = 1; k < 16; ++k) fact[k] = fact[k - 1] * k;

  // Paterson-Stockmeyer blocks C_j = sum_{i=0..3} B^i / (4j+i)!
  auto block = [&](int j) {
    ComplexMatrix c = ComplexMatrix::identity(n) * cplx{1.0 / fact[4 * j], 0.0};
    c += b * cplx{1.0 / fact[4 * j + 1], 0.0};
    c += b2 * cplx{1.0 / fact[4 * j + 2], 0.0};
    c += b3 * cplx{1.0 / fact[4 * j + 3], 0.0};
    return c;
  };

  ComplexMatrix p = block(3);
  for (int j = 2; j >= 0; --j) p = p * b4 + block(j);
  for (int i = 0; i < s; ++i) p = p * p;

  if (!p.all_finite()) throw std::runtime_error("expm: non-finite result");
  return p;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<EigenCM> svd(as_eigen(m));
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

double trace_norm(const ComplexMatrix& m) {
  require(m.square(), "trace_norm: matrix must be square");
  double sum = 0.0;
  for (double s : singular_values(m)) sum += s;
  return sum;
}

double spectral_norm(const ComplexMatrix& m) {
  require(m.square(), "spectral_norm: matrix must be square");
  if (m.rows() <= 128) {
    const auto sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.front();
  }
  // Larger matrices: sigma_max = sqrt(lambda_max(M^dag M)); machine-accurate
  // for the top singular value and much cheaper than a full Jacobi SVD.
  const EigenCM me = as_eigen(m);
  Eigen::SelfAdjointEigenSolver<EigenCM> es(me.adjoint() * me, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return trace_norm(a - b);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<EigenCM> es(as_eigen(m), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double min_hermitian_eigenvalue(const ComplexMatrix& m) {
  const auto ev = hermitian_eigenvalues(m);
  return ev.empty() ? 0.0 : *std::min_element(ev.begin(), ev.end());
}

std::vector<cplx> complex_eigenvalues(const ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<EigenCM> es(as_eigen(m), false);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<cplx> vec(const ComplexMatrix& m) {
  const std::size_t d = m.rows();
  std::vector<cplx> v(d * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < d; ++i) v[j * d + i] = m(i, j);
  return v;
}

ComplexMatrix unvec(const std::vector<cplx>& v, std::size_t d) {
  require(v.size() == d * d, "unvec: length is not d^2");
  ComplexMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) m(i, j) = v[j * d + i];
  return m;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  require(matrix_.square(), "DensityMatrix: matrix must be square");
  require(matrix_.all_finite(), "DensityMatrix: non-finite entries");
  if (max_abs_diff(matrix_, matrix_.adjoint()) > 1e-12)
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
  if (std::abs(matrix_.trace() - cplx{1.0, 0.0}) > 1e-12)
    throw std::invalid_argument("DensityMatrix: trace differs from 1 beyond 1e-12");
  if (min_hermitian_eigenvalue(matrix_) < -1e-10)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue below -1e-10");
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
  ComplexMatrix m = ComplexMatrix::identity(d);
  m *= cplx{1.0 / static_cast<double>(d), 0.0};
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const std::vector<cplx>& amplitudes) {
  const std::size_t d = amplitudes.size();
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
  return DensityMatrix(std::move(m));
}

Superoperator::Superoperator(std::size_t dim, ComplexMatrix matrix)
    : dim_(dim), matrix_(std::move(matrix)) {
  require(matrix_.rows() == dim * dim && matrix_.cols() == dim * dim,
          "Superoperator: matrix must be d^2 x d^2");
}

Superoperator Superoperator::identity(std::size_t dim) {
  return {dim, ComplexMatrix::identity(dim * dim)};
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& rho) const {
  require(rho.rows() == dim_ && rho.cols() == dim_, "Superoperator::apply: dimension mismatch");
  const auto v = vec(rho);
  std::vector<cplx> out(v.size(), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < v.size(); ++i) {
    cplx acc{0.0, 0.0};
    const cplx* row = matrix_.data() + i * v.size();
    for (std::size_t j = 0; j < v.size(); ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return unvec(out, dim_);
}

double Superoperator::trace_preservation_defect() const {
  // vec(I)^dag M = vec(I)^dag: column c of M summed over rows (i,i).
  const std::size_t d = dim_;
  double worst = 0.0;
  for (std::size_t c = 0; c < d * d; ++c) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < d; ++i) acc += matrix_(i * d + i, c);
    const cplx expect = (c % (d + 1) == 0) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    worst = std::max(worst, std::abs(acc - expect));
  }
  return worst;
}

ComplexMatrix choi_matrix(const Superoperator& c) {
  const std::size_t d = c.dim();
  ComplexMatrix j(d * d, d * d);
  ComplexMatrix e(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      e(a, b) = 1.0;
      const ComplexMatrix phi = c.apply(e);
      e(a, b) = 0.0;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          j(a * d + k, b * d + l) = phi(k, l) / static_cast<double>(d);
    }
  }
  return j;
}

namespace {

double probe_value(const Superoperator& c, const std::vector<cplx>& u,
                   const std::vector<cplx>& v) {
  const std::size_t d = c.dim();
  ComplexMatrix probe(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) probe(i, j) = u[i] * std::conj(v[j]);
  return trace_norm(c.apply(probe));
}

void normalize(std::vector<cplx>& v) {
  double n = 0.0;
  for (const cplx& x : v) n += std::norm(x);
  n = std::sqrt(n);
  if (n > 0) {
    for (cplx& x : v) x /= n;
  }
}

bool channel_is_cptp(const Superoperator& c) {
  if (c.trace_preservation_defect() > 1e-10) return false;
  return min_hermitian_eigenvalue(choi_matrix(c)) >= -1e-10;
}

}  // namespace

InducedNormEstimate induced_1to1_estimate(const Superoperator& c, std::size_t samples,
                                          std::uint64_t seed) {
  require(samples >= 1, "induced_1to1_estimate: samples must be >= 1");
  const std::size_t d = c.dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double lower = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<cplx> u(d), v(d);
    for (auto& x : u) x = cplx{gauss(rng), gauss(rng)};
    for (auto& x : v) x = cplx{gauss(rng), gauss(rng)};
    normalize(u);
    normalize(v);
    double f = probe_value(c, u, v);

    // Coordinate ascent over real/imag parts of u and v, shrinking step.
    for (double step = 0.3; step > 3e-3; step *= 0.5) {
      bool improved = true;
      while (improved) {
        improved = false;
        for (std::vector<cplx>* vecp : {&u, &v}) {
          for (std::size_t i = 0; i < d; ++i) {
            for (const cplx delta :
                 {cplx{step, 0.0}, cplx{-step, 0.0}, cplx{0.0, step}, cplx{0.0, -step}}) {
              std::vector<cplx> trial = *vecp;
              trial[i] += delta;
              normalize(trial);
              const double f2 = (vecp == &u) ? probe_value(c, trial, v) : probe_value(c, u, trial);
              if (f2 > f + 1e-13) {
                f = f2;
                *vecp = trial;
                improved = true;
              }
            }
          }
        }
      }
    }
    lower = std::max(lower, f);
  }

  double upper = std::sqrt(static_cast<double>(d)) * spectral_norm(c.matrix());
  if (channel_is_cptp(c)) upper = std::min(upper, 1.0);
  if (upper < lower) upper = lower;  // roundoff guard
  return {lower, upper};
}

}  // namespace rilind

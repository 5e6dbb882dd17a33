// Times the OpenMP kernels against their serial reference implementations.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rilind/kernels.hpp"
#include "rilind/types.hpp"

using rilind::ComplexMatrix;
using rilind::cplx;

namespace {

ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx{gauss(rng), gauss(rng)};
  return m;
}

template <typename F>
double time_best_of(int reps, const F& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, std::size_t n, double flops, double serial, double parallel,
            double diff) {
  std::printf("%-22s n=%5zu  serial %8.4f s  parallel %8.4f s  speedup %5.2fx", name, n, serial,
              parallel, serial / parallel);
  if (flops > 0) std::printf("  (%6.2f GFLOP/s)", flops / parallel / 1e9);
  std::printf("  max|diff| %.2e\n", diff);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp; both paths are serial\n");
#endif
  std::mt19937_64 rng(42);

  for (std::size_t n : {256, 512, 1024}) {
    const ComplexMatrix a = random_matrix(n, rng);
    const ComplexMatrix b = random_matrix(n, rng);
    ComplexMatrix out_s, out_p;
    const double ts = time_best_of(3, [&] { rilind::serial::matmul(a, b, out_s); });
    const double tp = time_best_of(3, [&] { rilind::matmul(a, b, out_p); });
    // complex multiply-add: 8 real flops
    report("matmul", n, 8.0 * n * n * n, ts, tp, max_abs_diff(out_s, out_p));
  }

  for (std::size_t n : {32, 64}) {
    const ComplexMatrix a = random_matrix(n, rng);
    const ComplexMatrix b = random_matrix(n, rng);
    ComplexMatrix out_s, out_p;
    const double ts = time_best_of(3, [&] { out_s = rilind::serial::kron(a, b); });
    const double tp = time_best_of(3, [&] { out_p = rilind::kron(a, b); });
    report("kron", n * n, 0, ts, tp, max_abs_diff(out_s, out_p));
  }

  {
    // 10-qubit joint space: trace out the last 5 qubits
    const std::size_t n = 1024;
    const ComplexMatrix m = random_matrix(n, rng);
    const std::vector<std::size_t> dims(10, 2);
    ComplexMatrix out_s, out_p;
    const double ts =
        time_best_of(3, [&] { out_s = rilind::serial::partial_trace(m, dims, {0, 1, 2, 3, 4}); });
    const double tp =
        time_best_of(3, [&] { out_p = rilind::partial_trace(m, dims, {0, 1, 2, 3, 4}); });
    report("partial_trace", n, 0, ts, tp, max_abs_diff(out_s, out_p));
  }

  {
    // two-factor conjugation on a 16 x 2^6 joint space
    const std::size_t n = 1024;
    const ComplexMatrix rho = random_matrix(n, rng);
    const ComplexMatrix u = random_matrix(32, rng);
    const std::vector<std::size_t> dims{16, 2, 2, 2, 2, 2, 2};
    ComplexMatrix out_s, out_p;
    const double ts = time_best_of(
        3, [&] { out_s = rilind::serial::conjugate_on_factors(rho, dims, 0, 3, u); });
    const double tp =
        time_best_of(3, [&] { out_p = rilind::conjugate_on_factors(rho, dims, 0, 3, u); });
    report("conjugate_on_factors", n, 0, ts, tp, max_abs_diff(out_s, out_p));
  }
  return 0;
}

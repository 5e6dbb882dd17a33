#include "rilind/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace rilind {

namespace {

// Row-major composite-index strides: stride[s] = prod of dims after s.
std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> st(dims.size(), 1);
  for (std::size_t s = dims.size(); s-- > 1;) st[s - 1] = st[s] * dims[s];
  return st;
}

std::size_t total_dim(const std::vector<std::size_t>& dims) {
  std::size_t d = 1;
  for (std::size_t v : dims) d *= v;
  return d;
}

void matmul_rows(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out,
                 std::size_t i) {
  const std::size_t n = a.cols(), p = b.cols();
  cplx* orow = out.data() + i * p;
  const cplx* arow = a.data() + i * n;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx av = arow[k];
    if (av == cplx{0.0, 0.0}) continue;
    const cplx* brow = b.data() + k * p;
    for (std::size_t j = 0; j < p; ++j) orow[j] += av * brow[j];
  }
}

void kron_row(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out, std::size_t r) {
  const std::size_t i = r / b.rows(), k = r % b.rows();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const cplx av = a(i, j);
    for (std::size_t l = 0; l < b.cols(); ++l) out(r, j * b.cols() + l) = av * b(k, l);
  }
}

struct PtracePlan {
  std::vector<std::size_t> keep_offsets;   // composite offsets of kept multi-indices
  std::vector<std::size_t> trace_offsets;  // composite offsets of traced multi-indices
};

PtracePlan ptrace_plan(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& keep) {
  const auto st = strides_of(dims);
  std::vector<std::size_t> traced;
  for (std::size_t s = 0; s < dims.size(); ++s)
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);

  auto offsets = [&](const std::vector<std::size_t>& subs) {
    std::vector<std::size_t> out{0};
    for (std::size_t s : subs) {
      std::vector<std::size_t> next;
      next.reserve(out.size() * dims[s]);
      for (std::size_t base : out)
        for (std::size_t v = 0; v < dims[s]; ++v) next.push_back(base + v * st[s]);
      out = std::move(next);
    }
    return out;
  };
  return {offsets(keep), offsets(traced)};
}

void ptrace_row(const ComplexMatrix& m, const PtracePlan& plan, ComplexMatrix& out,
                std::size_t i) {
  const std::size_t oi = plan.keep_offsets[i];
  for (std::size_t j = 0; j < plan.keep_offsets.size(); ++j) {
    const std::size_t oj = plan.keep_offsets[j];
    cplx acc{0.0, 0.0};
    for (std::size_t t : plan.trace_offsets) acc += m(oi + t, oj + t);
    out(i, j) = acc;
  }
}

void check_ptrace_args(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& keep) {
  require(m.square(), "partial_trace: matrix must be square");
  require(!keep.empty(), "partial_trace: keep set must be nonempty");
  require(total_dim(dims) == m.rows(), "partial_trace: dims do not factor the matrix dimension");
  for (std::size_t s : keep) require(s < dims.size(), "partial_trace: keep index out of range");
}

// out row r of U_emb * x, with U acting on factors fa, fb.
void apply_left_row(const ComplexMatrix& u, const ComplexMatrix& x,
                    const std::vector<std::size_t>& st, std::size_t da, std::size_t db,
                    std::size_t fa, std::size_t fb, ComplexMatrix& out, std::size_t r) {
  const std::size_t cols = x.cols();
  const std::size_t ia = (r / st[fa]) % da;
  const std::size_t ib = (r / st[fb]) % db;
  const std::size_t base = r - ia * st[fa] - ib * st[fb];
  cplx* orow = out.data() + r * cols;
  for (std::size_t ja = 0; ja < da; ++ja) {
    for (std::size_t jb = 0; jb < db; ++jb) {
      const cplx coeff = u(ia * db + ib, ja * db + jb);
      if (coeff == cplx{0.0, 0.0}) continue;
      const cplx* xrow = x.data() + (base + ja * st[fa] + jb * st[fb]) * cols;
      for (std::size_t c = 0; c < cols; ++c) orow[c] += coeff * xrow[c];
    }
  }
}

ComplexMatrix apply_left(const ComplexMatrix& u, const ComplexMatrix& x,
                         const std::vector<std::size_t>& dims, std::size_t fa, std::size_t fb,
                         bool parallel) {
  const auto st = strides_of(dims);
  const std::size_t da = dims[fa], db = dims[fb];
  require(u.rows() == da * db && u.square(), "conjugate_on_factors: unitary shape mismatch");
  ComplexMatrix out(x.rows(), x.cols());
  const long n = static_cast<long>(x.rows());
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long r = 0; r < n; ++r)
      apply_left_row(u, x, st, da, db, fa, fb, out, static_cast<std::size_t>(r));
  } else {
    for (long r = 0; r < n; ++r)
      apply_left_row(u, x, st, da, db, fa, fb, out, static_cast<std::size_t>(r));
  }
  return out;
}

ComplexMatrix conjugate_impl(const ComplexMatrix& rho, const std::vector<std::size_t>& dims,
                             std::size_t fa, std::size_t fb, const ComplexMatrix& u,
                             bool parallel) {
  require(rho.square() && rho.rows() == total_dim(dims),
          "conjugate_on_factors: state shape mismatch");
  require(fa < dims.size() && fb < dims.size() && fa != fb,
          "conjugate_on_factors: bad factor indices");
  // U rho U^dag = (U (U rho)^dag)^dag, so one left-apply kernel covers both sides.
  ComplexMatrix y = apply_left(u, rho, dims, fa, fb, parallel);
  return apply_left(u, y.adjoint(), dims, fa, fb, parallel).adjoint();
}

}  // namespace

namespace serial {

void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  require(a.cols() == b.rows(), "matmul: inner dimension mismatch");
  out = ComplexMatrix(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) matmul_rows(a, b, out, i);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t r = a.rows() * b.rows(), c = a.cols() * b.cols();
  if (std::max(r, c) > dimension_cap())
    throw std::domain_error("kron: requested dimension exceeds the configured cap");
  ComplexMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i) kron_row(a, b, out, i);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
  check_ptrace_args(m, dims, keep);
  const auto plan = ptrace_plan(dims, keep);
  ComplexMatrix out(plan.keep_offsets.size(), plan.keep_offsets.size());
  for (std::size_t i = 0; i < plan.keep_offsets.size(); ++i) ptrace_row(m, plan, out, i);
  return out;
}

ComplexMatrix conjugate_on_factors(const ComplexMatrix& rho, const std::vector<std::size_t>& dims,
                                   std::size_t fa, std::size_t fb, const ComplexMatrix& u) {
  return conjugate_impl(rho, dims, fa, fb, u, false);
}

}  // namespace serial

void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  require(a.cols() == b.rows(), "matmul: inner dimension mismatch");
  out = ComplexMatrix(a.rows(), b.cols());
  const long n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(static) if (n >= 64)
  for (long i = 0; i < n; ++i) matmul_rows(a, b, out, static_cast<std::size_t>(i));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t r = a.rows() * b.rows(), c = a.cols() * b.cols();
  if (std::max(r, c) > dimension_cap())
    throw std::domain_error("kron: requested dimension exceeds the configured cap");
  ComplexMatrix out(r, c);
  const long n = static_cast<long>(r);
#pragma omp parallel for schedule(static) if (n >= 256)
  for (long i = 0; i < n; ++i) kron_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
  check_ptrace_args(m, dims, keep);
  const auto plan = ptrace_plan(dims, keep);
  const long n = static_cast<long>(plan.keep_offsets.size());
  ComplexMatrix out(plan.keep_offsets.size(), plan.keep_offsets.size());
#pragma omp parallel for schedule(static) if (n >= 64)
  for (long i = 0; i < n; ++i) ptrace_row(m, plan, out, static_cast<std::size_t>(i));
  return out;
}

ComplexMatrix conjugate_on_factors(const ComplexMatrix& rho, const std::vector<std::size_t>& dims,
                                   std::size_t fa, std::size_t fb, const ComplexMatrix& u) {
  return conjugate_impl(rho, dims, fa, fb, u, true);
}

}  // namespace rilind

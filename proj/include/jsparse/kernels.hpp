#pragma once

#include <cstddef>

// Data-parallel inner loops used by the solver and the Monte-Carlo
// statistical-dimension estimator. Every kernel has a scalar reference
// implementation; SIMD variants (AVX2 on x86-64, NEON on aarch64) are
// selected once at startup and can be overridden with the environment
// variable JSPARSE_KERNELS=scalar|avx2|neon|auto.
//
// SIMD variants may reassociate reductions and use FMA, so results can
// differ from the scalar reference by a few ulps; the equivalence tests
// pin the allowed deviation.

namespace jsparse::kernels {

struct Ops {
  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // sum_i x[i]^2
  double (*sum_sq)(const double* x, std::size_t n);
  // Row-wise shrinkage on a row-major n_rows x l matrix:
  // out_row = v_row * max(0, 1 - theta/||v_row||_2), zero rows stay zero.
  void (*shrink_rows)(const double* v, std::size_t n_rows, std::size_t l,
                      double theta, double* out);
  // sum_i max(0, vals[i] - c)^2
  double (*sum_hinge_sq)(const double* vals, std::size_t n, double c);
  // sum_i max(0, sqrt(max(0, q[i] - a*d[i] + b)) - thresh)^2
  // (squared distance hinge with ||g - c*u||^2 = q - a*d + b expanded)
  double (*sum_hinge_sq_quad)(const double* q, const double* d, std::size_t n,
                              double a, double b, double thresh);
  const char* name;
};

const Ops& scalar_ops();

// Backend chosen at first use: env override, else best supported SIMD,
// else scalar. Stable for the lifetime of the process.
const Ops& active();

}  // namespace jsparse::kernels

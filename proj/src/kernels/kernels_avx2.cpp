// AVX2 + FMA variants. This translation unit is the only one compiled with
// -mavx2 -mfma; dispatch.cpp verifies CPU support before handing these out.

#include "jsparse/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace jsparse::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double sum_sq_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vx = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(vx, vx, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

void shrink_rows_avx2(const double* v, std::size_t n_rows, std::size_t l,
                      double theta, double* out) {
  for (std::size_t i = 0; i < n_rows; ++i) {
    const double* row = v + i * l;
    double* orow = out + i * l;
    double sq;
    if (l >= 4) {
      __m256d acc = _mm256_setzero_pd();
      std::size_t j = 0;
      for (; j + 4 <= l; j += 4) {
        __m256d vr = _mm256_loadu_pd(row + j);
        acc = _mm256_fmadd_pd(vr, vr, acc);
      }
      sq = hsum(acc);
      for (; j < l; ++j) sq += row[j] * row[j];
    } else {
      sq = 0.0;
      for (std::size_t j = 0; j < l; ++j) sq += row[j] * row[j];
    }
    double nrm = std::sqrt(sq);
    double scale = nrm > theta ? 1.0 - theta / nrm : 0.0;
    std::size_t j = 0;
    __m256d vs = _mm256_set1_pd(scale);
    for (; j + 4 <= l; j += 4) {
      _mm256_storeu_pd(orow + j, _mm256_mul_pd(_mm256_loadu_pd(row + j), vs));
    }
    for (; j < l; ++j) orow[j] = row[j] * scale;
  }
}

double sum_hinge_sq_avx2(const double* vals, std::size_t n, double c) {
  __m256d vc = _mm256_set1_pd(c);
  __m256d zero = _mm256_setzero_pd();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d h = _mm256_max_pd(_mm256_sub_pd(_mm256_loadu_pd(vals + i), vc), zero);
    acc = _mm256_fmadd_pd(h, h, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    double h = vals[i] - c;
    if (h > 0.0) s += h * h;
  }
  return s;
}

double sum_hinge_sq_quad_avx2(const double* q, const double* d, std::size_t n,
                              double a, double b, double thresh) {
  __m256d va = _mm256_set1_pd(a);
  __m256d vb = _mm256_set1_pd(b);
  __m256d vt = _mm256_set1_pd(thresh);
  __m256d zero = _mm256_setzero_pd();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d sq = _mm256_fnmadd_pd(va, _mm256_loadu_pd(d + i),
                                  _mm256_add_pd(_mm256_loadu_pd(q + i), vb));
    sq = _mm256_max_pd(sq, zero);
    __m256d h = _mm256_max_pd(_mm256_sub_pd(_mm256_sqrt_pd(sq), vt), zero);
    acc = _mm256_fmadd_pd(h, h, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    double sq = q[i] - a * d[i] + b;
    double h = std::sqrt(sq > 0.0 ? sq : 0.0) - thresh;
    if (h > 0.0) s += h * h;
  }
  return s;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{dot_avx2,          axpy_avx2,
                       sum_sq_avx2,       shrink_rows_avx2,
                       sum_hinge_sq_avx2, sum_hinge_sq_quad_avx2,
                       "avx2"};
  return ops;
}

}  // namespace jsparse::kernels

#endif  // x86_64

// NEON variants for aarch64. Advanced SIMD is baseline there, so no
// runtime feature probe is needed beyond the architecture check.

#include "jsparse/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

namespace jsparse::kernels {
namespace {

inline double hsum(float64x2_t v) { return vgetq_lane_f64(v, 0) + vgetq_lane_f64(v, 1); }

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
  }
  double acc = hsum(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vy = vld1q_f64(y + i);
    vy = vfmaq_f64(vy, va, vld1q_f64(x + i));
    vst1q_f64(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double sum_sq_neon(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vx = vld1q_f64(x + i);
    acc = vfmaq_f64(acc, vx, vx);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

void shrink_rows_neon(const double* v, std::size_t n_rows, std::size_t l,
                      double theta, double* out) {
  for (std::size_t i = 0; i < n_rows; ++i) {
    const double* row = v + i * l;
    double* orow = out + i * l;
    double sq = 0.0;
    for (std::size_t j = 0; j < l; ++j) sq += row[j] * row[j];
    double nrm = std::sqrt(sq);
    double scale = nrm > theta ? 1.0 - theta / nrm : 0.0;
    float64x2_t vs = vdupq_n_f64(scale);
    std::size_t j = 0;
    for (; j + 2 <= l; j += 2) {
      vst1q_f64(orow + j, vmulq_f64(vld1q_f64(row + j), vs));
    }
    for (; j < l; ++j) orow[j] = row[j] * scale;
  }
}

double sum_hinge_sq_neon(const double* vals, std::size_t n, double c) {
  float64x2_t vc = vdupq_n_f64(c);
  float64x2_t zero = vdupq_n_f64(0.0);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t h = vmaxq_f64(vsubq_f64(vld1q_f64(vals + i), vc), zero);
    acc = vfmaq_f64(acc, h, h);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    double h = vals[i] - c;
    if (h > 0.0) s += h * h;
  }
  return s;
}

double sum_hinge_sq_quad_neon(const double* q, const double* d, std::size_t n,
                              double a, double b, double thresh) {
  float64x2_t va = vdupq_n_f64(a);
  float64x2_t vb = vdupq_n_f64(b);
  float64x2_t vt = vdupq_n_f64(thresh);
  float64x2_t zero = vdupq_n_f64(0.0);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t sq = vfmsq_f64(vaddq_f64(vld1q_f64(q + i), vb), va, vld1q_f64(d + i));
    sq = vmaxq_f64(sq, zero);
    float64x2_t h = vmaxq_f64(vsubq_f64(vsqrtq_f64(sq), vt), zero);
    acc = vfmaq_f64(acc, h, h);
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

const Ops& neon_ops() {
  static const Ops ops{dot_neon,          axpy_neon,
                       sum_sq_neon,       shrink_rows_neon,
                       sum_hinge_sq_neon, sum_hinge_sq_quad_neon,
                       "neon"};
  return ops;
}

}  // namespace jsparse::kernels

#endif  // __aarch64__

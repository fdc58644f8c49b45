#include "jsparse/kernels.hpp"

#include <cmath>

namespace jsparse::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double sum_sq_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

void shrink_rows_scalar(const double* v, std::size_t n_rows, std::size_t l,
                        double theta, double* out) {
  for (std::size_t i = 0; i < n_rows; ++i) {
    const double* row = v + i * l;
    double* orow = out + i * l;
    double sq = 0.0;
    for (std::size_t j = 0; j < l; ++j) sq += row[j] * row[j];
    double nrm = std::sqrt(sq);
    double scale = nrm > theta ? 1.0 - theta / nrm : 0.0;
    for (std::size_t j = 0; j < l; ++j) orow[j] = row[j] * scale;
  }
}

double sum_hinge_sq_scalar(const double* vals, std::size_t n, double c) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double h = vals[i] - c;
    if (h > 0.0) acc += h * h;
  }
  return acc;
}

double sum_hinge_sq_quad_scalar(const double* q, const double* d,
                                std::size_t n, double a, double b,
                                double thresh) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double sq = q[i] - a * d[i] + b;
    double h = std::sqrt(sq > 0.0 ? sq : 0.0) - thresh;
    if (h > 0.0) acc += h * h;
  }
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{dot_scalar,          axpy_scalar,
                       sum_sq_scalar,       shrink_rows_scalar,
                       sum_hinge_sq_scalar, sum_hinge_sq_quad_scalar,
                       "scalar"};
  return ops;
}

}  // namespace jsparse::kernels

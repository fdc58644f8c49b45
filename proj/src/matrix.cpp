#include "jsparse/matrix.hpp"

#include <cmath>

#include "jsparse/errors.hpp"
#include "jsparse/kernels.hpp"

namespace jsparse {

double Matrix::frobenius_norm() const {
  return std::sqrt(kernels::active().sum_sq(data_.data(), data_.size()));
}

double Matrix::row_norm(std::size_t i) const {
  return std::sqrt(kernels::active().sum_sq(row(i), cols_));
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (!same_shape(other)) throw DimensionError("matrix += shape mismatch");
  kernels::active().axpy(1.0, other.data(), data_.data(), data_.size());
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (!same_shape(other)) throw DimensionError("matrix -= shape mismatch");
  kernels::active().axpy(-1.0, other.data(), data_.data(), data_.size());
  return *this;
}

Matrix& Matrix::operator*=(double c) {
  for (double& v : data_) v *= c;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(double c, Matrix a) { return a *= c; }

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
  const auto& k = kernels::active();
  Matrix c(a.rows(), b.cols());
  std::vector<double> col(b.rows());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t r = 0; r < b.rows(); ++r) col[r] = b(r, j);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      c(i, j) = k.dot(a.row(i), col.data(), a.cols());
    }
  }
  return c;
}

double l21_norm(const Matrix& x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) acc += x.row_norm(i);
  return acc;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw DimensionError("frobenius_distance: shape mismatch");
  double acc = 0.0;
  const double* pa = a.data();
  const double* pb = b.data();
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = pa[i] - pb[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace jsparse

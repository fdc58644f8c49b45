#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jsparse/matrix.hpp"

// Support partitioning and subdifferential geometry of the prior-informed
// row-sparsity objective zeta_W(X) = ||X||_{2,1} + lambda ||X - W||_{2,1}.
//
// Rows split into four cases by whether X and X - W vanish:
//   E1: x != 0, x != w   (both unit directions fixed)
//   E2: x != 0, x == w   (second term contributes a free ball)
//   E3: x == 0, x != w   (first term contributes a free ball)
//   E4: x == 0, x == w   (both free)

namespace jsparse::geometry {

enum class RowCase { E1, E2, E3, E4 };

struct SupportPartition {
  std::vector<std::size_t> e1, e2, e3, e4;
  std::size_t n = 0;

  std::size_t k() const { return e1.size() + e2.size(); }
};

struct PriorGeometry {
  SupportPartition partition;
  std::vector<double> cos_terms;  // one per E1 row, in [-1, 1]
  double lambda = 0.0;
  std::size_t l = 0;
};

// Rows are "nonzero" when their norm exceeds a relative tolerance scaled
// by the Frobenius norm of the whole matrix.
SupportPartition partition_supports(const Matrix& x0, const Matrix& w,
                                    double row_zero_tol = 1e-12);

// cos of the angle between x0^i and x0^i - w^i for each E1 row.
std::vector<double> cos_terms(const Matrix& x0, const Matrix& w,
                              const SupportPartition& partition);

PriorGeometry make_prior_geometry(const Matrix& x0, const Matrix& w,
                                  double lambda, double row_zero_tol = 1e-12);

// Squared distance from one Gaussian row to tau * (row subdifferential).
// unit_x / unit_xw supply the fixed unit directions for the cases that
// need them (E1: both, E2: unit_x, E3: unit_xw, E4: neither).
double row_dist_sq(std::span<const double> g_row, RowCase row_case, double tau,
                   double lambda, const double* unit_x, const double* unit_xw);

struct McEstimate {
  double estimate;
  double std_error;
};

// Monte-Carlo estimate of the statistical dimension of the descent cone of
// zeta_W at x0: mean over seeded Gaussian matrices of
// min_{tau >= 0} sum_i rowdist^2. Deterministic in (seed, samples); each
// sample's Gaussian draw derives from (seed, sample_index).
McEstimate mc_sdim_estimate(const Matrix& x0, const Matrix& w, double lambda,
                            int samples, std::uint64_t seed);

}  // namespace jsparse::geometry

#include "jsparse/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "jsparse/errors.hpp"
#include "jsparse/kernels.hpp"
#include "jsparse/minimize.hpp"
#include "jsparse/rng.hpp"

namespace jsparse::geometry {

SupportPartition partition_supports(const Matrix& x0, const Matrix& w,
                                    double row_zero_tol) {
  if (!x0.same_shape(w))
    throw DimensionError("partition_supports: x0 and w shapes differ");
  if (row_zero_tol < 0.0)
    throw DomainError("partition_supports: row_zero_tol must be nonnegative");

  std::size_t n = x0.rows();
  double sqrt_n = std::sqrt(static_cast<double>(n));
  double tol_x = row_zero_tol * x0.frobenius_norm() / sqrt_n;
  double tol_xw =
      row_zero_tol * std::max(x0.frobenius_norm(), w.frobenius_norm()) / sqrt_n;

  SupportPartition part;
  part.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    double xn = x0.row_norm(i);
    double dsq = 0.0;
    for (std::size_t j = 0; j < x0.cols(); ++j) {
      double d = x0(i, j) - w(i, j);
      dsq += d * d;
    }
    bool x_nonzero = xn > tol_x;
    bool xw_nonzero = std::sqrt(dsq) > tol_xw;
    if (x_nonzero && xw_nonzero)
      part.e1.push_back(i);
    else if (x_nonzero)
      part.e2.push_back(i);
    else if (xw_nonzero)
      part.e3.push_back(i);
    else
      part.e4.push_back(i);
  }
  return part;
}

std::vector<double> cos_terms(const Matrix& x0, const Matrix& w,
                              const SupportPartition& partition) {
  if (!x0.same_shape(w))
    throw DimensionError("cos_terms: x0 and w shapes differ");
  std::vector<double> out;
  out.reserve(partition.e1.size());
  for (std::size_t i : partition.e1) {
    double dot = 0.0;
    double nx = 0.0;
    double nd = 0.0;
    for (std::size_t j = 0; j < x0.cols(); ++j) {
      double x = x0(i, j);
      double d = x - w(i, j);
      dot += x * d;
      nx += x * x;
      nd += d * d;
    }
    double c = dot / (std::sqrt(nx) * std::sqrt(nd));
    out.push_back(std::clamp(c, -1.0, 1.0));
  }
  return out;
}

PriorGeometry make_prior_geometry(const Matrix& x0, const Matrix& w,
                                  double lambda, double row_zero_tol) {
  if (lambda < 0.0) throw DomainError("make_prior_geometry: lambda must be nonnegative");
  PriorGeometry geom;
  geom.partition = partition_supports(x0, w, row_zero_tol);
  geom.cos_terms = cos_terms(x0, w, geom.partition);
  geom.lambda = lambda;
  geom.l = x0.cols();
  return geom;
}

double row_dist_sq(std::span<const double> g_row, RowCase row_case, double tau,
                   double lambda, const double* unit_x, const double* unit_xw) {
  if (tau < 0.0) throw DomainError("row_dist_sq: tau must be nonnegative");
  std::size_t l = g_row.size();
  auto hinge_sq = [](double h) { return h > 0.0 ? h * h : 0.0; };
  switch (row_case) {
    case RowCase::E1: {
      if (unit_x == nullptr || unit_xw == nullptr)
        throw DomainError("row_dist_sq: E1 requires both unit vectors");
      double acc = 0.0;
      for (std::size_t j = 0; j < l; ++j) {
        double d = g_row[j] - tau * (unit_x[j] + lambda * unit_xw[j]);
        acc += d * d;
      }
      return acc;
    }
    case RowCase::E2: {
      if (unit_x == nullptr)
        throw DomainError("row_dist_sq: E2 requires unit_x");
      double acc = 0.0;
      for (std::size_t j = 0; j < l; ++j) {
        double d = g_row[j] - tau * unit_x[j];
        acc += d * d;
      }
      return hinge_sq(std::sqrt(acc) - tau * lambda);
    }
    case RowCase::E3: {
      if (unit_xw == nullptr)
        throw DomainError("row_dist_sq: E3 requires unit_xw");
      double acc = 0.0;
      for (std::size_t j = 0; j < l; ++j) {
        double d = g_row[j] - tau * lambda * unit_xw[j];
        acc += d * d;
      }
      return hinge_sq(std::sqrt(acc) - tau);
    }
    case RowCase::E4: {
      double acc = 0.0;
      for (std::size_t j = 0; j < l; ++j) acc += g_row[j] * g_row[j];
      return hinge_sq(std::sqrt(acc) - tau * (1.0 + lambda));
    }
  }
  throw DomainError("row_dist_sq: unknown case");
}

namespace {

// Per-row unit directions for the partition's fixed subdifferential parts.
struct UnitDirections {
  std::vector<double> gamma;      // E1: unit_x + lambda*unit_xw, row-major
  std::vector<double> gamma_sq;   // E1: ||gamma_i||^2
  std::vector<double> unit_x_e2;  // E2 rows
  std::vector<double> unit_xw_e3; // E3 rows
};

UnitDirections unit_directions(const Matrix& x0, const Matrix& w,
                               const SupportPartition& part, double lambda) {
  std::size_t l = x0.cols();
  UnitDirections u;
  u.gamma.resize(part.e1.size() * l);
  u.gamma_sq.resize(part.e1.size());
  u.unit_x_e2.resize(part.e2.size() * l);
  u.unit_xw_e3.resize(part.e3.size() * l);
  for (std::size_t r = 0; r < part.e1.size(); ++r) {
    std::size_t i = part.e1[r];
    double nx = x0.row_norm(i);
    double nd = 0.0;
    for (std::size_t j = 0; j < l; ++j) {
      double d = x0(i, j) - w(i, j);
      nd += d * d;
    }
    nd = std::sqrt(nd);
    double sq = 0.0;
    for (std::size_t j = 0; j < l; ++j) {
      double g = x0(i, j) / nx + lambda * (x0(i, j) - w(i, j)) / nd;
      u.gamma[r * l + j] = g;
      sq += g * g;
    }
    u.gamma_sq[r] = sq;
  }
  for (std::size_t r = 0; r < part.e2.size(); ++r) {
    std::size_t i = part.e2[r];
    double nx = x0.row_norm(i);
    for (std::size_t j = 0; j < l; ++j) u.unit_x_e2[r * l + j] = x0(i, j) / nx;
  }
  for (std::size_t r = 0; r < part.e3.size(); ++r) {
    std::size_t i = part.e3[r];
    double nd = 0.0;
    for (std::size_t j = 0; j < l; ++j) {
      double d = x0(i, j) - w(i, j);
      nd += d * d;
    }
    nd = std::sqrt(nd);
    for (std::size_t j = 0; j < l; ++j)
      u.unit_xw_e3[r * l + j] = (x0(i, j) - w(i, j)) / nd;
  }
  return u;
}

}  // namespace

McEstimate mc_sdim_estimate(const Matrix& x0, const Matrix& w, double lambda,
                            int samples, std::uint64_t seed) {
  if (!x0.same_shape(w))
    throw DimensionError("mc_sdim_estimate: x0 and w shapes differ");
  if (samples < 1) throw DomainError("mc_sdim_estimate: samples must be >= 1");
  if (lambda < 0.0 || lambda >= 1.0)
    throw DomainError("mc_sdim_estimate: lambda must be in [0, 1)");

  std::size_t n = x0.rows();
  std::size_t l = x0.cols();
  SupportPartition part = partition_supports(x0, w);

  // All-zero signal: the descent cone degenerates to {0}; the infimum is
  // only approached as tau -> inf, so report it analytically.
  if (part.k() == 0) return {0.0, 0.0};

  UnitDirections units = unit_directions(x0, w, part, lambda);
  double gamma_sq_sum = 0.0;
  for (double v : units.gamma_sq) gamma_sq_sum += v;

  const auto& kern = kernels::active();
  std::vector<double> minima(static_cast<std::size_t>(samples));

  std::vector<double> g(n * l);
  std::vector<double> q2(part.e2.size()), d2(part.e2.size());
  std::vector<double> q3(part.e3.size()), d3(part.e3.size());
  std::vector<double> norms4(part.e4.size());

  for (int s = 0; s < samples; ++s) {
    rng::GaussianStream stream(rng::mix(seed, static_cast<std::uint64_t>(s)));
    for (double& v : g) v = stream.next_gaussian();

    // Per-sample row statistics; tau enters only through scalars below.
    double e1_q = 0.0, e1_d = 0.0;
    for (std::size_t r = 0; r < part.e1.size(); ++r) {
      const double* grow = g.data() + part.e1[r] * l;
      e1_q += kern.sum_sq(grow, l);
      e1_d += kern.dot(grow, units.gamma.data() + r * l, l);
    }
    for (std::size_t r = 0; r < part.e2.size(); ++r) {
      const double* grow = g.data() + part.e2[r] * l;
      q2[r] = kern.sum_sq(grow, l);
      d2[r] = kern.dot(grow, units.unit_x_e2.data() + r * l, l);
    }
    for (std::size_t r = 0; r < part.e3.size(); ++r) {
      const double* grow = g.data() + part.e3[r] * l;
      q3[r] = kern.sum_sq(grow, l);
      d3[r] = kern.dot(grow, units.unit_xw_e3.data() + r * l, l);
    }
    for (std::size_t r = 0; r < part.e4.size(); ++r) {
      norms4[r] = std::sqrt(kern.sum_sq(g.data() + part.e4[r] * l, l));
    }

    auto objective = [&](double tau) {
      double total = e1_q - 2.0 * tau * e1_d + tau * tau * gamma_sq_sum;
      total += kern.sum_hinge_sq_quad(q2.data(), d2.data(), q2.size(),
                                      2.0 * tau, tau * tau, tau * lambda);
      double tl = tau * lambda;
      total += kern.sum_hinge_sq_quad(q3.data(), d3.data(), q3.size(),
                                      2.0 * tl, tl * tl, tau);
      total += kern.sum_hinge_sq(norms4.data(), norms4.size(),
                                 tau * (1.0 + lambda));
      return total;
    };

    minima[static_cast<std::size_t>(s)] =
        minimize_convex_ray(objective, 1e-8).value;
  }

  double sum = 0.0;
  for (double v : minima) sum += v;
  double mean = sum / samples;
  if (samples == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double v : minima) ss += (v - mean) * (v - mean);
  double std_error = std::sqrt(ss / (samples - 1.0) / samples);
  return {mean, std_error};
}

}  // namespace jsparse::geometry

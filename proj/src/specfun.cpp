#include "jsparse/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "jsparse/errors.hpp"

namespace jsparse::specfun {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: x must be positive");
  return std::lgamma(x);
}

double log_bessel_i(double v, double z) {
  if (z < 0.0) throw DomainError("log_bessel_i: z must be nonnegative");
  if (v < -0.5) throw DomainError("log_bessel_i: order must be >= -0.5");
  if (z == 0.0) {
    if (v == 0.0) return 0.0;
    return v > 0.0 ? -kInf : kInf;
  }

  double mu = 4.0 * v * v;
  double series_limit = std::min(600.0, 100.0 + 0.5 * mu);
  if (z <= series_limit) {
    // I_v(z) = (z/2)^v / Gamma(v+1) * sum_k (z^2/4)^k / (k! (v+1)_k),
    // all terms positive so the normalized sum is cancellation-free.
    double q = 0.25 * z * z;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 5000; ++k) {
      term *= q / (static_cast<double>(k) * (v + static_cast<double>(k)));
      sum += term;
      if (term < sum * 1e-18) break;
    }
    return v * std::log(0.5 * z) - std::lgamma(v + 1.0) + std::log(sum);
  }

  // Large-argument expansion: I_v(z) ~ e^z / sqrt(2 pi z) * S,
  // S = sum_k (-1)^k prod_{j<k}(mu - (2j+1)^2) / (k! (8z)^k),
  // truncated at the smallest term.
  double sum = 1.0;
  double term = 1.0;
  double prev_abs = kInf;
  for (int k = 1; k < 60; ++k) {
    double odd = 2.0 * k - 1.0;
    // the expansion's (-1)^k alternation folds into the factor
    term *= -(mu - odd * odd) / (8.0 * z * static_cast<double>(k));
    if (std::abs(term) >= prev_abs) break;
    prev_abs = std::abs(term);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return z - 0.5 * std::log(2.0 * M_PI * z) + std::log(sum);
}

double bessel_i_scaled(double v, double z) {
  if (z < 0.0) throw DomainError("bessel_i_scaled: z must be nonnegative");
  if (v < -0.5) throw DomainError("bessel_i_scaled: order must be >= -0.5");
  if (z == 0.0) {
    if (v == 0.0) return 1.0;
    return v > 0.0 ? 0.0 : kInf;
  }
  return std::exp(log_bessel_i(v, z) - z);
}

double chi_pdf(double s, int l) {
  if (s < 0.0) throw DomainError("chi_pdf: s must be nonnegative");
  if (l < 1) throw DomainError("chi_pdf: l must be a positive integer");
  double dl = static_cast<double>(l);
  if (s == 0.0) {
    if (l == 1) return std::sqrt(2.0 / M_PI);
    return 0.0;
  }
  double lp = (1.0 - 0.5 * dl) * std::log(2.0) + (dl - 1.0) * std::log(s) -
              0.5 * s * s - std::lgamma(0.5 * dl);
  return std::exp(lp);
}

double noncentral_chi_pdf(double s, int l, double nc) {
  if (s < 0.0) throw DomainError("noncentral_chi_pdf: s must be nonnegative");
  if (l < 1) throw DomainError("noncentral_chi_pdf: l must be a positive integer");
  if (nc < 0.0) throw DomainError("noncentral_chi_pdf: nc must be nonnegative");
  if (nc == 0.0) return chi_pdf(s, l);
  double dl = static_cast<double>(l);
  if (s == 0.0) {
    // l = 1 is the folded normal, positive at the origin.
    if (l == 1) return std::sqrt(2.0 / M_PI) * std::exp(-0.5 * nc * nc);
    return 0.0;
  }
  // Combine -(s^2+nc^2)/2 with the e^z of the Bessel function so the
  // exponent is the benign -(s-nc)^2/2.
  double z = nc * s;
  double lp = 0.5 * dl * std::log(s) + (1.0 - 0.5 * dl) * std::log(nc) -
              0.5 * (s - nc) * (s - nc) + (log_bessel_i(0.5 * dl - 1.0, z) - z);
  return std::exp(lp);
}

namespace {

// 15-point Kronrod nodes/weights with embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Segment {
  double a, b, value, err;
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b);
  double h = 0.5 * (b - a);
  double fc = f(c);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    double x = h * kXgk[j];
    double f1 = f(c - x);
    double f2 = f(c + x);
    kron += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& quad) {
  if (quad.rel_tol <= 0.0 || quad.abs_tol <= 0.0 || quad.max_subdivisions < 1)
    throw DomainError("integrate: invalid quadrature spec");
  if (a == b) return 0.0;

  std::vector<Segment> segs;
  segs.push_back(gk15(f, a, b));
  for (int iter = 0; iter < quad.max_subdivisions; ++iter) {
    double total = 0.0;
    double err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      total += segs[i].value;
      err += segs[i].err;
      if (segs[i].err > segs[worst].err) worst = i;
    }
    if (err <= std::max(quad.abs_tol, quad.rel_tol * std::abs(total)))
      return total;
    Segment s = segs[worst];
    double mid = 0.5 * (s.a + s.b);
    segs[worst] = gk15(f, s.a, mid);
    segs.push_back(gk15(f, mid, s.b));
  }
  throw NumericalError("integrate: max_subdivisions exhausted before tolerance met");
}

double tail_expectation(double threshold, double shift,
                        const std::function<double(double)>& pdf,
                        const QuadratureSpec& quad) {
  if (threshold < 0.0) throw DomainError("tail_expectation: threshold must be nonnegative");
  if (shift < 0.0) throw DomainError("tail_expectation: shift must be nonnegative");

  auto integrand = [&](double t) {
    double d = t - threshold;
    return d * d * pdf(t);
  };

  double cutoff = quad.abs_tol * 1e-3;
  double upper = threshold + shift;
  int steps = 0;
  while (integrand(upper) >= cutoff || integrand(upper + 0.5) >= cutoff) {
    upper += std::max(1.0, 0.05 * upper);
    if (++steps > 500)
      throw NumericalError("tail_expectation: could not locate integrable tail");
  }
  if (upper <= threshold) return 0.0;
  return integrate(integrand, threshold, upper, quad);
}

}  // namespace jsparse::specfun

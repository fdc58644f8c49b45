#pragma once

#include <functional>

namespace jsparse::specfun {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
};

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// ln I_v(z) for order v >= -0.5, z >= 0. Ascending series for moderate z,
// large-argument asymptotic expansion beyond. -inf when I_v(z) = 0 (z = 0,
// v > 0); +inf for the divergent z = 0, v < 0 limit.
double log_bessel_i(double v, double z);

// Exponentially scaled modified Bessel: e^{-z} I_v(z).
double bessel_i_scaled(double v, double z);

// Chi density with l degrees of freedom: 2^{1-l/2} s^{l-1} e^{-s^2/2} / Gamma(l/2).
double chi_pdf(double s, int l);

// Noncentral chi density with l degrees of freedom and noncentrality nc:
// s^l nc e^{-(s^2+nc^2)/2} / (nc s)^{l/2} * I_{l/2-1}(nc s).
// nc = 0 falls back to the chi density (the analytic limit).
double noncentral_chi_pdf(double s, int l, double nc);

// Adaptive Gauss-Kronrod 7-15 on [a, b]. Throws NumericalError when
// max_subdivisions is exhausted before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& quad = {});

// integral_{threshold}^inf (t - threshold)^2 pdf(t) dt.
// `shift` bounds how far past the threshold the integrand can remain
// non-negligible; callers pass mean + 12*stddev of the density (for
// (non)central chi: sqrt(l) + nc + 12 works, since the stddev is <= 1).
// The infinite limit is truncated where the integrand falls below
// abs_tol * 1e-3, never earlier than threshold + shift.
double tail_expectation(double threshold, double shift,
                        const std::function<double(double)>& pdf,
                        const QuadratureSpec& quad = {});

}  // namespace jsparse::specfun

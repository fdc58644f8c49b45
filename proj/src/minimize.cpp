#include "jsparse/minimize.hpp"

#include <cmath>

#include "jsparse/errors.hpp"

namespace jsparse {

MinimizeResult minimize_convex_ray(const std::function<double(double)>& f,
                                   double tol, int max_doublings) {
  double f0 = f(0.0);
  double hi = 1.0;
  double fhi = f(hi);
  if (fhi < f0) {
    // Grow until the value turns upward; convexity then brackets the min.
    double prev = hi;
    double fprev = fhi;
    int doublings = 0;
    for (;;) {
      if (++doublings > max_doublings)
        throw NumericalError("minimize_convex_ray: bracketing failed");
      double next = 2.0 * prev;
      double fnext = f(next);
      if (fnext >= fprev) {
        hi = next;
        break;
      }
      prev = next;
      fprev = fnext;
    }
  }

  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 0.0, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  double xm = 0.5 * (a + b);
  double fm = f(xm);
  // Guard the endpoints; with a flat region golden section may sit a hair
  // off the best sampled point.
  if (f0 <= fm && a == 0.0) return {0.0, f0};
  return {xm, fm};
}

}  // namespace jsparse

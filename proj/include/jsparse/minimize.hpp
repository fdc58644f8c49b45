#pragma once

#include <functional>

namespace jsparse {

struct MinimizeResult {
  double x;
  double value;
};

// Minimizes a convex function on the ray [0, inf): doubles the right
// endpoint until the function stops decreasing, then golden-section on
// [0, hi] down to x-tolerance `tol`. Throws NumericalError when the
// bracket is not found within `max_doublings`.
MinimizeResult minimize_convex_ray(const std::function<double(double)>& f,
                                   double tol, int max_doublings = 60);

}  // namespace jsparse

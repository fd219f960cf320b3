#pragma once

#include <functional>

namespace lcs {

// Recursive adaptive Simpson rule with absolute tolerance.  Throws when the
// integrand is non-finite or the recursion depth is exhausted.
double adaptive_simpson(const std::function<double(double)>& f, double lo,
                        double hi, double abs_tol, int max_depth = 60);

// Numeric Renyi divergence of order q between one-dimensional densities
// given by their log-density callables, integrated over [lo, hi].
// The integrand exp(q*ld1 - (q-1)*ld2) is evaluated relative to its grid
// peak so the absolute tolerance 1e-10 applies at unit scale; a non-finite
// or non-convergent integrand throws "divergent".
double renyi_quadrature_1d(double q,
                           const std::function<double(double)>& log_density1,
                           const std::function<double(double)>& log_density2,
                           double lo, double hi);

}  // namespace lcs

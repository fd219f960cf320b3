#pragma once

#include <functional>
#include <vector>

#include "lcs/gaussian.hpp"
#include "lcs/linalg.hpp"

namespace lcs {

// psi_2 norm: the smallest lambda with E exp(||X||^2 / lambda^2) <= 2.
struct OrliczNorm {
    double lambda;
    double residual;  // |E exp(||X||^2/lambda^2) - 2| at the returned lambda
};

// Bracketed bisection on lambda; mgf_eval(lambda) = E exp(||X||^2/lambda^2)
// must be nonincreasing in lambda.  Throws "norm infinite" when no bracket
// exists below 1e12; a point mass at the origin returns {0, 0}.
OrliczNorm orlicz_norm_mgf(const std::function<double(double)>& mgf_eval);

// Plug-in norm of a sample of ||X|| values (at least 10^4 of them).
OrliczNorm orlicz_norm_empirical(const std::vector<double>& norms);

// ||X|| = c almost surely: lambda = c / sqrt(log 2).
OrliczNorm orlicz_norm_constant(double c);

// psi_2 norm of X - shift for Gaussian X, via the closed-form mgf.
OrliczNorm gaussian_orlicz_norm(const Gaussian& g, const Vec& shift);

// Tail-versus-body check on a sample of norms: slope is the exp-quadratic
// tail scale fitted between the 95% and 99.5% quantiles, body_scale is
// (8/3) E||X||^2 (what a Gaussian body implies for the same norm).  A ratio
// above 0.9 flags the plug-in norm as untrustworthy.
struct TailDiagnostic {
    double slope;
    double body_scale;
    double ratio;
    bool heavy;
};

TailDiagnostic orlicz_tail_diagnostic(const std::vector<double>& norms);

// The shift metric is only evaluated where the coupling is certified: one
// marginal a point mass (coupling unique) or the two laws differing by a
// deterministic shift.
enum class WassersteinCertificate { dirac_anchored, deterministic_shift };

struct OrliczWassersteinValue {
    double value;
    WassersteinCertificate certificate;
};

OrliczWassersteinValue w_orlicz_dirac(const Vec& anchor,
                                      const OrliczNorm& norm_of_shifted);
OrliczWassersteinValue w_orlicz_dirac_pair(const Vec& a, const Vec& b);

// Shift-metric distance from the target's mode to the target itself for an
// alpha-strongly-log-concave law in dimension d: 6 sqrt(d / alpha).
double init_bound_slc(double alpha, double d);

// Shift-metric distance from y to the conditional law under the proximal
// forward step, h <= 1/(2 beta): 9 sqrt(d h) + 3 beta h * dist_to_min.
double rgo_init_bound(double beta, double h, double dist_to_min, double d);

}  // namespace lcs

#pragma once

#include "lcs/linalg.hpp"
#include "lcs/model.hpp"

namespace lcs {

// Multivariate normal law; covariance validated symmetric PSD on entry
// (eigenvalues in [-1e-12 * trace/n, 0) clipped to zero).
struct Gaussian {
    Vec mean;
    Mat cov;

    Gaussian(Vec mean_in, Mat cov_in);
    Eigen::Index dim() const { return mean.size(); }
};

// Markov kernel x -> A x + b + N(0, Q).
struct AffineGaussianKernel {
    Mat A;
    Vec b;
    Mat Q;

    Gaussian apply(const Gaussian& g) const;
};

Gaussian affine_push(const Gaussian& g, const Mat& A, const Vec& b);
Gaussian convolve(const Gaussian& g, const Mat& Q);

// Renyi divergence of order q >= 1 between Gaussians; q = 1 is KL.
// Returns +infinity when the defining integral diverges (mixture covariance
// q*cov2 + (1-q)*cov1 not positive definite, or a singular input).
double renyi_gaussian(double q, const Gaussian& g1, const Gaussian& g2);
double kl_gaussian(const Gaussian& g1, const Gaussian& g2);
double chi2_gaussian(const Gaussian& g1, const Gaussian& g2);

// Order-infinity divergence: finite iff cov1 < cov2 in the positive-definite
// order (maximizes the log density ratio explicitly).
double renyi_inf_gaussian(const Gaussian& g1, const Gaussian& g2);

// Quadratic Wasserstein distance (Bures formula).
double w2_gaussian(const Gaussian& g1, const Gaussian& g2);

// E ||X|| for X ~ g, via a one-dimensional Laplace-transform integral.
double gaussian_mean_norm(const Gaussian& g);

// E exp(||X - shift||^2 / lambda^2); +infinity when lambda^2 <= 2 lambda_max(cov).
double gaussian_norm_mgf(const Gaussian& g, const Vec& shift, double lambda);

double gaussian_log_density(const Gaussian& g, double x);  // 1-D only

// One step of the discretized overdamped dynamics on a quadratic target:
// A = I - h*Lambda, b = h*Lambda*m, Q = 2h*I.
AffineGaussianKernel lmc_kernel(const QuadraticPotential& p, double h);

// One step of the exponential-integrator underdamped dynamics on the
// position/velocity pair, as a 2d-dimensional affine kernel.
AffineGaussianKernel ulmc_kernel(const QuadraticPotential& p, double h,
                                 double gamma);

// Stationary law of a contractive affine-Gaussian chain.  The spectral
// radius is estimated iteratively (tolerance 1e-10); the covariance is the
// fixed point of S -> A S A^T + Q iterated to max-entry change <= 1e-13.
Gaussian stationary_of_affine_chain(const AffineGaussianKernel& k);

}  // namespace lcs

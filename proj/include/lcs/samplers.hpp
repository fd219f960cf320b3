#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lcs/gaussian.hpp"
#include "lcs/model.hpp"
#include "lcs/rng.hpp"

namespace lcs {

Vec sample_gaussian(const Gaussian& g, RngStream& rng);

// ---- underdamped chain -----------------------------------------------------

struct UlmcParams {
    double gamma;  // friction
    double h;      // step size
};

// Scalar pieces of the exact one-step Gaussian law of the exponential
// integrator.  With a = exp(-gamma h) the mean map is
//   x' = x + c_xy v - c_gx grad f(x),   v' = a v - c_xy grad f(x)
// and the per-coordinate noise covariance of (x', v') is sigma.  bar_sigma
// is the noise covariance after the coordinate change twist = [[1,0],[1,2/gamma]],
// in which the mean map contracts.
struct UlmcCoeffs {
    double a;
    double c_xy;  // (1 - a) / gamma
    double c_gx;  // (h - (1 - a)/gamma) / gamma
    Eigen::Matrix2d sigma;
    Eigen::Matrix2d bar_sigma;
    Eigen::Matrix2d twist;
};

UlmcCoeffs ulmc_coeffs(double gamma, double h);

// Full kernel forms for a given potential: mean maps in original and twisted
// coordinates (each takes the two stacked d-blocks and returns a stacked
// 2d-vector), and the 2x2 noise covariances.  The callables reference p.
struct UlmcKernelForms {
    UlmcCoeffs coeffs;
    std::function<Vec(const Vec& x, const Vec& v)> F;
    std::function<Vec(const Vec& u, const Vec& z)> barF;
    Eigen::Matrix2d Sigma2x2;
    Eigen::Matrix2d barSigma2x2;
    double a;
};

UlmcKernelForms ulmc_kernel_forms(const Potential& p, const UlmcParams& params);

// Smallest eigenvalue of the twisted 2x2 noise covariance; ~ gamma h^3 / 6
// for small gamma h.  Evaluated in a cancellation-safe quotient form.
double lambda_min_bar_sigma(double gamma, double h);

// Operator norm of the linear part of the twisted mean map (power iteration,
// tolerance 1e-10); < 1 certifies contraction of the chain on quadratics.
double ulmc_contraction_measured(const QuadraticPotential& p,
                                 const UlmcParams& params);

struct UlmcState {
    Vec x;
    Vec v;
};

UlmcState ulmc_step(const Potential& p, const UlmcState& s,
                    const UlmcParams& params, RngStream& rng);

// Iteration count for the underdamped chain to reach R_q <= eps^2 from a
// shift-metric initialization distance w_psi2:
//   N = ceil(c * (sqrt(beta)/(alpha h)) * max(log(q w^2 / (sqrt(beta) eps^2 h^3)), 1)).
long ulmc_mix_iters(double alpha, double beta, double h, double q,
                    double w_psi2, double eps, double c = 1.0);

struct UlmcBiasBound {
    double value;
    bool in_regime;  // h small enough for the bound's step-size assumption
};

// Stationary bias of the discretized underdamped chain: c * beta^{3/2} d h^2 q T.
UlmcBiasBound ulmc_bias_bound(double beta, double d, double h, double q,
                              double T, double c = 1.0);

// ---- overdamped proposal and Metropolis filter ------------------------------

Vec lmc_step(const Potential& p, const Vec& x, double h, RngStream& rng);

struct MalaParams {
    MalaParams(double h_in, double laziness_in = 0.5);
    double h;
    double laziness;  // probability of holding still; must be < 1
};

// log of the Metropolis ratio pi(y) Q(y,x) / (pi(x) Q(x,y)) for the
// overdamped proposal Q(x,.) = N(x - h grad f(x), 2h I).
double mala_accept_logratio(const Potential& p, const Vec& x, const Vec& y,
                            double h);

struct MalaStep {
    Vec x;
    bool proposed;  // false when the laziness coin held the chain
    bool accepted;
};

MalaStep mala_step(const Potential& p, const Vec& x, const MalaParams& params,
                   RngStream& rng);

// Iteration count to reach total variation eps_tv from a chi^2 warm start,
// via the conductance of the half-lazy filtered chain at step size h:
//   N = ceil(c * (2/(alpha h)) * max(log(8 chi2_warm / eps_tv^2), 1)).
long mala_mix_iters(double alpha, double h, double chi2_warm, double eps_tv,
                    double c = 1.0);

// ---- proximal sampler --------------------------------------------------------

// Law of x given y under exp(-f(x) - |x-y|^2/(2h)) for quadratic f:
// N((Lambda + I/h)^{-1} (Lambda m + y/h), (Lambda + I/h)^{-1}).
Gaussian rgo_exact_quadratic(const QuadraticPotential& p, double h,
                             const Vec& y);

// R_q decay factor of the forward (convolution) half-step per outer
// iteration: (1 + alpha h)^{-1/q}.
double prox_forward_contraction(double q, double alpha, double h);

struct RgoDraw {
    Vec x;
    long steps;  // inner iterations spent (0 for an exact oracle)
};

using RgoSampler = std::function<RgoDraw(const Vec& y, RngStream& rng)>;

struct ProxParams {
    double h;
    long n_prox;
    double eps_rgo;  // inner accuracy target (R_2), recorded for budgets
};

struct ProxIterate {
    Vec x;
    Vec y;
    long rgo_steps;
};

std::vector<ProxIterate> proximal_sampler_run(const Potential& p,
                                              const ProxParams& params,
                                              const RgoSampler& rgo,
                                              const Vec& init, RngStream& rng);
std::vector<ProxIterate> proximal_sampler_run(const Potential& p,
                                              const ProxParams& params,
                                              const RgoSampler& rgo,
                                              const Gaussian& init,
                                              RngStream& rng);

// ---- composed pipelines ------------------------------------------------------

// Every hidden constant in the parameter-selection formulas, exposed.
// Defaults are 1 except the filter step-size factor, which defaults to 1/2.
struct SamplerConstants {
    double c_ulmc_h = 1.0;   // underdamped step-size prefactor
    double c_ulmc_n = 1.0;   // underdamped iteration-count prefactor
    double c_mala_h = 0.5;   // filter step size h = c/(beta sqrt(d))
    double c_mala_n = 1.0;   // filter iteration-count prefactor
    double c_prox_n = 1.0;   // outer proximal iteration prefactor
    double c_rgo_eps = 1.0;  // inner accuracy prefactor
};

struct WarmStartResult {
    Vec x;
    UlmcParams params;
    long n_steps;
    double w_init;  // shift-metric distance bound used for the iteration count
    double eps;
};

// Run the underdamped chain from (start, v ~ N(0,I)) long enough that the
// output law is within R_q <= eps^2 of the extended target; returns the
// position draw.  Requires eps <= 1/sqrt(q).
WarmStartResult warm_start_ulmc(const Potential& p, double q, double eps,
                                const Vec& start, RngStream& rng,
                                const SamplerConstants& constants = {});

struct PipelineWeakResult {
    Vec x;
    double h_ulmc;
    long n_ulmc;
    double h_mala;
    long n_mala;
    long mala_proposed;
    long mala_accepted;
    double r3_cert;      // warm-start certificate on R_3
    double chi2_warm;    // exp(r3_cert) - 1, fed to the filter schedule
    double eps_tv;       // total-variation target of the filter stage
    double chi2_final;   // boosted certificate sqrt(eps_tv (exp(2 r3)+1))
};

// Warm start with the underdamped chain (R_3 <= log 2), then the filtered
// chain to total variation eps^4/5; the boosted chi^2 certificate is <= eps^2.
PipelineWeakResult pipeline_weak(const Potential& p, double eps,
                                 const Vec& start, RngStream& rng,
                                 const SamplerConstants& constants = {});

struct PipelineFullResult {
    Vec x;
    double h;
    long n_prox;
    double eps_rgo;
    double r0;            // divergence bound of the Gaussian initialization
    double mean_norm;     // E ||X - x*|| under the target
    double eps_acc;       // accumulated inner budget n_prox * eps_rgo^2
    long total_ulmc_steps;
    long total_mala_steps;
};

// Proximal sampler at h = 1/(2 beta), each conditional draw solved by
// pipeline_weak on the regularized potential f + |.-y|^2/(2h) (condition
// number <= 3).  mean_norm may be supplied for targets where E ||X - x*||
// has no closed form; quadratic targets compute it exactly.
PipelineFullResult pipeline_full(const Potential& p, double eps,
                                 RngStream& rng,
                                 const SamplerConstants& constants = {},
                                 std::optional<double> mean_norm = {});

}  // namespace lcs

#pragma once

#include <vector>

#include "lcs/linalg.hpp"

namespace lcs {

// One step of the interpolated chain: contract by c, add N(0, sigma^2 I).
struct CniSpec {
    double c;       // per-step contraction factor
    double sigma;   // per-step Gaussian noise scale
    long n_steps;
    double q;       // divergence order
    double w0;      // shift-metric distance of the two starting laws
};

// Divergence bound c^{2N} q w0^2 / (2 sigma^2) after N steps, valid once
// N >= log_{1/c}(sqrt(q (q-1)) w0 / (sigma sqrt(2))); below that the shift
// budget cannot be retired and the bound does not apply.
double pabi_orlicz_bound(const CniSpec& spec);

// Trading delta of shift for divergence order and an additive penalty:
//   order_out = (q + lambda - 1)/lambda   (+infinity at lambda = 0),
//   penalty   = (q - lambda) delta^2 log 2 / (2 (1 - lambda) sigma^2),
// subject to delta <= (1 - lambda) sigma sqrt(2 / ((q-1)(q-lambda))) when
// q > 1; order 1 is unconstrained.
struct ShiftReduction {
    double order_out;
    double penalty;
    double w_new;  // w + delta (the shift grows; reducing spends it)
};

ShiftReduction shift_reduction_step(double q, double sigma, double w,
                                    double delta, double lambda);

// A contraction step divides the shift budget by c.
double contraction_reduction_step(double w, double c);

// Exact order-q divergence of the two-chain Gaussian instance started at
// point masses u and 0 (both chains contract by c and add N(0, sigma^2 I)
// each step).
double cni_exact_gaussian(const CniSpec& spec, const Vec& u);

struct RegularityInputs {
    double alpha;
    double beta;
    double h;
    long n_steps;
    double w2;  // quadratic-Wasserstein distance of the two starting laws
};

// KL(mu K^N || nu K^N) <= coeff * w2^2 for the h-step discretized overdamped
// kernel K on an (alpha, beta)-conditioned target:
//   coeff = (1 - r^{-2}) / (4 h (r^{2N} - 1)),
//   r = 1 / max(|1 - h alpha|, |1 - h beta|), valid when r > 1.
// Returns coeff * w2^2 (pass w2 = 1 for the bare coefficient).
double lmc_regularity_coeff(const RegularityInputs& inp);

struct LdRegularity {
    double value;      // alpha / (2 (exp(2 alpha T) - 1)); 1/(4 T) at alpha = 0
    double old_value;  // the previous constant, exactly twice value
};

LdRegularity ld_regularity_coeff(double alpha, double t);

// Step weights minimizing sum a_n^2 subject to sum r^{n+1} a_n = w2
// (n = 0..N-1): a_n = w2 r^{n-1} (r^2 - 1)/(r^{2N} - 1), with
// sum a_n^2 = w2^2 (1 - r^{-2})/(r^{2N} - 1).
struct BiasedMixingWeights {
    std::vector<double> a;
    double sum_sq;
};

BiasedMixingWeights biased_mixing_weights(double r, long n, double w2);

}  // namespace lcs

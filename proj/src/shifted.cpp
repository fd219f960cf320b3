#include "lcs/shifted.hpp"

#include <cmath>
#include <stdexcept>

#include "lcs/gaussian.hpp"

namespace lcs {

namespace {

void validate_cni(const CniSpec& spec) {
    if (!(spec.c > 0.0)) throw std::domain_error("contraction factor must be positive");
    if (!(spec.sigma > 0.0)) throw std::domain_error("noise scale must be positive");
    if (spec.n_steps < 1) throw std::domain_error("need at least one step");
    if (!(spec.q >= 1.0)) throw std::domain_error("divergence order must be >= 1");
    if (!(spec.w0 >= 0.0)) throw std::domain_error("shift must be nonnegative");
}

}  // namespace

double pabi_orlicz_bound(const CniSpec& spec) {
    validate_cni(spec);
    if (spec.q > 1.0) {
        const double arg = std::sqrt(spec.q * (spec.q - 1.0)) * spec.w0 /
                           (spec.sigma * std::sqrt(2.0));
        if (arg > 1.0) {
            if (spec.c >= 1.0)
                throw std::runtime_error(
                    "step count too small for the shifted-divergence bound to apply");
            const double n_min = std::log(arg) / std::log(1.0 / spec.c);
            if (static_cast<double>(spec.n_steps) < n_min - 1e-9)
                throw std::runtime_error(
                    "step count too small for the shifted-divergence bound to apply");
        }
    }
    return std::exp(2.0 * static_cast<double>(spec.n_steps) * std::log(spec.c)) *
           spec.q * spec.w0 * spec.w0 / (2.0 * spec.sigma * spec.sigma);
}

ShiftReduction shift_reduction_step(double q, double sigma, double w,
                                    double delta, double lambda) {
    if (!(q >= 1.0)) throw std::domain_error("divergence order must be >= 1");
    if (!(sigma > 0.0)) throw std::domain_error("noise scale must be positive");
    if (!(w >= 0.0)) throw std::domain_error("shift must be nonnegative");
    if (!(delta >= 0.0)) throw std::domain_error("shift must be nonnegative");
    if (!(lambda >= 0.0 && lambda < 1.0))
        throw std::domain_error("lambda must be in [0, 1)");
    if (q > 1.0) {
        const double cap = (1.0 - lambda) * sigma *
                           std::sqrt(2.0 / ((q - 1.0) * (q - lambda)));
        if (delta > cap * (1.0 + 1e-12))
            throw std::runtime_error("shift too large");
    }
    ShiftReduction out;
    out.order_out = lambda > 0.0 ? (q + lambda - 1.0) / lambda : kInf;
    out.penalty = (q - lambda) * delta * delta * std::log(2.0) /
                  (2.0 * (1.0 - lambda) * sigma * sigma);
    out.w_new = w + delta;
    return out;
}

double contraction_reduction_step(double w, double c) {
    if (!(w >= 0.0)) throw std::domain_error("shift must be nonnegative");
    if (!(c > 0.0)) throw std::domain_error("contraction factor must be positive");
    return w / c;
}

double cni_exact_gaussian(const CniSpec& spec, const Vec& u) {
    validate_cni(spec);
    const auto n = static_cast<double>(spec.n_steps);
    // accumulated variance sigma^2 * sum_{k=0}^{N-1} c^{2k}
    const double c2 = spec.c * spec.c;
    const double var =
        spec.sigma * spec.sigma *
        (spec.c == 1.0 ? n : (std::pow(c2, n) - 1.0) / (c2 - 1.0));
    const Eigen::Index d = u.size();
    const Mat cov = var * Mat::Identity(d, d);
    const Gaussian g1(std::pow(spec.c, n) * u, cov);
    const Gaussian g2(Vec::Zero(d), cov);
    return renyi_gaussian(spec.q, g1, g2);
}

double lmc_regularity_coeff(const RegularityInputs& inp) {
    if (!(inp.beta >= inp.alpha)) throw std::domain_error("need alpha <= beta");
    if (!(inp.h > 0.0)) throw std::domain_error("step size must be positive");
    if (inp.n_steps < 1) throw std::domain_error("need at least one step");
    if (!(inp.w2 >= 0.0)) throw std::domain_error("distance must be nonnegative");
    const double r = 1.0 / std::max(std::abs(1.0 - inp.h * inp.alpha),
                                    std::abs(1.0 - inp.h * inp.beta));
    if (!(r > 1.0))
        throw std::runtime_error("gradient step not contractive; bound vacuous");
    const double growth = std::pow(r, 2.0 * static_cast<double>(inp.n_steps));
    return (1.0 - 1.0 / (r * r)) / (4.0 * inp.h * (growth - 1.0)) * inp.w2 *
           inp.w2;
}

LdRegularity ld_regularity_coeff(double alpha, double t) {
    if (!(t > 0.0)) throw std::domain_error("time horizon must be positive");
    if (alpha == 0.0) return {1.0 / (4.0 * t), 1.0 / (2.0 * t)};
    const double em = std::expm1(2.0 * alpha * t);
    return {alpha / (2.0 * em), alpha / em};
}

BiasedMixingWeights biased_mixing_weights(double r, long n, double w2) {
    if (!(r > 1.0)) throw std::domain_error("rate must exceed 1");
    if (n < 1) throw std::domain_error("need at least one step");
    if (!(w2 >= 0.0)) throw std::domain_error("distance must be nonnegative");
    const double denom = std::pow(r, 2.0 * static_cast<double>(n)) - 1.0;
    BiasedMixingWeights out;
    out.a.resize(static_cast<size_t>(n));
    const double scale = w2 * (r * r - 1.0) / denom;
    double power = 1.0 / r;  // r^{n-1} at n = 0
    for (long k = 0; k < n; ++k) {
        out.a[static_cast<size_t>(k)] = scale * power;
        power *= r;
    }
    out.sum_sq = w2 * w2 * (1.0 - 1.0 / (r * r)) / denom;
    return out;
}

}  // namespace lcs

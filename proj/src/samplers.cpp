#include "lcs/samplers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace lcs {

namespace {

// t - (1 - exp(-t)), series-sharpened against cancellation at small t
double t_minus_u(double t, double u) {
    if (t < 1e-4) return t * t * (0.5 - t / 6.0 + t * t / 24.0);
    return t - u;
}

Eigen::Matrix2d factor_2x2_psd(const Eigen::Matrix2d& s) {
    const double s00 = s(0, 0);
    if (s00 > 0.0) {
        const double l00 = std::sqrt(s00);
        const double l10 = s(0, 1) / l00;
        const double rem = s(1, 1) - l10 * l10;
        if (rem >= 0.0) {
            Eigen::Matrix2d l;
            l << l00, 0.0, l10, std::sqrt(rem);
            return l;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(s);
    return eig.eigenvectors() *
           eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
}

}  // namespace

Vec sample_gaussian(const Gaussian& g, RngStream& rng) {
    Eigen::LLT<Mat> llt(g.cov);
    Mat l;
    if (llt.info() == Eigen::Success) {
        l = llt.matrixL();
    } else {
        Eigen::SelfAdjointEigenSolver<Mat> eig(g.cov);
        l = eig.eigenvectors() *
            eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
    }
    return g.mean + l * rng.normal_vec(g.dim());
}

UlmcCoeffs ulmc_coeffs(double gamma, double h) {
    if (!(gamma > 0.0)) throw std::domain_error("friction must be positive");
    if (!(h >= 0.0)) throw std::domain_error("step size must be nonnegative");
    const double t = gamma * h;
    const double u = -std::expm1(-t);  // 1 - exp(-gamma h)
    const double tu = t_minus_u(t, u);
    const double g2 = gamma * gamma;

    UlmcCoeffs c;
    c.a = 1.0 - u;
    c.c_xy = u / gamma;
    c.c_gx = tu / g2;
    c.sigma << (2.0 * tu - u * u) / g2, u * u / gamma,
               u * u / gamma, u * (2.0 - u);
    c.bar_sigma << (2.0 * tu - u * u) / g2, (2.0 * tu + u * u) / g2,
                   (2.0 * tu + u * u) / g2, (2.0 * t + u * (6.0 - u)) / g2;
    c.twist << 1.0, 0.0, 1.0, 2.0 / gamma;
    return c;
}

UlmcKernelForms ulmc_kernel_forms(const Potential& p,
                                  const UlmcParams& params) {
    UlmcKernelForms f;
    f.coeffs = ulmc_coeffs(params.gamma, params.h);
    f.Sigma2x2 = f.coeffs.sigma;
    f.barSigma2x2 = f.coeffs.bar_sigma;
    f.a = f.coeffs.a;

    const UlmcCoeffs c = f.coeffs;
    const Potential* pp = &p;
    const double gamma = params.gamma;

    f.F = [pp, c](const Vec& x, const Vec& v) {
        const Vec g = pp->grad_at(x);
        Vec out(2 * x.size());
        out.head(x.size()) = x + c.c_xy * v - c.c_gx * g;
        out.tail(x.size()) = c.a * v - c.c_xy * g;
        return out;
    };
    f.barF = [pp, c, gamma](const Vec& u, const Vec& z) {
        const Vec g = pp->grad_at(u);
        const double hs = 0.5 * (1.0 + c.a);
        const double hd = 0.5 * (1.0 - c.a);
        Vec out(2 * u.size());
        out.head(u.size()) = hs * u + hd * z - c.c_gx * g;
        out.tail(u.size()) =
            hd * u + hs * z - (c.c_gx + 2.0 * c.c_xy / gamma) * g;
        return out;
    };
    return f;
}

double lambda_min_bar_sigma(double gamma, double h) {
    if (!(gamma > 0.0)) throw std::domain_error("friction must be positive");
    if (!(h >= 0.0)) throw std::domain_error("step size must be nonnegative");
    if (gamma * h > 10.0) throw std::domain_error("gamma * h out of range");
    const Eigen::Matrix2d s = ulmc_coeffs(gamma, h).bar_sigma;
    const double tr = s(0, 0) + s(1, 1);
    if (tr <= 0.0) return 0.0;
    const double det =
        std::max(s(0, 0) * s(1, 1) - s(0, 1) * s(0, 1), 0.0);
    const double disc = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
    return 2.0 * det / (tr + disc);
}

double ulmc_contraction_measured(const QuadraticPotential& p,
                                 const UlmcParams& params) {
    const UlmcCoeffs c = ulmc_coeffs(params.gamma, params.h);
    const Eigen::Index d = p.dim();
    const Mat id = Mat::Identity(d, d);
    const double hs = 0.5 * (1.0 + c.a);
    const double hd = 0.5 * (1.0 - c.a);
    Mat b(2 * d, 2 * d);
    b.topLeftCorner(d, d) = hs * id - c.c_gx * p.precision();
    b.topRightCorner(d, d) = hd * id;
    b.bottomLeftCorner(d, d) =
        hd * id - (c.c_gx + 2.0 * c.c_xy / params.gamma) * p.precision();
    b.bottomRightCorner(d, d) = hs * id;
    return operator_norm_power(b, 1e-10);
}

UlmcState ulmc_step(const Potential& p, const UlmcState& s,
                    const UlmcParams& params, RngStream& rng) {
    if (s.x.size() != p.dim() || s.v.size() != p.dim())
        throw std::invalid_argument("state dimension mismatch");
    const UlmcCoeffs c = ulmc_coeffs(params.gamma, params.h);
    const Eigen::Matrix2d l = factor_2x2_psd(c.sigma);
    const Vec g = p.grad_at(s.x);
    UlmcState out{Vec(s.x.size()), Vec(s.x.size())};
    for (Eigen::Index i = 0; i < s.x.size(); ++i) {
        const double n1 = rng.normal();
        const double n2 = rng.normal();
        out.x[i] = s.x[i] + c.c_xy * s.v[i] - c.c_gx * g[i] +
                   l(0, 0) * n1 + l(0, 1) * n2;
        out.v[i] = c.a * s.v[i] - c.c_xy * g[i] + l(1, 0) * n1 + l(1, 1) * n2;
    }
    return out;
}

long ulmc_mix_iters(double alpha, double beta, double h, double q,
                    double w_psi2, double eps, double c) {
    if (!(alpha > 0.0) || !(beta >= alpha))
        throw std::domain_error("need 0 < alpha <= beta");
    if (!(h > 0.0) || !(q >= 1.0) || !(w_psi2 >= 0.0) || !(c > 0.0))
        throw std::domain_error("invalid mixing-schedule parameters");
    if (!(eps > 0.0) ||
        (q > 1.0 &&
         eps > std::sqrt(std::log(2.0) / (q - 1.0)) * (1.0 + 1e-12)))
        throw std::domain_error("eps out of range");
    const double kappa = beta / alpha;
    if (h > (1.0 + 1e-12) / (kappa * std::sqrt(beta)))
        throw std::domain_error("h too large");
    const double arg =
        q * w_psi2 * w_psi2 / (std::sqrt(beta) * eps * eps * h * h * h);
    const double log_term = arg > 0.0 ? std::max(std::log(arg), 1.0) : 1.0;
    return static_cast<long>(
        std::ceil(c * std::sqrt(beta) / (alpha * h) * log_term));
}

UlmcBiasBound ulmc_bias_bound(double beta, double d, double h, double q,
                              double T, double c) {
    if (!(beta > 0.0) || !(d >= 1.0) || !(h > 0.0) || !(q >= 1.0) ||
        !(T > 0.0) || !(c > 0.0))
        throw std::domain_error("invalid bias-bound parameters");
    const double log_n = std::max(std::log(std::max(T / h, 2.0)), 1.0);
    const double h_max = 1.0 / (std::pow(beta, 0.75) * std::sqrt(d) * q *
                                std::sqrt(T * log_n));
    return {c * std::pow(beta, 1.5) * d * h * h * q * T, h <= h_max};
}

Vec lmc_step(const Potential& p, const Vec& x, double h, RngStream& rng) {
    if (!(h > 0.0)) throw std::domain_error("step size must be positive");
    if (x.size() != p.dim())
        throw std::invalid_argument("state dimension mismatch");
    return x - h * p.grad_at(x) + std::sqrt(2.0 * h) * rng.normal_vec(x.size());
}

MalaParams::MalaParams(double h_in, double laziness_in)
    : h(h_in), laziness(laziness_in) {
    if (!(h > 0.0)) throw std::domain_error("step size must be positive");
    if (!(laziness >= 0.0 && laziness < 1.0))
        throw std::domain_error("laziness must be in [0, 1)");
}

double mala_accept_logratio(const Potential& p, const Vec& x, const Vec& y,
                            double h) {
    if (!(h > 0.0)) throw std::domain_error("step size must be positive");
    const Vec gx = p.grad_at(x);
    const Vec gy = p.grad_at(y);
    const double fwd = (y - x + h * gx).squaredNorm();
    const double bwd = (x - y + h * gy).squaredNorm();
    return p.value_at(x) - p.value_at(y) + (fwd - bwd) / (4.0 * h);
}

MalaStep mala_step(const Potential& p, const Vec& x, const MalaParams& params,
                   RngStream& rng) {
    if (x.size() != p.dim())
        throw std::invalid_argument("state dimension mismatch");
    if (rng.uniform_co() < params.laziness) return {x, false, false};
    const Vec y = lmc_step(p, x, params.h, rng);
    const double lr = mala_accept_logratio(p, x, y, params.h);
    if (lr >= 0.0 || std::log(rng.uniform()) <= lr) return {y, true, true};
    return {x, true, false};
}

long mala_mix_iters(double alpha, double h, double chi2_warm, double eps_tv,
                    double c) {
    if (!(alpha > 0.0) || !(h > 0.0) || !(chi2_warm >= 0.0) ||
        !(eps_tv > 0.0) || !(c > 0.0))
        throw std::domain_error("invalid filter-schedule parameters");
    const double arg = 8.0 * chi2_warm / (eps_tv * eps_tv);
    const double log_term = arg > 0.0 ? std::max(std::log(arg), 1.0) : 1.0;
    return static_cast<long>(std::ceil(c * 2.0 / (alpha * h) * log_term));
}

Gaussian rgo_exact_quadratic(const QuadraticPotential& p, double h,
                             const Vec& y) {
    if (!(h > 0.0)) throw std::domain_error("step size must be positive");
    if (y.size() != p.dim())
        throw std::invalid_argument("state dimension mismatch");
    const Eigen::Index d = p.dim();
    const Mat prec = p.precision() + Mat::Identity(d, d) / h;
    Eigen::LLT<Mat> llt(prec);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("conditional precision not positive definite");
    const Vec mean = llt.solve(p.precision() * p.center() + y / h);
    const Mat cov = llt.solve(Mat::Identity(d, d));
    return Gaussian(mean, symmetrize(cov));
}

double prox_forward_contraction(double q, double alpha, double h) {
    if (!(q >= 1.0)) throw std::domain_error("divergence order must be >= 1");
    if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
    if (!(h > 0.0)) throw std::domain_error("step size must be positive");
    return std::pow(1.0 + alpha * h, -1.0 / q);
}

std::vector<ProxIterate> proximal_sampler_run(const Potential& p,
                                              const ProxParams& params,
                                              const RgoSampler& rgo,
                                              const Vec& init,
                                              RngStream& rng) {
    if (!(params.h > 0.0)) throw std::domain_error("step size must be positive");
    if (params.n_prox < 1)
        throw std::domain_error("need at least one outer iteration");
    if (init.size() != p.dim())
        throw std::invalid_argument("state dimension mismatch");
    std::vector<ProxIterate> chain;
    chain.reserve(static_cast<size_t>(params.n_prox));
    Vec x = init;
    const double root_h = std::sqrt(params.h);
    for (long k = 0; k < params.n_prox; ++k) {
        const Vec y = x + root_h * rng.normal_vec(x.size());
        RgoDraw draw;
        try {
            draw = rgo(y, rng);
        } catch (const std::exception& e) {
            throw std::runtime_error("conditional draw failed at outer iteration " +
                                     std::to_string(k) + ": " + e.what());
        }
        x = draw.x;
        chain.push_back({x, y, draw.steps});
    }
    return chain;
}

std::vector<ProxIterate> proximal_sampler_run(const Potential& p,
                                              const ProxParams& params,
                                              const RgoSampler& rgo,
                                              const Gaussian& init,
                                              RngStream& rng) {
    return proximal_sampler_run(p, params, rgo, sample_gaussian(init, rng),
                                rng);
}

}  // namespace lcs

#include <cmath>
#include <stdexcept>

#include <Eigen/Cholesky>

#include "lcs/divergence.hpp"
#include "lcs/orlicz.hpp"
#include "lcs/samplers.hpp"

namespace lcs {

namespace {

// Gradient descent at rate 1/beta; exact for targets that expose their
// minimizer.  Needs strong convexity to converge from an arbitrary start.
Vec minimize_potential(const Potential& p, Vec x) {
    if (p.minimizer()) return *p.minimizer();
    if (!(p.alpha() > 0.0))
        throw std::domain_error("minimizer search needs a strongly convex target");
    for (int it = 0; it < 100000; ++it) {
        const Vec g = p.grad_at(x);
        if (g.norm() <= 1e-12 * p.beta() * (1.0 + x.norm())) break;
        x -= g / p.beta();
    }
    return x;
}

}  // namespace

WarmStartResult warm_start_ulmc(const Potential& p, double q, double eps,
                                const Vec& start, RngStream& rng,
                                const SamplerConstants& constants) {
    if (!(p.alpha() > 0.0)) throw std::domain_error("alpha must be positive");
    if (!(q >= 1.0)) throw std::domain_error("divergence order must be >= 1");
    if (!(eps > 0.0) || eps > (1.0 + 1e-12) / std::sqrt(q))
        throw std::domain_error("eps out of range");
    if (start.size() != p.dim())
        throw std::invalid_argument("state dimension mismatch");
    const double alpha = p.alpha();
    const double beta = p.beta();
    const double kappa = beta / alpha;
    const auto d = static_cast<double>(p.dim());
    const double gamma = std::sqrt(2.0 * beta);
    const double h =
        std::min(constants.c_ulmc_h * eps * std::sqrt(alpha) /
                     (beta * std::sqrt(d * q)),
                 1.0 / (kappa * std::sqrt(beta)));
    const Vec xstar = minimize_potential(p, start);
    const double dist = (start - xstar).norm();
    const double w_init =
        2.0 * (init_bound_slc(alpha, d) + dist / std::sqrt(std::log(2.0)));
    const long n =
        ulmc_mix_iters(alpha, beta, h, q, w_init, eps, constants.c_ulmc_n);
    const UlmcParams params{gamma, h};
    UlmcState s{start, rng.normal_vec(p.dim())};
    for (long k = 0; k < n; ++k) s = ulmc_step(p, s, params, rng);
    return {s.x, params, n, w_init, eps};
}

PipelineWeakResult pipeline_weak(const Potential& p, double eps,
                                 const Vec& start, RngStream& rng,
                                 const SamplerConstants& constants) {
    if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
    const double q_warm = 3.0;
    const double eps_warm = 1.0 / std::sqrt(q_warm);
    const WarmStartResult warm =
        warm_start_ulmc(p, q_warm, eps_warm, start, rng, constants);

    const double r3 = eps_warm * eps_warm;        // <= log 2 by construction
    const double chi2_warm = std::expm1(r3);      // orders are monotone
    const double eps_tv = std::pow(eps, 4) / 5.0;
    const double h_mala =
        constants.c_mala_h / (p.beta() * std::sqrt(static_cast<double>(p.dim())));
    const long n_mala = mala_mix_iters(p.alpha(), h_mala, chi2_warm, eps_tv,
                                       constants.c_mala_n);
    const MalaParams mp(h_mala, 0.5);
    Vec x = warm.x;
    long proposed = 0;
    long accepted = 0;
    for (long k = 0; k < n_mala; ++k) {
        MalaStep s = mala_step(p, x, mp, rng);
        proposed += s.proposed ? 1 : 0;
        accepted += s.accepted ? 1 : 0;
        x = std::move(s.x);
    }
    return {std::move(x), warm.params.h, warm.n_steps,
            h_mala,       n_mala,        proposed,
            accepted,     r3,            chi2_warm,
            eps_tv,       warm_boost_chi2(std::min(eps_tv, 1.0), r3)};
}

PipelineFullResult pipeline_full(const Potential& p, double eps,
                                 RngStream& rng,
                                 const SamplerConstants& constants,
                                 std::optional<double> mean_norm) {
    if (!(p.alpha() > 0.0)) throw std::domain_error("alpha must be positive");
    if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
    const double alpha = p.alpha();
    const double beta = p.beta();
    const double kappa = beta / alpha;
    const double q = 2.0;
    const double h = 1.0 / (2.0 * beta);
    const Eigen::Index d = p.dim();
    const auto* quad = dynamic_cast<const QuadraticPotential*>(&p);

    const Vec xstar = minimize_potential(p, Vec::Zero(d));
    double m_norm;
    if (mean_norm) {
        m_norm = *mean_norm;
        if (!(m_norm > 0.0)) throw std::domain_error("mean norm must be positive");
    } else if (quad) {
        Eigen::LLT<Mat> llt(quad->precision());
        if (llt.info() != Eigen::Success)
            throw std::invalid_argument("precision not positive definite");
        const Mat cov = llt.solve(Mat::Identity(d, d));
        m_norm = gaussian_mean_norm(Gaussian(Vec::Zero(d), symmetrize(cov)));
    } else {
        throw std::invalid_argument("mean_norm required for non-quadratic targets");
    }

    const double r0 = 2.0 + std::log(2.0 * beta * m_norm * m_norm);
    const double ratio = r0 / (eps * eps);
    const double log_term = ratio > std::exp(1.0) ? std::log(ratio) : 1.0;
    const long n_prox = std::max(
        static_cast<long>(std::ceil(constants.c_prox_n * kappa * q * log_term)),
        1L);
    const double eps_rgo = constants.c_rgo_eps * eps / std::sqrt(kappa * q);

    const double alpha_y = alpha + 1.0 / h;
    const double beta_y = beta + 1.0 / h;
    long ulmc_steps = 0;
    long mala_steps = 0;
    RgoSampler rgo;
    Eigen::LLT<Mat> cond_llt;
    Vec cond_base;
    if (quad) {
        const Mat prec_y = quad->precision() + Mat::Identity(d, d) / h;
        cond_llt.compute(prec_y);
        cond_base = quad->precision() * quad->center();
        rgo = [&, prec_y](const Vec& y, RngStream& r) -> RgoDraw {
            const Vec m_y = cond_llt.solve(cond_base + y / h);
            const QuadraticPotential cond(prec_y, m_y, alpha_y, beta_y);
            const PipelineWeakResult inner =
                pipeline_weak(cond, eps_rgo, y, r, constants);
            ulmc_steps += inner.n_ulmc;
            mala_steps += inner.n_mala;
            return {inner.x, inner.n_ulmc + inner.n_mala};
        };
    } else {
        const Potential* pp = &p;
        rgo = [&, pp](const Vec& y, RngStream& r) -> RgoDraw {
            const FunctionPotential cond(
                d,
                [pp, y, h](const Vec& x) {
                    return pp->value_at(x) + (x - y).squaredNorm() / (2.0 * h);
                },
                [pp, y, h](const Vec& x) -> Vec {
                    return pp->grad_at(x) + (x - y) / h;
                },
                alpha_y, beta_y);
            const PipelineWeakResult inner =
                pipeline_weak(cond, eps_rgo, y, r, constants);
            ulmc_steps += inner.n_ulmc;
            mala_steps += inner.n_mala;
            return {inner.x, inner.n_ulmc + inner.n_mala};
        };
    }

    const Gaussian init(xstar, Mat::Identity(d, d) / (2.0 * beta));
    const ProxParams prox{h, n_prox, eps_rgo};
    const auto chain = proximal_sampler_run(p, prox, rgo, init, rng);
    return {chain.back().x, h,      n_prox,
            eps_rgo,        r0,     m_norm,
            static_cast<double>(n_prox) * eps_rgo * eps_rgo,
            ulmc_steps,     mala_steps};
}

}  // namespace lcs

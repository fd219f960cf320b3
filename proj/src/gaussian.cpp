#include "lcs/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include "lcs/quadrature.hpp"
#include "lcs/samplers.hpp"

namespace lcs {

Gaussian::Gaussian(Vec mean_in, Mat cov_in) : mean(std::move(mean_in)) {
    if (cov_in.rows() != mean.size() || cov_in.cols() != mean.size())
        throw std::invalid_argument("gaussian mean/covariance dimension mismatch");
    cov = validate_covariance(cov_in, "gaussian covariance");
}

Gaussian AffineGaussianKernel::apply(const Gaussian& g) const {
    return convolve(affine_push(g, A, b), Q);
}

Gaussian affine_push(const Gaussian& g, const Mat& A, const Vec& b) {
    return Gaussian(A * g.mean + b, symmetrize(A * g.cov * A.transpose()));
}

Gaussian convolve(const Gaussian& g, const Mat& Q) {
    return Gaussian(g.mean, g.cov + Q);
}

namespace {

struct SpectralData {
    Eigen::SelfAdjointEigenSolver<Mat> eig;
    double min_eig;
    double log_det;

    explicit SpectralData(const Mat& m) : eig(symmetrize(m)) {
        min_eig = eig.eigenvalues().minCoeff();
        log_det = 0.0;
        for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
            const double v = eig.eigenvalues()[i];
            log_det += v > 0.0 ? std::log(v) : -kInf;
        }
    }

    double quad_inv(const Vec& rhs) const {
        const Vec t = eig.eigenvectors().transpose() * rhs;
        double s = 0.0;
        for (Eigen::Index i = 0; i < t.size(); ++i)
            s += t[i] * t[i] / eig.eigenvalues()[i];
        return s;
    }

    Mat inverse() const {
        return symmetrize(eig.eigenvectors() *
                          eig.eigenvalues().cwiseInverse().asDiagonal() *
                          eig.eigenvectors().transpose());
    }
};

bool near_singular(const SpectralData& s) {
    const double scale =
        std::max(std::abs(s.eig.eigenvalues().maxCoeff()), 1e-300);
    return s.min_eig <= 1e-14 * scale;
}

}  // namespace

double kl_gaussian(const Gaussian& g1, const Gaussian& g2) {
    if (g1.dim() != g2.dim())
        throw std::invalid_argument("gaussian dimension mismatch");
    const SpectralData s1(g1.cov), s2(g2.cov);
    if (near_singular(s1) || near_singular(s2)) return kInf;
    const Eigen::Index d = g1.dim();
    const Vec delta = g1.mean - g2.mean;
    const double trace_term = s2.inverse().cwiseProduct(g1.cov).sum();
    return 0.5 * (trace_term - static_cast<double>(d) + s2.quad_inv(delta) +
                  s2.log_det - s1.log_det);
}

double renyi_gaussian(double q, const Gaussian& g1, const Gaussian& g2) {
    if (q < 1.0) throw std::domain_error("divergence order must be >= 1");
    if (g1.dim() != g2.dim())
        throw std::invalid_argument("gaussian dimension mismatch");
    if (q == 1.0) return kl_gaussian(g1, g2);
    const SpectralData s1(g1.cov), s2(g2.cov);
    if (near_singular(s1) || near_singular(s2)) return kInf;
    const Mat mix = symmetrize(q * g2.cov + (1.0 - q) * g1.cov);
    const SpectralData sq(mix);
    if (sq.min_eig <= 0.0) return kInf;
    const Vec delta = g1.mean - g2.mean;
    const double quad = sq.quad_inv(delta);
    const double log_term =
        sq.log_det - (1.0 - q) * s1.log_det - q * s2.log_det;
    return 0.5 * q * quad - log_term / (2.0 * (q - 1.0));
}

double chi2_gaussian(const Gaussian& g1, const Gaussian& g2) {
    const double r2 = renyi_gaussian(2.0, g1, g2);
    return std::isfinite(r2) ? std::expm1(r2) : kInf;
}

double renyi_inf_gaussian(const Gaussian& g1, const Gaussian& g2) {
    if (g1.dim() != g2.dim())
        throw std::invalid_argument("gaussian dimension mismatch");
    const SpectralData s1(g1.cov), s2(g2.cov);
    if (near_singular(s1) || near_singular(s2)) return kInf;
    const Mat p1 = s1.inverse();
    const Mat p2 = s2.inverse();
    const Mat gap = symmetrize(p1 - p2);
    const Vec c = p1 * g1.mean - p2 * g2.mean;
    Eigen::SelfAdjointEigenSolver<Mat> eig(gap);
    const double scale =
        std::max(eig.eigenvalues().cwiseAbs().maxCoeff(), 1e-300);
    const Vec cq = eig.eigenvectors().transpose() * c;
    double sup_quad = 0.0;
    for (Eigen::Index i = 0; i < cq.size(); ++i) {
        const double lam = eig.eigenvalues()[i];
        if (lam < -1e-12 * scale) return kInf;
        if (lam <= 1e-12 * scale) {
            if (std::abs(cq[i]) > 1e-10 * (1.0 + c.norm())) return kInf;
            continue;
        }
        sup_quad += cq[i] * cq[i] / (2.0 * lam);
    }
    const double const_term =
        0.5 * (g2.mean.dot(p2 * g2.mean) - g1.mean.dot(p1 * g1.mean)) +
        0.5 * (s2.log_det - s1.log_det);
    return sup_quad + const_term;
}

double w2_gaussian(const Gaussian& g1, const Gaussian& g2) {
    if (g1.dim() != g2.dim())
        throw std::invalid_argument("gaussian dimension mismatch");
    const Mat root2 = spd_sqrt(g2.cov);
    const Mat cross = spd_sqrt(symmetrize(root2 * g1.cov * root2));
    const double sq = (g1.mean - g2.mean).squaredNorm() + g1.cov.trace() +
                      g2.cov.trace() - 2.0 * cross.trace();
    return std::sqrt(std::max(sq, 0.0));
}

double gaussian_mean_norm(const Gaussian& g) {
    Eigen::SelfAdjointEigenSolver<Mat> eig(g.cov);
    const Vec d = eig.eigenvalues().cwiseMax(0.0);
    const Vec nu = eig.eigenvectors().transpose() * g.mean;
    const double m2 = d.sum() + nu.squaredNorm();  // E ||X||^2
    if (m2 == 0.0) return 0.0;
    // log E exp(-t ||X||^2)
    const auto log_laplace = [&](double t) {
        double s = 0.0;
        for (Eigen::Index i = 0; i < d.size(); ++i) {
            const double den = 1.0 + 2.0 * d[i] * t;
            s += -0.5 * std::log1p(2.0 * d[i] * t) - t * nu[i] * nu[i] / den;
        }
        return s;
    };
    // E sqrt(S) = (1/sqrt(pi)) * Int_0^inf (1 - E exp(-v^2 S)) / v^2 dv; the
    // tail v > v_mid is mapped onto [0, 1/v_mid] by u = 1/v, which keeps both
    // integrands bounded and analytic.
    const auto head = [&](double v) {
        if (v == 0.0) return m2;
        return -std::expm1(log_laplace(v * v)) / (v * v);
    };
    const auto tail = [&](double u) {
        const double t = 1.0 / (u * u);
        if (!std::isfinite(t)) return 1.0;
        return -std::expm1(log_laplace(t));
    };
    const double v_mid = 1.0 / std::sqrt(m2);
    const double tol = 1e-12 * (1.0 + std::sqrt(m2));
    const double body = adaptive_simpson(head, 0.0, v_mid, tol) +
                        adaptive_simpson(tail, 0.0, 1.0 / v_mid, tol);
    return body / std::sqrt(M_PI);
}

double gaussian_norm_mgf(const Gaussian& g, const Vec& shift, double lambda) {
    if (shift.size() != g.dim())
        throw std::invalid_argument("shift dimension mismatch");
    if (!(lambda > 0.0)) throw std::domain_error("lambda must be positive");
    Eigen::SelfAdjointEigenSolver<Mat> eig(g.cov);
    const Vec d = eig.eigenvalues().cwiseMax(0.0);
    const Vec nu = eig.eigenvectors().transpose() * (g.mean - shift);
    const double l2 = lambda * lambda;
    double log_val = 0.0;
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        const double den = l2 - 2.0 * d[i];
        if (den <= 0.0) return kInf;
        log_val += -0.5 * std::log(den / l2) + nu[i] * nu[i] / den;
    }
    return log_val > 700.0 ? kInf : std::exp(log_val);
}

double gaussian_log_density(const Gaussian& g, double x) {
    if (g.dim() != 1)
        throw std::invalid_argument("log density helper is one-dimensional");
    const double var = g.cov(0, 0);
    if (!(var > 0.0)) throw std::domain_error("degenerate 1-D gaussian");
    const double d = x - g.mean[0];
    return -0.5 * std::log(2.0 * M_PI * var) - 0.5 * d * d / var;
}

AffineGaussianKernel lmc_kernel(const QuadraticPotential& p, double h) {
    if (!(h > 0.0)) throw std::domain_error("step size must be positive");
    const Eigen::Index d = p.dim();
    AffineGaussianKernel k;
    k.A = Mat::Identity(d, d) - h * p.precision();
    k.b = h * p.precision() * p.center();
    k.Q = 2.0 * h * Mat::Identity(d, d);
    return k;
}

AffineGaussianKernel ulmc_kernel(const QuadraticPotential& p, double h,
                                 double gamma) {
    const UlmcCoeffs forms = ulmc_coeffs(gamma, h);
    const Eigen::Index d = p.dim();
    const Mat id = Mat::Identity(d, d);
    const Mat& lam = p.precision();
    AffineGaussianKernel k;
    k.A = Mat::Zero(2 * d, 2 * d);
    k.A.topLeftCorner(d, d) = id - forms.c_gx * lam;
    k.A.topRightCorner(d, d) = forms.c_xy * id;
    k.A.bottomLeftCorner(d, d) = -forms.c_xy * lam;
    k.A.bottomRightCorner(d, d) = forms.a * id;
    k.b = Vec(2 * d);
    k.b.head(d) = forms.c_gx * lam * p.center();
    k.b.tail(d) = forms.c_xy * lam * p.center();
    k.Q = Mat::Zero(2 * d, 2 * d);
    k.Q.topLeftCorner(d, d) = forms.sigma(0, 0) * id;
    k.Q.topRightCorner(d, d) = forms.sigma(0, 1) * id;
    k.Q.bottomLeftCorner(d, d) = forms.sigma(0, 1) * id;
    k.Q.bottomRightCorner(d, d) = forms.sigma(1, 1) * id;
    return k;
}

Gaussian stationary_of_affine_chain(const AffineGaussianKernel& k) {
    const double rho = spectral_radius(k.A, 1e-10);
    if (!(rho < 1.0)) throw std::runtime_error("chain not contractive");
    const Eigen::Index d = k.A.rows();
    const Vec mean =
        (Mat::Identity(d, d) - k.A).partialPivLu().solve(k.b);
    Mat cov = k.Q;
    bool converged = false;
    for (long long it = 0; it < 1000000; ++it) {
        const Mat next = symmetrize(k.A * cov * k.A.transpose() + k.Q);
        const double delta = (next - cov).cwiseAbs().maxCoeff();
        cov = next;
        if (delta <= 1e-13) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw std::runtime_error("stationary covariance iteration did not converge");
    return Gaussian(mean, cov);
}

}  // namespace lcs

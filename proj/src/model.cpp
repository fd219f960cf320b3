#include "lcs/model.hpp"

#include <cfloat>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lcs {

Potential::Potential(Eigen::Index dim, double alpha, double beta,
                     std::optional<Vec> minimizer)
    : dim_(dim), alpha_(alpha), beta_(beta), minimizer_(std::move(minimizer)) {
    if (dim <= 0) throw std::invalid_argument("potential dimension must be positive");
    if (!(beta >= alpha))
        throw std::invalid_argument("smoothness bound below convexity bound");
    if (minimizer_ && minimizer_->size() != dim)
        throw std::invalid_argument("minimizer dimension mismatch");
}

namespace {

Mat checked_precision(Mat precision) {
    if (precision.rows() != precision.cols())
        throw std::invalid_argument("precision matrix not square");
    if (!is_symmetric(precision))
        throw std::invalid_argument("precision matrix not symmetric");
    return symmetrize(precision);
}

std::tuple<Mat, double, double> solved_precision(Mat precision) {
    Mat p = checked_precision(std::move(precision));
    Eigen::SelfAdjointEigenSolver<Mat> eig(p, Eigen::EigenvaluesOnly);
    return {std::move(p), eig.eigenvalues().minCoeff(),
            eig.eigenvalues().maxCoeff()};
}

bool is_diag(const Mat& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) != 0.0) return false;
    return true;
}

}  // namespace

QuadraticPotential::QuadraticPotential(Mat precision, Vec center)
    : QuadraticPotential(solved_precision(std::move(precision)),
                         std::move(center)) {}

QuadraticPotential::QuadraticPotential(std::tuple<Mat, double, double> init,
                                       Vec center)
    : QuadraticPotential(std::move(std::get<0>(init)), std::move(center),
                         std::get<1>(init), std::get<2>(init)) {}

QuadraticPotential::QuadraticPotential(Mat precision, Vec center, double alpha,
                                       double beta)
    : Potential(center.size(), alpha, beta, center),
      precision_(checked_precision(std::move(precision))),
      center_(std::move(center)),
      diagonal_(is_diag(precision_)) {
    if (precision_.rows() != dim())
        throw std::invalid_argument("precision/center dimension mismatch");
    if (diagonal_) diag_ = precision_.diagonal();
}

double QuadraticPotential::value_at(const Vec& x) const {
    if (diagonal_) {
        double s = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            const double d = x[i] - center_[i];
            s += diag_[i] * d * d;
        }
        return 0.5 * s;
    }
    const Vec d = x - center_;
    return 0.5 * d.dot(precision_ * d);
}

Vec QuadraticPotential::grad_at(const Vec& x) const {
    if (diagonal_) return diag_.cwiseProduct(x - center_);
    return precision_ * (x - center_);
}

FunctionPotential::FunctionPotential(Eigen::Index dim,
                                     std::function<double(const Vec&)> value,
                                     std::function<Vec(const Vec&)> grad,
                                     double alpha, double beta,
                                     std::optional<Vec> minimizer)
    : Potential(dim, alpha, beta, minimizer),
      value_(std::move(value)),
      grad_(std::move(grad)) {
    if (minimizer) {
        const Vec g = grad_(*minimizer);
        if (g.norm() > 1e-8 * (1.0 + beta * minimizer->norm()))
            throw std::invalid_argument("minimizer is not a critical point");
        offset_ = value_(*minimizer);
    }
}

double FunctionPotential::value_at(const Vec& x) const {
    return value_(x) - offset_;
}

Vec FunctionPotential::grad_at(const Vec& x) const { return grad_(x); }

double condition_number(const Potential& p) {
    if (p.alpha() <= 0.0)
        throw std::domain_error("kappa undefined (alpha <= 0)");
    return p.beta() / p.alpha();
}

double grad_check(const Potential& p, const std::vector<Vec>& points) {
    const double base_step = std::cbrt(DBL_EPSILON);
    double worst = 0.0;
    for (const Vec& x : points) {
        const double s = base_step * (1.0 + x.norm());
        const Vec g = p.grad_at(x);
        Vec fd(x.size());
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            Vec hi = x, lo = x;
            hi[i] += s;
            lo[i] -= s;
            fd[i] = (p.value_at(hi) - p.value_at(lo)) / (2.0 * s);
        }
        worst = std::max(worst, (g - fd).norm() / (1.0 + g.norm()));
    }
    return worst;
}

QuadraticPotential load_quadratic(std::istream& in) {
    Eigen::Index d = 0;
    if (!(in >> d)) throw std::runtime_error("quadratic text: missing dimension");
    if (d <= 0) throw std::runtime_error("quadratic text: dimension must be positive");
    Mat precision = read_matrix_text(in, d, d);
    Vec center(d);
    for (Eigen::Index i = 0; i < d; ++i)
        if (!(in >> center[i]))
            throw std::runtime_error("quadratic text: center truncated");
    return QuadraticPotential(std::move(precision), std::move(center));
}

QuadraticPotential load_quadratic_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open quadratic file: " + path);
    return load_quadratic(in);
}

}  // namespace lcs

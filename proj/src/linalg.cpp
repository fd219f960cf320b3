#include "lcs/linalg.hpp"

#include <cmath>
#include <istream>
#include <stdexcept>
#include <string>

namespace lcs {

bool is_symmetric(const Mat& m, double rel_tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

Mat symmetrize(const Mat& m) { return 0.5 * (m + m.transpose()); }

Mat validate_covariance(const Mat& m, const char* what) {
    if (m.rows() != m.cols())
        throw std::invalid_argument(std::string(what) + ": matrix not square");
    if (!is_symmetric(m))
        throw std::invalid_argument(std::string(what) + ": matrix not symmetric");
    const Mat sym = symmetrize(m);
    Eigen::SelfAdjointEigenSolver<Mat> eig(sym);
    const double scale = std::abs(sym.trace()) / static_cast<double>(sym.rows());
    const double floor = -1e-12 * std::max(scale, 1e-300);
    Vec vals = eig.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals[i] < floor)
            throw std::invalid_argument(std::string(what) +
                                        ": matrix not positive semidefinite");
        if (vals[i] < 0.0) vals[i] = 0.0;
    }
    return symmetrize(eig.eigenvectors() * vals.asDiagonal() *
                      eig.eigenvectors().transpose());
}

Mat spd_sqrt(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> eig(symmetrize(m));
    Vec vals = eig.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        vals[i] = std::sqrt(std::max(vals[i], 0.0));
    return symmetrize(eig.eigenvectors() * vals.asDiagonal() *
                      eig.eigenvectors().transpose());
}

double log_det_psd(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> eig(symmetrize(m));
    double sum = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
        const double v = eig.eigenvalues()[i];
        if (v <= 0.0) return -kInf;
        sum += std::log(v);
    }
    return sum;
}

double spectral_radius(const Mat& a, double tol) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("spectral_radius: matrix not square");
    double norm = a.norm();
    if (norm == 0.0) return 0.0;
    Mat b = a / norm;
    double log_scale = std::log(norm);
    double est_prev = kInf;
    for (int k = 1; k <= 200; ++k) {
        const Mat sq = b * b;
        const double n = sq.norm();
        if (n == 0.0) return 0.0;
        log_scale = 2.0 * log_scale + std::log(n);
        b = sq / n;
        const double exponent = std::pow(2.0, k);
        const double est = std::exp(log_scale / exponent);
        if (std::abs(est - est_prev) <= tol * std::max(1.0, est)) return est;
        est_prev = est;
        if (!std::isfinite(log_scale)) break;
    }
    return est_prev;
}

double operator_norm_power(const Mat& a, double tol) {
    const Mat s = a.transpose() * a;
    const Eigen::Index n = s.rows();
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v[i] = 1.0 + 1e-3 * static_cast<double>(i + 1);
    v.normalize();
    double lam_prev = 0.0;
    for (int it = 0; it < 200000; ++it) {
        Vec w = s * v;
        const double lam = v.dot(w);
        const double wn = w.norm();
        if (wn == 0.0) return 0.0;
        v = w / wn;
        if (it > 0 && std::abs(lam - lam_prev) <= tol * std::max(lam, 1e-300))
            return std::sqrt(std::max(lam, 0.0));
        lam_prev = lam;
    }
    return std::sqrt(std::max(lam_prev, 0.0));
}

Mat read_matrix_text(std::istream& in, Eigen::Index rows, Eigen::Index cols) {
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            if (!(in >> m(i, j)))
                throw std::runtime_error("matrix text truncated at entry (" +
                                         std::to_string(i) + "," +
                                         std::to_string(j) + ")");
    return m;
}

}  // namespace lcs

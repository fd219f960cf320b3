#pragma once

#include <iosfwd>
#include <limits>

#include <Eigen/Dense>

namespace lcs {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_symmetric(const Mat& m, double rel_tol = 1e-12);
Mat symmetrize(const Mat& m);

// Checks symmetry to 1e-12 relative and clips eigenvalues in
// [-1e-12 * trace/n, 0) to zero; genuinely negative spectra throw.
Mat validate_covariance(const Mat& m, const char* what);

Mat spd_sqrt(const Mat& m);        // symmetric PSD square root via eigendecomposition
double log_det_psd(const Mat& m);  // -inf for singular input

// Spectral radius by iterating squared powers with Frobenius normalization
// (Gelfand's formula); robust to complex eigenvalue pairs.
double spectral_radius(const Mat& a, double tol = 1e-10);

// Largest singular value via power iteration on A^T A.
double operator_norm_power(const Mat& a, double tol = 1e-10);

// Whitespace-separated row-major entries.
Mat read_matrix_text(std::istream& in, Eigen::Index rows, Eigen::Index cols);

}  // namespace lcs

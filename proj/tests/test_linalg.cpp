#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lcs/linalg.hpp"
#include "lcs/rng.hpp"

using namespace lcs;

namespace {

Mat random_mat(RngStream& rng, Eigen::Index n) {
    Mat m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rng.normal();
    return m;
}

}  // namespace

TEST_CASE("symmetry helpers") {
    Mat m(2, 2);
    m << 1.0, 2.0, 3.0, 4.0;
    CHECK_FALSE(is_symmetric(m));
    const Mat s = symmetrize(m);
    CHECK(is_symmetric(s));
    CHECK(s(0, 1) == 2.5);
    CHECK(s(1, 0) == 2.5);
}

TEST_CASE("validate_covariance clips rounding noise and rejects real negatives") {
    Mat ok = Mat::Identity(3, 3);
    ok(2, 2) = -1e-14;  // within the clip band: trace/n * 1e-12 ~ 3e-13
    const Mat v = validate_covariance(ok, "cov");
    Eigen::SelfAdjointEigenSolver<Mat> eig(v);
    CHECK(eig.eigenvalues().minCoeff() >= 0.0);

    Mat bad = Mat::Identity(2, 2);
    bad(1, 1) = -0.5;
    CHECK_THROWS(validate_covariance(bad, "cov"));

    Mat asym(2, 2);
    asym << 1.0, 0.5, -0.5, 1.0;
    CHECK_THROWS(validate_covariance(asym, "cov"));
}

TEST_CASE("spd_sqrt squares back") {
    RngStream rng(1, 0);
    for (int rep = 0; rep < 5; ++rep) {
        const Mat b = random_mat(rng, 4);
        const Mat m = b * b.transpose() + 0.1 * Mat::Identity(4, 4);
        const Mat r = spd_sqrt(m);
        CHECK((r * r - m).cwiseAbs().maxCoeff() < 1e-10 * m.norm());
        CHECK(is_symmetric(r, 1e-10));
    }
}

TEST_CASE("log_det_psd") {
    Mat d = Vec::LinSpaced(3, 1.0, 3.0).asDiagonal();
    CHECK(log_det_psd(d) == doctest::Approx(std::log(6.0)).epsilon(1e-12));
    Mat sing = Mat::Identity(2, 2);
    sing(1, 1) = 0.0;
    CHECK(log_det_psd(sing) == -kInf);
}

TEST_CASE("spectral_radius handles complex pairs") {
    Mat rot(2, 2);
    rot << 0.0, -0.7, 0.7, 0.0;  // eigenvalues +-0.7i
    CHECK(spectral_radius(rot) == doctest::Approx(0.7).epsilon(1e-8));

    Mat diag = Vec::LinSpaced(3, 0.3, 0.9).asDiagonal();
    CHECK(spectral_radius(diag) == doctest::Approx(0.9).epsilon(1e-8));

    RngStream rng(2, 0);
    for (int rep = 0; rep < 5; ++rep) {
        const Mat a = random_mat(rng, 5);
        const double want = a.eigenvalues().cwiseAbs().maxCoeff();
        CHECK(spectral_radius(a) == doctest::Approx(want).epsilon(1e-6));
    }
}

TEST_CASE("operator_norm_power matches the SVD") {
    RngStream rng(3, 0);
    for (int rep = 0; rep < 5; ++rep) {
        const Mat a = random_mat(rng, 5);
        Eigen::JacobiSVD<Mat> svd(a);
        CHECK(operator_norm_power(a) ==
              doctest::Approx(svd.singularValues()(0)).epsilon(1e-8));
    }
}

TEST_CASE("read_matrix_text") {
    std::istringstream in("1 2\n3 4\n");
    const Mat m = read_matrix_text(in, 2, 2);
    CHECK(m(0, 0) == 1.0);
    CHECK(m(1, 1) == 4.0);

    std::istringstream trunc("1 2 3");
    CHECK_THROWS(read_matrix_text(trunc, 2, 2));
}

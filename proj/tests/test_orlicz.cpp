#include <doctest.h>

#include <cmath>
#include <vector>

#include "lcs/orlicz.hpp"
#include "lcs/rng.hpp"

using namespace lcs;

namespace {

const double kLog2 = std::log(2.0);

}  // namespace

TEST_CASE("norm of a point mass") {
    const OrliczNorm n = orlicz_norm_constant(2.0);
    CHECK(n.lambda == doctest::Approx(2.0 / std::sqrt(kLog2)).epsilon(1e-14));
    CHECK(orlicz_norm_constant(0.0).lambda == 0.0);
}

TEST_CASE("bracketed solve on closed-form mgfs") {
    // point mass at 1: E exp(1/l^2) = 2 at l = 1/sqrt(log 2)
    const auto point = [](double l) { return std::exp(1.0 / (l * l)); };
    const OrliczNorm n = orlicz_norm_mgf(point);
    CHECK(n.lambda ==
          doctest::Approx(1.0 / std::sqrt(kLog2)).epsilon(1e-10));
    CHECK(n.residual < 1e-9);

    // already below 2 everywhere: zero norm
    CHECK(orlicz_norm_mgf([](double) { return 1.0; }).lambda == 0.0);
    // never reaches 2: infinite norm
    CHECK_THROWS(orlicz_norm_mgf([](double) { return 3.0; }));
}

TEST_CASE("gaussian norm closed forms") {
    const Gaussian scalar(Vec::Zero(1), Mat::Identity(1, 1));
    CHECK(gaussian_orlicz_norm(scalar, Vec::Zero(1)).lambda ==
          doctest::Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-9));
    // isotropic d-dimensional: sqrt(2 s^2 / (1 - 2^{-2/d}))
    for (int d : {1, 2, 4, 16}) {
        const Gaussian g(Vec::Zero(d), Mat::Identity(d, d));
        const double want =
            std::sqrt(2.0 / (1.0 - std::pow(2.0, -2.0 / d)));
        CHECK(gaussian_orlicz_norm(g, Vec::Zero(d)).lambda ==
              doctest::Approx(want).epsilon(1e-9));
    }
    // d = 4 reference value for the initialization lemma
    const Gaussian g4(Vec::Zero(4), Mat::Identity(4, 4));
    CHECK(gaussian_orlicz_norm(g4, Vec::Zero(4)).lambda ==
          doctest::Approx(2.6131259297527532).epsilon(1e-9));
}

TEST_CASE("empirical plug-in norm") {
    CHECK_THROWS(orlicz_norm_empirical(std::vector<double>(100, 1.0)));
    const std::vector<double> constant(20000, 3.0);
    CHECK(orlicz_norm_empirical(constant).lambda ==
          doctest::Approx(3.0 / std::sqrt(kLog2)).epsilon(1e-10));

    // positive homogeneity on an arbitrary sample
    RngStream rng(23, 0);
    std::vector<double> s(20000), s2(20000);
    for (std::size_t i = 0; i < s.size(); ++i) {
        s[i] = std::abs(rng.normal());
        s2[i] = 2.5 * s[i];
    }
    CHECK(orlicz_norm_empirical(s2).lambda ==
          doctest::Approx(2.5 * orlicz_norm_empirical(s).lambda)
              .epsilon(1e-8));
}

TEST_CASE("tail diagnostic separates gaussian from exponential tails") {
    RngStream rng(29, 0);
    const int n = 100000;
    std::vector<double> gauss(n), expo(n);
    for (int i = 0; i < n; ++i) gauss[i] = std::abs(rng.normal());
    for (int i = 0; i < n; ++i) expo[i] = -std::log(rng.uniform());
    const TailDiagnostic g = orlicz_tail_diagnostic(gauss);
    CHECK_FALSE(g.heavy);
    CHECK(g.ratio < 0.9);
    const TailDiagnostic e = orlicz_tail_diagnostic(expo);
    CHECK(e.heavy);
    CHECK(e.ratio > 0.9);
    CHECK_THROWS(orlicz_tail_diagnostic(std::vector<double>(100, 1.0)));
}

TEST_CASE("dirac-anchored shift metric") {
    Vec a(2), b(2);
    a << 3.0, 0.0;
    b << 0.0, 4.0;
    const OrliczWassersteinValue pair = w_orlicz_dirac_pair(a, b);
    CHECK(pair.value == doctest::Approx(5.0 / std::sqrt(kLog2)).epsilon(1e-14));
    // a pair of point masses certifies through the unique Dirac coupling
    CHECK(pair.certificate == WassersteinCertificate::dirac_anchored);
    CHECK(w_orlicz_dirac_pair(a, a).value == 0.0);
    // unit displacement reference value
    Vec e1(1), z1(1);
    e1 << 1.0;
    z1 << 0.0;
    CHECK(w_orlicz_dirac_pair(e1, z1).value ==
          doctest::Approx(1.2011224087864498).epsilon(1e-12));

    const Gaussian g(Vec::Zero(2), Mat::Identity(2, 2));
    const OrliczWassersteinValue anchored =
        w_orlicz_dirac(Vec::Zero(2), gaussian_orlicz_norm(g, Vec::Zero(2)));
    CHECK(anchored.certificate == WassersteinCertificate::dirac_anchored);
    CHECK(anchored.value ==
          doctest::Approx(gaussian_orlicz_norm(g, Vec::Zero(2)).lambda));
}

TEST_CASE("initialization bounds dominate the exact gaussian values") {
    CHECK(init_bound_slc(1.0, 4.0) == doctest::Approx(12.0).epsilon(1e-15));
    for (int d : {1, 4, 16, 64})
        for (double alpha : {0.25, 1.0, 4.0}) {
            const Gaussian g(Vec::Zero(d),
                             (1.0 / alpha) * Mat::Identity(d, d));
            const double exact = gaussian_orlicz_norm(g, Vec::Zero(d)).lambda;
            CHECK(init_bound_slc(alpha, d) >= exact);
        }

    CHECK(rgo_init_bound(1.0, 0.5, 0.0, 1.0) ==
          doctest::Approx(9.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(rgo_init_bound(1.0, 0.25, 2.0, 1.0) ==
          doctest::Approx(4.5 + 1.5).epsilon(1e-14));
    CHECK_THROWS(rgo_init_bound(1.0, 0.6, 0.0, 1.0));  // h above 1/(2 beta)
}

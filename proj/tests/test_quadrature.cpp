#include <doctest.h>

#include <cmath>

#include "lcs/gaussian.hpp"
#include "lcs/quadrature.hpp"

using namespace lcs;

TEST_CASE("adaptive_simpson on closed-form integrals") {
    CHECK(adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0, 1e-12) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI,
                           1e-12) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(adaptive_simpson([](double x) { return std::exp(-x * x); }, -8.0,
                           8.0, 1e-12) ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("adaptive_simpson rejects bad inputs") {
    CHECK_THROWS(adaptive_simpson([](double) { return 1.0; }, 1.0, 1.0, 1e-8));
    CHECK_THROWS(
        adaptive_simpson([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-8));
    // depth exhaustion: a kink needs more than one level at zero tolerance
    CHECK_THROWS(adaptive_simpson([](double x) { return std::abs(x - 0.3); },
                                  0.0, 1.0, 0.0, 1));
}

TEST_CASE("renyi quadrature matches the gaussian closed form") {
    const Gaussian g1(Vec::Constant(1, 0.3), Mat::Constant(1, 1, 1.2));
    const Gaussian g2(Vec::Constant(1, -0.5), Mat::Constant(1, 1, 2.0));
    const auto ld1 = [&](double x) { return gaussian_log_density(g1, x); };
    const auto ld2 = [&](double x) { return gaussian_log_density(g2, x); };
    for (double q : {1.5, 2.0, 3.0}) {
        const double numeric = renyi_quadrature_1d(q, ld1, ld2, -20.0, 20.0);
        const double closed = renyi_gaussian(q, g1, g2);
        CHECK(std::abs(numeric - closed) < 1e-8);
    }
    CHECK_THROWS(renyi_quadrature_1d(1.0, ld1, ld2, -20.0, 20.0));
}

#include "lcs/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcs {

OrliczNorm orlicz_norm_mgf(const std::function<double(double)>& mgf_eval) {
    const auto above = [&](double lambda) {
        const double v = mgf_eval(lambda);
        return !(v <= 2.0);  // +inf and nan count as above
    };
    double lo, hi;
    if (above(1.0)) {
        lo = 1.0;
        hi = 2.0;
        while (above(hi)) {
            if (hi >= 1e12) throw std::runtime_error("norm infinite");
            lo = hi;
            hi *= 2.0;
        }
    } else {
        hi = 1.0;
        lo = 0.5;
        while (!above(lo)) {
            if (lo <= 1e-300) return {0.0, 0.0};  // point mass at the origin
            hi = lo;
            lo *= 0.5;
        }
    }
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (above(mid))
            lo = mid;
        else
            hi = mid;
    }
    return {hi, std::abs(mgf_eval(hi) - 2.0)};
}

OrliczNorm orlicz_norm_empirical(const std::vector<double>& norms) {
    if (norms.size() < 10000)
        throw std::invalid_argument("need at least 10000 samples");
    std::vector<double> sq(norms.size());
    for (size_t i = 0; i < norms.size(); ++i) {
        if (!(norms[i] >= 0.0))
            throw std::domain_error("norms must be nonnegative");
        sq[i] = norms[i] * norms[i];
    }
    const auto mgf = [&sq](double lambda) {
        const double inv = 1.0 / (lambda * lambda);
        double acc = 0.0;
        for (const double s2 : sq) {
            const double e = s2 * inv;
            if (e > 700.0) return kInf;
            acc += std::exp(e);
        }
        return acc / static_cast<double>(sq.size());
    };
    return orlicz_norm_mgf(mgf);
}

OrliczNorm orlicz_norm_constant(double c) {
    if (!(c >= 0.0)) throw std::domain_error("norm value must be nonnegative");
    if (c == 0.0) return {0.0, 0.0};
    return {c / std::sqrt(std::log(2.0)), 0.0};
}

OrliczNorm gaussian_orlicz_norm(const Gaussian& g, const Vec& shift) {
    if (shift.size() != g.dim())
        throw std::invalid_argument("gaussian dimension mismatch");
    return orlicz_norm_mgf(
        [&](double lambda) { return gaussian_norm_mgf(g, shift, lambda); });
}

TailDiagnostic orlicz_tail_diagnostic(const std::vector<double>& norms) {
    if (norms.size() < 10000)
        throw std::invalid_argument("need at least 10000 samples");
    std::vector<double> sorted(norms);
    std::sort(sorted.begin(), sorted.end());
    const auto quantile = [&](double p) {
        const auto idx = static_cast<size_t>(
            std::ceil(p * static_cast<double>(sorted.size()))) - 1;
        return sorted[std::min(idx, sorted.size() - 1)];
    };
    const double p1 = 0.95, p2 = 0.995;
    const double q1 = quantile(p1), q2 = quantile(p2);
    // exp-quadratic tail model P(||X|| > s) ~ exp(-s^2 / slope), inverted
    // between the two quantiles
    const double slope = (q2 * q2 - q1 * q1) /
                         (std::log(1.0 / (1.0 - p2)) - std::log(1.0 / (1.0 - p1)));
    double mean_sq = 0.0;
    for (const double s : sorted) mean_sq += s * s;
    mean_sq /= static_cast<double>(sorted.size());
    const double body_scale = (8.0 / 3.0) * mean_sq;
    const double ratio = body_scale > 0.0 ? slope / body_scale : kInf;
    return {slope, body_scale, ratio, ratio > 0.9};
}

OrliczWassersteinValue w_orlicz_dirac(const Vec& anchor,
                                      const OrliczNorm& norm_of_shifted) {
    (void)anchor;
    return {norm_of_shifted.lambda, WassersteinCertificate::dirac_anchored};
}

OrliczWassersteinValue w_orlicz_dirac_pair(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch");
    return {(a - b).norm() / std::sqrt(std::log(2.0)),
            WassersteinCertificate::dirac_anchored};
}

double init_bound_slc(double alpha, double d) {
    if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
    if (!(d >= 1.0)) throw std::domain_error("dimension must be >= 1");
    return 6.0 * std::sqrt(d / alpha);
}

double rgo_init_bound(double beta, double h, double dist_to_min, double d) {
    if (!(beta > 0.0)) throw std::domain_error("beta must be positive");
    if (!(h > 0.0)) throw std::domain_error("step size must be positive");
    if (h > (1.0 + 1e-12) / (2.0 * beta))
        throw std::domain_error("h too large");
    if (!(dist_to_min >= 0.0))
        throw std::domain_error("distance must be nonnegative");
    if (!(d >= 1.0)) throw std::domain_error("dimension must be >= 1");
    return 9.0 * std::sqrt(d * h) + 3.0 * beta * h * dist_to_min;
}

}  // namespace lcs

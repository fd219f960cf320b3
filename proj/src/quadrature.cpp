#include "lcs/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "lcs/linalg.hpp"

namespace lcs {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double b, double fa, double fm, double fb, double whole,
                     double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    if (!std::isfinite(flm) || !std::isfinite(frm))
        throw std::runtime_error("divergent");
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0)
        throw std::runtime_error("quadrature did not converge");
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo,
                        double hi, double abs_tol, int max_depth) {
    if (!(hi > lo)) throw std::invalid_argument("empty integration interval");
    const double flo = f(lo);
    const double fm = f(0.5 * (lo + hi));
    const double fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fm) || !std::isfinite(fhi))
        throw std::runtime_error("divergent");
    const double whole = simpson(flo, fm, fhi, hi - lo);
    return adaptive_step(f, lo, hi, flo, fm, fhi, whole, abs_tol, max_depth);
}

double renyi_quadrature_1d(double q,
                           const std::function<double(double)>& log_density1,
                           const std::function<double(double)>& log_density2,
                           double lo, double hi) {
    if (q <= 1.0)
        throw std::domain_error("quadrature requires divergence order > 1");
    const auto log_integrand = [&](double x) {
        return q * log_density1(x) - (q - 1.0) * log_density2(x);
    };
    // peak-normalize on a coarse grid so the absolute tolerance is meaningful
    double peak = -kInf;
    double x_peak = lo;
    const int grid = 257;
    for (int i = 0; i < grid; ++i) {
        const double x = lo + (hi - lo) * i / (grid - 1);
        const double v = log_integrand(x);
        if (v > peak) {
            peak = v;
            x_peak = x;
        }
    }
    if (!std::isfinite(peak)) throw std::runtime_error("divergent");
    const auto scaled = [&](double x) {
        const double v = log_integrand(x) - peak;
        return v > 700.0 ? kInf : std::exp(v);
    };
    // split at the located peak so a spike off the interval midpoint is an
    // evaluated endpoint instead of mass the opening nodes can straddle
    const double margin = 1e-6 * (hi - lo);
    double integral;
    if (x_peak - lo > margin && hi - x_peak > margin)
        integral = adaptive_simpson(scaled, lo, x_peak, 1e-10) +
                   adaptive_simpson(scaled, x_peak, hi, 1e-10);
    else
        integral = adaptive_simpson(scaled, lo, hi, 1e-10);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw std::runtime_error("divergent");
    return (peak + std::log(integral)) / (q - 1.0);
}

}  // namespace lcs

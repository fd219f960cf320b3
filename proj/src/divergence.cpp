#include "lcs/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lcs {

RenyiOrder::RenyiOrder(double q_in) : q(q_in) {
    if (!(q >= 1.0)) throw std::domain_error("divergence order must be >= 1");
}

double chi2_to_renyi2(double chi2) {
    if (!(chi2 >= 0.0)) throw std::domain_error("chi^2 must be nonnegative");
    return std::log1p(chi2);
}

double renyi2_to_chi2(double r2) {
    if (!(r2 >= 0.0)) throw std::domain_error("divergence must be nonnegative");
    return std::expm1(r2);
}

WeakTriangle weak_triangle(double q, double lambda, double a, double b) {
    if (!(q > 1.0)) throw std::domain_error("divergence order must exceed 1");
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::domain_error("lambda must be in (0, 1)");
    if (!(a >= 0.0) || !(b >= 0.0))
        throw std::domain_error("divergence values must be nonnegative");
    WeakTriangle out;
    out.coeff = (q - lambda) / (q - 1.0);
    out.order_a = q / lambda;
    out.order_b = (q - lambda) / (1.0 - lambda);
    out.value = out.coeff * a + b;
    return out;
}

DivergenceBound weak_triangle(double q, double lambda,
                              const DivergenceBound& a,
                              const DivergenceBound& b) {
    const WeakTriangle raw = weak_triangle(q, lambda, a.value, b.value);
    const auto order_matches = [](const DivergenceBound& bound, double order) {
        return bound.kind == DivergenceBound::Kind::renyi &&
               std::abs(bound.q - order) <= 1e-9 * std::max(1.0, order);
    };
    if (!order_matches(a, raw.order_a) || !order_matches(b, raw.order_b))
        throw std::invalid_argument("intermediate divergence orders do not match");
    std::ostringstream prov;
    prov << "weak_triangle(q=" << q << ", lambda=" << lambda << ")["
         << a.provenance << "; " << b.provenance << "]";
    return {DivergenceBound::Kind::renyi, q, raw.value, prov.str()};
}

double warm_boost_chi2(double tv, double r3) {
    if (!(tv >= 0.0 && tv <= 1.0))
        throw std::domain_error("total variation must lie in [0, 1]");
    if (!(r3 >= 0.0)) throw std::domain_error("divergence must be nonnegative");
    return std::sqrt(tv * (std::exp(2.0 * r3) + 1.0));
}

double tv_empirical_1d(const std::vector<double>& samples_a,
                       const std::vector<double>& samples_b, int bins) {
    if (samples_a.size() < 1000 || samples_b.size() < 1000)
        throw std::invalid_argument("need at least 1000 samples per set");
    if (bins < 1) throw std::domain_error("need at least one bin");
    double lo = samples_a[0];
    double hi = samples_a[0];
    for (const double s : samples_a) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    for (const double s : samples_b) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    if (!(hi > lo)) return 0.0;
    std::vector<double> pa(static_cast<size_t>(bins), 0.0);
    std::vector<double> pb(static_cast<size_t>(bins), 0.0);
    const double scale = bins / (hi - lo);
    const auto bin_of = [&](double s) {
        const auto idx = static_cast<long>((s - lo) * scale);
        return static_cast<size_t>(std::clamp<long>(idx, 0, bins - 1));
    };
    for (const double s : samples_a) pa[bin_of(s)] += 1.0 / samples_a.size();
    for (const double s : samples_b) pb[bin_of(s)] += 1.0 / samples_b.size();
    double acc = 0.0;
    for (int i = 0; i < bins; ++i) acc += std::abs(pa[i] - pb[i]);
    return 0.5 * acc;
}

double renyi_discrete(double q, const std::vector<double>& mu,
                      const std::vector<double>& pi) {
    if (mu.size() != pi.size())
        throw std::invalid_argument("support size mismatch");
    if (!(q >= 1.0)) throw std::domain_error("divergence order must be >= 1");
    constexpr double kSupportTol = 1e-12;
    if (std::isinf(q)) {
        double worst = 0.0;
        for (size_t i = 0; i < mu.size(); ++i) {
            if (pi[i] <= kSupportTol) {
                if (mu[i] > kSupportTol) return kInf;
                continue;
            }
            worst = std::max(worst, mu[i] / pi[i]);
        }
        return worst > 0.0 ? std::log(worst) : 0.0;
    }
    if (q == 1.0) {
        double acc = 0.0;
        for (size_t i = 0; i < mu.size(); ++i) {
            if (pi[i] <= kSupportTol) {
                if (mu[i] > kSupportTol) return kInf;
                continue;
            }
            if (mu[i] > 0.0) acc += mu[i] * std::log(mu[i] / pi[i]);
        }
        return acc;
    }
    double acc = 0.0;
    bool any = false;
    for (size_t i = 0; i < mu.size(); ++i) {
        if (pi[i] <= kSupportTol) {
            if (mu[i] > kSupportTol) return kInf;
            continue;
        }
        any = true;
        if (mu[i] > 0.0)
            acc += std::exp(q * std::log(mu[i]) - (q - 1.0) * std::log(pi[i]));
    }
    if (!any || acc <= 0.0) return kInf;
    return std::log(acc) / (q - 1.0);
}

double tv_discrete(const std::vector<double>& mu,
                   const std::vector<double>& pi) {
    if (mu.size() != pi.size())
        throw std::invalid_argument("support size mismatch");
    double acc = 0.0;
    for (size_t i = 0; i < mu.size(); ++i) acc += std::abs(mu[i] - pi[i]);
    return 0.5 * acc;
}

}  // namespace lcs

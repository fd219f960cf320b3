#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lcs/linalg.hpp"

namespace lcs {

// Divergence order q >= 1; kInf is the sup-ratio order.
struct RenyiOrder {
    explicit RenyiOrder(double q_in);
    static RenyiOrder infinity() { return RenyiOrder(kInf); }
    double q;
};

// A certified upper bound on a divergence between two laws, tagged with the
// calculus step that produced it so composed derivations stay auditable.
struct DivergenceBound {
    enum class Kind { renyi, kl, chi2, tv };
    Kind kind;
    double q;  // order when kind == renyi
    double value;
    std::string provenance;
};

double chi2_to_renyi2(double chi2);  // log(1 + chi2)
double renyi2_to_chi2(double r2);    // exp(r2) - 1

// Weak triangle inequality through an intermediate law:
//   R_q(mu, pi) <= (q - lambda)/(q - 1) * R_{q/lambda}(mu, nu)
//                  + R_{(q-lambda)/(1-lambda)}(nu, pi),   lambda in (0, 1).
struct WeakTriangle {
    double value;
    double coeff;    // (q - lambda)/(q - 1)
    double order_a;  // q / lambda
    double order_b;  // (q - lambda)/(1 - lambda)
};

WeakTriangle weak_triangle(double q, double lambda, double a, double b);
DivergenceBound weak_triangle(double q, double lambda,
                              const DivergenceBound& a,
                              const DivergenceBound& b);

// chi^2 certificate from a total-variation bound plus an R_3 bound:
//   chi2(mu, pi) <= sqrt(tv * (exp(2 r3) + 1)),  tv = half-L1 distance.
double warm_boost_chi2(double tv, double r3);

// Half-L1 distance of two sample sets binned on their common range.
double tv_empirical_1d(const std::vector<double>& samples_a,
                       const std::vector<double>& samples_b, int bins);

// Finite-support divergences for brute-force verification.  Atoms where pi
// has mass <= 1e-12 are excluded from the support; mu mass there makes the
// divergence +infinity.
double renyi_discrete(double q, const std::vector<double>& mu,
                      const std::vector<double>& pi);
double tv_discrete(const std::vector<double>& mu,
                   const std::vector<double>& pi);

}  // namespace lcs

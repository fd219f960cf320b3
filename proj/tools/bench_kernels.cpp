#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "lcs/model.hpp"
#include "lcs/parallel.hpp"
#include "lcs/rng.hpp"
#include "lcs/samplers.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// spectral-norm sweep over random quadratics: compute-bound kernel
void contraction_point(std::uint64_t seed, long i, double& out) {
    lcs::RngStream rng(seed, static_cast<std::uint64_t>(i));
    const long d = 2 + static_cast<long>(rng.uniform_co() * 6.0);
    const double beta = std::exp(rng.uniform_co() * std::log(30.0));
    const double kappa =
        std::exp(std::log(1.5) + rng.uniform_co() * std::log(40.0));
    const double alpha = beta / kappa;
    lcs::Vec diag(d);
    diag[0] = alpha;
    diag[d - 1] = beta;
    for (long j = 1; j + 1 < d; ++j)
        diag[j] =
            std::exp(std::log(alpha) + rng.uniform_co() * std::log(kappa));
    const lcs::QuadraticPotential p(lcs::Mat(diag.asDiagonal()),
                                    lcs::Vec::Zero(d), alpha, beta);
    const double h = 0.01 / (kappa * std::sqrt(beta));
    out = lcs::ulmc_contraction_measured(p, {std::sqrt(2.0 * beta), h});
}

// independent filtered chains: sampler-bound kernel
void chain_point(std::uint64_t seed, long i, double& out) {
    lcs::RngStream rng(seed, 1000000 + static_cast<std::uint64_t>(i));
    const lcs::QuadraticPotential p(lcs::Mat::Identity(4, 4),
                                    lcs::Vec::Zero(4), 1.0, 1.0);
    const lcs::MalaParams mp(0.25, 0.5);
    lcs::Vec x = lcs::Vec::Ones(4);
    double acc = 0.0;
    for (long s = 0; s < 2000; ++s) {
        x = lcs::mala_step(p, x, mp, rng).x;
        acc += x.sum();
    }
    out = acc;
}

template <typename Kernel>
bool bench(const char* name, long n, std::uint64_t seed, int jobs,
           Kernel kernel) {
    std::vector<double> serial(static_cast<size_t>(n));
    std::vector<double> parallel(static_cast<size_t>(n));
    const auto t0 = Clock::now();
    lcs::serial_for(n, [&](long i) {
        kernel(seed, i, serial[static_cast<size_t>(i)]);
    });
    const double ts = seconds_since(t0);
    const auto t1 = Clock::now();
    lcs::parallel_for(
        n,
        [&](long i) { kernel(seed, i, parallel[static_cast<size_t>(i)]); },
        jobs);
    const double tp = seconds_since(t1);
    const bool same = std::memcmp(serial.data(), parallel.data(),
                                  static_cast<size_t>(n) * sizeof(double)) == 0;
    std::cout << name << ": serial " << ts << " s, parallel " << tp
              << " s, speedup " << ts / tp
              << (same ? ", results identical" : ", RESULTS DIFFER") << "\n";
    return same;
}

}  // namespace

int main(int argc, char** argv) {
    long n = 200;
    std::uint64_t seed = 1;
    int jobs = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--n" && i + 1 < argc) {
            n = std::stol(argv[++i]);
        } else if (a == "--seed" && i + 1 < argc) {
            seed = std::stoull(argv[++i]);
        } else if (a == "--jobs" && i + 1 < argc) {
            jobs = std::stoi(argv[++i]);
        } else {
            std::cerr << "usage: lcs-parallel-bench [--n N] [--seed S] [--jobs J]\n";
            return 2;
        }
    }
    std::cout << "openmp " << (lcs::openmp_enabled() ? "on" : "off")
              << ", max jobs " << lcs::hardware_jobs() << "\n";
    bool ok = bench("contraction-sweep", n, seed, jobs, contraction_point);
    ok = bench("mala-chains", n, seed, jobs, chain_point) && ok;
    return ok ? 0 : 1;
}

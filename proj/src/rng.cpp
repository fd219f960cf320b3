#include "lcs/rng.hpp"

#include <cmath>

namespace lcs {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& ctr,
                                        const std::array<std::uint32_t, 2>& key) {
    std::array<std::uint32_t, 4> x = ctr;
    std::uint32_t k0 = key[0];
    std::uint32_t k1 = key[1];
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, x[0], hi0, lo0);
        mulhilo(kMul1, x[2], hi1, lo1);
        x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
    }
    return x;
}

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t derive_stream(std::uint64_t parent, std::uint64_t child) {
    return mix64(parent ^ mix64(child));
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {}

void RngStream::refill() {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(block_),
        static_cast<std::uint32_t>(block_ >> 32),
        static_cast<std::uint32_t>(stream_),
        static_cast<std::uint32_t>(stream_ >> 32)};
    const std::array<std::uint32_t, 2> key = {
        static_cast<std::uint32_t>(seed_),
        static_cast<std::uint32_t>(seed_ >> 32)};
    buf_ = philox4x32(ctr, key);
    ++block_;
    pos_ = 0;
}

std::uint32_t RngStream::next_u32() {
    if (pos_ >= 4) refill();
    return buf_[pos_++];
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return lo | (hi << 32);
}

double RngStream::uniform() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::uniform_co() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

namespace {

// Ziggurat for the standard normal, 128 layers (Marsaglia-Tsang layout with
// Doornik's setup constants).  Layer tables are built once at startup from
// the closed-form recursion, not from frozen arrays.
constexpr double kZigR = 3.442619855899;
constexpr double kZigV = 9.91256303526217e-3;

struct ZigTable {
    double x[129];
    double ratio[128];
};

ZigTable build_zig_table() {
    ZigTable t;
    double f = std::exp(-0.5 * kZigR * kZigR);
    t.x[0] = kZigV / f;  // pseudo-edge of the base layer, area V / f(R)
    t.x[1] = kZigR;
    t.x[128] = 0.0;
    for (int i = 2; i < 128; ++i) {
        t.x[i] = std::sqrt(-2.0 * std::log(kZigV / t.x[i - 1] + f));
        f = std::exp(-0.5 * t.x[i] * t.x[i]);
    }
    for (int i = 0; i < 128; ++i) t.ratio[i] = t.x[i + 1] / t.x[i];
    return t;
}

const ZigTable& zig_table() {
    static const ZigTable table = build_zig_table();
    return table;
}

}  // namespace

double RngStream::normal() {
    const ZigTable& t = zig_table();
    for (;;) {
        const std::uint64_t bits = next_u64();
        const int i = static_cast<int>(bits & 127u);
        const bool neg = (bits & 128u) != 0;
        const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
        if (u < t.ratio[i]) {
            const double x = u * t.x[i];
            return neg ? -x : x;
        }
        if (i == 0) {
            // base layer miss: sample the tail beyond R
            double x, y;
            do {
                x = std::log(uniform()) / kZigR;
                y = std::log(uniform());
            } while (-2.0 * y < x * x);
            return neg ? x - kZigR : kZigR - x;
        }
        const double x = u * t.x[i];
        const double f0 = std::exp(-0.5 * (t.x[i] * t.x[i] - x * x));
        const double f1 = std::exp(-0.5 * (t.x[i + 1] * t.x[i + 1] - x * x));
        if (f1 + uniform_co() * (f0 - f1) < 1.0) return neg ? -x : x;
    }
}

double RngStream::normal_polar() {
    if (has_polar_cache_) {
        has_polar_cache_ = false;
        return polar_cache_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform_co() - 1.0;
        v = 2.0 * uniform_co() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    polar_cache_ = v * m;
    has_polar_cache_ = true;
    return u * m;
}

Eigen::VectorXd RngStream::normal_vec(Eigen::Index n) {
    Eigen::VectorXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) out[i] = normal();
    return out;
}

RngStream RngStream::substream(std::uint64_t child) const {
    return RngStream(seed_, derive_stream(stream_, child));
}

}  // namespace lcs

#pragma once

#include <array>
#include <cstdint>

#include <Eigen/Core>

namespace lcs {

// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw, SC'11).
// Output is a pure function of (key, counter), so a stream can be replayed or
// partitioned exactly; distinct stream ids never share counter blocks.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& ctr,
                                        const std::array<std::uint32_t, 2>& key);

// splitmix64 finalizer, used to derive child stream ids deterministically.
std::uint64_t mix64(std::uint64_t z);
std::uint64_t derive_stream(std::uint64_t parent, std::uint64_t child);

// One logical random stream: key = seed, counter = (block, stream id).
// Samplers take an explicit stream; replicas use disjoint stream ids so
// results do not depend on scheduling or thread count.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    double uniform();     // (0, 1], safe under log
    double uniform_co();  // [0, 1)
    double normal();      // ziggurat, default
    double normal_polar();  // Marsaglia polar, kept as the serial reference
    Eigen::VectorXd normal_vec(Eigen::Index n);

    // Independent stream derived from this stream's id; used for nested
    // splits (replica -> sampler stage -> inner call).
    RngStream substream(std::uint64_t child) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
    double polar_cache_ = 0.0;
    bool has_polar_cache_ = false;

    void refill();
};

}  // namespace lcs

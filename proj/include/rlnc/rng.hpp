#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rlnc {

/// Seeded PRNG (xoshiro256**) used everywhere randomness is needed.
///
/// Hand-rolled so that sequences are identical across platforms and
/// standard-library versions; scenario results must be reproducible
/// bit-for-bit from a 64-bit seed. Instances are cheap to copy and must
/// not be shared between threads; derive one substream per worker with
/// RandomSource::substream.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) {
        // splitmix64 seeding, the reference expansion for xoshiro.
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    /// Independent stream #index derived from a base seed. Replication i of
    /// a scenario uses substream(seed, i), so runs are individually
    /// reproducible and insensitive to execution order.
    static RandomSource substream(std::uint64_t seed, std::uint64_t index) {
        return RandomSource(seed ^ splitmix64_mix(0x9E3779B97F4A7C15ULL * (index + 1)));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    std::uint8_t byte() { return static_cast<std::uint8_t>(next() >> 56); }

    /// Uniform integer in [0, bound); bound must be positive.
    /// Unbiased via rejection of the short tail.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("RandomSource::below: bound must be positive");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform n-subset of {0, ..., N-1}, returned sorted ascending.
    std::vector<int> sample_subset(int N, int n) {
        if (n < 0 || n > N) throw std::invalid_argument("sample_subset: need 0 <= n <= N");
        std::vector<int> pool(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i) pool[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < n; ++i) {
            const auto j = i + static_cast<int>(below(static_cast<std::uint64_t>(N - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        }
        pool.resize(static_cast<std::size_t>(n));
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64_mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9E3779B97F4A7C15ULL;
        return splitmix64_mix(x);
    }

    std::uint64_t state_[4];
};

}  // namespace rlnc

#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace walkhull {

// SplitMix64, used for keying engine state from (seed, stream).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

inline std::uint64_t mix64(std::uint64_t x) { return SplitMix64(x).next(); }

/// Identifies one reproducible draw sequence. Equal (seed, stream) pairs
/// produce identical sequences; distinct streams are statistically
/// independent, so one stream per Monte Carlo trial parallelizes without
/// coordination.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// xoshiro256** engine keyed by an RngStream. Integer state transitions
/// only, so sequences are platform-stable.
class Rng {
public:
    explicit Rng(RngStream key) : Rng(key.seed, key.stream) {}
    Rng(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 sm(mix64(seed) ^ mix64(stream + 0x632BE59BD9B4E019ULL));
        for (auto& w : s_) w = sm.next();
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5ULL, 7) * 9ULL;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0,1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0,1]; safe as a log argument.
    double uniform_open01() { return 1.0 - uniform01(); }

    /// Standard normal via Box-Muller (exact law, no truncation).
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_open01()));
        const double theta = 6.283185307179586476925286766559 * uniform01();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    double exponential(double rate) { return -std::log(uniform_open01()) / rate; }

    /// Unbiased uniform index in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x < threshold);
        return x % n;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> s_{};
    bool has_spare_ = false;
    double spare_ = 0.0;
};

inline Rng make_rng(RngStream key) { return Rng(key); }

}  // namespace walkhull

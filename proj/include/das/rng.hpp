#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "das/common.hpp"

namespace das {

// 64-bit FNV-1a. Used for feature hashing and for deriving named RNG streams.
inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// PCG-64 (XSL-RR 128/64, setseq variant). The 128-bit LCG state advances by
// state = state * MULT + inc, and the output applies an xor-shift-low fold
// followed by a random rotation taken from the top state bits. Seeding mixes
// the seed through splitmix64 so nearby seeds give unrelated streams; the
// stream id selects an independent sequence for the same seed.
class Pcg64 {
public:
    explicit Pcg64(uint64_t seed = 0, uint64_t stream = 0) { reseed(seed, stream); }

    Pcg64(uint64_t seed, std::string_view stream_name) { reseed(seed, fnv1a64(stream_name)); }

    void reseed(uint64_t seed, uint64_t stream) {
        inc_ = (static_cast<u128>(splitmix64(stream)) << 1) | 1u;
        state_ = 0;
        next_u64();
        const u128 init = (static_cast<u128>(splitmix64(seed)) << 64) |
                          splitmix64(seed ^ 0xda3e39cb94b95bdbull);
        state_ += init;
        next_u64();
        have_gauss_ = false;
    }

    uint64_t next_u64() {
        const u128 old = state_;
        state_ = old * kMult + inc_;
        const uint64_t folded = static_cast<uint64_t>((old >> 64) ^ old);
        const unsigned rot = static_cast<unsigned>(old >> 122);
        return (folded >> rot) | (folded << ((64u - rot) & 63u));
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Unbiased integer in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        const uint64_t threshold = (0 - n) % n;
        for (;;) {
            const uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Standard normal via Box-Muller (cached spare).
    double normal() {
        if (have_gauss_) {
            have_gauss_ = false;
            return gauss_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        gauss_ = r * std::sin(theta);
        have_gauss_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Fisher-Yates; identical seed gives an identical permutation.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct values from [0, n) \ {excluded}; excluded < 0 disables the
    // exclusion. Requires k <= n - (excluded in range).
    std::vector<int> sample_distinct(int n, int k, int excluded);

private:
    using u128 = unsigned __int128;
    static constexpr u128 kMult = (static_cast<u128>(2549297995355413924ull) << 64) |
                                  4865540595714422341ull;

    u128 state_ = 0;
    u128 inc_ = 1;
    bool have_gauss_ = false;
    double gauss_ = 0.0;
};

}  // namespace das

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace contagion {

// Seed for any randomized operation. Same seed + same parameters gives the
// same result, bit for bit, independent of platform: all sampling below is
// built directly on the mt19937_64 output stream (the std:: distributions
// are not reproducible across standard library implementations).
struct RngSeed {
    std::uint64_t value = 0;
};

using Rng = std::mt19937_64;

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
} // namespace detail

// Child seed for (replication, purpose) pairs, so orchestration can hand
// each operation a plain RngSeed while keeping streams independent.
inline RngSeed derive_seed(RngSeed base, std::uint64_t stream) {
    std::uint64_t s = base.value ^ (stream * 0xd1b54a32d192ed03ull + 0x8bb84b93962eacc9ull);
    return RngSeed{detail::splitmix64(s)};
}

// Independent stream per (seed, stream) pair; replication r uses stream
// derived from (seed, r) so runs can be distributed without coordination.
inline Rng make_rng(RngSeed seed, std::uint64_t stream = 0) {
    std::uint64_t s = seed.value ^ (stream * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
    std::uint32_t material[8];
    for (int i = 0; i < 4; ++i) {
        std::uint64_t w = detail::splitmix64(s);
        material[2 * i] = static_cast<std::uint32_t>(w);
        material[2 * i + 1] = static_cast<std::uint32_t>(w >> 32);
    }
    std::seed_seq seq(material, material + 8);
    return Rng(seq);
}

// Uniform in [0,1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) {
    return uniform01(rng) < p;
}

// Uniform integer in [0,n), unbiased via rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    std::uint64_t r;
    do {
        r = rng();
    } while (r < threshold);
    return r % n;
}

inline double exponential(Rng& rng, double rate) {
    return -std::log1p(-uniform01(rng)) / rate;
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace contagion
